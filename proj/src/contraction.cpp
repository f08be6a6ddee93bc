#include "bmwf/contraction.hpp"

#include "bmwf/fusion.hpp"

namespace bmwf {

ContractionSetup make_contraction(Regime regime, int n, const Rational& omega, int order) {
  auto lp = laurent_params(regime, omega, order);
  auto ctx = std::make_shared<const LaurentContext>(n, lp.scalars);
  return {std::move(lp), std::move(ctx)};
}

namespace {
bool flips_sign(Regime r) { return r == Regime::Three || r == Regime::Four; }
}  // namespace

BrauerElement basis_image(const LaurentContext& ctx, int b, Regime regime, const Rational& omega) {
  int crossings = 0;
  for (const auto& l : ctx.basis_word(b))
    if (l.kind != LetterKind::K) ++crossings;
  Rational sign = flips_sign(regime) && crossings % 2 ? -1 : 1;
  return BrauerElement::basis(ctx.diagram(b), omega, sign);
}

BrauerElement brauer_limit(const LElement& e, Regime regime, const Rational& omega) {
  const auto& ctx = e.context();
  BrauerElement out(ctx.n(), omega);
  for (const auto& [b, c] : e.terms()) out += basis_image(ctx, b, regime, omega) * c.constant_term();
  return out;
}

TruncLaurent spectral_u(Regime regime, const Rational& theta, const Rational& omega, int order) {
  Rational half = (omega - 1) / 2;
  Rational rate = regime == Regime::Two ? 2 * (half - theta) : 2 * (theta - half);
  return TruncLaurent::exp_h(rate, order + 2);
}

LElement laurent_block(const ContractionSetup& s, BlockKind kind, int i, const TruncLaurent& u1, const TruncLaurent& u2) {
  const auto& sc = s.params.scalars;
  const auto& ctx = *s.ctx;
  // T_i(a,b) = T_i + z/(b/a - 1) + z/(1 + nu^-1 q b/a) K_i, with b/a = u2/u1 or c u1 u2.
  TruncLaurent ratio;
  if (kind == BlockKind::T) {
    ratio = u2 / u1;
  } else {
    TruncLaurent c = -(sc.q_inv * sc.nu_inv);
    ratio = c * u1 * u2;
  }
  TruncLaurent alpha = sc.z / (ratio - sc.one);
  TruncLaurent gamma = sc.z / (sc.one + sc.nu_inv * sc.q * ratio);
  LElement e = gen_T(ctx, i);
  e += unit(ctx).scaled(alpha);
  e += gen_K(ctx, i).scaled(gamma);
  return e;
}

BrauerElement expected_block(Regime regime, BlockKind kind, int n, int i, const Rational& t1, const Rational& t2,
                             const Rational& omega) {
  auto s = BrauerElement::s(n, i, omega), eps = BrauerElement::eps(n, i, omega), one = BrauerElement::one(n, omega);
  if (regime == Regime::One) {
    if (kind == BlockKind::Q) return s - eps * (t1 + t2).inverse();
    return s - one * (t1 - t2).inverse();
  }
  if (regime != Regime::Two) throw Error(ErrorCode::DomainMismatch, "block limits are stated for regimes 1 and 2");
  Rational kappa = omega / 2 - 1;
  if (kind == BlockKind::Q) return s + one * (t1 + t2 - kappa).inverse() - eps * (t1 + t2).inverse();
  return s - one * (t1 - t2).inverse() + eps * (t1 - t2 - kappa).inverse();
}

BlockCheck contraction_block_check(Regime regime, BlockKind kind, int n, int i, const Rational& theta1,
                                   const Rational& theta2, const Rational& omega, int order) {
  auto setup = make_contraction(regime, n, omega, order);
  auto u1 = spectral_u(regime, theta1, omega, order), u2 = spectral_u(regime, theta2, omega, order);
  BlockCheck out;
  out.expected = expected_block(regime, kind, n, i, theta1, theta2, omega);
  out.limit = brauer_limit(laurent_block(setup, kind, i, u1, u2), regime, omega);
  out.pass = out.limit == out.expected;
  return out;
}

std::string check_structure_constants(const ContractionSetup& s) {
  const auto& ctx = *s.ctx;
  const Rational& omega = s.params.omega;
  const auto& one = s.params.scalars.one;
  for (int a = 0; a < ctx.dim(); ++a) {
    LElement ea = LElement::basis(ctx, a, one);
    for (int b = 0; b < ctx.dim(); ++b) {
      LElement prod = ea * LElement::basis(ctx, b, one);
      BrauerElement lim = brauer_limit(prod, s.params.regime, omega);
      BrauerElement expect = basis_image(ctx, a, s.params.regime, omega) * basis_image(ctx, b, s.params.regime, omega);
      if (!(lim == expect)) return word_name(ctx.basis_word(a)) + " * " + word_name(ctx.basis_word(b));
    }
  }
  return "";
}

BrauerElement brauer_idempotent_via_contraction(const ContractionSetup& s, const UpDownTableau& t) {
  const auto& sc = s.params.scalars;
  LElement e = jm_oracle(*s.ctx, t, sc.q, sc.nu);
  return brauer_limit(e, s.params.regime, s.params.omega);
}

}  // namespace bmwf
