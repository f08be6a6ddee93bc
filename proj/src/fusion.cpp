#include "bmwf/fusion.hpp"

namespace bmwf {

namespace {

[[noreturn]] void pole(const std::string& what) { throw Error(ErrorCode::Pole, what); }

Poly var_u() { return Poly::monomial(1, 1); }

// Polynomial form of T_i(a,b): D (T_i(a,b)) = beta T_i + alpha + gamma K_i.
struct PolyFactor {
  Poly alpha, beta, gamma, den;
};

PolyFactor poly_T(const SpectralParams& sp, const Poly& a, const Poly& b) {
  Poly d1 = b - a, d2 = a + b * sp.k;
  return {a * d2 * sp.z, d1 * d2, a * d1 * sp.z, d1 * d2};
}

void apply(PElement& e, int i, const PolyFactor& f) {
  PElement out = e.scaled(f.alpha);
  out += e.times({LetterKind::T, i}).scaled(f.beta);
  if (!f.gamma.is_zero()) out += e.times({LetterKind::K, i}).scaled(f.gamma);
  e = std::move(out);
}

RElement apply(const RElement& e, int i, const BaxterCoeffs& bc) {
  RElement out = e.scaled(bc.alpha);
  out += e.times({LetterKind::T, i});
  if (!bc.gamma.is_zero()) out += e.times({LetterKind::K, i}).scaled(bc.gamma);
  return out;
}

// Multiplicity of x as a root of p, and p with that factor removed.
int strip_root(Poly& p, const Rational& x) {
  Poly lin = Poly::linear(1, -x);
  int m = 0;
  while (!p.is_zero()) {
    auto [qt, r] = Poly::divmod(p, lin);
    if (!r.is_zero()) break;
    p = std::move(qt);
    ++m;
  }
  return m;
}

Rational limit_coeff(Poly p, const Rational& scale, int m, const Rational& x) {
  if (p.is_zero()) return Rational{};
  Poly lin = Poly::linear(1, -x);
  for (int k = 0; k < m; ++k) {
    auto [qt, r] = Poly::divmod(p, lin);
    if (!r.is_zero()) throw Error(ErrorCode::PoleAtEvaluation, "coefficient has a pole at u = " + x.str());
    p = std::move(qt);
  }
  return p.evaluate(x) * scale;
}

// Shared scalar bookkeeping: num/den reduced, root at x stripped from den.
struct Limit {
  int m = 0;
  Rational scale;
};

Limit prepare_limit(const Poly& num, const Poly& den, const Rational& x) {
  RatFunc r(num, den);
  Poly n = r.num(), d = r.den();
  int m = strip_root(d, x);
  Poly n2 = n;
  if (strip_root(n2, x) > 0 && m > 0) throw Error(ErrorCode::PoleAtEvaluation, "unreduced scalar factor");
  Rational dv = d.evaluate(x);
  if (dv.is_zero()) throw Error(ErrorCode::PoleAtEvaluation, "scalar factor has a pole at u = " + x.str());
  return {m, n.evaluate(x) / dv};
}

}  // namespace

SpectralParams spectral_params(const ParamSet& p, bool starred) {
  SpectralParams sp;
  sp.q = starred ? -p.q.inverse() : p.q;
  sp.z = sp.q - sp.q.inverse();
  sp.k = p.nu.inverse() * sp.q;
  sp.c = -(sp.q * p.nu).inverse();
  sp.starred = starred;
  return sp;
}

BaxterCoeffs baxter_coeffs(const SpectralParams& sp, const Rational& a, const Rational& b) {
  Rational d1 = b - a, d2 = a + sp.k * b;
  if (d1.is_zero()) pole("T(a,b) with a = b = " + a.str());
  if (d2.is_zero()) pole("T(a,b) with a + q b / nu = 0");
  return {sp.z * a / d1, sp.z * a / d2};
}

Rational f_factor(const SpectralParams& sp, const Rational& u, const Rational& v) {
  Rational q2 = sp.q * sp.q;
  Rational d = (u - q2 * v) * (u - v / q2);
  if (d.is_zero()) pole("f(u,v) at u = q^(+-2) v");
  return (u - v) * (u - v) / d;
}

RElement baxterized_T(const RationalContext& ctx, const SpectralParams& sp, int i, const Rational& a,
                      const Rational& b) {
  if (i < 1 || i >= ctx.n()) throw Error(ErrorCode::IndexOutOfRange, "T_" + std::to_string(i));
  return apply(unit(ctx), i, baxter_coeffs(sp, a, b));
}

RElement baxterized_T_inverse(const RationalContext& ctx, const SpectralParams& sp, int i, const Rational& v,
                              const Rational& u) {
  Rational f = f_factor(sp, u, v);
  if (f.is_zero()) pole("f(u,v) vanishes");
  return baxterized_T(ctx, sp, i, u, v).scaled(f);
}

RElement baxterized_Q(const RationalContext& ctx, const SpectralParams& sp, int i, const Rational& u, const Rational& v,
                      const Rational& c) {
  return baxterized_T(ctx, sp, i, 1, c * u * v);
}

RElement Y_script(const RationalContext& ctx, const SpectralParams& sp, const std::vector<Rational>& us) {
  const int j = static_cast<int>(us.size());
  const Rational& uj = us.back();
  if ((uj - 1).is_zero()) pole("Y_j at u_j = 1");
  RElement e = unit(ctx).scaled((sp.c * uj - 1) / (uj - 1));
  RElement left = unit(ctx);
  for (int m = j - 1; m >= 1; --m)
    left = apply(left, m, baxter_coeffs(sp, 1, sp.c * us[static_cast<std::size_t>(m - 1)] * uj));
  e = left * e;
  for (int m = 1; m <= j - 1; ++m) {
    const Rational& um = us[static_cast<std::size_t>(m - 1)];
    e = apply(e, m, baxter_coeffs(sp, um, uj)).scaled(f_factor(sp, um, uj));
  }
  return e;
}

RElement evaluate_at(const SpectralElement& e, const Rational& x) {
  Limit lim = prepare_limit(e.num, e.den, x);
  RElement out(e.elem.context());
  for (const auto& [b, p] : e.elem.terms()) out.add_term(b, limit_coeff(p, lim.scale, lim.m, x));
  return out;
}

namespace {

// Right-multiplies by Q_{k-1}(c_{k-1},u;c) ... Q_1(c_1,u;c) (cu-1)/(u-1) T_1(u,c_1)^-1 ... T_{k-1}(u,c_{k-1})^-1.
void multiply_Y(SpectralElement& s, const SpectralParams& sp, const std::vector<Rational>& contents, int k) {
  Poly u = var_u();
  Rational q2 = sp.q * sp.q;
  for (int m = k - 1; m >= 1; --m) {
    auto f = poly_T(sp, Poly(1), u * (sp.c * contents[static_cast<std::size_t>(m - 1)]));
    apply(s.elem, m, f);
    s.den = s.den * f.den;
  }
  s.num = s.num * (u * sp.c - Poly(1));
  s.den = s.den * (u - Poly(1));
  for (int m = 1; m <= k - 1; ++m) {
    const Rational& cm = contents[static_cast<std::size_t>(m - 1)];
    auto f = poly_T(sp, Poly(cm), u);
    apply(s.elem, m, f);
    Poly d = Poly(cm) - u;
    s.num = s.num * d * d;
    s.den = s.den * f.den * (Poly(cm) - u * q2) * (Poly(cm) - u * q2.inverse());
  }
}

}  // namespace

SpectralElement Y_script_spectral(const RationalContext& ctx, const SpectralParams& sp,
                                  const std::vector<Rational>& contents) {
  SpectralElement s{PElement::one(ctx, Poly(1)), Poly(1), Poly(1)};
  multiply_Y(s, sp, contents, static_cast<int>(contents.size()) + 1);
  return s;
}

RElement fusion_step(const RationalContext& ctx, const SpectralParams& sp, const RElement& prev,
                     const std::vector<Rational>& contents, int k) {
  SpectralElement s{PElement(ctx), Poly(1), Poly(1)};
  for (const auto& [b, c] : prev.terms()) s.elem.add_term(b, Poly(c));
  multiply_Y(s, sp, contents, k);
  const Rational& ck = contents[static_cast<std::size_t>(k - 1)];
  Poly u = var_u();
  s.num = s.num * (u - Poly(ck));
  s.den = s.den * (u * (sp.c * ck) - Poly(1));
  return evaluate_at(s, ck);
}

Idempotent fusion_idempotent(const RationalContext& ctx, const ParamSet& p, const UpDownTableau& t, bool starred) {
  if (t.length() != ctx.n()) throw Error(ErrorCode::DimensionMismatch, "tableau length differs from n");
  SpectralParams sp = spectral_params(p, starred);
  auto contents = quantum_contents<Rational>(t, sp.q, p.nu);
  RElement e = unit(ctx);
  for (int k = 2; k <= t.length(); ++k) e = fusion_step(ctx, sp, e, contents, k);
  return {starred ? transpose(t) : t, starred ? quantum_contents(transpose(t), p) : contents,
          starred ? "fusion-starred" : "fusion", std::move(e)};
}

template <class S>
Element<S> jm_oracle(const Context<S>& ctx, const UpDownTableau& t, const S& q, const S& nu) {
  if (t.length() != ctx.n()) throw Error(ErrorCode::DimensionMismatch, "tableau length differs from n");
  Element<S> e = unit(ctx);
  for (int k = 2; k <= t.length(); ++k) {
    S ck = quantum_content(t.steps[static_cast<std::size_t>(k - 1)], q, nu);
    auto spectrum = extension_spectrum<S>(t.shapes[static_cast<std::size_t>(k - 2)], q, nu);
    Element<S> y = jm_element(ctx, k);
    int hits = 0;
    for (const auto& Y : spectrum) {
      if ((Y - ck).is_zero()) {
        ++hits;
        continue;
      }
      Element<S> ey = e * y;
      e = (ey - e.scaled(Y)).scaled((ck - Y).inverse());
    }
    if (hits != 1) throw Error(ErrorCode::NotGeneric, "content collision in the Jucys-Murphy spectrum");
  }
  return e;
}

template Element<Rational> jm_oracle(const Context<Rational>&, const UpDownTableau&, const Rational&, const Rational&);
template Element<TruncLaurent> jm_oracle(const Context<TruncLaurent>&, const UpDownTableau&, const TruncLaurent&,
                                         const TruncLaurent&);

Idempotent jm_oracle_idempotent(const RationalContext& ctx, const ParamSet& p, const UpDownTableau& t) {
  for (int k = 1; k < t.length(); ++k) extension_spectrum(t.shapes[static_cast<std::size_t>(k - 1)], p);
  return {t, quantum_contents(t, p), "jm", jm_oracle(ctx, t, p.q, p.nu)};
}

RElement antisymmetrizer_chain(const RationalContext& ctx, const ParamSet& p) {
  SpectralParams sp = spectral_params(p);
  RElement a = unit(ctx);
  for (int m = 2; m <= ctx.n(); ++m) {
    RElement chain = unit(ctx);
    for (int i = 1; i < m; ++i) chain = apply(chain, i, baxter_coeffs(sp, p.q.pow(2L * i), 1));
    Rational pre = Rational(m % 2 == 0 ? -1 : 1) / q_number(m, p.q);
    a = (chain * a).scaled(pre);
  }
  return a;
}

RElement symmetrizer_chain(const RationalContext& ctx, const ParamSet& p) {
  SpectralParams sp = spectral_params(p, true);
  RElement s = unit(ctx);
  for (int m = 2; m <= ctx.n(); ++m) {
    RElement chain = unit(ctx);
    for (int i = 1; i < m; ++i) chain = apply(chain, i, baxter_coeffs(sp, p.q.pow(-2L * i), 1));
    s = (chain * s).scaled(q_number(m, p.q).inverse());
  }
  return s;
}

RElement Y_product(const RationalContext& ctx, const SpectralParams& sp, const std::vector<Rational>& us) {
  const int n = static_cast<int>(us.size());
  auto U = [&](int r) { return us[static_cast<std::size_t>(r - 1)]; };
  RElement e = unit(ctx);
  for (int j = 2; j <= n; ++j)
    for (int r = 1; r <= j - 1; ++r) e = apply(e, j - r, baxter_coeffs(sp, 1, sp.c * U(r) * U(j)));
  for (int j = n; j >= 2; --j)
    for (int r = 1; r <= j - 1; ++r) e = apply(e, r, baxter_coeffs(sp, U(j - r), U(j)));
  return e;
}

namespace {

RElement yproduct_form(const RationalContext& ctx, const ParamSet& p, int sign) {
  const int n = ctx.n();
  SpectralParams sp = spectral_params(p);
  std::vector<Rational> us;
  for (int k = 0; k < n; ++k) us.push_back(p.q.pow(2L * sign * k));
  Rational pre = p.q.pow(static_cast<long>(sign) * n * (n - 1) / 2) / q_factorial(n, p.q);
  Rational nu_inv = p.nu.inverse();
  for (int k = 1; k < n; ++k)
    pre *= (p.q.pow(sign * (2L * k - 1) - (sign < 0 ? 2 : 0)) * nu_inv + 1) /
           (p.q.pow(sign * (4L * k - 1) - (sign < 0 ? 2 : 0)) * nu_inv + 1);
  return Y_product(ctx, sp, us).scaled(pre);
}

}  // namespace

RElement symmetrizer_yproduct(const RationalContext& ctx, const ParamSet& p) { return yproduct_form(ctx, p, 1); }

// Exponents for A_n: -2k-1 and -4k-1, i.e. -(2k-1) - 2 and -(4k-1) - 2.
RElement antisymmetrizer_yproduct(const RationalContext& ctx, const ParamSet& p) { return yproduct_form(ctx, p, -1); }

namespace {

struct Echelon {
  std::vector<std::vector<Rational>> rows;  // reduced rows
  std::vector<int> pivots;
  std::vector<std::vector<Rational>> combos;  // rows as combinations of powers
};

}  // namespace

Poly minimal_polynomial(const RElement& x) {
  const auto& ctx = x.context();
  const std::size_t dim = static_cast<std::size_t>(ctx.dim());
  auto dense = [&](const RElement& e) {
    std::vector<Rational> v(dim);
    for (const auto& [b, c] : e.terms()) v[static_cast<std::size_t>(b)] = c;
    return v;
  };
  Echelon ech;
  RElement power = unit(ctx);
  for (std::size_t k = 0; k <= dim; ++k) {
    auto v = dense(power);
    std::vector<Rational> combo(k + 1);
    combo[k] = 1;
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
      const Rational f = v[static_cast<std::size_t>(ech.pivots[r])];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j)
        if (!ech.rows[r][j].is_zero()) v[j] -= f * ech.rows[r][j];
      for (std::size_t j = 0; j < ech.combos[r].size(); ++j) combo[j] -= f * ech.combos[r][j];
    }
    std::size_t piv = 0;
    while (piv < dim && v[piv].is_zero()) ++piv;
    if (piv == dim) return Poly(combo);
    Rational inv = v[piv].inverse();
    for (auto& c : v) c *= inv;
    for (auto& c : combo) c *= inv;
    ech.rows.push_back(std::move(v));
    ech.pivots.push_back(static_cast<int>(piv));
    ech.combos.push_back(std::move(combo));
    power = power * x;
  }
  throw Error(ErrorCode::NonInvertible, "no minimal polynomial found");
}

RElement resolvent(const RElement& x, const Rational& u) {
  Poly m = minimal_polynomial(x);
  Rational mu = m.evaluate(u);
  if (mu.is_zero()) throw Error(ErrorCode::NonInvertible, "u = " + u.str() + " is an eigenvalue");
  // (m(u) - m(x))/(u - x) = sum_k x^k sum_{i>k} a_i u^{i-1-k}.
  const auto& a = m.coeffs();
  const int d = m.degree();
  RElement out(x.context());
  RElement power = unit(x.context());
  for (int k = 0; k < d; ++k) {
    Rational h;
    for (int i = k + 1; i <= d; ++i) h += a[static_cast<std::size_t>(i)] * u.pow(i - 1 - k);
    out += power.scaled(h / mu);
    power = power * x;
  }
  return out;
}

RElement L_element(const RationalContext& ctx, const SpectralParams& sp, int j, const Rational& u) {
  RElement y = jm_element(ctx, j);
  return (y.scaled(sp.c * u) - unit(ctx)) * resolvent(y, u);
}

bool check_reflection_L(const RationalContext& ctx, const SpectralParams& sp, int j, const Rational& u,
                        const Rational& v) {
  RElement Lu = L_element(ctx, sp, j, u), Lv = L_element(ctx, sp, j, v);
  RElement Tq = baxterized_T(ctx, sp, j, (sp.c * u * v).inverse(), 1);
  RElement Tr = baxterized_T(ctx, sp, j, u / v, 1);
  return Lu * Tq * Lv * Tr == Tr * Lv * Tq * Lu;
}

bool check_reflection_Y(const RationalContext& ctx, const SpectralParams& sp, int j, const std::vector<Rational>& us,
                        const Rational& u, const Rational& v) {
  auto au = us, av = us;
  au.push_back(u);
  av.push_back(v);
  RElement Yu = Y_script(ctx, sp, au), Yv = Y_script(ctx, sp, av);
  RElement Tq = baxterized_T(ctx, sp, j, (sp.c * u * v).inverse(), 1);
  RElement Ti = baxterized_T_inverse(ctx, sp, j, u / v, 1);
  return Yv * Tq * Yu * Ti == Ti * Yu * Tq * Yv;
}

HElement hecke_family_idempotent(int n, const Rational& q, const UpDownTableau& t, const Rational& c_param) {
  if (!t.is_standard()) throw Error(ErrorCode::DomainMismatch, "Hecke idempotents need a standard tableau");
  if (t.length() != n) throw Error(ErrorCode::DimensionMismatch, "tableau length differs from n");
  using HP = HeckeElement<Poly>;
  const Rational z = q - q.inverse(), q2 = q * q;
  const Poly u = var_u();
  std::vector<Rational> contents;
  for (const auto& s : t.steps) contents.push_back(q.pow(2L * (s.box.col - s.box.row)));
  auto mul = [&](HP& e, int i, const Poly& a, const Poly& b) {
    // (b - a) T_i(a,b) = (b - a) T_i + z a.
    Poly d = b - a;
    e = e.times(i).scaled(d) + e.scaled(a * z);
    return d;
  };
  HElement e = HElement::one(n, z, 1);
  for (int k = 2; k <= n; ++k) {
    HP s(n, z);
    for (const auto& [w, c] : e.terms()) s.add_term(w, Poly(c));
    Poly num(1), den(1);
    for (int m = k - 1; m >= 1; --m) {
      // Q_m(c_m,u;c) = T_m + z/(c c_m u - 1) = T_m(1, c c_m u).
      den = den * mul(s, m, Poly(1), u * (c_param * contents[static_cast<std::size_t>(m - 1)]));
    }
    num = num * (u * c_param - Poly(1));
    den = den * (u - Poly(1));
    for (int m = 1; m <= k - 1; ++m) {
      const Rational& cm = contents[static_cast<std::size_t>(m - 1)];
      den = den * mul(s, m, Poly(cm), u);
      Poly d = Poly(cm) - u;
      num = num * d * d;
      den = den * (Poly(cm) - u * q2) * (Poly(cm) - u * q2.inverse());
    }
    const Rational& ck = contents[static_cast<std::size_t>(k - 1)];
    num = num * (u - Poly(ck));
    den = den * (u * (c_param * ck) - Poly(1));
    Limit lim = prepare_limit(num, den, ck);
    HElement next(n, z);
    for (const auto& [w, pc] : s.terms()) next.add_term(w, limit_coeff(pc, lim.scale, lim.m, ck));
    e = std::move(next);
  }
  return e;
}

}  // namespace bmwf
