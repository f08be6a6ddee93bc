#include <random>

#include "bmwf/fusion.hpp"
#include "doctest.h"

using namespace bmwf;

namespace {

const ParamSet& P() {
  static const ParamSet p = make_params(kDefaultQ, kDefaultNu, 4);
  return p;
}

const RationalContext& ctx(int n) {
  static std::vector<std::shared_ptr<const RationalContext>> cache(6);
  auto& c = cache[static_cast<std::size_t>(n)];
  if (!c) c = std::make_shared<const RationalContext>(n, rational_scalars(P()));
  return *c;
}

UpDownTableau tab(const char* s) { return parse_tableau(s); }

}  // namespace

TEST_CASE("BMW2 closed forms") {
  const auto& c = ctx(2);
  const auto& p = P();
  Rational q = p.q, nu = p.nu, qi = q.inverse(), z = q - qi;
  auto one = unit(c);
  auto T = gen_T(c, 1), K = gen_K(c, 1);
  RElement S = (T + one.scaled(qi) + K.scaled(z / (1 - q / nu))).scaled((q + qi).inverse());
  RElement A = (T - one.scaled(q) + K.scaled(z / (1 + qi / nu))).scaled(-(q + qi).inverse());
  RElement Pi = K.scaled(p.mu.inverse());
  // The product forms of the same projectors.
  CHECK(S == (T + one.scaled(qi)) * (T - one.scaled(nu)) * one.scaled(((q + qi) * (q - nu)).inverse()));
  CHECK(A == (T - one.scaled(q)) * (T - one.scaled(nu)) * one.scaled(((-qi - q) * (-qi - nu)).inverse()));
  CHECK(T == S.scaled(q) - A.scaled(qi) + Pi.scaled(nu));

  CHECK(fusion_idempotent(c, p, tab("1;2")).element == S);
  CHECK(fusion_idempotent(c, p, tab("1;1,1")).element == A);
  CHECK(fusion_idempotent(c, p, tab("1;")).element == Pi);

  SpectralParams sp = spectral_params(p);
  CHECK(baxterized_T(c, sp, 1, q * q, 1) == A.scaled(-(q + qi)));
  CHECK(baxterized_T(c, sp, 1, qi * qi, 1) * S == S.scaled(q + qi));
  CHECK_THROWS_AS(baxterized_T(c, sp, 1, 3, 3), Error);
  CHECK(hecke_quotient(S) == (hecke_T(2, q, 1) + HElement::one(2, z, qi)).scaled((q + qi).inverse()));
}

TEST_CASE("baxterized inverse") {
  const auto& c = ctx(2);
  auto p = make_params(2, 3, 2);
  RationalContext c2(2, rational_scalars(p));
  SpectralParams sp = spectral_params(p);
  CHECK(f_factor(sp, 2, 1) == Rational(-2, 7));
  CHECK(baxterized_T(c2, sp, 1, 1, 2) * baxterized_T_inverse(c2, sp, 1, 1, 2) == unit(c2));
  CHECK_THROWS_AS(baxterized_T_inverse(c2, sp, 1, 1, 4), Error);
  (void)c;
}

TEST_CASE("Q is T at 1/(cuv)") {
  const auto& c = ctx(3);
  SpectralParams sp = spectral_params(P());
  Rational u(2, 3), v(-5, 7);
  CHECK(baxterized_Q(c, sp, 2, u, v, sp.c) == baxterized_T(c, sp, 2, (sp.c * u * v).inverse(), 1));
}

TEST_CASE("Y_1 and the first fusion step") {
  const auto& c = ctx(2);
  SpectralParams sp = spectral_params(P());
  auto y1 = Y_script_spectral(c, sp, {});
  CHECK(RatFunc(y1.num, y1.den) == RatFunc(Poly::linear(sp.c, -1), Poly::linear(1, -1)));
  CHECK(Y_script(c, sp, {Rational(3)}) == unit(c).scaled((sp.c * 3 - 1) / 2));
}

TEST_CASE("complete systems and oracle equivalence") {
  for (int n = 2; n <= 3; ++n) {
    const auto& c = ctx(n);
    auto tabs = enumerate_tableaux(n);
    std::vector<RElement> es;
    RElement sum(c);
    for (const auto& t : tabs) {
      auto f = fusion_idempotent(c, P(), t);
      auto j = jm_oracle_idempotent(c, P(), t);
      CHECK(f.element == j.element);
      CHECK(f.element * f.element == f.element);
      CHECK(rho(f.element) == f.element);
      for (int k = 1; k <= n; ++k)
        CHECK(jm_element(c, k) * f.element == f.element.scaled(f.contents[static_cast<std::size_t>(k - 1)]));
      sum += f.element;
      es.push_back(f.element);
    }
    CHECK(sum == unit(c));
    for (std::size_t a = 0; a < es.size(); ++a)
      for (std::size_t b = 0; b < es.size(); ++b)
        if (a != b) CHECK((es[a] * es[b]).is_zero());
  }
}

TEST_CASE("starred fusion gives the transposed idempotent") {
  for (int n = 2; n <= 3; ++n) {
    const auto& c = ctx(n);
    for (const auto& t : enumerate_tableaux(n)) {
      auto s = fusion_idempotent(c, P(), t, true);
      CHECK(s.tableau == transpose(t));
      CHECK(s.element == fusion_idempotent(c, P(), transpose(t)).element);
    }
  }
}

TEST_CASE("symmetrizers") {
  for (int n = 2; n <= 3; ++n) {
    const auto& c = ctx(n);
    auto A = antisymmetrizer_chain(c, P());
    auto S = symmetrizer_chain(c, P());
    std::string row = "1", col = "1";
    Partition r{1}, cl{1};
    for (int k = 2; k <= n; ++k) {
      r[0] = k;
      cl.push_back(1);
      row += ";" + encode_partition(r);
      col += ";" + encode_partition(cl);
    }
    CHECK(S == fusion_idempotent(c, P(), tab(row.c_str())).element);
    CHECK(A == fusion_idempotent(c, P(), tab(col.c_str())).element);
    CHECK(S == symmetrizer_yproduct(c, P()));
    CHECK(A == antisymmetrizer_yproduct(c, P()));
    for (int i = 1; i < n; ++i) {
      CHECK(A * gen_T(c, i) == A.scaled(-P().q.inverse()));
      CHECK(gen_T(c, i) * A == A.scaled(-P().q.inverse()));
      CHECK(S * gen_T(c, i) == S.scaled(P().q));
      CHECK((gen_K(c, i) * A).is_zero());
      CHECK((gen_K(c, i) * S).is_zero());
    }
  }
}

TEST_CASE("reflection equations") {
  const auto& c = ctx(3);
  SpectralParams sp = spectral_params(P());
  CHECK(check_reflection_L(c, sp, 2, 2, 3));
  CHECK(check_reflection_L(c, sp, 1, 2, 3));
  CHECK(check_reflection_Y(c, sp, 2, {Rational(1)}, Rational(2), Rational(3)));
  CHECK(check_reflection_Y(c, sp, 2, {Rational(-3, 4)}, Rational(2, 5), Rational(3)));
  CHECK_THROWS_AS(L_element(c, sp, 2, P().q * P().q), Error);
  CHECK_NOTHROW(L_element(c, sp, 2, 1));
}

TEST_CASE("Hecke family") {
  Rational q = P().q, qi = q.inverse(), z = q - qi;
  for (Rational cp : {Rational(0), Rational(1, 2), Rational(-2, 3)})
    CHECK(hecke_family_idempotent(2, q, tab("1;2"), cp) ==
          (hecke_T(2, q, 1) + HElement::one(2, z, qi)).scaled((q + qi).inverse()));
  const auto& c = ctx(3);
  for (const auto& t : enumerate_tableaux(3)) {
    if (!t.is_standard()) continue;
    auto h = hecke_quotient(fusion_idempotent(c, P(), t).element);
    for (Rational cp : {Rational(0), Rational(1, 2), Rational(-2, 3), spectral_params(P()).c})
      CHECK(hecke_family_idempotent(3, q, t, cp) == h);
  }
}
