#include <random>

#include "bmwf/hecke.hpp"
#include "doctest.h"

using namespace bmwf;

namespace {

const RationalContext& ctx3() {
  static auto c = std::make_shared<const RationalContext>(3, rational_scalars(make_params(kDefaultQ, kDefaultNu, 3)));
  return *c;
}

// Oracle: generic H_n multiplication from scratch using the quadratic relation on words.
HElement word_product(int n, const Rational& q, const std::vector<int>& word) {
  HElement e = HElement::one(n, q - q.inverse(), 1);
  for (int i : word) e = e * hecke_T(n, q, i);
  return e;
}

}  // namespace

TEST_CASE("Hecke dimensions and reduced words") {
  for (int n = 1; n <= 5; ++n) {
    auto ps = all_perms(n);
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    CHECK(static_cast<long>(ps.size()) == f);
    for (const auto& w : ps) {
      auto rw = reduced_word(w);
      CHECK(static_cast<int>(rw.size()) == perm_length(w));
      // Rebuild w by right multiplication.
      Perm x = identity_perm(n);
      for (int i : rw) std::swap(x[static_cast<std::size_t>(i - 1)], x[static_cast<std::size_t>(i)]);
      CHECK(x == w);
    }
  }
}

TEST_CASE("Hecke relations") {
  Rational q(6, 5), z = q - q.inverse();
  auto one = HElement::one(4, z, 1);
  for (int i = 1; i < 4; ++i) {
    auto T = hecke_T(4, q, i);
    CHECK(T * T == one + T.scaled(z));
    if (i < 3) {
      auto T2 = hecke_T(4, q, i + 1);
      CHECK(T * T2 * T == T2 * T * T2);
    }
  }
  CHECK(hecke_T(4, q, 1) * hecke_T(4, q, 3) == hecke_T(4, q, 3) * hecke_T(4, q, 1));
}

TEST_CASE("Hecke associativity") {
  std::mt19937_64 rng(9);
  Rational q(6, 5), z = q - q.inverse();
  for (int n = 2; n <= 5; ++n) {
    auto ps = all_perms(n);
    std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
    std::uniform_int_distribution<long> num(-9, 9);
    auto rnd = [&] {
      HElement e(n, z);
      for (int k = 0; k < 3; ++k) e.add_term(ps[pick(rng)], Rational(num(rng), 1 + static_cast<long>(pick(rng) % 7)));
      return e;
    };
    int trials = n <= 4 ? 100 : 25;
    for (int it = 0; it < trials; ++it) {
      auto a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("basis T_w equals the product along any reduced word") {
  Rational q(7, 4);
  auto ps = all_perms(4);
  for (const auto& w : ps) {
    auto rw = reduced_word(w);
    CHECK(word_product(4, q, rw) == HElement::basis(4, q - q.inverse(), w, 1));
  }
}

TEST_CASE("quotient map") {
  const auto& c = ctx3();
  const auto& s = c.scalars();
  CHECK(hecke_quotient(gen_K(c, 1)).is_zero());
  auto T1 = gen_T(c, 1);
  CHECK(hecke_quotient(T1 * T1) == HElement::one(3, s.z, 1) + hecke_T(3, s.q, 1).scaled(s.z));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> b(0, c.dim() - 1);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  auto rnd = [&] {
    RElement e(c);
    for (int k = 0; k < 4; ++k) e.add_term(b(rng), Rational(num(rng), den(rng)));
    return e;
  };
  for (int it = 0; it < 50; ++it) {
    auto x = rnd(), y = rnd();
    CHECK(hecke_quotient(x * y) == hecke_quotient(x) * hecke_quotient(y));
    CHECK(hecke_quotient(x * gen_K(c, 1) * y).is_zero());
  }
}
