#include <random>

#include "bmwf/contraction.hpp"
#include "doctest.h"

using namespace bmwf;

TEST_CASE("block limit examples") {
  auto q1 = contraction_block_check(Regime::One, BlockKind::Q, 2, 1, 1, 2, 5);
  CHECK(q1.pass);
  auto s = BrauerElement::s(2, 1, 5), e = BrauerElement::eps(2, 1, 5), one = BrauerElement::one(2, 5);
  CHECK(q1.limit == s - e * Rational(1, 3));
  auto t1 = contraction_block_check(Regime::One, BlockKind::T, 2, 1, 1, 2, 5);
  CHECK(t1.pass);
  CHECK(t1.limit == s + one);
  auto t2 = contraction_block_check(Regime::Two, BlockKind::T, 2, 1, 1, 3, 5);
  CHECK(t2.pass);
  CHECK(t2.limit == s + one * Rational(1, 2) + e * Rational(-2, 7));
}

TEST_CASE("random block limits") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  int done = 0;
  while (done < 10) {
    Rational t1(num(rng), den(rng)), t2(num(rng), den(rng)), w(num(rng), den(rng));
    Rational kappa = w / 2 - 1;
    if ((t1 + t2).is_zero() || (t1 - t2).is_zero() || (t1 + t2 - kappa).is_zero() || (t1 - t2 - kappa).is_zero())
      continue;
    for (Regime r : {Regime::One, Regime::Two})
      for (BlockKind k : {BlockKind::Q, BlockKind::T})
        for (int i = 1; i <= 2; ++i) CHECK(contraction_block_check(r, k, 3, i, t1, t2, w, 8).pass);
    ++done;
  }
}

TEST_CASE("structure constants contract to Brauer multiplication") {
  for (Regime r : {Regime::One, Regime::Two, Regime::Three, Regime::Four})
    for (int n = 2; n <= 3; ++n) {
      auto setup = make_contraction(r, n, Rational(7, 2), 6);
      CHECK(check_structure_constants(setup) == "");
    }
}

TEST_CASE("Brauer idempotents via contraction") {
  Rational w(5);
  for (int n = 2; n <= 3; ++n) {
    auto s1 = make_contraction(Regime::One, n, w);
    auto s2 = make_contraction(Regime::Two, n, w);
    BrauerElement sum(n, w);
    std::vector<BrauerElement> es;
    for (const auto& t : enumerate_tableaux(n)) {
      auto e = brauer_idempotent_via_contraction(s1, t);
      CHECK(e * e == e);
      CHECK(brauer_idempotent_via_contraction(s2, t) == brauer_idempotent_via_contraction(s1, transpose(t)));
      sum += e;
      es.push_back(e);
    }
    CHECK(sum == BrauerElement::one(n, w));
    for (std::size_t a = 0; a < es.size(); ++a)
      for (std::size_t b = 0; b < es.size(); ++b)
        if (a != b) CHECK((es[a] * es[b]).is_zero());
  }
  auto s1 = make_contraction(Regime::One, 2, w);
  CHECK(brauer_idempotent_via_contraction(s1, parse_tableau("1;")) == BrauerElement::eps(2, 1, w) * w.inverse());
}
