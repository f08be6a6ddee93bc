#include <random>

#include "bmwf/brauer.hpp"
#include "doctest.h"

using namespace bmwf;

TEST_CASE("Brauer diagram count") {
  CHECK(enumerate_brauer_diagrams(1).size() == 1);
  CHECK(enumerate_brauer_diagrams(3).size() == 15);
  CHECK(enumerate_brauer_diagrams(5).size() == 945);
}

TEST_CASE("Brauer generator relations") {
  Rational w(5, 2);
  const int n = 4;
  auto one = BrauerElement::one(n, w);
  for (int i = 1; i < n; ++i) {
    auto s = BrauerElement::s(n, i, w), e = BrauerElement::eps(n, i, w);
    CHECK(s * s == one);
    CHECK(e * e == w * e);
    CHECK(s * e == e);
    CHECK(e * s == e);
    if (i + 1 < n) {
      auto s2 = BrauerElement::s(n, i + 1, w), e2 = BrauerElement::eps(n, i + 1, w);
      CHECK(s * s2 * s == s2 * s * s2);
      CHECK(e * e2 * e == e);
      CHECK(e2 * e * e2 == e2);
      CHECK(s * e2 * s == s2 * e * s2);
      CHECK(e * s2 * e == e);
    }
  }
}

TEST_CASE("Brauer composition is associative") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 5; ++n) {
    auto all = enumerate_brauer_diagrams(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int it = 0; it < 100; ++it) {
      const auto &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
      auto [ab, l1] = a.compose(b);
      auto [abc, l2] = ab.compose(c);
      auto [bc, l3] = b.compose(c);
      auto [abc2, l4] = a.compose(bc);
      CHECK(abc == abc2);
      CHECK(l1 + l2 == l3 + l4);
    }
  }
}

TEST_CASE("Brauer pair printing") {
  auto e = BrauerDiagram::eps(2, 1);
  auto pr = e.pairs();
  REQUIRE(pr.size() == 2);
  CHECK(pr[0].first == "1");
  CHECK(pr[0].second == "2");
  CHECK(pr[1].first == "1'");
  CHECK(pr[1].second == "2'");
}
