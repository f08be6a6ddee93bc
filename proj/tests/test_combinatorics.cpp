#include <map>

#include "bmwf/combinatorics.hpp"
#include "bmwf/error.hpp"
#include "doctest.h"

using namespace bmwf;

namespace {
long double_factorial(int n) {
  long r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}
}  // namespace

TEST_CASE("tableau counts") {
  CHECK(enumerate_tableaux(1).size() == 1);
  CHECK(enumerate_tableaux(2).size() == 3);
  CHECK(enumerate_tableaux(3).size() == 7);
  CHECK(enumerate_tableaux(4).size() == 25);
}

TEST_CASE("sum of squared path counts equals the Brauer dimension") {
  for (int n = 1; n <= 6; ++n) {
    std::map<Partition, long> paths;
    for (const auto& t : enumerate_tableaux(n)) ++paths[t.shapes.back()];
    long total = 0;
    for (const auto& [shape, k] : paths) total += k * k;
    CHECK(total == double_factorial(n));
  }
}

TEST_CASE("tableau invariants") {
  for (const auto& t : enumerate_tableaux(4)) {
    CHECK(t.shapes.front() == Partition{1});
    CHECK(t.length() == 4);
    for (std::size_t k = 1; k < t.shapes.size(); ++k) {
      int a = 0, b = 0;
      for (int x : t.shapes[k - 1]) a += x;
      for (int x : t.shapes[k]) b += x;
      CHECK(std::abs(a - b) == 1);
    }
    CHECK(transpose(transpose(t)) == t);
    CHECK(parse_tableau(encode_tableau(t)) == t);
  }
}

TEST_CASE("cap") {
  CHECK_THROWS_AS(enumerate_tableaux(7), Error);
  CHECK(enumerate_tableaux(7, 7).size() > 0);
}

TEST_CASE("contents") {
  auto p = make_params(2, 3, 3);
  // (1) -> (2) -> (1): contents 1, q^2, nu^2 q^-2.
  auto t = parse_tableau("1;2;1");
  auto c = quantum_contents(t, p);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == 1);
  CHECK(c[1] == 4);
  CHECK(c[2] == Rational(9, 4));
  auto t2 = parse_tableau("1;;1");
  CHECK(t2.shapes[1].empty());
  auto c2 = quantum_contents(t2, p);
  CHECK(c2[1] == 9);
  CHECK(c2[2] == 1);
  auto cl = classical_contents(t, 5, ContentFlavor::Classical);
  // classical: added box c -> c + (omega-1)/2, removed box -> -(c + (omega-1)/2).
  CHECK(cl[0] == 2);
  CHECK(cl[1] == 3);
  CHECK(cl[2] == -3);
}

TEST_CASE("extension spectrum") {
  auto p = make_params(2, 3, 3);
  auto sp = extension_spectrum(Partition{1}, p);
  REQUIRE(sp.size() == 3);
  CHECK(sp[0] == 4);
  CHECK(sp[1] == Rational(1, 4));
  CHECK(sp[2] == 9);
}
