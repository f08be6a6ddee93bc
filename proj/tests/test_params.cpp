#include "bmwf/error.hpp"
#include "bmwf/params.hpp"
#include "doctest.h"

using namespace bmwf;

namespace {
ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}
}  // namespace

TEST_CASE("derived constants") {
  auto p = make_params(2, 3, 2);
  CHECK(p.mu == Rational(-7, 9));
  CHECK(p.c == Rational(-1, 6));
  auto s = rational_scalars(p);
  CHECK(s.z == Rational(3, 2));
  CHECK(s.mu == p.mu);
}

TEST_CASE("genericity checklist") {
  CHECK(code_of([] { make_params(1, 3, 2); }) == ErrorCode::NotGeneric);
  CHECK(code_of([] { make_params(-1, 3, 2); }) == ErrorCode::NotGeneric);
  CHECK(code_of([] { make_params(2, 0, 2); }) == ErrorCode::NotGeneric);
  // nu = q^2 makes the content of a removed box collide with an added one.
  CHECK(code_of([] { make_params(2, 4, 2); }) == ErrorCode::NotGeneric);
  try {
    make_params(2, 4, 2);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("content collision") != std::string::npos);
  }
  CHECK_NOTHROW(make_params(kDefaultQ, kDefaultNu, 4));
  for (int n = 1; n <= 5; ++n) CHECK(suggest_params(n).certified_n >= n);
}

TEST_CASE("q-numbers") {
  CHECK(q_number(2, 2) == Rational(5, 2));
  CHECK(q_factorial(3, 2) == Rational(105, 8));
  CHECK(q_number(1, 7) == 1);
  CHECK(q_factorial(0, 3) == 1);
}

TEST_CASE("laurent parameters specialize at h -> 0") {
  auto lp = laurent_params(Regime::One, 3, 6);
  CHECK(lp.scalars.q.constant_term() == 1);
  CHECK(lp.scalars.nu.constant_term() == 1);
  // mu -> 1 + (2 (omega - 1) h) / (2 h) = omega at leading order.
  CHECK(lp.scalars.mu.constant_term() == 3);
  auto lp2 = laurent_params(Regime::Two, Rational(5, 2), 6);
  CHECK(lp2.scalars.q.constant_term() == -1);
  CHECK(lp2.scalars.mu.constant_term() == Rational(5, 2));
}
