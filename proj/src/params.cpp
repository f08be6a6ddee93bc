#include "bmwf/params.hpp"

#include <algorithm>
#include <set>

#include "bmwf/error.hpp"

namespace bmwf {

namespace {

[[noreturn]] void not_generic(const std::string& what) { throw Error(ErrorCode::NotGeneric, what); }

}  // namespace

ParamSet make_params(const Rational& q, const Rational& nu, int n) {
  if (q.is_zero()) not_generic("q = 0");
  if (q == Rational(1) || q == Rational(-1)) not_generic("q - 1/q = 0 (q = " + q.str() + ")");
  if (nu.is_zero()) not_generic("nu = 0");
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "n must be positive");

  ParamSet p;
  p.q = q;
  p.nu = nu;
  p.c = -(q * nu).inverse();
  Rational z = q - q.inverse();
  p.mu = (z + nu.inverse() - nu) / z;
  p.certified_n = n;

  // (a) q is not a root of unity of small order.
  for (int k = 1; k <= 4 * n + 4; ++k)
    if (q.pow(k) == Rational(1)) not_generic("q^" + std::to_string(k) + " = 1");

  // (b) the candidate content set C(n) has no coincidences.
  struct Labeled {
    Rational value;
    std::string label;
  };
  std::vector<Labeled> contents;
  for (int m = -n; m <= n; ++m) contents.push_back({q.pow(2 * m), "q^" + std::to_string(2 * m)});
  for (int m = -n; m <= n; ++m)
    contents.push_back({nu * nu * q.pow(2 * m), "nu^2 q^" + std::to_string(2 * m)});
  for (std::size_t i = 0; i < contents.size(); ++i)
    for (std::size_t j = i + 1; j < contents.size(); ++j)
      if (contents[i].value == contents[j].value)
        not_generic("content collision " + contents[i].label + " = " + contents[j].label + " = " +
                    contents[i].value.str());

  // (c) c x y != 1 over C(n): poles of the Q-factors and of the fusion prefactor.
  for (const auto& x : contents)
    for (const auto& y : contents)
      if (p.c * x.value * y.value == Rational(1))
        not_generic("c * " + x.label + " * " + y.label + " = 1");

  // (d) mu-type degenerations nu = ±q^(1-k).
  for (int k = -2 * n; k <= 2 * n; ++k) {
    Rational v = q.pow(1 - k);
    if (nu == v) not_generic("nu = q^" + std::to_string(1 - k));
    if (nu == -v) not_generic("nu = -q^" + std::to_string(1 - k));
  }
  return p;
}

ParamSet suggest_params(int n) {
  try {
    return make_params(kDefaultQ, kDefaultNu, n);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotGeneric) throw;
  }
  for (long s = 2; s < 60; ++s) {
    for (long a = 1; a < s; ++a) {
      long b = s - a;
      Rational q(a + b, b);
      for (long d = 2; d < 12; ++d) {
        Rational nu(d * 2 + 1, d);
        try {
          return make_params(q, nu, n);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotGeneric) throw;
        }
      }
    }
  }
  throw Error(ErrorCode::NotGeneric, "no parameters found for n = " + std::to_string(n));
}

Rational q_number(int k, const Rational& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "q-number at q = 0");
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "q-number of negative integer");
  Rational acc;
  for (int j = 0; j < k; ++j) acc += q.pow(k - 1 - 2 * j);
  return acc;
}

Rational q_factorial(int k, const Rational& q) {
  Rational acc(1);
  for (int j = 2; j <= k; ++j) acc *= q_number(j, q);
  return acc;
}

AlgebraScalars<Rational> rational_scalars(const ParamSet& p) {
  AlgebraScalars<Rational> s;
  s.one = Rational(1);
  s.q = p.q;
  s.q_inv = p.q.inverse();
  s.nu = p.nu;
  s.nu_inv = p.nu.inverse();
  s.z = s.q - s.q_inv;
  s.mu = p.mu;
  return s;
}

LaurentParams laurent_params(Regime regime, const Rational& omega, int order) {
  // Two guard terms absorb the precision lost dividing by z (valuation 1).
  int work = order + 2;
  Rational one(1);
  Rational nu_rate = (regime == Regime::One || regime == Regime::Four) ? one - omega : omega - one;
  bool q_negative = regime == Regime::Two || regime == Regime::Four;
  bool nu_negative = regime == Regime::Three || regime == Regime::Four;

  AlgebraScalars<TruncLaurent> s;
  s.one = TruncLaurent::constant(one, work);
  s.q = TruncLaurent::exp_h(one, work);
  s.q_inv = TruncLaurent::exp_h(-one, work);
  if (q_negative) {
    s.q = -s.q;
    s.q_inv = -s.q_inv;
  }
  s.nu = TruncLaurent::exp_h(nu_rate, work);
  s.nu_inv = TruncLaurent::exp_h(-nu_rate, work);
  if (nu_negative) {
    s.nu = -s.nu;
    s.nu_inv = -s.nu_inv;
  }
  s.z = s.q - s.q_inv;
  s.mu = s.one + (s.nu_inv - s.nu) / s.z;
  return {regime, omega, order, s};
}

}  // namespace bmwf
