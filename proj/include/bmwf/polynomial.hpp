#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bmwf/rational.hpp"

namespace bmwf {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upwards with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants embed implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  explicit Poly(std::vector<Rational> coeffs);

  /// The monomial x^k scaled by c.
  static Poly monomial(const Rational& c, int k);
  /// a*x + b.
  static Poly linear(const Rational& a, const Rational& b);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return c_.back(); }

  Rational evaluate(const Rational& x) const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& r);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& r) { return a *= r; }
  friend Poly operator*(const Rational& r, Poly a) { return a *= r; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder).
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic greatest common divisor (zero if both are zero).
  static Poly gcd(Poly a, Poly b);

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace bmwf
