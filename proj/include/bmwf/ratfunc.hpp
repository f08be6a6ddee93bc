#pragma once

#include <string>

#include "bmwf/polynomial.hpp"

namespace bmwf {

/// Univariate rational function num/den in a named variable. Kept in lowest
/// terms with a monic denominator, so equal functions compare equal.
class RatFunc {
 public:
  RatFunc() : RatFunc(Poly{}) {}
  RatFunc(Poly num, std::string var = "u");  // NOLINT: polynomials embed
  RatFunc(Poly num, Poly den, std::string var = "u");
  RatFunc(const Rational& c, std::string var = "u") : RatFunc(Poly(c), std::move(var)) {}  // NOLINT

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const std::string& var() const { return var_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  /// Exact value at x; throws PoleAtEvaluation when the reduced denominator vanishes.
  Rational evaluate(const Rational& x) const;
  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.var_ == b.var_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  void check_var(const RatFunc& o) const;
  void normalize();

  Poly num_;
  Poly den_;
  std::string var_;
};

}  // namespace bmwf
