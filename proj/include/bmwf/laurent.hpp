#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmwf/rational.hpp"

namespace bmwf {

/// Truncated Laurent series in h:
///   sum_k coeffs[k] * h^(val + k)  +  O(h^(val + N)),   N = coeffs.size().
/// Precision is tracked relative to the valuation, so cancellation in a sum
/// shortens N rather than fabricating digits. A zero carries only its absolute
/// precision (val) and N = 0.
class TruncLaurent {
 public:
  TruncLaurent() = default;

  static TruncLaurent zero(std::int64_t abs_precision);
  static TruncLaurent constant(const Rational& r, int order);
  /// exp(r*h) truncated to `order` terms.
  static TruncLaurent exp_h(const Rational& r, int order);
  /// The monomial c*h^k with `order` relative terms.
  static TruncLaurent monomial(const Rational& c, std::int64_t k, int order);

  bool is_zero() const { return c_.empty(); }
  std::int64_t valuation() const { return val_; }
  int order() const { return static_cast<int>(c_.size()); }
  std::int64_t abs_precision() const { return val_ + order(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of h^k; k must lie below abs_precision().
  Rational coeff(std::int64_t k) const;

  /// Value at h^0. Throws NegativeValuation if a nonzero negative power
  /// remains and PrecisionExhausted if h^0 is beyond the known precision.
  Rational constant_term() const;

  TruncLaurent inverse() const;
  TruncLaurent shift(std::int64_t k) const;
  TruncLaurent pow(long e) const;

  TruncLaurent& operator+=(const TruncLaurent& o);
  TruncLaurent& operator-=(const TruncLaurent& o);
  TruncLaurent& operator*=(const TruncLaurent& o);
  TruncLaurent& operator/=(const TruncLaurent& o) { return *this *= o.inverse(); }
  TruncLaurent& operator*=(const Rational& r);

  friend TruncLaurent operator+(TruncLaurent a, const TruncLaurent& b) { return a += b; }
  friend TruncLaurent operator-(TruncLaurent a, const TruncLaurent& b) { return a -= b; }
  friend TruncLaurent operator*(TruncLaurent a, const TruncLaurent& b) { return a *= b; }
  friend TruncLaurent operator/(TruncLaurent a, const TruncLaurent& b) { return a /= b; }
  friend TruncLaurent operator*(TruncLaurent a, const Rational& r) { return a *= r; }
  friend TruncLaurent operator*(const Rational& r, TruncLaurent a) { return a *= r; }
  friend TruncLaurent operator-(TruncLaurent a);
  /// Equality up to the common precision of both operands.
  friend bool operator==(const TruncLaurent& a, const TruncLaurent& b) { return (a - b).is_zero(); }

  std::string str() const;

 private:
  void normalize();

  std::int64_t val_ = 0;
  std::vector<Rational> c_;
};

/// Series zeros are dropped from linear combinations only once they are known
/// to this absolute order; shorter zeros are kept so that lost precision
/// surfaces as PrecisionExhausted instead of a silent 0.
inline constexpr std::int64_t kLaurentDropPrecision = 8;
inline bool negligible(const TruncLaurent& x) { return x.is_zero() && x.abs_precision() >= kLaurentDropPrecision; }

}  // namespace bmwf
