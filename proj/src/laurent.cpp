#include "bmwf/laurent.hpp"

#include <algorithm>

#include "bmwf/error.hpp"

namespace bmwf {

TruncLaurent TruncLaurent::zero(std::int64_t abs_precision) {
  TruncLaurent z;
  z.val_ = abs_precision;
  return z;
}

TruncLaurent TruncLaurent::constant(const Rational& r, int order) { return monomial(r, 0, order); }

TruncLaurent TruncLaurent::monomial(const Rational& c, std::int64_t k, int order) {
  if (c.is_zero()) return zero(k + order);
  TruncLaurent t;
  t.val_ = k;
  t.c_.assign(static_cast<std::size_t>(order), Rational{});
  t.c_[0] = c;
  return t;
}

TruncLaurent TruncLaurent::exp_h(const Rational& r, int order) {
  TruncLaurent t;
  t.c_.reserve(static_cast<std::size_t>(order));
  Rational term(1);
  for (int k = 0; k < order; ++k) {
    t.c_.push_back(term);
    term = term * r / Rational(k + 1);
  }
  return t;
}

void TruncLaurent::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead == 0) return;
  val_ += static_cast<std::int64_t>(lead);
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
}

Rational TruncLaurent::coeff(std::int64_t k) const {
  if (k >= abs_precision())
    throw Error(ErrorCode::PrecisionExhausted, "coefficient of h^" + std::to_string(k) + " beyond precision of " + str());
  if (k < val_) return {};
  return c_[static_cast<std::size_t>(k - val_)];
}

Rational TruncLaurent::constant_term() const {
  if (!is_zero() && val_ < 0)
    throw Error(ErrorCode::NegativeValuation, "series has a pole of order " + std::to_string(-val_) + ": " + str());
  return coeff(0);
}

TruncLaurent TruncLaurent::inverse() const {
  if (is_zero()) throw Error(ErrorCode::NonInvertible, "inverse of a series that is zero to precision " + str());
  std::size_t n = c_.size();
  std::vector<Rational> inv(n);
  Rational lead_inv = c_[0].inverse();
  inv[0] = lead_inv;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * inv[k - j];
    inv[k] = -acc * lead_inv;
  }
  TruncLaurent t;
  t.val_ = -val_;
  t.c_ = std::move(inv);
  return t;
}

TruncLaurent TruncLaurent::shift(std::int64_t k) const {
  TruncLaurent t = *this;
  t.val_ += k;
  return t;
}

TruncLaurent TruncLaurent::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  TruncLaurent result = constant(Rational(1), std::max(order(), 1));
  if (is_zero() && e > 0) return zero(val_ * e);
  TruncLaurent base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

TruncLaurent& TruncLaurent::operator+=(const TruncLaurent& o) {
  std::int64_t prec = std::min(abs_precision(), o.abs_precision());
  std::int64_t low = std::min(val_, o.val_);
  if (prec <= low) {
    *this = zero(prec);
    return *this;
  }
  std::vector<Rational> out(static_cast<std::size_t>(prec - low));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    std::int64_t p = val_ + static_cast<std::int64_t>(k);
    if (p < prec) out[static_cast<std::size_t>(p - low)] += c_[k];
  }
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    std::int64_t p = o.val_ + static_cast<std::int64_t>(k);
    if (p < prec) out[static_cast<std::size_t>(p - low)] += o.c_[k];
  }
  val_ = low;
  c_ = std::move(out);
  normalize();
  if (c_.empty()) val_ = prec;
  return *this;
}

TruncLaurent& TruncLaurent::operator-=(const TruncLaurent& o) { return *this += -o; }

TruncLaurent& TruncLaurent::operator*=(const TruncLaurent& o) {
  std::int64_t v = val_ + o.val_;
  std::size_t n = std::min(c_.size(), o.c_.size());
  if (n == 0) {
    *this = zero(v);
    return *this;
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += c_[i] * o.c_[j];
  }
  val_ = v;
  c_ = std::move(out);
  return *this;
}

TruncLaurent& TruncLaurent::operator*=(const Rational& r) {
  if (is_zero()) return *this;
  if (r.is_zero()) {
    *this = zero(abs_precision());
    return *this;
  }
  for (auto& x : c_) x *= r;
  return *this;
}

TruncLaurent operator-(TruncLaurent a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

std::string TruncLaurent::str() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[k].str() + ")h^" + std::to_string(val_ + static_cast<std::int64_t>(k));
  }
  if (out.empty()) out = "0";
  return out + " + O(h^" + std::to_string(abs_precision()) + ")";
}

}  // namespace bmwf
