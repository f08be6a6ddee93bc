#pragma once

#include <map>
#include <string>
#include <vector>

#include "bmwf/bmw.hpp"
#include "bmwf/error.hpp"
#include "bmwf/rational.hpp"

namespace bmwf {

/// One-line notation, values 1..n.
using Perm = std::vector<int>;

Perm identity_perm(int n);
int perm_length(const Perm& w);
/// Lexicographically smallest reduced word (indices of s_i), read left to right.
std::vector<int> reduced_word(const Perm& w);
std::string perm_str(const Perm& w);
std::vector<Perm> all_perms(int n);

/// Iwahori-Hecke algebra H_n(q) with T_i^2 = 1 + (q - 1/q) T_i, basis T_w.
template <class C = Rational>
class HeckeElement {
 public:
  HeckeElement() = default;
  HeckeElement(int n, Rational z) : n_(n), z_(std::move(z)) {}

  static HeckeElement basis(int n, const Rational& z, const Perm& w, const C& c) {
    HeckeElement e(n, z);
    e.add_term(w, c);
    return e;
  }
  static HeckeElement one(int n, const Rational& z, const C& unit) { return basis(n, z, identity_perm(n), unit); }

  int n() const { return n_; }
  const Rational& z() const { return z_; }
  const std::map<Perm, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Perm& w, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this * T_i.
  HeckeElement times(int i) const {
    if (i < 1 || i >= n_) throw Error(ErrorCode::IndexOutOfRange, "T_" + std::to_string(i));
    HeckeElement out(n_, z_);
    for (const auto& [w, c] : terms_) {
      Perm ws = w;
      std::swap(ws[static_cast<std::size_t>(i - 1)], ws[static_cast<std::size_t>(i)]);
      out.add_term(ws, c);
      if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) out.add_term(w, c * z_);
    }
    return out;
  }

  template <class X>
  HeckeElement scaled(const X& x) const {
    HeckeElement out(n_, z_);
    for (const auto& [w, c] : terms_) out.add_term(w, c * x);
    return out;
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    a.check(b);
    HeckeElement out(a.n_, a.z_);
    for (const auto& [w, c] : b.terms_) {
      HeckeElement cur = a;
      for (int i : reduced_word(w)) cur = cur.times(i);
      out += cur.scaled(c);
    }
    return out;
  }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n_ == b.n_ && a.z_ == b.z_ && a.terms_ == b.terms_;
  }

 private:
  void check(const HeckeElement& o) const {
    if (n_ != o.n_ || z_ != o.z_) throw Error(ErrorCode::DomainMismatch, "Hecke elements from different algebras");
  }

  int n_ = 0;
  Rational z_;
  std::map<Perm, C> terms_;
};

using HElement = HeckeElement<Rational>;

HElement hecke_T(int n, const Rational& q, int i);

/// Image in BMW_n / <K_1> = H_n(q): basis words with a K letter vanish,
/// T_i maps to T_i and T_i^-1 to T_i - (q - 1/q).
HElement hecke_quotient(const RElement& a);

}  // namespace bmwf
