#pragma once

#include <map>
#include <string>
#include <vector>

#include "bmwf/rational.hpp"

namespace bmwf {

/// Perfect matching on the 2n points {1..n (top), 1'..n' (bottom)}.
/// Point k < n is top k+1, point n + k is bottom k+1; partner[p] is p's mate.
class BrauerDiagram {
 public:
  BrauerDiagram() = default;
  explicit BrauerDiagram(std::vector<int> partner);

  static BrauerDiagram identity(int n);
  static BrauerDiagram s(int n, int i);    // swaps strands i, i+1 (1-based)
  static BrauerDiagram eps(int n, int i);  // cap/cup on i, i+1

  int n() const { return static_cast<int>(partner_.size()) / 2; }
  const std::vector<int>& partner() const { return partner_; }
  int through_strands() const;
  bool is_permutation() const { return through_strands() == n(); }

  /// Stacks this diagram above `below`; returns the product diagram and the
  /// number of closed loops that were removed.
  std::pair<BrauerDiagram, int> compose(const BrauerDiagram& below) const;

  /// Sorted pair list, e.g. [["1","2'"],["1'","2"]].
  std::vector<std::pair<std::string, std::string>> pairs() const;
  std::string str() const;

  friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;
  friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;

 private:
  std::vector<int> partner_;
};

/// All (2n-1)!! diagrams in a fixed order.
std::vector<BrauerDiagram> enumerate_brauer_diagrams(int n);

/// Element of the Brauer algebra B_n(omega) over the rationals.
class BrauerElement {
 public:
  BrauerElement() = default;
  BrauerElement(int n, Rational omega) : n_(n), omega_(std::move(omega)) {}

  static BrauerElement one(int n, const Rational& omega);
  static BrauerElement basis(const BrauerDiagram& d, const Rational& omega, const Rational& coeff = Rational(1));
  static BrauerElement s(int n, int i, const Rational& omega) { return basis(BrauerDiagram::s(n, i), omega); }
  static BrauerElement eps(int n, int i, const Rational& omega) { return basis(BrauerDiagram::eps(n, i), omega); }

  int n() const { return n_; }
  const Rational& omega() const { return omega_; }
  const std::map<BrauerDiagram, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const BrauerDiagram& d) const;
  void add_term(const BrauerDiagram& d, const Rational& c);

  BrauerElement& operator+=(const BrauerElement& o);
  BrauerElement& operator-=(const BrauerElement& o);
  BrauerElement& operator*=(const Rational& r);
  friend BrauerElement operator+(BrauerElement a, const BrauerElement& b) { return a += b; }
  friend BrauerElement operator-(BrauerElement a, const BrauerElement& b) { return a -= b; }
  friend BrauerElement operator*(BrauerElement a, const Rational& r) { return a *= r; }
  friend BrauerElement operator*(const Rational& r, BrauerElement a) { return a *= r; }
  friend BrauerElement operator*(const BrauerElement& a, const BrauerElement& b);
  friend bool operator==(const BrauerElement& a, const BrauerElement& b) {
    return a.n_ == b.n_ && a.omega_ == b.omega_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  void check(const BrauerElement& o) const;

  int n_ = 0;
  Rational omega_;
  std::map<BrauerDiagram, Rational> terms_;
};

}  // namespace bmwf
