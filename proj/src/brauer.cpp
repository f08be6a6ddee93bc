#include "bmwf/brauer.hpp"

#include <algorithm>

#include "bmwf/error.hpp"

namespace bmwf {

BrauerDiagram::BrauerDiagram(std::vector<int> partner) : partner_(std::move(partner)) {
  int m = static_cast<int>(partner_.size());
  if (m % 2) throw Error(ErrorCode::Parse, "Brauer diagram needs an even number of points");
  for (int p = 0; p < m; ++p) {
    int x = partner_[static_cast<std::size_t>(p)];
    if (x < 0 || x >= m || x == p || partner_[static_cast<std::size_t>(x)] != p)
      throw Error(ErrorCode::Parse, "not a perfect matching");
  }
}

BrauerDiagram BrauerDiagram::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    p[static_cast<std::size_t>(k)] = n + k;
    p[static_cast<std::size_t>(n + k)] = k;
  }
  return BrauerDiagram(std::move(p));
}

BrauerDiagram BrauerDiagram::s(int n, int i) {
  if (i < 1 || i >= n) throw Error(ErrorCode::IndexOutOfRange, "s_" + std::to_string(i));
  auto p = identity(n).partner_;
  int a = i - 1, b = i;
  p[static_cast<std::size_t>(a)] = n + b;
  p[static_cast<std::size_t>(n + b)] = a;
  p[static_cast<std::size_t>(b)] = n + a;
  p[static_cast<std::size_t>(n + a)] = b;
  return BrauerDiagram(std::move(p));
}

BrauerDiagram BrauerDiagram::eps(int n, int i) {
  if (i < 1 || i >= n) throw Error(ErrorCode::IndexOutOfRange, "eps_" + std::to_string(i));
  auto p = identity(n).partner_;
  int a = i - 1, b = i;
  p[static_cast<std::size_t>(a)] = b;
  p[static_cast<std::size_t>(b)] = a;
  p[static_cast<std::size_t>(n + a)] = n + b;
  p[static_cast<std::size_t>(n + b)] = n + a;
  return BrauerDiagram(std::move(p));
}

int BrauerDiagram::through_strands() const {
  int k = 0;
  for (int p = 0; p < n(); ++p)
    if (partner_[static_cast<std::size_t>(p)] >= n()) ++k;
  return k;
}

std::pair<BrauerDiagram, int> BrauerDiagram::compose(const BrauerDiagram& below) const {
  const int N = n();
  if (below.n() != N) throw Error(ErrorCode::DomainMismatch, "composing Brauer diagrams of different sizes");
  const auto& up = partner_;
  const auto& dn = below.partner_;
  auto U = [&](int p) { return up[static_cast<std::size_t>(p)]; };
  auto D = [&](int p) { return dn[static_cast<std::size_t>(p)]; };
  std::vector<int> out(static_cast<std::size_t>(2 * N), -1);
  std::vector<char> seen(static_cast<std::size_t>(N), 0);

  // Top points of the result come from the upper diagram.
  for (int t = 0; t < N; ++t) {
    if (out[static_cast<std::size_t>(t)] >= 0) continue;
    int x = U(t);
    int end;
    while (true) {
      if (x < N) { end = x; break; }
      int m = x - N;
      seen[static_cast<std::size_t>(m)] = 1;
      int y = D(m);
      if (y >= N) { end = y; break; }
      seen[static_cast<std::size_t>(y)] = 1;
      x = U(N + y);
    }
    out[static_cast<std::size_t>(t)] = end;
    out[static_cast<std::size_t>(end)] = t;
  }
  // Bottom points of the result come from the lower diagram.
  for (int b = N; b < 2 * N; ++b) {
    if (out[static_cast<std::size_t>(b)] >= 0) continue;
    int x = D(b);
    int end;
    while (true) {
      if (x >= N) { end = x; break; }
      seen[static_cast<std::size_t>(x)] = 1;
      int y = U(N + x);
      if (y < N) { end = y; break; }
      seen[static_cast<std::size_t>(y - N)] = 1;
      x = D(y - N);
    }
    out[static_cast<std::size_t>(b)] = end;
    out[static_cast<std::size_t>(end)] = b;
  }
  // Remaining middle points form closed loops.
  int loops = 0;
  for (int m = 0; m < N; ++m) {
    if (seen[static_cast<std::size_t>(m)]) continue;
    ++loops;
    int cur = m;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = 1;
      int other = U(N + cur) - N;  // along the upper diagram's bottom cup
      seen[static_cast<std::size_t>(other)] = 1;
      cur = D(other);  // along the lower diagram's top cap
    }
  }
  return {BrauerDiagram(std::move(out)), loops};
}

namespace {

std::string point_name(int p, int n) { return p < n ? std::to_string(p + 1) : std::to_string(p - n + 1) + "'"; }

void matchings(std::vector<int>& cur, std::vector<BrauerDiagram>& out) {
  auto it = std::find(cur.begin(), cur.end(), -1);
  if (it == cur.end()) {
    out.emplace_back(cur);
    return;
  }
  int a = static_cast<int>(it - cur.begin());
  for (int b = a + 1; b < static_cast<int>(cur.size()); ++b) {
    if (cur[static_cast<std::size_t>(b)] != -1) continue;
    cur[static_cast<std::size_t>(a)] = b;
    cur[static_cast<std::size_t>(b)] = a;
    matchings(cur, out);
    cur[static_cast<std::size_t>(a)] = -1;
    cur[static_cast<std::size_t>(b)] = -1;
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> BrauerDiagram::pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int p = 0; p < 2 * n(); ++p) {
    int x = partner_[static_cast<std::size_t>(p)];
    if (p < x) out.emplace_back(point_name(p, n()), point_name(x, n()));
  }
  return out;
}

std::string BrauerDiagram::str() const {
  std::string out = "{";
  for (const auto& [a, b] : pairs()) out += (out.size() > 1 ? " " : "") + a + "-" + b;
  return out + "}";
}

std::vector<BrauerDiagram> enumerate_brauer_diagrams(int n) {
  std::vector<BrauerDiagram> out;
  std::vector<int> cur(static_cast<std::size_t>(2 * n), -1);
  matchings(cur, out);
  return out;
}

BrauerElement BrauerElement::one(int n, const Rational& omega) { return basis(BrauerDiagram::identity(n), omega); }

BrauerElement BrauerElement::basis(const BrauerDiagram& d, const Rational& omega, const Rational& coeff) {
  BrauerElement e(d.n(), omega);
  e.add_term(d, coeff);
  return e;
}

Rational BrauerElement::coeff(const BrauerDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational{} : it->second;
}

void BrauerElement::add_term(const BrauerDiagram& d, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void BrauerElement::check(const BrauerElement& o) const {
  if (n_ != o.n_ || omega_ != o.omega_)
    throw Error(ErrorCode::DomainMismatch, "Brauer elements from different algebras");
}

BrauerElement& BrauerElement::operator+=(const BrauerElement& o) {
  check(o);
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

BrauerElement& BrauerElement::operator-=(const BrauerElement& o) {
  check(o);
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

BrauerElement& BrauerElement::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= r;
  return *this;
}

BrauerElement operator*(const BrauerElement& a, const BrauerElement& b) {
  a.check(b);
  BrauerElement out(a.n_, a.omega_);
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) {
      auto [d, loops] = da.compose(db);
      out.add_term(d, ca * cb * a.omega_.pow(loops));
    }
  return out;
}

std::string BrauerElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) out += (out.empty() ? "" : " + ") + ("(" + c.str() + ")") + d.str();
  return out;
}

}  // namespace bmwf
