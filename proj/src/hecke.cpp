#include "bmwf/hecke.hpp"

#include <algorithm>
#include <numeric>

namespace bmwf {

Perm identity_perm(int n) {
  Perm w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv;
}

std::vector<int> reduced_word(const Perm& w) {
  // Peel off the smallest left descent: s_i w is shorter iff i+1 stands before i.
  std::vector<int> out;
  Perm cur = w;
  std::vector<int> pos(cur.size() + 1);
  while (true) {
    for (std::size_t k = 0; k < cur.size(); ++k) pos[static_cast<std::size_t>(cur[k])] = static_cast<int>(k);
    int found = 0;
    for (int i = 1; i < static_cast<int>(cur.size()); ++i)
      if (pos[static_cast<std::size_t>(i + 1)] < pos[static_cast<std::size_t>(i)]) {
        found = i;
        break;
      }
    if (!found) break;
    out.push_back(found);
    std::swap(cur[static_cast<std::size_t>(pos[static_cast<std::size_t>(found)])],
              cur[static_cast<std::size_t>(pos[static_cast<std::size_t>(found + 1)])]);
  }
  return out;
}

std::string perm_str(const Perm& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm w = identity_perm(n);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

HElement hecke_T(int n, const Rational& q, int i) {
  Rational z = q - q.inverse();
  return HElement::one(n, z, 1).times(i);
}

HElement hecke_quotient(const RElement& a) {
  const auto& ctx = a.context();
  const int n = ctx.n();
  const Rational& z = ctx.scalars().z;
  HElement out(n, z);
  for (const auto& [b, c] : a.terms()) {
    const Word& w = ctx.basis_word(b);
    HElement img = HElement::one(n, z, c);
    bool killed = false;
    for (const auto& l : w) {
      if (l.kind == LetterKind::K) {
        killed = true;
        break;
      }
      HElement t = img.times(l.index);
      if (l.kind == LetterKind::U) t -= img.scaled(z);
      img = std::move(t);
    }
    if (!killed) out += img;
  }
  return out;
}

}  // namespace bmwf
