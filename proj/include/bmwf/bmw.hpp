#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bmwf/brauer.hpp"
#include "bmwf/error.hpp"
#include "bmwf/params.hpp"
#include "bmwf/tangle.hpp"

namespace bmwf {

inline constexpr int kMaxStrands = 6;
inline constexpr long kDefaultRewriteCap = 1'000'000;

/// Whether a coefficient may be dropped. Exact scalars: when zero.
template <class C>
bool negligible(const C& c) {
  return c.is_zero();
}

template <class S>
using SparseRow = std::vector<std::pair<int, S>>;

/// Multiplication data for BMW_n over one scalar domain S.
///
/// Basis: one word per Brauer diagram. The geometry is the first loop-free
/// word over {crossing_i, K_i} reaching the diagram in breadth-first order;
/// each crossing is then chosen as T or U so that every strand passes over
/// the strands walked after it. Any word is reduced by switching its first
/// non-descending crossing with T - U = z(1 - K); a descending word equals
/// mu^loops nu^-(writhe - writhe of the basis word) times its basis word.
///
/// Products of basis words with every letter are computed on construction,
/// so a built context is read-only and may be shared between threads.
template <class S>
class Context {
 public:
  Context(int n, AlgebraScalars<S> scalars, long rewrite_cap = kDefaultRewriteCap);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(words_.size()); }
  const AlgebraScalars<S>& scalars() const { return sc_; }
  const Word& basis_word(int b) const { return words_[static_cast<std::size_t>(b)]; }
  const BrauerDiagram& diagram(int b) const { return diagrams_[static_cast<std::size_t>(b)]; }
  int index_of(const BrauerDiagram& d) const;
  int identity_index() const { return identity_; }

  /// Expansion of an arbitrary word in the basis.
  SparseRow<S> reduce(const Word& w) const;

  /// basis_word(b) * letter, precomputed.
  const SparseRow<S>& right(int b, Letter l) const { return right_[static_cast<std::size_t>(b)][slot(l)]; }
  /// Expansion of the reversed basis word.
  const SparseRow<S>& reversed(int b) const { return rho_[static_cast<std::size_t>(b)]; }

  /// Prefix tree of the basis words: node 0 is the empty word, parent(v) < v.
  struct TrieNode {
    int parent = -1;
    Letter letter;
    int basis = -1;  // basis index ending here, or -1
  };
  const std::vector<TrieNode>& trie() const { return trie_; }

 private:
  std::size_t slot(Letter l) const {
    return static_cast<std::size_t>(static_cast<int>(l.kind) * (n_ - 1) + (l.index - 1));
  }
  void build_basis();
  void reduce_into(const Word& w, const S& coeff, std::map<int, S>& acc, long& steps) const;
  S power(const S& x, const S& x_inv, long e) const;

  int n_;
  AlgebraScalars<S> sc_;
  long cap_;
  std::vector<Word> words_;
  std::vector<BrauerDiagram> diagrams_;
  std::vector<int> writhe_;
  std::map<BrauerDiagram, int> index_;
  int identity_ = 0;
  std::vector<std::vector<SparseRow<S>>> right_;
  std::vector<SparseRow<S>> rho_;
  std::vector<TrieNode> trie_;
};

/// Linear combination of basis words with coefficients in C (C times S must make sense).
template <class S, class C = S>
class Element {
 public:
  using Ctx = Context<S>;
  Element() = default;
  explicit Element(const Ctx& ctx) : ctx_(&ctx) {}

  static Element one(const Ctx& ctx, const C& unit) { return basis(ctx, ctx.identity_index(), unit); }
  static Element basis(const Ctx& ctx, int b, const C& coeff) {
    Element e(ctx);
    e.add_term(b, coeff);
    return e;
  }
  static Element letter(const Ctx& ctx, Letter l, const C& unit) {
    return Element::one(ctx, unit).times(l);
  }
  static Element from_row(const Ctx& ctx, const SparseRow<S>& row, const C& unit) {
    Element e(ctx);
    for (const auto& [b, s] : row) e.add_term(b, unit * s);
    return e;
  }

  const Ctx& context() const { return *ctx_; }
  const std::map<int, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const C* find(int b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(int b, const C& c) {
    if (negligible(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (negligible(it->second)) terms_.erase(it);
    }
  }

  /// this * letter.
  Element times(Letter l) const {
    Element out(*ctx_);
    for (const auto& [b, c] : terms_)
      for (const auto& [j, s] : ctx_->right(b, l)) out.add_term(j, c * s);
    return out;
  }

  Element& operator+=(const Element& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  template <class X>
  Element scaled(const X& x) const {
    Element out(*ctx_);
    for (const auto& [b, c] : terms_) out.add_term(b, c * x);
    return out;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a) { return Element(*a.ctx_) - a; }

  friend Element operator*(const Element& a, const Element& b) {
    a.check(b);
    const auto& trie = a.ctx_->trie();
    // Which trie nodes lead to a basis word that b uses.
    std::vector<char> needed(trie.size(), 0);
    std::vector<int> node_of(static_cast<std::size_t>(a.ctx_->dim()), -1);
    for (std::size_t v = 0; v < trie.size(); ++v)
      if (trie[v].basis >= 0) node_of[static_cast<std::size_t>(trie[v].basis)] = static_cast<int>(v);
    for (const auto& [j, c] : b.terms_)
      for (int v = node_of[static_cast<std::size_t>(j)]; v >= 0 && !needed[static_cast<std::size_t>(v)];
           v = trie[static_cast<std::size_t>(v)].parent)
        needed[static_cast<std::size_t>(v)] = 1;
    Element out(*a.ctx_);
    // Children lists, then a depth-first walk carrying a * prefix.
    std::vector<std::vector<int>> kids(trie.size());
    for (std::size_t v = 1; v < trie.size(); ++v)
      if (needed[v]) kids[static_cast<std::size_t>(trie[v].parent)].push_back(static_cast<int>(v));
    std::vector<std::pair<int, Element>> stack;
    stack.emplace_back(0, a);
    while (!stack.empty()) {
      auto [v, val] = std::move(stack.back());
      stack.pop_back();
      int bj = trie[static_cast<std::size_t>(v)].basis;
      if (bj >= 0) {
        if (const C* cb = b.find(bj)) out += val.scaled(*cb);
      }
      for (int k : kids[static_cast<std::size_t>(v)])
        stack.emplace_back(k, val.times(trie[static_cast<std::size_t>(k)].letter));
    }
    return out;
  }

  friend bool operator==(const Element& a, const Element& b) {
    a.check(b);
    return (a - b).is_zero();
  }

 private:
  void check(const Element& o) const {
    if (ctx_ != o.ctx_) throw Error(ErrorCode::DomainMismatch, "elements from different contexts");
  }

  const Ctx* ctx_ = nullptr;
  std::map<int, C> terms_;
};

/// Anti-automorphism fixing every generator: reverses words.
template <class S, class C>
Element<S, C> rho(const Element<S, C>& a) {
  Element<S, C> out(a.context());
  for (const auto& [b, c] : a.terms())
    for (const auto& [j, s] : a.context().reversed(b)) out.add_term(j, c * s);
  return out;
}

/// Generators and Jucys-Murphy elements over the context's own scalars.
template <class S>
Element<S> gen_T(const Context<S>& ctx, int i);
template <class S>
Element<S> gen_Tinv(const Context<S>& ctx, int i);
template <class S>
Element<S> gen_K(const Context<S>& ctx, int i);
template <class S>
Element<S> unit(const Context<S>& ctx);
/// y_1 = 1, y_{k+1} = T_k ... T_1 T_1 ... T_k.
template <class S>
Element<S> jm_element(const Context<S>& ctx, int k);
template <class S>
Element<S> word_element(const Context<S>& ctx, const Word& w);

using RationalContext = Context<Rational>;
using RElement = Element<Rational>;

/// Certifies the parameters for n and builds the context; the relation suite
/// is run on the generators before returning.
std::shared_ptr<const RationalContext> build_context(int n, const ParamSet& params);

struct RelationCheck {
  std::string name;
  bool pass = false;
};

/// Defining and derived relations for all admissible indices and signs,
/// their images under rho, and the Jucys-Murphy identities.
template <class S>
std::vector<RelationCheck> verify_relations(const Context<S>& ctx);

extern template class Context<Rational>;
extern template class Context<TruncLaurent>;

}  // namespace bmwf
