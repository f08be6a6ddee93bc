#include "bmwf/bmw.hpp"

#include <deque>
#include <unordered_map>

namespace bmwf {

namespace {

long double_factorial(int n) {
  long r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

std::string word_key(const Word& w) {
  std::string k;
  k.reserve(w.size());
  for (const auto& l : w) k.push_back(static_cast<char>(static_cast<int>(l.kind) * 16 + l.index));
  return k;
}

template <class S>
void accumulate(std::map<int, S>& acc, int b, const S& x) {
  auto [it, inserted] = acc.try_emplace(b, x);
  if (!inserted) it->second += x;
}

template <class S>
SparseRow<S> to_row(const std::map<int, S>& acc) {
  SparseRow<S> row;
  for (const auto& [b, s] : acc)
    if (!negligible(s)) row.emplace_back(b, s);
  return row;
}

}  // namespace

template <class S>
Context<S>::Context(int n, AlgebraScalars<S> scalars, long rewrite_cap) : n_(n), sc_(std::move(scalars)), cap_(rewrite_cap) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "n must be positive");
  if (n > kMaxStrands) throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxStrands));
  build_basis();
  const std::size_t slots = static_cast<std::size_t>(3 * (n_ - 1));
  right_.assign(words_.size(), std::vector<SparseRow<S>>(slots));
  rho_.resize(words_.size());
  for (int b = 0; b < dim(); ++b) {
    for (LetterKind k : {LetterKind::T, LetterKind::U, LetterKind::K})
      for (int i = 1; i < n_; ++i) {
        Word w = words_[static_cast<std::size_t>(b)];
        w.push_back({k, i});
        right_[static_cast<std::size_t>(b)][slot({k, i})] = reduce(w);
      }
    Word r(words_[static_cast<std::size_t>(b)].rbegin(), words_[static_cast<std::size_t>(b)].rend());
    rho_[static_cast<std::size_t>(b)] = reduce(r);
  }
}

template <class S>
void Context<S>::build_basis() {
  std::vector<Letter> alphabet;
  for (int i = 1; i < n_; ++i) alphabet.push_back({LetterKind::T, i});
  for (int i = 1; i < n_; ++i) alphabet.push_back({LetterKind::K, i});
  std::deque<Word> queue{Word{}};
  words_.push_back({});
  diagrams_.push_back(BrauerDiagram::identity(n_));
  index_[diagrams_.back()] = 0;
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (const auto& l : alphabet) {
      Word w2 = w;
      w2.push_back(l);
      auto tr = trace_word(w2, n_);
      if (tr.loops > 0 || index_.count(tr.diagram)) continue;
      index_[tr.diagram] = static_cast<int>(words_.size());
      words_.push_back(w2);
      diagrams_.push_back(tr.diagram);
      queue.push_back(std::move(w2));
    }
  }
  if (static_cast<long>(words_.size()) != double_factorial(n_))
    throw Error(ErrorCode::DimensionMismatch, std::to_string(words_.size()) + " canonical words, expected " +
                                                  std::to_string(double_factorial(n_)));
  // Make every basis word descending and record its writhe.
  writhe_.assign(words_.size(), 0);
  for (std::size_t b = 0; b < words_.size(); ++b) {
    auto tr = trace_word(words_[b], n_);
    int wr = 0;
    for (const auto& c : tr.crossings) {
      auto& l = words_[b][static_cast<std::size_t>(c.step)];
      l.kind = c.time_a < c.time_b ? LetterKind::T : LetterKind::U;
      wr += crossing_sign(l.kind, c);
    }
    writhe_[b] = wr;
  }
  identity_ = 0;
  // Prefix tree, children created in basis order so parents precede them.
  trie_.push_back({});
  std::map<std::pair<int, int>, int> child;
  for (std::size_t b = 0; b < words_.size(); ++b) {
    int v = 0;
    for (const auto& l : words_[b]) {
      int code = static_cast<int>(slot(l));
      auto it = child.find({v, code});
      if (it == child.end()) {
        trie_.push_back({v, l, -1});
        it = child.emplace(std::make_pair(v, code), static_cast<int>(trie_.size()) - 1).first;
      }
      v = it->second;
    }
    trie_[static_cast<std::size_t>(v)].basis = static_cast<int>(b);
  }
}

template <class S>
int Context<S>::index_of(const BrauerDiagram& d) const {
  auto it = index_.find(d);
  return it == index_.end() ? -1 : it->second;
}

template <class S>
S Context<S>::power(const S& x, const S& x_inv, long e) const {
  S r = sc_.one;
  const S& f = e >= 0 ? x : x_inv;
  for (long k = 0; k < (e >= 0 ? e : -e); ++k) r *= f;
  return r;
}

template <class S>
SparseRow<S> Context<S>::reduce(const Word& w) const {
  for (const auto& l : w)
    if (l.index < 1 || l.index >= n_) throw Error(ErrorCode::IndexOutOfRange, "letter " + letter_name(l));
  std::unordered_map<std::string, SparseRow<S>> memo;
  long steps = 0;
  // Explicit recursion through a lambda keeps the memo local to this call.
  auto rec = [&](auto&& self, const Word& word) -> SparseRow<S> {
    auto key = word_key(word);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (++steps > cap_) throw Error(ErrorCode::RewriteLimit, "reduction of " + word_name(w) + " exceeded the step cap");
    auto tr = trace_word(word, n_);
    for (const auto& c : tr.crossings) {
      LetterKind kind = word[static_cast<std::size_t>(c.step)].kind;
      if (crossing_descending(kind, c)) continue;
      // T = U + z - zK and U = T - z + zK.
      Word switched = word, removed = word, smoothed = word;
      switched[static_cast<std::size_t>(c.step)].kind = kind == LetterKind::T ? LetterKind::U : LetterKind::T;
      removed.erase(removed.begin() + c.step);
      smoothed[static_cast<std::size_t>(c.step)].kind = LetterKind::K;
      S zs = kind == LetterKind::T ? sc_.z : -sc_.z;
      std::map<int, S> acc;
      for (const auto& [b, s] : self(self, switched)) accumulate(acc, b, s);
      for (const auto& [b, s] : self(self, removed)) accumulate(acc, b, s * zs);
      for (const auto& [b, s] : self(self, smoothed)) accumulate(acc, b, -(s * zs));
      auto row = to_row(acc);
      memo.emplace(key, row);
      return row;
    }
    int b = index_of(tr.diagram);
    int wr = 0;
    for (const auto& c : tr.crossings) wr += crossing_sign(word[static_cast<std::size_t>(c.step)].kind, c);
    S coeff = power(sc_.mu, sc_.mu, tr.loops) * power(sc_.nu_inv, sc_.nu, wr - writhe_[static_cast<std::size_t>(b)]);
    SparseRow<S> row;
    if (!negligible(coeff)) row.emplace_back(b, coeff);
    memo.emplace(key, row);
    return row;
  };
  return rec(rec, w);
}

template class Context<Rational>;
template class Context<TruncLaurent>;

template <class S>
Element<S> unit(const Context<S>& ctx) {
  return Element<S>::one(ctx, ctx.scalars().one);
}

template <class S>
Element<S> word_element(const Context<S>& ctx, const Word& w) {
  return Element<S>::from_row(ctx, ctx.reduce(w), ctx.scalars().one);
}

template <class S>
Element<S> gen_T(const Context<S>& ctx, int i) {
  return word_element(ctx, Word{{LetterKind::T, i}});
}

template <class S>
Element<S> gen_Tinv(const Context<S>& ctx, int i) {
  return word_element(ctx, Word{{LetterKind::U, i}});
}

template <class S>
Element<S> gen_K(const Context<S>& ctx, int i) {
  return word_element(ctx, Word{{LetterKind::K, i}});
}

template <class S>
Element<S> jm_element(const Context<S>& ctx, int k) {
  if (k < 1 || k > ctx.n()) throw Error(ErrorCode::IndexOutOfRange, "y_" + std::to_string(k));
  Word w;
  for (int i = k - 1; i >= 1; --i) w.push_back({LetterKind::T, i});
  for (int i = 1; i <= k - 1; ++i) w.push_back({LetterKind::T, i});
  return word_element(ctx, w);
}

template <class S>
std::vector<RelationCheck> verify_relations(const Context<S>& ctx) {
  using E = Element<S>;
  const int n = ctx.n();
  const auto& sc = ctx.scalars();
  std::vector<RelationCheck> out;
  auto T = [&](int i) { return gen_T(ctx, i); };
  auto U = [&](int i) { return gen_Tinv(ctx, i); };
  auto K = [&](int i) { return gen_K(ctx, i); };
  E one = unit(ctx);
  E zone = one.scaled(sc.z);
  auto Tz = [&](int i) { return T(i) - zone; };
  auto idx = [](const std::string& base, int i) { return base + "[i=" + std::to_string(i) + "]"; };
  auto idx2 = [](const std::string& base, int i, int e) {
    return base + "[i=" + std::to_string(i) + ",eps=" + (e > 0 ? "+1" : "-1") + "]";
  };
  auto check = [&](std::string name, const E& a, const E& b) { out.push_back({std::move(name), a == b}); };
  // Checks x = y together with rho(x) = rho(y).
  auto check_rho = [&](const std::string& name, const E& a, const E& b) {
    check(name, a, b);
    check("rho " + name, rho(a), rho(b));
  };

  for (int i = 1; i < n; ++i) {
    check(idx("kappa definition z K = z - T + T^-1", i), K(i).scaled(sc.z), zone - T(i) + U(i));
    check(idx("T T^-1 = 1", i), T(i) * U(i), one);
    check(idx("T^-1 T = 1", i), U(i) * T(i), one);
    check(idx("K T = nu K", i), K(i) * T(i), K(i).scaled(sc.nu));
    check(idx("T K = nu K", i), T(i) * K(i), K(i).scaled(sc.nu));
    check(idx("K K = mu K", i), K(i) * K(i), K(i).scaled(sc.mu));
    check(idx("T^2 = 1 + z T - z nu K", i), T(i) * T(i), one + T(i).scaled(sc.z) - K(i).scaled(sc.z * sc.nu));
    check(idx("rho rho = id on T", i), rho(rho(T(i) * K(i))), T(i) * K(i));
  }
  for (int i = 1; i + 1 < n; ++i)
    check(idx("braid T_i T_i+1 T_i = T_i+1 T_i T_i+1", i), T(i) * T(i + 1) * T(i), T(i + 1) * T(i) * T(i + 1));
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      std::string tag = "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]";
      check("distant T_i T_j = T_j T_i" + tag, T(i) * T(j), T(j) * T(i));
      check("distant K_i T_j = T_j K_i" + tag, K(i) * T(j), T(j) * K(i));
      check("distant K_i K_j = K_j K_i" + tag, K(i) * K(j), K(j) * K(i));
    }
  for (int i = 1; i < n; ++i)
    for (int e : {1, -1}) {
      int j = i + e;
      if (j < 1 || j >= n) continue;
      check(idx2("K_i T_j K_i = nu^-1 K_i", i, e), K(i) * T(j) * K(i), K(i).scaled(sc.nu_inv));
      check(idx2("K_i T_j^-1 K_i = nu K_i", i, e), K(i) * U(j) * K(i), K(i).scaled(sc.nu));
      check_rho(idx2("K_i T_j T_i = T_j T_i K_j", i, e), K(i) * T(j) * T(i), T(j) * T(i) * K(j));
      check(idx2("K_i K_j K_i = K_i", i, e), K(i) * K(j) * K(i), K(i));
      check(idx2("(T_i - z) K_j (T_i - z) = (T_j - z) K_i (T_j - z)", i, e), Tz(i) * K(j) * Tz(i), Tz(j) * K(i) * Tz(j));
      check(idx2("T_j K_i T_j = T_i^-1 K_j T_i^-1", i, e), T(j) * K(i) * T(j), U(i) * K(j) * U(i));
      check_rho(idx2("K_i T_j T_i = K_i K_j", i, e), K(i) * T(j) * T(i), K(i) * K(j));
      check_rho(idx2("K_i T_j^-1 T_i^-1 = K_i K_j", i, e), K(i) * U(j) * U(i), K(i) * K(j));
      check_rho(idx2("K_j K_i (T_j - z) = K_j (T_i - z)", i, e), K(j) * K(i) * Tz(j), K(j) * Tz(i));
    }
  std::vector<E> y;
  for (int k = 1; k <= n; ++k) y.push_back(jm_element(ctx, k));
  for (int a = 0; a < n; ++a) {
    check("rho y_" + std::to_string(a + 1) + " = y_" + std::to_string(a + 1), rho(y[static_cast<std::size_t>(a)]),
          y[static_cast<std::size_t>(a)]);
    for (int b = a + 1; b < n; ++b)
      check("y_" + std::to_string(a + 1) + " y_" + std::to_string(b + 1) + " commute",
            y[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)],
            y[static_cast<std::size_t>(b)] * y[static_cast<std::size_t>(a)]);
  }
  for (int j = 1; j < n; ++j) {
    const E& yj = y[static_cast<std::size_t>(j - 1)];
    const E& yj1 = y[static_cast<std::size_t>(j)];
    E nu2k = K(j).scaled(sc.nu * sc.nu);
    check(idx("K_j y_j+1 y_j = nu^2 K_j", j), K(j) * yj1 * yj, nu2k);
    check(idx("y_j y_j+1 K_j = nu^2 K_j", j), yj * yj1 * K(j), nu2k);
  }
  return out;
}

#define BMWF_INSTANTIATE(S)                                               \
  template Element<S> unit(const Context<S>&);                            \
  template Element<S> word_element(const Context<S>&, const Word&);       \
  template Element<S> gen_T(const Context<S>&, int);                      \
  template Element<S> gen_Tinv(const Context<S>&, int);                   \
  template Element<S> gen_K(const Context<S>&, int);                      \
  template Element<S> jm_element(const Context<S>&, int);                 \
  template std::vector<RelationCheck> verify_relations(const Context<S>&);
BMWF_INSTANTIATE(Rational)
BMWF_INSTANTIATE(TruncLaurent)
#undef BMWF_INSTANTIATE

std::shared_ptr<const RationalContext> build_context(int n, const ParamSet& params) {
  if (params.certified_n < n) make_params(params.q, params.nu, n);
  auto ctx = std::make_shared<const RationalContext>(n, rational_scalars(params));
  for (const auto& r : verify_relations(*ctx))
    if (!r.pass) throw Error(ErrorCode::RewriteLimit, "relation check failed on build: " + r.name);
  return ctx;
}

}  // namespace bmwf
