#include "bmwf/suites.hpp"

#include <thread>

#include "bmwf/contraction.hpp"
#include "bmwf/fusion.hpp"

namespace bmwf {

void SuiteReport::record(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
}

void SuiteReport::merge(const SuiteReport& o) {
  checks += o.checks;
  if (o.failures && failures == 0) first_failure = o.first_failure;
  failures += o.failures;
}

Rational RationalSampler::next() {
  std::uniform_int_distribution<long> num(-9, 8), den(1, 9);
  long p = num(rng_);
  if (p >= 0) ++p;
  return Rational(p, den(rng_));
}

std::vector<Rational> RationalSampler::tuple(int k) {
  std::vector<Rational> out;
  for (int i = 0; i < k; ++i) out.push_back(next());
  return out;
}

void for_sampled_tuples(RationalSampler& rs, int arity, int count,
                        const std::function<void(const std::vector<Rational>&)>& attempt) {
  int done = 0, tries = 0;
  while (done < count) {
    if (++tries > 1000 * count) throw Error(ErrorCode::Pole, "could not sample a pole-free tuple");
    auto t = rs.tuple(arity);
    try {
      attempt(t);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Pole || e.code() == ErrorCode::NonInvertible) continue;
      throw;
    }
    ++done;
  }
}

namespace {

std::string tuple_str(const std::vector<Rational>& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + t[k].str();
  return s + ")";
}

std::shared_ptr<const RationalContext> context(int n, const ParamSet& p) {
  return std::make_shared<const RationalContext>(n, rational_scalars(make_params(p.q, p.nu, n)));
}

}  // namespace

SuiteReport suite_relations(int n, const ParamSet& p) {
  SuiteReport r{"relations", 0, 0, {}};
  auto ctx = context(n, p);
  r.record(ctx->dim() > 0, "dimension");
  for (const auto& c : verify_relations(*ctx)) r.record(c.pass, c.name);
  return r;
}

SuiteReport suite_baxter(int n, const ParamSet& p, std::uint64_t seed, int tuples) {
  SuiteReport r{"baxter", 0, 0, {}};
  if (n < 2) return r;
  auto ctx = context(n, p);
  SpectralParams sp = spectral_params(p);
  RationalSampler rs(seed);
  RElement one = unit(*ctx);
  for (int i = 1; i + 1 < n; ++i) {
    for_sampled_tuples(rs, 3, tuples, [&](const std::vector<Rational>& u) {
      auto lhs = baxterized_T(*ctx, sp, i, u[1], u[2]) * baxterized_T(*ctx, sp, i + 1, u[0], u[2]) *
                 baxterized_T(*ctx, sp, i, u[0], u[1]);
      auto rhs = baxterized_T(*ctx, sp, i + 1, u[0], u[1]) * baxterized_T(*ctx, sp, i, u[0], u[2]) *
                 baxterized_T(*ctx, sp, i + 1, u[1], u[2]);
      r.record(lhs == rhs, "Yang-Baxter i=" + std::to_string(i) + " u=" + tuple_str(u));
    });
    for_sampled_tuples(rs, 3, tuples, [&](const std::vector<Rational>& u) {
      auto Q = [&](int k, const Rational& a, const Rational& b) { return baxterized_Q(*ctx, sp, k, a, b, sp.c); };
      auto lhs = baxterized_T(*ctx, sp, i, u[1], u[2]) * Q(i + 1, u[0], u[2]) * Q(i, u[0], u[1]);
      auto rhs = Q(i + 1, u[0], u[1]) * Q(i, u[0], u[2]) * baxterized_T(*ctx, sp, i + 1, u[1], u[2]);
      r.record(lhs == rhs, "T-Q-Q braid i=" + std::to_string(i) + " u=" + tuple_str(u));
    });
  }
  for (int i = 1; i < n; ++i)
    for_sampled_tuples(rs, 2, tuples, [&](const std::vector<Rational>& u) {
      auto inv = baxterized_T_inverse(*ctx, sp, i, u[1], u[0]);
      auto fwd = baxterized_T(*ctx, sp, i, u[1], u[0]);
      r.record(fwd * inv == one && inv * fwd == one, "inverse i=" + std::to_string(i) + " u=" + tuple_str(u));
      r.record(f_factor(sp, u[0], u[1]) == f_factor(sp, u[1], u[0]), "f symmetry u=" + tuple_str(u));
    });
  return r;
}

SuiteReport suite_fusion(int n, const ParamSet& p, std::uint64_t seed, int jobs) {
  SuiteReport r{"fusion", 0, 0, {}};
  auto ctx = context(n, p);
  auto tabs = enumerate_tableaux(n, kMaxStrands);
  std::vector<Idempotent> fus(tabs.size()), jm(tabs.size());
  std::vector<std::string> errs(tabs.size());
  auto work = [&](std::size_t k) {
    try {
      fus[k] = fusion_idempotent(*ctx, p, tabs[k]);
      jm[k] = jm_oracle_idempotent(*ctx, p, tabs[k]);
    } catch (const std::exception& e) {
      errs[k] = e.what();
    }
  };
  {
    std::vector<std::thread> pool;
    int J = std::max(1, jobs);
    for (int w = 0; w < J; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t k = static_cast<std::size_t>(w); k < tabs.size(); k += static_cast<std::size_t>(J)) work(k);
      });
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errs)
    if (!e.empty()) throw Error(ErrorCode::PoleAtEvaluation, e);
  RElement sum(*ctx);
  for (std::size_t k = 0; k < tabs.size(); ++k) {
    const auto& E = fus[k].element;
    std::string tag = " U=" + encode_tableau(tabs[k]);
    r.record(E == jm[k].element, "fusion = jm oracle" + tag);
    r.record(E * E == E, "idempotent" + tag);
    r.record(rho(E) == E, "rho symmetric" + tag);
    for (int j = 1; j <= n; ++j)
      r.record(jm_element(*ctx, j) * E == E.scaled(fus[k].contents[static_cast<std::size_t>(j - 1)]),
               "y_" + std::to_string(j) + " eigenvalue" + tag);
    sum += E;
  }
  for (std::size_t a = 0; a < tabs.size(); ++a)
    for (std::size_t b = 0; b < tabs.size(); ++b)
      if (a != b)
        r.record((fus[a].element * fus[b].element).is_zero(),
                 "orthogonal " + encode_tableau(tabs[a]) + " / " + encode_tableau(tabs[b]));
  r.record(sum == unit(*ctx), "complete");
  if (n <= 3)
    for (std::size_t k = 0; k < tabs.size(); ++k) {
      auto st = fusion_idempotent(*ctx, p, tabs[k], true);
      auto tt = transpose(tabs[k]);
      std::size_t m = 0;
      while (m < tabs.size() && !(tabs[m] == tt)) ++m;
      r.record(m < tabs.size() && st.element == fus[m].element, "starred = transposed U=" + encode_tableau(tabs[k]));
    }
  r.merge(suite_baxter(n, p, seed));
  return r;
}

SuiteReport suite_reflection(int n, const ParamSet& p, std::uint64_t seed, int tuples) {
  SuiteReport r{"reflection", 0, 0, {}};
  auto ctx = context(n, p);
  SpectralParams sp = spectral_params(p);
  RationalSampler rs(seed);
  for (int j = 1; j < n; ++j)
    for_sampled_tuples(rs, 2, tuples, [&](const std::vector<Rational>& t) {
      bool ok = check_reflection_L(*ctx, sp, j, t[0], t[1]);
      r.record(ok, "L reflection j=" + std::to_string(j) + " (u,v)=" + tuple_str(t));
    });
  for (int j = 2; j < n; ++j)
    for_sampled_tuples(rs, j + 1, tuples, [&](const std::vector<Rational>& t) {
      std::vector<Rational> us(t.begin(), t.begin() + (j - 1));
      bool ok = check_reflection_Y(*ctx, sp, j, us, t[static_cast<std::size_t>(j - 1)], t[static_cast<std::size_t>(j)]);
      r.record(ok, "Y reflection j=" + std::to_string(j) + " args=" + tuple_str(t));
    });
  return r;
}

SuiteReport suite_hecke(int n, const ParamSet& p) {
  SuiteReport r{"hecke", 0, 0, {}};
  auto ctx = context(n, p);
  const Rational z = p.q - p.q.inverse();
  const Rational c_bmw = spectral_params(p).c;
  const std::vector<Rational> cs{0, Rational(1, 2), Rational(-2, 3), Rational(3, 7), c_bmw};
  std::vector<HElement> es;
  HElement sum(n, z);
  for (const auto& t : enumerate_tableaux(n, kMaxStrands)) {
    if (!t.is_standard()) continue;
    std::string tag = " U=" + encode_tableau(t);
    HElement ref = hecke_quotient(fusion_idempotent(*ctx, p, t).element);
    int sampled = 0;
    for (const auto& c : cs) {
      try {
        HElement h = hecke_family_idempotent(n, p.q, t, c);
        r.record(h == ref, "family at c=" + c.str() + " = BMW quotient" + tag);
        ++sampled;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PoleAtEvaluation && e.code() != ErrorCode::Pole) throw;
      }
    }
    r.record(sampled >= 4, "at least four c values sampled" + tag);
    r.record(ref * ref == ref, "idempotent" + tag);
    sum += ref;
    es.push_back(ref);
  }
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = 0; b < es.size(); ++b)
      if (a != b) r.record((es[a] * es[b]).is_zero(), "orthogonal");
  r.record(sum == HElement::one(n, z, 1), "complete");
  return r;
}

SuiteReport suite_contraction(int n, const Rational& omega, std::uint64_t seed, int tuples) {
  SuiteReport r{"contraction", 0, 0, {}};
  RationalSampler rs(seed);
  int bn = std::max(n, 2);
  for_sampled_tuples(rs, 3, tuples, [&](const std::vector<Rational>& t) {
    Rational kappa = t[2] / 2 - 1;
    for (const auto& d : {t[0] + t[1], t[0] - t[1], t[0] + t[1] - kappa, t[0] - t[1] - kappa})
      if (d.is_zero()) throw Error(ErrorCode::Pole, "classical block denominator");
    for (Regime reg : {Regime::One, Regime::Two})
      for (BlockKind k : {BlockKind::Q, BlockKind::T})
        for (int i = 1; i < bn; ++i) {
          auto bc = contraction_block_check(reg, k, bn, i, t[0], t[1], t[2], 8);
          r.record(bc.pass, std::string("regime ") + (reg == Regime::One ? "1" : "2") +
                                (k == BlockKind::Q ? " Q" : " T") + "-block i=" + std::to_string(i) +
                                " (theta1,theta2,omega)=" + tuple_str(t));
        }
  });
  for (int m = 2; m <= std::min(n, 3); ++m)
    for (Regime reg : {Regime::One, Regime::Two, Regime::Three, Regime::Four}) {
      auto s = make_contraction(reg, m, omega, 6);
      std::string bad = check_structure_constants(s);
      r.record(bad.empty(), "structure constants n=" + std::to_string(m) + " regime " +
                                std::to_string(static_cast<int>(reg)) + (bad.empty() ? "" : " at " + bad));
    }
  for (int m = 2; m <= std::min(n, 3); ++m) {
    auto s1 = make_contraction(Regime::One, m, omega);
    auto s2 = make_contraction(Regime::Two, m, omega);
    std::vector<BrauerElement> es;
    BrauerElement sum(m, omega);
    for (const auto& t : enumerate_tableaux(m)) {
      std::string tag = " U=" + encode_tableau(t);
      auto e = brauer_idempotent_via_contraction(s1, t);
      r.record(e * e == e, "Brauer idempotent" + tag);
      r.record(brauer_idempotent_via_contraction(s2, t) == brauer_idempotent_via_contraction(s1, transpose(t)),
               "regime 2 = regime 1 on transpose" + tag);
      sum += e;
      es.push_back(e);
    }
    for (std::size_t a = 0; a < es.size(); ++a)
      for (std::size_t b = 0; b < es.size(); ++b)
        if (a != b) r.record((es[a] * es[b]).is_zero(), "Brauer orthogonal n=" + std::to_string(m));
    r.record(sum == BrauerElement::one(m, omega), "Brauer complete n=" + std::to_string(m));
  }
  return r;
}

}  // namespace bmwf
