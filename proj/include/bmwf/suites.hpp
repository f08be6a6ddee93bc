#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bmwf/params.hpp"
#include "bmwf/rational.hpp"

namespace bmwf {

struct SuiteReport {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  bool pass() const { return failures == 0 && checks > 0; }
  void record(bool ok, const std::string& what);
  void merge(const SuiteReport& o);
};

/// Small random rationals p/q with p in [-9,9]\{0}, q in [1,9].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  Rational next();
  std::vector<Rational> tuple(int k);

 private:
  std::mt19937_64 rng_;
};

/// Draws tuples until `attempt` returns without a Pole/NonInvertible error,
/// `count` times. Other errors propagate.
void for_sampled_tuples(RationalSampler& rs, int arity, int count,
                        const std::function<void(const std::vector<Rational>&)>& attempt);

SuiteReport suite_relations(int n, const ParamSet& p);
/// Complete systems, oracle equivalence, rho symmetry, starred transposition
/// (n <= 3) and the baxterized identities at sampled spectral values.
SuiteReport suite_fusion(int n, const ParamSet& p, std::uint64_t seed, int jobs = 1);
/// Baxterized identities only: Yang-Baxter, inverse, f symmetry, T-Q-Q braid.
SuiteReport suite_baxter(int n, const ParamSet& p, std::uint64_t seed, int tuples = 10);
/// L-variant for j = 1..n-1 and Y-variant for j = 2..n-1, `tuples` each.
SuiteReport suite_reflection(int n, const ParamSet& p, std::uint64_t seed, int tuples = 10);
/// Family idempotents over standard tableaux at several c, against the BMW quotient.
SuiteReport suite_hecke(int n, const ParamSet& p);
/// Block limits for both regimes, structure constants and Brauer idempotents (n <= 3).
SuiteReport suite_contraction(int n, const Rational& omega, std::uint64_t seed, int tuples = 10);

}  // namespace bmwf
