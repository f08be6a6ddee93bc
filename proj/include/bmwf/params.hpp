#pragma once

#include <string>
#include <vector>

#include "bmwf/laurent.hpp"
#include "bmwf/rational.hpp"

namespace bmwf {

/// Specialized algebra parameters, certified generic for strand counts up to certified_n.
struct ParamSet {
  Rational q;
  Rational nu;
  Rational c;   // -1/(q nu)
  Rational mu;  // loop value
  int certified_n = 0;
};

/// Builds a ParamSet and runs the genericity checklist for n strands.
/// Throws Error(NotGeneric) naming the first failing constraint.
ParamSet make_params(const Rational& q, const Rational& nu, int n);

/// Searches small rationals (starting from the default 6/5, 7/3) for a pair certified for n.
ParamSet suggest_params(int n);

inline const Rational kDefaultQ{6, 5};
inline const Rational kDefaultNu{7, 3};

/// k_q = q^(k-1) + q^(k-3) + ... + q^(1-k).
Rational q_number(int k, const Rational& q);
/// 2_q 3_q ... k_q, with 0_q! = 1_q! = 1.
Rational q_factorial(int k, const Rational& q);

/// The constants the BMW multiplication needs, in one scalar domain.
template <class S>
struct AlgebraScalars {
  S one;
  S q, q_inv;
  S nu, nu_inv;
  S z;   // q - 1/q
  S mu;  // 1 + (1/nu - nu)/z
};

AlgebraScalars<Rational> rational_scalars(const ParamSet& p);

/// Contraction regimes: q = ±exp(h), nu = ±exp(±h(omega-1)).
enum class Regime { One = 1, Two = 2, Three = 3, Four = 4 };

struct LaurentParams {
  Regime regime;
  Rational omega;
  int order;
  AlgebraScalars<TruncLaurent> scalars;
};

LaurentParams laurent_params(Regime regime, const Rational& omega, int order);

}  // namespace bmwf
