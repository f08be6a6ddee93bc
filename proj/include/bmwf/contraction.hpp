#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bmwf/bmw.hpp"
#include "bmwf/brauer.hpp"
#include "bmwf/combinatorics.hpp"
#include "bmwf/laurent.hpp"
#include "bmwf/params.hpp"

namespace bmwf {

using LaurentContext = Context<TruncLaurent>;
using LElement = Element<TruncLaurent>;

inline constexpr int kDefaultContractionOrder = 16;

/// BMW_n with q, nu near +-1 as truncated series in h.
struct ContractionSetup {
  LaurentParams params;
  std::shared_ptr<const LaurentContext> ctx;
};
ContractionSetup make_contraction(Regime regime, int n, const Rational& omega, int order = kDefaultContractionOrder);

/// Constant term under T_i -> s_i, K_i -> eps_i (T_i -> -s_i in regimes 3 and 4).
BrauerElement brauer_limit(const LElement& e, Regime regime, const Rational& omega);
/// Image of basis word b: its diagram, with sign (-1)^crossings in regimes 3 and 4.
BrauerElement basis_image(const LaurentContext& ctx, int b, Regime regime, const Rational& omega);

/// Spectral parameter u = exp(2h(theta - (omega-1)/2)) (regime 1) or exp(2h(-theta + (omega-1)/2)) (regime 2).
TruncLaurent spectral_u(Regime regime, const Rational& theta, const Rational& omega, int order);

enum class BlockKind { Q, T };

/// Q_i(u_1,u_2) or T_i(u_1,u_2) over the series parameters.
LElement laurent_block(const ContractionSetup& s, BlockKind kind, int i, const TruncLaurent& u1, const TruncLaurent& u2);

/// The expected classical block for regime 1 or 2.
BrauerElement expected_block(Regime regime, BlockKind kind, int n, int i, const Rational& theta1, const Rational& theta2,
                             const Rational& omega);

struct BlockCheck {
  bool pass = false;
  BrauerElement limit;
  BrauerElement expected;
};

/// Compares the h^0 term of a block with the expected classical block.
BlockCheck contraction_block_check(Regime regime, BlockKind kind, int n, int i, const Rational& theta1,
                                   const Rational& theta2, const Rational& omega,
                                   int order = kDefaultContractionOrder);

/// h^0 terms of all basis products agree with Brauer multiplication; returns the first failing pair or "".
std::string check_structure_constants(const ContractionSetup& s);

/// Constant term of the Jucys-Murphy idempotent of U computed over the series parameters.
BrauerElement brauer_idempotent_via_contraction(const ContractionSetup& s, const UpDownTableau& t);

}  // namespace bmwf
