#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmwf/bmw.hpp"
#include "bmwf/combinatorics.hpp"
#include "bmwf/hecke.hpp"
#include "bmwf/polynomial.hpp"
#include "bmwf/ratfunc.hpp"

namespace bmwf {

/// Scalars entering the baxterized elements. The starred set is obtained by
/// q -> -1/q; z = q - 1/q and f(u,v) are unchanged by it.
struct SpectralParams {
  Rational q;      // after the substitution when starred
  Rational z;
  Rational k;      // nu^-1 q
  Rational c;      // -1/(q nu)
  bool starred = false;
};

SpectralParams spectral_params(const ParamSet& p, bool starred = false);

/// T_i(a,b) = T_i + alpha + gamma K_i.
struct BaxterCoeffs {
  Rational alpha, gamma;
};
BaxterCoeffs baxter_coeffs(const SpectralParams& sp, const Rational& a, const Rational& b);
/// f(u,v) = (u-v)^2 / ((u - q^2 v)(u - q^-2 v)).
Rational f_factor(const SpectralParams& sp, const Rational& u, const Rational& v);

RElement baxterized_T(const RationalContext& ctx, const SpectralParams& sp, int i, const Rational& a, const Rational& b);
/// T_i(u,v) f(u,v), the inverse of T_i(v,u).
RElement baxterized_T_inverse(const RationalContext& ctx, const SpectralParams& sp, int i, const Rational& v,
                              const Rational& u);
/// Q_i(u,v;c) = T_i(1/(cuv)).
RElement baxterized_Q(const RationalContext& ctx, const SpectralParams& sp, int i, const Rational& u, const Rational& v,
                      const Rational& c);

/// Y_j(u_1, ..., u_j) at rational arguments (us has j entries).
RElement Y_script(const RationalContext& ctx, const SpectralParams& sp, const std::vector<Rational>& us);

/// Element whose coefficients are polynomials in u, times the scalar num(u)/den(u).
using PElement = Element<Rational, Poly>;
struct SpectralElement {
  PElement elem;
  Poly num{1}, den{1};
};

/// Value at u = x after cancelling common factors coefficientwise; a
/// surviving pole raises PoleAtEvaluation.
RElement evaluate_at(const SpectralElement& e, const Rational& x);

/// Y_j(c_1, ..., c_{j-1}, u) with u symbolic.
SpectralElement Y_script_spectral(const RationalContext& ctx, const SpectralParams& sp,
                                  const std::vector<Rational>& contents);

struct Idempotent {
  UpDownTableau tableau;
  std::vector<Rational> contents;
  std::string method;
  RElement element;
};

/// One step of the stepwise evaluation: from E of the first k-1 contents to E of the first k.
RElement fusion_step(const RationalContext& ctx, const SpectralParams& sp, const RElement& prev,
                     const std::vector<Rational>& contents, int k);

/// Stepwise fusion evaluation along the whole tableau. With starred elements the
/// result is the idempotent of the transposed tableau.
Idempotent fusion_idempotent(const RationalContext& ctx, const ParamSet& p, const UpDownTableau& t,
                             bool starred = false);

/// E_k = E_{k-1} prod_{Y != c_k} (y_k - Y)/(c_k - Y), Y over the next-step spectrum.
template <class S>
Element<S> jm_oracle(const Context<S>& ctx, const UpDownTableau& t, const S& q, const S& nu);

Idempotent jm_oracle_idempotent(const RationalContext& ctx, const ParamSet& p, const UpDownTableau& t);

/// Chain forms: A_n = (-1)^{n-1}/n_q T_1(q^2)...T_{n-1}(q^{2(n-1)}) A_{n-1},
/// S_n = 1/n_q T*_1(q^-2)...T*_{n-1}(q^{-2(n-1)}) S_{n-1}.
RElement antisymmetrizer_chain(const RationalContext& ctx, const ParamSet& p);
RElement symmetrizer_chain(const RationalContext& ctx, const ParamSet& p);
/// Y_n(u_1..u_n) = Q_2...Q_n T_n...T_2 with the scalar prefactors of the product form.
RElement Y_product(const RationalContext& ctx, const SpectralParams& sp, const std::vector<Rational>& us);
RElement symmetrizer_yproduct(const RationalContext& ctx, const ParamSet& p);
RElement antisymmetrizer_yproduct(const RationalContext& ctx, const ParamSet& p);

/// (u - x)^-1 for an element x, through its minimal polynomial; NonInvertible
/// when u is a root.
RElement resolvent(const RElement& x, const Rational& u);
/// Monic minimal polynomial of x.
Poly minimal_polynomial(const RElement& x);

/// L_j(u) = (c u y_j - 1)(u - y_j)^-1.
RElement L_element(const RationalContext& ctx, const SpectralParams& sp, int j, const Rational& u);
bool check_reflection_L(const RationalContext& ctx, const SpectralParams& sp, int j, const Rational& u,
                        const Rational& v);
/// us = (u_1, ..., u_{j-1}).
bool check_reflection_Y(const RationalContext& ctx, const SpectralParams& sp, int j, const std::vector<Rational>& us,
                        const Rational& u, const Rational& v);

/// Hecke one-parameter family: T_i(a,b) = T_i + z/(b/a - 1), Q_i(a,b;c) = T_i + z/(c a b - 1).
HElement hecke_family_idempotent(int n, const Rational& q, const UpDownTableau& t, const Rational& c_param);

}  // namespace bmwf
