#pragma once

#include "qasym/qpochhammer.hpp"

namespace qasym {

// q in (0,1) or (1,inf); q > 1 is handled at entry through the inversion
// symmetry Gamma_q(x) = q^((x-1)(x-2)/2) Gamma_{1/q}(x) and its
// log-derivatives, so the internal formulas only ever see q < 1.

// (1-q)^(1-x) (q; q)_inf / (q^x; q)_inf, via direct products.
EvalResult qgamma_direct(const Real& x, const Real& q, const PrecisionContext& ctx);

// Gamma(x) ((log q / (q-1)) q^(x/4))^(x-1) prod_{k>=3} exp(-zeta(2-k) B_k(x) (log q)^(k-1)/k!);
// x > 1 is reduced by the functional equation Gamma_q(x+1) = [x]_q Gamma_q(x).
EvalResult qgamma_asymptotic(const Real& x, const Real& q, const TruncationPolicy& policy,
                             const PrecisionContext& ctx);

// Closed asymptotic value of Gamma_q(x) Gamma_q(1-x), x in (0,1):
// pi/sin(pi x) * (q-1)/log q * q^(x(x-1)/2).
EvalResult qgamma_reflection(const Real& x, const Real& q, const PrecisionContext& ctx);

// Closed asymptotic value of Gamma_q(1/2) (positive branch):
// sqrt(pi (q-1) / (q^(1/8) log q)).
EvalResult qgamma_half(const Real& q, const PrecisionContext& ctx);

// psi_q(x) = -log(1-q) + log q * sum_{n>=0} q^(n+x)/(1 - q^(n+x)).
EvalResult qdigamma_direct(const Real& x, const Real& q, const PrecisionContext& ctx);

// The two printed forms of the psi_q expansion at q=1. compact keeps
// -log(1-q) as one logarithm;
// expanded folds it into the k-sum (easier to differentiate in log q).
enum class DigammaVariant { compact, expanded };
EvalResult qdigamma_asymptotic(const Real& x, const Real& q, DigammaVariant variant,
                               const TruncationPolicy& policy, const PrecisionContext& ctx);

// psi_q^(m)(x) = (log q)^(m+1) L_q(m, x), m >= 1.
EvalResult qpolygamma_direct(long m, const Real& x, const Real& q, const PrecisionContext& ctx);

// psi^(m)(x) - sum_{k>=0} zeta(1-m-k) B_k(x) (log q)^(m+k)/k!.
EvalResult qpolygamma_asymptotic(long m, const Real& x, const Real& q,
                                 const TruncationPolicy& policy, const PrecisionContext& ctx);

// |LHS - RHS| of the digamma/polygamma reflection formulas, both sides from
// direct-path values. m is ignored for the digamma kind.
enum class ReflectionKind { digamma, polygamma };
Real reflection_residual(ReflectionKind kind, long m, const Real& x, const Real& q,
                         const PrecisionContext& ctx);

}  // namespace qasym
