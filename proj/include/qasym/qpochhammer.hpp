#pragma once

#include "qasym/lambert.hpp"

namespace qasym {

// (a; q)_infinity = prod_{n>=0} (1 - a q^n), accumulated in log space.
// Real a must satisfy a < 1; complex a needs |a| < 1/(1-q).
EvalResult pochhammer_direct(const Real& a, const QPoint& q, const PrecisionContext& ctx);
EvalResult pochhammer_direct(const Complex& a, const QPoint& q, const PrecisionContext& ctx);

// Expansion of (q^x; q)_infinity at q = 1, x in (0, 1]:
// sqrt(2 pi)/Gamma(x) * log(1/q)^(1/2-x) * exp(sum_{k != 1} zeta(2-k) B_k(x) (log q)^(k-1)/k!).
EvalResult pochhammer_asymptotic(const Real& x, const QPoint& q, const TruncationPolicy& policy,
                                 const PrecisionContext& ctx);

// Euler function (q; q)_infinity in Watson's closed form:
// sqrt(2 pi / log(1/q)) * exp(pi^2/(6 log q)) * q^(-1/24).
EvalResult euler_asymptotic(const QPoint& q, const PrecisionContext& ctx);

// Closed asymptotic value of (q^x; q)_inf (q^(1-x); q)_inf for x in (0, 1):
// 2 sin(pi x) exp(pi^2/(3 log q)) q^(-(1/6 - x + x^2)/2).
EvalResult pochhammer_reflection(const Real& x, const QPoint& q, const PrecisionContext& ctx);

}  // namespace qasym
