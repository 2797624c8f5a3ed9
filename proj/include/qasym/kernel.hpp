#pragma once

#include "qasym/context.hpp"

#include <gmpxx.h>

namespace qasym {

// Degree cap for Bernoulli numbers/polynomials. Optimal truncation of the
// q=1 expansions never gets near this at the precisions the library targets.
inline constexpr long kBernoulliDegreeCap = 512;

// Exact rational Bernoulli number B_n (B_1 = -1/2 convention), cached.
const mpq_class& bernoulli_number(long n);

// Exact rational evaluation of B_n(x). Used where structural zeros matter
// (x = 0, 1/2, 1) and by tests that assert exact term cancellation.
mpq_class bernoulli_poly_exact(long n, const mpq_class& x);

// B_n(x) at working precision; exact-rational shortcut at x in {0, 1/2, 1}.
Real bernoulli_poly(long n, const Real& x, const PrecisionContext& ctx);

// H_m = 1 + 1/2 + ... + 1/m, H_0 = 0.
Real harmonic(long m, const PrecisionContext& ctx);

// Gamma and polygamma on the positive real axis. polygamma(0,.) is the
// digamma function; m >= 1 goes through psi^(m)(x) = (-1)^(m+1) m! zeta(m+1,x).
Real gamma(const Real& x, const PrecisionContext& ctx);
Real polygamma(long m, const Real& x, const PrecisionContext& ctx);

// log Gamma(z) for Re z > 0 (principal up to the usual recurrence branch);
// exp of it recovers Gamma(z) exactly regardless of branch bookkeeping.
Complex log_gamma(const Complex& z, const PrecisionContext& ctx);
Complex gamma(const Complex& z, const PrecisionContext& ctx);

// Hurwitz zeta(s, x) for x > 0, s != 1. Nonpositive integer s returns the
// exact closed form -B_{1-s+... } (finite); everything else is summed by
// Euler-Maclaurin with precision-scaled shift and correction order.
Real hurwitz_zeta(const Real& s, const Real& x, const PrecisionContext& ctx);
Complex hurwitz_zeta(const Complex& s, const Real& x, const PrecisionContext& ctx);

// Riemann zeta = zeta(s, 1), with exact values at integers (Bernoulli forms)
// and a memo over the Euler-Maclaurin path.
Real riemann_zeta_int(long n, const PrecisionContext& ctx);
Real riemann_zeta(const Real& s, const PrecisionContext& ctx);
Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx);

// d/ds zeta(s, x) at s = 1 - m, m >= 1, by central differences with one
// Richardson step, run at elevated precision.
Real hurwitz_zeta_sderiv(long m, const Real& x, const PrecisionContext& ctx);

// Li_s(z) for |z| < 1, direct summation with a geometric tail bound.
Real polylog(const Real& s, const Real& z, const PrecisionContext& ctx);
Complex polylog(const Complex& s, const Complex& z, const PrecisionContext& ctx);

// sigma_s(n): sum of s-th powers of the divisors of n.
Real divisor_sigma(const Real& s, unsigned long n, const PrecisionContext& ctx);

}  // namespace qasym
