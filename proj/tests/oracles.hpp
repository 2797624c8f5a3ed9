#pragma once

// Test-side oracles, independent of the library's evaluation paths.

#include "qasym/real.hpp"

namespace qasym::test {

// Alternating-series acceleration (Cohen, Rodriguez Villegas, Zagier):
// approximates sum_{k>=0} (-1)^k a(k) with error ~ (3+sqrt 8)^(-n).
template <class TermFn>
Real alternating_sum(TermFn a, long n, mpfr_prec_t p) {
    Real d = pow(Real(3, p) + sqrt(Real(8, p)), n);
    d = (d + 1 / d) / 2;
    Real b(-1, p);
    Real c = -d;
    Real s(0, p);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b = b * (k + n) * (k - n) / ((Real(k, p) + Real::pow2(-1, p)) * (k + 1));
    }
    return s / d;
}

// Riemann zeta for real s > 1 through the eta series, independent of the
// library's Euler-Maclaurin path.
inline Real zeta_eta_oracle(long s, mpfr_prec_t p, long n = 96) {
    Real alt = alternating_sum(
        [&](long k) { return pow(Real(k + 1, p), -s); }, n, p);
    return alt / (1 - pow(Real(2, p), 1 - s));
}

// zeta'(2) = -sum_{n>=2} ln n / n^2 via partial sum + integral + derivative
// corrections (hand-rolled for this one integrand).
inline Real zeta_prime_2_oracle(mpfr_prec_t p, long n = 400) {
    Real s(0, p);
    for (long k = 2; k <= n; ++k) s += log(Real(k, p)) / (Real(k, p) * Real(k, p));
    Real N(n, p);
    Real lnN = log(N);
    Real tail = (lnN + 1) / N;                          // integral_N^inf ln x / x^2
    tail -= (lnN / (N * N)) / 2;                        // - f(N)/2
    tail -= ((1 - 2 * lnN) / (N * N * N)) / 12;         // - f'(N)/12
    tail += ((26 - 24 * lnN) / pow(N, 5L)) / 720;       // + f'''(N)/720
    return -(s + tail);
}

}  // namespace qasym::test
