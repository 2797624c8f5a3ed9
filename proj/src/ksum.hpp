#pragma once

// Internal: the truncated zeta-Bernoulli sums shared by the q=1 expansions.
// Every q=1 correction series here has the shape
//
//     sum_k  zeta(a - k) * B_k(x) * (log q)^(k + shift) / k!
//
// over k = k_start, k_start+1, ... with at most one excluded index (the
// zeta(1) slot that the expansions replace by a closed bracket). The zeta
// argument offset `a` is an exact integer, a real, or a complex number; the
// integer case produces exact zero terms, which is what collapses the series
// to finite closed forms at special x.

#include "qasym/context.hpp"
#include "qasym/kernel.hpp"

#include <variant>

namespace qasym::detail {

struct KsumSpec {
    std::variant<long, Real, Complex> zeta_offset;  // zeta argument is offset - k
    long k_start = 0;
    long k_skip = -1;        // excluded index; -1 for none
    long power_shift = 0;    // exponent of log q is k + power_shift
    bool one_minus_poly = false;  // use [1 - B_k(x)] instead of B_k(x)
};

struct KsumResult {
    Complex sum;
    Real err_abs;        // magnitude of the first omitted / last included term
    long terms = 0;      // nonzero terms actually accumulated
    bool finite = false; // trailing terms vanished identically
};

KsumResult zeta_bernoulli_ksum(const KsumSpec& spec, const Real& x, const Real& log_q,
                               const TruncationPolicy& policy, const PrecisionContext& ctx);

// The residual the k-sums cannot see: the modular image term of size
// exp(-4 pi^2/L) (2 pi/L)^power, L = log(1/q). Error estimates of the
// truncated expansions are floored by twice this, otherwise the finite
// forms (structural zeros at x = 1, 1/2) would claim rounding-level
// accuracy while the true beyond-all-orders gap is exponentially larger.
Real modular_image_scale(const Real& log_inv_q, const Real& power, mpfr_prec_t p);

}  // namespace qasym::detail
