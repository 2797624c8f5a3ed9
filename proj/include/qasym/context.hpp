#pragma once

#include "qasym/complex.hpp"
#include "qasym/real.hpp"

#include <stdexcept>
#include <string>

namespace qasym {

// Precondition violations: bad arguments, poles, unsupported regions.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A series/product failed to reach the target accuracy within its caps.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two routes that must agree did not.
class consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable evaluation settings threaded through every operation.
// eps = 2^(guard_bits - precision_bits) is the convergence target; internal
// loops run with extra guard bits and round results back to precision_bits.
class PrecisionContext {
public:
    PrecisionContext(long precision_bits, long max_terms)
        : precision_bits_(precision_bits),
          max_terms_(max_terms),
          eps_(Real::pow2(kGuardBits - precision_bits, precision_bits)) {
        if (precision_bits < 64)
            throw domain_error("precision_bits must be at least 64");
        if (max_terms < 1) throw domain_error("max_terms must be at least 1");
    }

    long precision_bits() const { return precision_bits_; }
    long guard_bits() const { return kGuardBits; }
    long max_terms() const { return max_terms_; }
    const Real& eps() const { return eps_; }

    // Working precision for internal accumulation.
    mpfr_prec_t work_prec(long extra = 32) const { return precision_bits_ + extra; }

    Real real(long n = 0) const { return Real(n, precision_bits_); }
    Real parse(const std::string& decimal) const {
        return Real::from_decimal(decimal, precision_bits_);
    }

private:
    static constexpr long kGuardBits = 8;
    long precision_bits_;
    long max_terms_;
    Real eps_;
};

inline PrecisionContext make_context(long precision_bits, long max_terms = 1000000) {
    return PrecisionContext(precision_bits, max_terms);
}

// A copy with extra guard bits, for intermediate quantities whose rounding
// must stay below the caller's eps.
inline PrecisionContext elevated(const PrecisionContext& ctx, long extra = 32) {
    return PrecisionContext(ctx.precision_bits() + extra, ctx.max_terms());
}

enum class Method { direct, asymptotic, auto_select, closed_form };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::asymptotic: return "asymptotic";
        case Method::auto_select: return "auto";
        case Method::closed_form: return "closed_form";
    }
    return "?";
}

// Universal return type: a value, an absolute-error estimate (bound or
// heuristic; exact zero marks a closed form), the dominant series length,
// and which route produced it.
struct EvalResult {
    Complex value;
    Real err_estimate;
    long terms_used = 0;
    Method method = Method::direct;

    EvalResult(Complex v, Real err, long terms, Method m)
        : value(std::move(v)), err_estimate(std::move(err)), terms_used(terms), method(m) {
        if (!value.is_finite() || err_estimate.is_nan())
            throw domain_error("evaluation produced a non-finite value");
        if (err_estimate.sign() < 0) err_estimate = abs(err_estimate);
    }

    const Real& real_value() const { return value.re; }
};

// Truncation rule for the divergent k-sums of the q=1 expansions.
//  - optimal: stop just before the first (nonzero) term whose magnitude is
//    not smaller than its predecessor's, or once terms are negligible;
//    err_estimate is the first omitted term.
//  - fixed K: sum indices k <= K; err_estimate is the last included term.
struct TruncationPolicy {
    enum class Mode { fixed, optimal };
    Mode mode = Mode::optimal;
    long fixed_k = 0;

    static TruncationPolicy optimal() { return {}; }
    static TruncationPolicy fixed(long k) {
        if (k < 0) throw domain_error("fixed truncation index must be >= 0");
        return {Mode::fixed, k};
    }
};

}  // namespace qasym
