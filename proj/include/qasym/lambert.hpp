#pragma once

#include "qasym/context.hpp"
#include "qasym/kernel.hpp"

#include <variant>

namespace qasym {

enum class QRegime { near_zero, mid, near_one };

// Validated nome q in (0,1) with the log quantities every expansion needs.
class QPoint {
public:
    QPoint(const Real& q, const PrecisionContext& ctx);

    const Real& q() const { return q_; }
    const Real& log_q() const { return log_q_; }            // < 0
    const Real& log_inv_q() const { return log_inv_q_; }    // > 0
    const Real& loglog_inv_q() const { return loglog_inv_q_; }
    QRegime regime() const { return regime_; }

private:
    Real q_, log_q_, log_inv_q_, loglog_inv_q_;
    QRegime regime_;
};

// The order parameter s with the case split of the q=1 expansion:
//   general          s not a nonpositive integer      (case 1)
//   zero             s = 0                            (case 2)
//   negative_integer s = -m, m >= 1                   (case 3)
// A nonpositive integer is representable only through the exact-integer
// factory; values numerically equal to one are rejected rather than snapped.
class SParameter {
public:
    enum class Branch { general, zero, negative_integer };

    static SParameter integer(long n) { return SParameter(n); }
    static SParameter real(const Real& v);
    static SParameter complex(const Complex& v);

    Branch branch() const;
    bool is_exact_integer() const { return std::holds_alternative<long>(v_); }
    long integer_value() const { return std::get<long>(v_); }
    long m() const { return -std::get<long>(v_); }  // case 3 only
    bool is_real() const;
    Complex value(mpfr_prec_t prec) const;
    Real real_part(mpfr_prec_t prec) const;

private:
    explicit SParameter(long n) : v_(n) {}
    explicit SParameter(Complex c) : v_(std::move(c)) {}
    std::variant<long, Complex> v_;
};

// sum_{k>=1} k^s q^(kx) / (1 - q^k), summed until the geometric tail bound
// drops below eps * |sum|.
EvalResult lambert_direct(const SParameter& s, const Real& x, const QPoint& q,
                          const PrecisionContext& ctx);

// The three-case expansion at q = 1; x must be in (0, 1].
EvalResult lambert_asymptotic(const SParameter& s, const Real& x, const QPoint& q,
                              const TruncationPolicy& policy, const PrecisionContext& ctx);

// x-reduction: L(s, x) = L(s, reduced_x) - correction, reduced_x in (0, 1].
struct ShiftResult {
    Real reduced_x;
    Complex correction;
};
ShiftResult lambert_shift(const SParameter& s, const Real& x, const QPoint& q,
                          const PrecisionContext& ctx);

// Router: reduces x, picks direct for q <= 1/2 and the expansion otherwise,
// falls back to the other path when the error estimate misses target.
EvalResult lambert_eval(const SParameter& s, const Real& x, const QPoint& q,
                        const PrecisionContext& ctx);

// Generating function of sigma_m: sum_n sigma_m(n) q^n = L(s=m, x=1).
EvalResult divisor_gf_direct(long m, const QPoint& q, const PrecisionContext& ctx);

// Finite closed expansions at odd m (positive: three terms; negative: the
// finite k-sum with the zeta-derivative bracket). err_estimate is the exact-
// form marker 0: accuracy is q-dependent, not truncation-dependent.
EvalResult divisor_gf_asymptotic(long m, const QPoint& q, const PrecisionContext& ctx);

// E_{2k}(q) = 1 + (2/zeta(1-2k)) sum_n sigma_{2k-1}(n) q^n.
EvalResult eisenstein_direct(long k, const QPoint& q, const PrecisionContext& ctx);

// Modified series: E~_{2k} = E_{2k} + 2 zeta(2-2k) / (zeta(1-2k) log q);
// identical to E_{2k} for k >= 2.
EvalResult eisenstein_modified(long k, const QPoint& q, const PrecisionContext& ctx);

// Closed asymptotic form (2 pi i / log q)^(2k) = (-1)^k (2 pi / log q)^(2k).
EvalResult eisenstein_asymptotic(long k, const QPoint& q, const PrecisionContext& ctx);

}  // namespace qasym
