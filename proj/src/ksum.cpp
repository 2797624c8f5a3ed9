#include "ksum.hpp"

#include <gmpxx.h>

namespace qasym::detail {

namespace {

Complex zeta_at(const std::variant<long, Real, Complex>& offset, long k,
                const PrecisionContext& ctx) {
    if (std::holds_alternative<long>(offset))
        return Complex(riemann_zeta_int(std::get<long>(offset) - k, ctx));
    if (std::holds_alternative<Real>(offset))
        return Complex(riemann_zeta(std::get<Real>(offset) - k, ctx));
    const Complex& c = std::get<Complex>(offset);
    return riemann_zeta(Complex(c.re - k, c.im), ctx);
}

Real real_from_z(const mpz_class& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.mp(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

}  // namespace

KsumResult zeta_bernoulli_ksum(const KsumSpec& spec, const Real& x, const Real& log_q,
                               const TruncationPolicy& policy, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.work_prec();
    PrecisionContext kctx = elevated(ctx);  // zeta/Bernoulli factors carry guard bits
    long bits = ctx.precision_bits();
    Real stop_level = Real::pow2(-(bits + 8), p);

    Real lq = log_q;
    lq.round_to(p);
    Real one(1, p);

    long k_cap = std::min<long>(kBernoulliDegreeCap, spec.k_start + ctx.max_terms());
    if (policy.mode == TruncationPolicy::Mode::fixed)
        k_cap = std::min(k_cap, policy.fixed_k);

    Complex sum(p);
    Real scale(p);          // running max |sum|, the cancellation-aware scale
    Real lqpow = pow(lq, spec.k_start + spec.power_shift);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(spec.k_start));

    KsumResult out{Complex(p), Real(p), 0, false};
    Real last_mag(p);
    bool have_last = false;
    long eps_run = 0;
    long zero_run = 0;
    bool seen_nonzero = false;
    Real pending_mag(p);  // magnitude of the most recent nonzero term

    for (long k = spec.k_start; k <= k_cap; ++k) {
        if (k != spec.k_skip) {
            Complex zf = zeta_at(spec.zeta_offset, k, kctx);
            Real poly = bernoulli_poly(k, x, kctx);
            if (spec.one_minus_poly) poly = one - poly;
            Complex term = zf * (poly * lqpow / real_from_z(fact, p));
            Real m = abs(term);
            if (m.is_zero()) {
                ++zero_run;
                if (seen_nonzero && zero_run >= 8) {
                    // Trailing terms vanish identically: the expansion is a finite form.
                    out.finite = true;
                    out.err_abs = Real(0, p);
                    break;
                }
            } else {
                zero_run = 0;
                seen_nonzero = true;
                if (policy.mode == TruncationPolicy::Mode::optimal) {
                    if (have_last && m >= last_mag) {
                        // divergence onset: omit this term, it is the error estimate
                        out.err_abs = m;
                        break;
                    }
                    sum += term;
                    ++out.terms;
                    scale = max(scale, abs(sum));
                    if (m <= scale * stop_level) {
                        if (++eps_run >= 2) {
                            out.err_abs = m;
                            break;
                        }
                    } else {
                        eps_run = 0;
                    }
                    last_mag = m;
                    have_last = true;
                    pending_mag = m;
                } else {
                    sum += term;
                    ++out.terms;
                    scale = max(scale, abs(sum));
                    pending_mag = m;
                    out.err_abs = m;  // fixed mode: last included nonzero term
                }
            }
        }
        lqpow = lqpow * lq;
        mpz_mul_ui(fact.get_mpz_t(), fact.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    if (policy.mode == TruncationPolicy::Mode::optimal && !out.finite && out.err_abs.is_zero() &&
        seen_nonzero) {
        // ran to the cap with terms still shrinking; last term bounds the tail
        out.err_abs = pending_mag;
    }
    // Accumulation noise floor: `terms` roundings at working precision.
    Real noise = scale * Real::pow2(-static_cast<long>(p) + 3, p) * (out.terms + 1);
    out.err_abs = max(out.err_abs, noise);
    if (out.finite) out.err_abs = noise;
    out.sum = sum;
    return out;
}

Real modular_image_scale(const Real& log_inv_q, const Real& power, mpfr_prec_t p) {
    Real pi = Real::pi(p);
    Real ratio = 2 * pi / log_inv_q;
    return 2 * exp(-2 * pi * ratio) * pow(ratio, power);
}

}  // namespace qasym::detail
