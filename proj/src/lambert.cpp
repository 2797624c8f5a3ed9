#include "qasym/lambert.hpp"

#include "ksum.hpp"

#include <string>

namespace qasym {

QPoint::QPoint(const Real& q, const PrecisionContext& ctx)
    : q_(q), log_q_(ctx.precision_bits()), log_inv_q_(ctx.precision_bits()),
      loglog_inv_q_(ctx.precision_bits()), regime_(QRegime::mid) {
    if (!(q > 0) || !(q < 1)) throw domain_error("q must lie strictly in (0, 1)");
    mpfr_prec_t p = ctx.work_prec();
    q_.round_to(p);
    log_q_ = log(q_);
    log_inv_q_ = -log_q_;
    loglog_inv_q_ = log(log_inv_q_);
    Real tenth = Real::pow2(-1, 64) / 5;  // 0.1
    if (q < tenth)
        regime_ = QRegime::near_zero;
    else if (q > 1 - tenth)
        regime_ = QRegime::near_one;
}

SParameter SParameter::real(const Real& v) {
    if (v.is_integer() && v <= 0)
        throw domain_error("nonpositive integer s must use the exact-integer form");
    return SParameter(Complex(v));
}

SParameter SParameter::complex(const Complex& v) {
    if (v.is_real()) return real(v.re);
    return SParameter(v);
}

SParameter::Branch SParameter::branch() const {
    if (std::holds_alternative<long>(v_)) {
        long n = std::get<long>(v_);
        if (n == 0) return Branch::zero;
        if (n < 0) return Branch::negative_integer;
    }
    return Branch::general;
}

bool SParameter::is_real() const {
    return std::holds_alternative<long>(v_) || std::get<Complex>(v_).is_real();
}

Complex SParameter::value(mpfr_prec_t prec) const {
    if (std::holds_alternative<long>(v_)) return Complex(std::get<long>(v_), prec);
    Complex c = std::get<Complex>(v_);
    return c;
}

Real SParameter::real_part(mpfr_prec_t prec) const {
    if (std::holds_alternative<long>(v_)) return Real(std::get<long>(v_), prec);
    return std::get<Complex>(v_).re;
}

namespace {

// k^s for the running index; exact-power fast path for integer s.
Complex index_power(long k, const SParameter& s, mpfr_prec_t p) {
    if (s.is_exact_integer()) return Complex(pow(Real(k, p), s.integer_value()));
    Complex sv = s.value(p);
    if (sv.is_real()) return Complex(pow(Real(k, p), sv.re));
    return exp(sv * Complex(log(Real(k, p))));
}

// rounding floor at the result precision
Real round_floor(const Real& scale, long bits) {
    return scale * Real::pow2(-bits + 2, 64);
}

}  // namespace

EvalResult lambert_direct(const SParameter& s, const Real& x, const QPoint& q,
                          const PrecisionContext& ctx) {
    if (!(x > 0)) throw domain_error("lambert series requires x > 0");
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    Real stop_level = Real::pow2(-(bits + 8), p);

    Real qx = pow(q.q(), x);  // per-step ratio of q^(kx)
    Real sigma_pos = max(s.real_part(p), Real(0, p));

    Complex sum(p);
    Real u = qx;        // q^(kx)
    Real pk = q.q();    // q^k
    pk.round_to(p);
    u.round_to(p);
    Real qstep = pk;
    long consecutive = 0;
    long k = 0;
    Real tail(p);
    bool converged = false;
    while (k < ctx.max_terms()) {
        ++k;
        Complex term = index_power(k, s, p) * Complex(u / (1 - pk));
        sum += term;
        Real m = abs(term);
        Real scale = max(abs(sum), m);
        consecutive = (m <= scale * stop_level) ? consecutive + 1 : 0;
        if (consecutive >= 3) {
            // tail bound: ratio q^x adjusted by the polynomial factor k^Re(s)
            Real ratio = qx * pow(Real(k + 1, p) / k, sigma_pos);
            if (ratio < 1) {
                tail = m * ratio / (1 - ratio);
                if (tail <= scale * stop_level) {
                    converged = true;
                    break;
                }
            }
        }
        u = u * qx;
        pk = pk * qstep;
    }
    if (!converged)
        throw convergence_error("lambert_direct: term cap " + std::to_string(ctx.max_terms()) +
                                " exceeded (q too close to 1 for the requested precision)");
    Real err = tail + round_floor(abs(sum), bits);
    sum.round_to(bits);
    return EvalResult(sum, err.round_to(bits), k, Method::direct);
}

EvalResult lambert_asymptotic(const SParameter& s, const Real& x, const QPoint& q,
                              const TruncationPolicy& policy, const PrecisionContext& ctx) {
    if (!(x > 0) || x > 1)
        throw domain_error("lambert_asymptotic requires x in (0, 1]; reduce with lambert_shift");
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    PrecisionContext kctx = elevated(ctx);

    detail::KsumSpec spec;
    spec.power_shift = -1;
    Complex value(p);
    Real closed_scale(p);
    Real sigma = s.real_part(p);  // drives the image-term error floor

    switch (s.branch()) {
        case SParameter::Branch::general: {
            Complex sv = s.value(p);
            Complex leading(p);
            if (s.is_exact_integer()) {
                long n = s.integer_value();  // n >= 1 here
                Real g = gamma(Real(n + 1, p), kctx);
                Real hz = hurwitz_zeta(Real(n + 1, p), x, kctx);
                leading = Complex(g * hz * pow(q.log_inv_q(), -1 - n));
                spec.zeta_offset = 1 - n;
            } else if (sv.is_real()) {
                // Gamma(1+s) for any real non-integer argument (reflection is
                // MPFR's business below zero).
                Real g = gamma_mpfr(Real(1, p) + sv.re);
                Real hz = hurwitz_zeta(Real(1, p) + sv.re, x, kctx);
                leading = Complex(g * hz * pow(q.log_inv_q(), -(Real(1, p) + sv.re)));
                spec.zeta_offset = Real(1, p) - sv.re;
            } else {
                if (!(sv.re > Real(-1, p)))
                    throw domain_error(
                        "unsupported region: complex non-integer s requires Re(s) > -1");
                Complex one_plus = Real(1, p) + sv;
                Complex g = gamma(one_plus, kctx);
                Complex hz = hurwitz_zeta(one_plus, x, kctx);
                leading = g * hz * pow(q.log_inv_q(), -one_plus);
                spec.zeta_offset = Real(1, p) - sv;
            }
            value = leading;
            closed_scale = abs(leading);
            break;
        }
        case SParameter::Branch::zero: {
            spec.zeta_offset = 1L;
            spec.k_start = 1;
            Real leading = (polygamma(0, x, kctx) + q.loglog_inv_q()) / q.log_q();
            value = Complex(leading);
            closed_scale = abs(leading);
            break;
        }
        case SParameter::Branch::negative_integer: {
            long m = s.m();
            spec.zeta_offset = 1 + m;
            spec.k_skip = m;
            Real zd = hurwitz_zeta_sderiv(m, x, kctx);
            Real bm = bernoulli_poly(m, x, kctx);
            Real bracket = m * zd + (q.loglog_inv_q() - harmonic(m - 1, kctx)) * bm;
            Real fact(1, p);
            mpfr_fac_ui(fact.mp(), static_cast<unsigned long>(m), MPFR_RNDN);
            Real leading = bracket * pow(q.log_q(), m - 1) / fact;
            value = Complex(leading);
            closed_scale = abs(leading);
            break;
        }
    }

    detail::KsumResult ks = detail::zeta_bernoulli_ksum(spec, x, q.log_q(), policy, ctx);
    value = value - ks.sum;
    Real bao = detail::modular_image_scale(q.log_inv_q(), Real(1, p) + sigma, p);
    Real err = ks.err_abs + bao + round_floor(max(closed_scale, abs(value)), bits);
    value.round_to(bits);
    return EvalResult(value, err.round_to(bits), ks.terms, Method::asymptotic);
}

ShiftResult lambert_shift(const SParameter& s, const Real& x, const QPoint& q,
                          const PrecisionContext& ctx) {
    if (!(x > 0)) throw domain_error("lambert series requires x > 0");
    mpfr_prec_t p = ctx.work_prec();
    if (x <= 1) return {x, Complex(p)};
    Real c = ceil(x);
    Real reduced = x + 1 - c;
    long hops = c.to_long() - 1;
    if (hops > ctx.max_terms())
        throw convergence_error("lambert_shift: x needs more reduction steps than max_terms");
    Complex corr(p);
    Complex minus_s = -s.value(p);
    PrecisionContext kctx = elevated(ctx);
    for (long n = 1; n <= hops; ++n) {
        Real w = pow(q.q(), reduced + (n - 1));  // q^(n + x - ceil(x))
        corr += polylog(minus_s, Complex(w), kctx);
    }
    corr.round_to(ctx.precision_bits());
    return {reduced, corr};
}

EvalResult lambert_eval(const SParameter& s, const Real& x, const QPoint& q,
                        const PrecisionContext& ctx) {
    ShiftResult shifted = lambert_shift(s, x, q, ctx);
    long bits = ctx.precision_bits();
    Real target_rel = Real::pow2(-bits + 13, bits);  // 32 * eps
    Real half = Real::pow2(-1, 64);

    auto run = [&](bool direct) {
        return direct ? lambert_direct(s, shifted.reduced_x, q, ctx)
                      : lambert_asymptotic(s, shifted.reduced_x, q, TruncationPolicy::optimal(), ctx);
    };
    auto finish = [&](EvalResult r) {
        Complex v = r.value - shifted.correction;
        Real err = r.err_estimate + round_floor(abs(v) + abs(shifted.correction), bits);
        v.round_to(bits);
        return EvalResult(v, err.round_to(bits), r.terms_used, r.method);
    };

    bool prefer_direct = q.q() <= half;
    std::string first_failure;
    try {
        EvalResult r = run(prefer_direct);
        if (r.err_estimate <= abs(r.value) * target_rel + target_rel) return finish(r);
        // preferred path missed target: try the other, keep the better
        try {
            EvalResult alt = run(!prefer_direct);
            if (alt.err_estimate < r.err_estimate) return finish(alt);
        } catch (const std::exception&) {
        }
        return finish(r);
    } catch (const std::exception& e) {
        first_failure = e.what();
    }
    try {
        return finish(run(!prefer_direct));
    } catch (const std::exception& e) {
        throw convergence_error(std::string("lambert_eval: both paths failed: [") +
                                first_failure + "] and [" + e.what() + "]");
    }
}

EvalResult divisor_gf_direct(long m, const QPoint& q, const PrecisionContext& ctx) {
    return lambert_direct(SParameter::integer(m), Real(1, ctx.precision_bits()), q, ctx);
}

EvalResult divisor_gf_asymptotic(long m, const QPoint& q, const PrecisionContext& ctx) {
    if (m == 0 || m % 2 == 0) throw domain_error("divisor_gf_asymptotic requires odd m");
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    PrecisionContext kctx = elevated(ctx);
    Real value(p);
    if (m >= 1) {
        // m! zeta(1+m) / (log q)^(1+m) - zeta(1-m)/log q - zeta(-m)/2
        Real fact(1, p);
        mpfr_fac_ui(fact.mp(), static_cast<unsigned long>(m), MPFR_RNDN);
        value = fact * riemann_zeta_int(m + 1, kctx) * pow(q.log_q(), -(m + 1)) -
                riemann_zeta_int(1 - m, kctx) / q.log_q() -
                riemann_zeta_int(-m, kctx) / 2;
    } else {
        long mu = -m;
        Real zd = hurwitz_zeta_sderiv(mu, Real(1, p), kctx);
        Real b_mu = bernoulli_poly(mu, Real(1, p), kctx);
        Real fact(1, p);
        mpfr_fac_ui(fact.mp(), static_cast<unsigned long>(mu), MPFR_RNDN);
        Real bracket = mu * zd + (q.loglog_inv_q() - harmonic(mu - 1, kctx)) * b_mu;
        value = bracket * pow(q.log_q(), mu - 1) / fact;
        Real kfact(1, p);
        for (long k = 0; k <= mu + 1; ++k) {
            if (k > 0) kfact = kfact * k;
            if (k == mu) continue;
            value -= riemann_zeta_int(1 + mu - k, kctx) * bernoulli_poly(k, Real(1, p), kctx) *
                     pow(q.log_q(), k - 1) / kfact;
        }
    }
    value.round_to(bits);
    return EvalResult(Complex(value), Real(0, bits), 0, Method::closed_form);
}

EvalResult eisenstein_direct(long k, const QPoint& q, const PrecisionContext& ctx) {
    if (k < 1) throw domain_error("Eisenstein index k must be >= 1");
    mpfr_prec_t p = ctx.work_prec();
    PrecisionContext kctx = elevated(ctx);
    EvalResult gf = lambert_direct(SParameter::integer(2 * k - 1), Real(1, p), q, kctx);
    Real coef = 2 / riemann_zeta_int(1 - 2 * k, kctx);
    Real value = 1 + coef * gf.value.re;
    Real err = abs(coef) * gf.err_estimate + round_floor(abs(value), ctx.precision_bits());
    value.round_to(ctx.precision_bits());
    return EvalResult(Complex(value), err.round_to(ctx.precision_bits()), gf.terms_used,
                      Method::direct);
}

EvalResult eisenstein_modified(long k, const QPoint& q, const PrecisionContext& ctx) {
    EvalResult e = eisenstein_direct(k, q, ctx);
    PrecisionContext kctx = elevated(ctx);
    // 2 zeta(2-2k) / (zeta(1-2k) log q); exactly zero for k >= 2
    Real corr = 2 * riemann_zeta_int(2 - 2 * k, kctx) /
                (riemann_zeta_int(1 - 2 * k, kctx) * q.log_q());
    Real value = e.value.re + corr;
    value.round_to(ctx.precision_bits());
    return EvalResult(Complex(value), e.err_estimate, e.terms_used, Method::direct);
}

EvalResult eisenstein_asymptotic(long k, const QPoint& q, const PrecisionContext& ctx) {
    if (k < 1) throw domain_error("Eisenstein index k must be >= 1");
    mpfr_prec_t p = ctx.work_prec();
    // (2 pi i / log q)^(2k), a real number of sign (-1)^k
    Real v = pow(2 * Real::pi(p) / q.log_q(), 2 * k);
    if (k % 2 == 1) v = -v;
    v.round_to(ctx.precision_bits());
    return EvalResult(Complex(v), Real(0, ctx.precision_bits()), 0, Method::closed_form);
}

}  // namespace qasym
