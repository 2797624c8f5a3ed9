#include "qasym/qpochhammer.hpp"

#include "ksum.hpp"

namespace qasym {

namespace {

// -log(1 - w) for complex w, accurate for small |w|.
Complex neglog1m(const Complex& w, mpfr_prec_t p) {
    Real quarter = Real::pow2(-2, 64);
    if (abs(w) > quarter) {
        Complex one_minus = Real(1, p) - w;
        if (one_minus.is_zero()) throw domain_error("pochhammer: zero factor 1 - a q^n");
        return -log(one_minus);
    }
    // series sum w^j / j; |w| <= 1/4 gives 2 bits per term
    Complex sum = w;
    Complex wp = w;
    Real target = Real::pow2(-static_cast<long>(p) + 2, p);
    for (long j = 2; j < 4 * static_cast<long>(p); ++j) {
        wp *= w;
        Complex term = wp / Real(j, p);
        sum += term;
        if (abs(term) <= abs(sum) * target) return sum;
    }
    throw convergence_error("pochhammer: log series stalled");
}

Real round_floor(const Real& scale, long bits) {
    return scale * Real::pow2(-bits + 2, 64);
}

}  // namespace

EvalResult pochhammer_direct(const Real& a, const QPoint& q, const PrecisionContext& ctx) {
    if (abs(a) * (1 - q.q()) >= 1)
        throw domain_error("pochhammer: |a| must stay below 1/(1-q)");
    if (!(a < 1)) {
        // a >= 1 flips factor signs; route through the complex path
        return pochhammer_direct(Complex(a), q, ctx);
    }
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    Real w = a;
    w.round_to(p);
    Real logsum(p);
    long n = 0;
    Real eps = Real::pow2(-bits - 8, p);
    while (abs(w) >= eps) {
        if (w == 1) throw domain_error("pochhammer: zero factor 1 - a q^n");
        logsum += log1p(-w);
        w = w * q.q();
        if (++n > ctx.max_terms())
            throw convergence_error("pochhammer: term cap exceeded");
    }
    // omitted log-tail is about |w|/(1-q)
    Real log_tail = abs(w) / (1 - q.q());
    Real value = exp(logsum);
    Real err = value * log_tail + round_floor(value, bits);
    value.round_to(bits);
    return EvalResult(Complex(value), err.round_to(bits), n, Method::direct);
}

EvalResult pochhammer_direct(const Complex& a, const QPoint& q, const PrecisionContext& ctx) {
    if (a.is_real() && a.re < 1) return pochhammer_direct(a.re, q, ctx);
    if (abs(a) * (1 - q.q()) >= 1)
        throw domain_error("pochhammer: |a| must stay below 1/(1-q)");
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    Complex w = a;
    w.round_to(p);
    Complex logsum(p);
    long n = 0;
    Real eps = Real::pow2(-bits - 8, p);
    while (abs(w) >= eps) {
        logsum -= neglog1m(w, p);
        w = w * Complex(q.q());
        if (++n > ctx.max_terms())
            throw convergence_error("pochhammer: term cap exceeded");
    }
    Real log_tail = abs(w) / (1 - q.q());
    Complex value = exp(logsum);
    Real err = abs(value) * log_tail + round_floor(abs(value), bits);
    value.round_to(bits);
    return EvalResult(value, err.round_to(bits), n, Method::direct);
}

EvalResult pochhammer_asymptotic(const Real& x, const QPoint& q, const TruncationPolicy& policy,
                                 const PrecisionContext& ctx) {
    if (!(x > 0) || x > 1) throw domain_error("pochhammer_asymptotic requires x in (0, 1]");
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    PrecisionContext kctx = elevated(ctx);

    detail::KsumSpec spec;
    spec.zeta_offset = 2L;
    spec.k_skip = 1;
    spec.power_shift = -1;
    detail::KsumResult ks = detail::zeta_bernoulli_ksum(spec, x, q.log_q(), policy, ctx);

    Real prefactor = sqrt(2 * Real::pi(p)) / gamma(x, kctx) *
                     pow(q.log_inv_q(), Real::pow2(-1, p) - x);
    Real value = prefactor * exp(ks.sum.re);
    Real bao = detail::modular_image_scale(q.log_inv_q(), Real(0, p), p);
    Real err = abs(value) * (ks.err_abs + bao) + round_floor(abs(value), bits);
    value.round_to(bits);
    return EvalResult(Complex(value), err.round_to(bits), ks.terms, Method::asymptotic);
}

EvalResult euler_asymptotic(const QPoint& q, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    Real pi = Real::pi(p);
    Real inv24 = Real(1, p) / 24;
    Real value = sqrt(2 * pi / q.log_inv_q()) * exp(pi * pi / (6 * q.log_q())) *
                 pow(q.q(), -inv24);
    value.round_to(bits);
    return EvalResult(Complex(value), Real(0, bits), 0, Method::closed_form);
}

EvalResult pochhammer_reflection(const Real& x, const QPoint& q, const PrecisionContext& ctx) {
    if (!(x > 0) || !(x < 1))
        throw domain_error("pochhammer_reflection requires x strictly in (0, 1)");
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    Real pi = Real::pi(p);
    Real xa = x;
    xa.round_to(p);
    // exponent -(1/6 - x + x^2)/2 on q
    Real expo = -(Real(1, p) / 6 - xa + xa * xa) / 2;
    Real value = 2 * sin(pi * xa) * exp(pi * pi / (3 * q.log_q())) * pow(q.q(), expo);
    value.round_to(bits);
    return EvalResult(Complex(value), Real(0, bits), 0, Method::closed_form);
}

}  // namespace qasym
