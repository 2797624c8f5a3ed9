#include "qasym/qgamma.hpp"

#include "ksum.hpp"

namespace qasym {

namespace {

void check_q(const Real& q) {
    if (!(q > 0) || q == 1) throw domain_error("q must be positive and != 1");
}

Real inv_q(const Real& q, const PrecisionContext& ctx) {
    Real r = 1 / q;
    r.round_to(ctx.work_prec());
    return r;
}

Real round_floor(const Real& scale, long bits) {
    return scale * Real::pow2(-bits + 2, 64);
}

// [t]_q = (1 - q^t)/(1 - q)
Real q_bracket(const Real& t, const Real& q, mpfr_prec_t p) {
    Real qt = pow(q, t);
    qt.round_to(p);
    return (1 - qt) / (1 - q);
}

struct Reduced {
    Real x;      // in (0, 1]
    long hops;   // how many functional-equation steps up from x
};

Reduced reduce_x(const Real& x, mpfr_prec_t p) {
    if (x <= 1) return {x, 0};
    Real c = ceil(x);
    Real r = x + 1 - c;
    r.round_to(p);
    long hops = c.to_long() - 1;
    if (hops > 1000000)
        throw domain_error("x too large for the functional-equation reduction");
    return {r, hops};
}

}  // namespace

EvalResult qgamma_direct(const Real& x, const Real& q, const PrecisionContext& ctx) {
    if (!(x > 0)) throw domain_error("qgamma requires x > 0");
    if (!(q > 0)) throw domain_error("q must be positive");
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    if (q == 1) {  // the q -> 1 limit is the classical function
        Real g = gamma(x, ctx);
        return EvalResult(Complex(g), round_floor(g, bits).round_to(bits), 0,
                          Method::closed_form);
    }
    if (q > 1) {
        // Gamma_q(x) = q^((x-1)(x-2)/2) Gamma_{1/q}(x)
        Real qi = inv_q(q, ctx);
        EvalResult inner = qgamma_direct(x, qi, ctx);
        Real expo = (x - 1) * (x - 2) / 2;
        Real factor = pow(q, expo);
        Real value = factor * inner.value.re;
        Real err = factor * inner.err_estimate + round_floor(abs(value), bits);
        value.round_to(bits);
        return EvalResult(Complex(value), err.round_to(bits), inner.terms_used, inner.method);
    }
    PrecisionContext wctx = elevated(ctx);
    QPoint qp(q, wctx);
    EvalResult euler = pochhammer_direct(q, qp, wctx);
    Real qx = pow(qp.q(), x);
    qx.round_to(p);
    EvalResult denom = pochhammer_direct(qx, qp, wctx);
    Real value = pow(1 - qp.q(), 1 - x) * euler.value.re / denom.value.re;
    Real rel = euler.err_estimate / euler.value.re + denom.err_estimate / denom.value.re;
    Real err = abs(value) * rel + round_floor(abs(value), bits);
    value.round_to(bits);
    return EvalResult(Complex(value), err.round_to(bits),
                      std::max(euler.terms_used, denom.terms_used), Method::direct);
}

EvalResult qgamma_asymptotic(const Real& x, const Real& q, const TruncationPolicy& policy,
                             const PrecisionContext& ctx) {
    if (!(x > 0)) throw domain_error("qgamma requires x > 0");
    if (!(q > 0)) throw domain_error("q must be positive");
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    if (q == 1) {
        Real g = gamma(x, ctx);
        return EvalResult(Complex(g), round_floor(g, bits).round_to(bits), 0,
                          Method::closed_form);
    }
    if (q > 1) {
        Real qi = inv_q(q, ctx);
        EvalResult inner = qgamma_asymptotic(x, qi, policy, ctx);
        Real factor = pow(q, (x - 1) * (x - 2) / 2);
        Real value = factor * inner.value.re;
        Real err = factor * inner.err_estimate + round_floor(abs(value), bits);
        value.round_to(bits);
        return EvalResult(Complex(value), err.round_to(bits), inner.terms_used, inner.method);
    }
    PrecisionContext kctx = elevated(ctx);
    QPoint qp(q, kctx);
    Reduced red = reduce_x(x, p);

    detail::KsumSpec spec;
    spec.zeta_offset = 2L;
    spec.k_start = 3;
    spec.power_shift = -1;
    detail::KsumResult ks = detail::zeta_bernoulli_ksum(spec, red.x, qp.log_q(), policy, ctx);

    Real base = qp.log_q() / (qp.q() - 1) * pow(qp.q(), red.x / 4);
    Real core = gamma(red.x, kctx) * pow(base, red.x - 1) * exp(-ks.sum.re);
    // climb back up: Gamma_q(x) = Gamma_q(x_r) * prod [x_r + j]_q
    Real value = core;
    for (long j = 0; j < red.hops; ++j) value = value * q_bracket(red.x + j, qp.q(), p);
    Real bao = detail::modular_image_scale(qp.log_inv_q(), Real(0, p), p);
    Real err = abs(value) * (ks.err_abs + bao) + round_floor(abs(value), bits);
    value.round_to(bits);
    return EvalResult(Complex(value), err.round_to(bits), ks.terms, Method::asymptotic);
}

EvalResult qgamma_reflection(const Real& x, const Real& q, const PrecisionContext& ctx) {
    if (!(x > 0) || !(x < 1)) throw domain_error("qgamma_reflection requires x in (0, 1)");
    check_q(q);
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    Real qa = q;
    qa.round_to(p);
    Real xa = x;
    xa.round_to(p);
    Real pi = Real::pi(p);
    Real value = pi / sin(pi * xa) * (qa - 1) / log(qa) * pow(qa, xa * (xa - 1) / 2);
    value.round_to(bits);
    return EvalResult(Complex(value), Real(0, bits), 0, Method::closed_form);
}

EvalResult qgamma_half(const Real& q, const PrecisionContext& ctx) {
    check_q(q);
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    Real qa = q;
    qa.round_to(p);
    Real eighth = Real::pow2(-3, p);
    Real value = sqrt(Real::pi(p) * (qa - 1) / (pow(qa, eighth) * log(qa)));
    value.round_to(bits);
    return EvalResult(Complex(value), Real(0, bits), 0, Method::closed_form);
}

EvalResult qdigamma_direct(const Real& x, const Real& q, const PrecisionContext& ctx) {
    if (!(x > 0)) throw domain_error("qdigamma requires x > 0");
    check_q(q);
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    if (q > 1) {
        // psi_q(x) = (x - 3/2) log q + psi_{1/q}(x)
        Real qi = inv_q(q, ctx);
        EvalResult inner = qdigamma_direct(x, qi, ctx);
        Real value = (x - 1 - Real::pow2(-1, p)) * log(q) + inner.value.re;
        Real err = inner.err_estimate + round_floor(abs(value), bits);
        value.round_to(bits);
        return EvalResult(Complex(value), err.round_to(bits), inner.terms_used, inner.method);
    }
    PrecisionContext wctx = elevated(ctx);
    QPoint qp(q, wctx);
    Real u = pow(qp.q(), x);  // q^(n+x)
    u.round_to(p);
    Real sum(p);
    Real stop_level = Real::pow2(-(bits + 8), p);
    long n = 0;
    Real tail(p);
    bool converged = false;
    while (n < ctx.max_terms()) {
        Real term = u / (1 - u);
        sum += term;
        ++n;
        u = u * qp.q();
        // remaining terms are below u/(1-q)(1-u)
        tail = u / ((1 - qp.q()) * (1 - u));
        if (tail <= max(abs(sum), Real(1, p)) * stop_level) {
            converged = true;
            break;
        }
    }
    if (!converged) throw convergence_error("qdigamma_direct: term cap exceeded");
    Real value = -log1p(-qp.q()) + qp.log_q() * sum;
    Real err = abs(qp.log_q()) * tail + round_floor(abs(value) + abs(sum), bits);
    value.round_to(bits);
    return EvalResult(Complex(value), err.round_to(bits), n, Method::direct);
}

EvalResult qdigamma_asymptotic(const Real& x, const Real& q, DigammaVariant variant,
                               const TruncationPolicy& policy, const PrecisionContext& ctx) {
    if (!(x > 0)) throw domain_error("qdigamma requires x > 0");
    check_q(q);
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    if (q > 1) {
        Real qi = inv_q(q, ctx);
        EvalResult inner = qdigamma_asymptotic(x, qi, variant, policy, ctx);
        Real value = (x - 1 - Real::pow2(-1, p)) * log(q) + inner.value.re;
        Real err = inner.err_estimate + round_floor(abs(value), bits);
        value.round_to(bits);
        return EvalResult(Complex(value), err.round_to(bits), inner.terms_used, inner.method);
    }
    PrecisionContext kctx = elevated(ctx);
    QPoint qp(q, kctx);
    Reduced red = reduce_x(x, p);

    detail::KsumSpec spec;
    spec.zeta_offset = 1L;
    spec.k_start = 1;
    spec.power_shift = 0;
    spec.one_minus_poly = (variant == DigammaVariant::expanded);
    detail::KsumResult ks = detail::zeta_bernoulli_ksum(spec, red.x, qp.log_q(), policy, ctx);

    Real core = polygamma(0, red.x, kctx);
    if (variant == DigammaVariant::compact) {
        core = core + log(qp.log_q() / (qp.q() - 1)) - ks.sum.re;
    } else {
        core = core + ks.sum.re;
    }
    // psi_q(x_r + j + 1) = psi_q(x_r + j) - q^t log q / (1 - q^t)
    Real value = core;
    for (long j = 0; j < red.hops; ++j) {
        Real t = pow(qp.q(), red.x + j);
        value = value - t * qp.log_q() / (1 - t);
    }
    Real bao = detail::modular_image_scale(qp.log_inv_q(), Real(1, p), p) * qp.log_inv_q();
    Real err = ks.err_abs + bao + round_floor(abs(value) + abs(core), bits);
    value.round_to(bits);
    return EvalResult(Complex(value), err.round_to(bits), ks.terms, Method::asymptotic);
}

EvalResult qpolygamma_direct(long m, const Real& x, const Real& q, const PrecisionContext& ctx) {
    if (m < 1) throw domain_error("qpolygamma requires m >= 1");
    if (!(x > 0)) throw domain_error("qpolygamma requires x > 0");
    check_q(q);
    long bits = ctx.precision_bits();
    if (q > 1) {
        Real qi = inv_q(q, ctx);
        EvalResult inner = qpolygamma_direct(m, x, qi, ctx);
        Real value = inner.value.re;
        if (m == 1) value = value + log(q);
        Real err = inner.err_estimate + round_floor(abs(value), bits);
        value.round_to(bits);
        return EvalResult(Complex(value), err.round_to(bits), inner.terms_used, inner.method);
    }
    PrecisionContext wctx = elevated(ctx);
    QPoint qp(q, wctx);
    EvalResult lam = lambert_direct(SParameter::integer(m), x, qp, wctx);
    Real scale = pow(qp.log_q(), m + 1);
    Real value = scale * lam.value.re;
    Real err = abs(scale) * lam.err_estimate + round_floor(abs(value), bits);
    value.round_to(bits);
    return EvalResult(Complex(value), err.round_to(bits), lam.terms_used, Method::direct);
}

EvalResult qpolygamma_asymptotic(long m, const Real& x, const Real& q,
                                 const TruncationPolicy& policy, const PrecisionContext& ctx) {
    if (m < 1) throw domain_error("qpolygamma requires m >= 1");
    if (!(x > 0)) throw domain_error("qpolygamma requires x > 0");
    check_q(q);
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    if (q > 1) {
        Real qi = inv_q(q, ctx);
        EvalResult inner = qpolygamma_asymptotic(m, x, qi, policy, ctx);
        Real value = inner.value.re;
        if (m == 1) value = value + log(q);
        Real err = inner.err_estimate + round_floor(abs(value), bits);
        value.round_to(bits);
        return EvalResult(Complex(value), err.round_to(bits), inner.terms_used, inner.method);
    }
    PrecisionContext kctx = elevated(ctx);
    QPoint qp(q, kctx);
    Reduced red = reduce_x(x, p);

    detail::KsumSpec spec;
    spec.zeta_offset = 1 - m;
    spec.k_start = 0;
    spec.power_shift = m;
    detail::KsumResult ks = detail::zeta_bernoulli_ksum(spec, red.x, qp.log_q(), policy, ctx);

    Real value = polygamma(m, red.x, kctx) - ks.sum.re;
    // psi_q^(m)(t+1) - psi_q^(m)(t) = -(log q)^(m+1) Li_{-m}(q^t)
    Real corr_scale = pow(qp.log_q(), m + 1);
    for (long j = 0; j < red.hops; ++j) {
        Real w = pow(qp.q(), red.x + j);
        value = value - corr_scale * polylog(Real(-m, p), w, kctx);
    }
    Real bao = detail::modular_image_scale(qp.log_inv_q(), Real(m + 1, p), p) *
               pow(qp.log_inv_q(), m + 1);
    Real err = ks.err_abs + bao + round_floor(abs(value), bits);
    value.round_to(bits);
    return EvalResult(Complex(value), err.round_to(bits), ks.terms, Method::asymptotic);
}

Real reflection_residual(ReflectionKind kind, long m, const Real& x, const Real& q,
                         const PrecisionContext& ctx) {
    if (!(x > 0) || !(x < 1)) throw domain_error("reflection_residual requires x in (0, 1)");
    check_q(q);
    mpfr_prec_t p = ctx.work_prec();
    Real xa = x;
    xa.round_to(p);
    Real pi = Real::pi(p);
    Real lq = log(q);
    lq.round_to(p);
    if (kind == ReflectionKind::digamma) {
        Real lhs = qdigamma_direct(xa, q, ctx).value.re - qdigamma_direct(1 - xa, q, ctx).value.re;
        Real rhs = -pi * cos(pi * xa) / sin(pi * xa) + (xa - Real::pow2(-1, p)) * lq;
        return abs(lhs - rhs).round_to(ctx.precision_bits());
    }
    if (m < 1) throw domain_error("polygamma reflection requires m >= 1");
    if (m == 1) {
        Real lhs = qpolygamma_direct(1, xa, q, ctx).value.re +
                   qpolygamma_direct(1, 1 - xa, q, ctx).value.re;
        Real csc = pi / sin(pi * xa);
        Real rhs = csc * csc + lq;
        return abs(lhs - rhs).round_to(ctx.precision_bits());
    }
    Real sign(m % 2 == 0 ? 1 : -1, p);
    Real lhs = qpolygamma_direct(m, xa, q, ctx).value.re -
               sign * qpolygamma_direct(m, 1 - xa, q, ctx).value.re;
    PrecisionContext kctx = elevated(ctx);
    Real rhs = polygamma(m, xa, kctx) - sign * polygamma(m, 1 - xa, kctx);
    return abs(lhs - rhs).round_to(ctx.precision_bits());
}

}  // namespace qasym
