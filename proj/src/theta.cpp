#include "qasym/theta.hpp"

namespace qasym {

namespace {

Real round_floor(const Real& scale, long bits) {
    return scale * Real::pow2(-bits + 2, 64);
}

void check_j(int j) {
    if (j < 1 || j > 4) throw domain_error("theta index j must be 1..4");
}

}  // namespace

ThetaArgument reduce_mod_pi(const Real& z, const PrecisionContext& ctx,
                            bool shift_minus_half_pi) {
    mpfr_prec_t p = ctx.work_prec();
    if (z.is_zero() && !shift_minus_half_pi) return {z, Real(0, p), 0};
    long zexp = z.is_zero() ? 0 : mpfr_get_exp(z.mp());
    if (zexp > 64) throw domain_error("|z| too large for exact mod-pi reduction");
    mpfr_prec_t pr = p + 64 + std::max<long>(zexp, 0);
    Real pi = Real::pi(pr);
    Real za = z;
    za.round_to(pr);
    if (shift_minus_half_pi) za -= pi / 2;
    Real f = floor(za / pi);
    long fl = f.to_long();
    Real rem = za - f * pi;
    if (rem < 0) {
        rem += pi;
        fl -= 1;
    } else if (rem >= pi) {
        rem -= pi;
        fl += 1;
    }
    rem.round_to(p);
    return {z, rem, fl};
}

// ---------------------------------------------------------------------------
// Defining bilateral series, symmetric pairing
// ---------------------------------------------------------------------------

namespace {

EvalResult theta_series(int j, const Complex& z, const QPoint& q, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    Real stop_level = Real::pow2(-(bits + 8), p);

    Real im_abs = abs(z.im);
    long n_peak = 0;
    if (!im_abs.is_zero()) {
        Real peak = ceil(im_abs / q.log_inv_q());
        n_peak = peak.to_long() + 1;
    }

    Complex sum(p);
    Real coef_peak(p);  // largest term magnitude seen (the cancellation scale)
    long n = 0;
    long consecutive = 0;
    bool half_index = (j == 1 || j == 2);

    Real q2 = q.q() * q.q();
    Real coef(p);   // q^(n^2) or q^((n+1/2)^2)
    Real step(p);   // multiplicative update
    if (half_index) {
        Real quarter = Real::pow2(-2, p);
        coef = pow(q.q(), quarter);  // n = 0
        step = q2;                   // q^(2n), starts at n=1
    } else {
        sum = Complex(Real(1, p));  // n = 0 term of theta_3/theta_4
        coef = q.q();               // n = 1
        step = pow(q.q(), 3L);      // q^(2n+1), starts at n=1 -> q^3 next
    }

    Real two(2, p);
    while (true) {
        Complex term(p);
        if (half_index) {
            long mm = 2 * n + 1;
            Complex trig = (j == 2) ? cos(z * Real(mm, p)) : sin(z * Real(mm, p));
            term = two * coef * trig;
            if (j == 1 && n % 2 == 1) term = -term;
        } else {
            long nn = n + 1;  // series index
            Complex trig = cos(z * Real(2 * nn, p));
            term = two * coef * trig;
            if (j == 4 && nn % 2 == 1) term = -term;
        }
        sum += term;
        ++n;
        Real m = abs(term);
        coef_peak = max(coef_peak, m);
        Real scale = max(max(abs(sum), coef_peak), Real(1, p));
        consecutive = (m <= scale * stop_level) ? consecutive + 1 : 0;
        if (consecutive >= 3 && n > n_peak) break;
        if (n >= ctx.max_terms())
            throw convergence_error("theta series: term cap exceeded (|Im z| too large?)");
        if (half_index) {
            Real update = step;        // q^(2n)
            coef = coef * update;
            step = step * q2;
        } else {
            coef = coef * step;        // q^((n+1)^2)
            step = step * q2;
        }
    }
    // three consecutive sub-threshold terms and super-geometric decay past
    // the peak bound the tail by ~2x the stop level
    Real scale = max(max(abs(sum), coef_peak), Real(1, p));
    Real err = 2 * scale * stop_level + round_floor(scale, bits);
    Complex value = sum;
    value.round_to(bits);
    return EvalResult(value, err.round_to(bits), n, Method::direct);
}

EvalResult theta_triple(int j, const Complex& z, const QPoint& q, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    PrecisionContext wctx = elevated(ctx);

    // theta_4(w, q) = (q^2;q^2)(q e^{2iw};q^2)(q e^{-2iw};q^2)
    auto theta4_at = [&](const Complex& w) {
        QPoint q2(q.q() * q.q(), wctx);
        Complex phase = exp(Complex(-2 * w.im, 2 * w.re));  // e^{2iw}
        Complex a_plus = phase * q.q();
        Complex a_minus = conj(phase) * q.q();  // e^{-2iw} only when w real; recompute otherwise
        if (!w.is_real()) a_minus = exp(Complex(2 * w.im, -2 * w.re)) * q.q();
        if ((Real(1, p) - a_plus).is_zero() || (Real(1, p) - a_minus).is_zero()) {
            // a zero factor is a genuine theta zero
            return EvalResult(Complex(p), Real(0, bits), 0, Method::direct);
        }
        EvalResult e1 = pochhammer_direct(q2.q(), q2, wctx);
        EvalResult e2 = pochhammer_direct(a_plus, q2, wctx);
        EvalResult e3 = pochhammer_direct(a_minus, q2, wctx);
        Complex v = Complex(e1.value.re) * e2.value * e3.value;
        Real rel = e1.err_estimate / abs(e1.value) + e2.err_estimate / max(abs(e2.value), ctx.eps()) +
                   e3.err_estimate / max(abs(e3.value), ctx.eps());
        Real err = abs(v) * rel + round_floor(abs(v), ctx.precision_bits());
        long terms = std::max(e1.terms_used, std::max(e2.terms_used, e3.terms_used));
        return EvalResult(v, err, terms, Method::direct);
    };

    Real half_pi = Real::pi(p) / 2;
    EvalResult r = [&] {
        switch (j) {
            case 4:
                return theta4_at(z);
            case 3:
                return theta4_at(z + half_pi);
            case 1: {
                // theta_1(z,q) = -i q^(1/4) e^(iz) theta_4(z + log(q)/(2i), q)
                Complex w = z + Complex(Real(0, p), q.log_inv_q() / 2);
                EvalResult t4 = theta4_at(w);
                Real q4 = pow(q.q(), Real::pow2(-2, p));
                Complex factor = Complex(Real(0, p), Real(-1, p)) * q4 * exp(Complex(-z.im, z.re));
                Complex v = factor * t4.value;
                return EvalResult(v, abs(factor) * t4.err_estimate, t4.terms_used, Method::direct);
            }
            case 2: {
                Complex w = z + half_pi;
                Complex w1 = w + Complex(Real(0, p), q.log_inv_q() / 2);
                EvalResult t4 = theta4_at(w1);
                Real q4 = pow(q.q(), Real::pow2(-2, p));
                Complex factor = Complex(Real(0, p), Real(-1, p)) * q4 * exp(Complex(-w.im, w.re));
                Complex v = factor * t4.value;
                return EvalResult(v, abs(factor) * t4.err_estimate, t4.terms_used, Method::direct);
            }
            default:
                throw domain_error("theta index j must be 1..4");
        }
    }();
    Complex v = r.value;
    v.round_to(bits);
    return EvalResult(v, r.err_estimate.round_to(bits), r.terms_used, Method::direct);
}

}  // namespace

EvalResult theta_direct(int j, const Complex& z, const QPoint& q, const PrecisionContext& ctx,
                        ThetaRoute route) {
    check_j(j);
    if (route == ThetaRoute::series) return theta_series(j, z, q, ctx);
    return theta_triple(j, z, q, ctx);
}

EvalResult theta_asymptotic(int j, const Real& z, const QPoint& q, const PrecisionContext& ctx) {
    check_j(j);
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    Real pi = Real::pi(p);
    // j = 4 and j = 1 are the pi/2 shifts of j = 3 and j = 2
    bool shifted = (j == 1 || j == 4);
    ThetaArgument t = reduce_mod_pi(z, ctx, shifted);

    Real e1 = exp(t.z_pi * t.z_pi / q.log_q());
    Real d = pi - t.z_pi;
    Real e2 = exp(d * d / q.log_q());
    Real pref = sqrt(pi / q.log_inv_q());
    Real value(p);
    if (j == 3 || j == 4) {
        value = pref * (e1 + e2);
    } else {
        value = pref * (e1 - e2);
        if (t.floor_z_pi % 2 != 0) value = -value;
    }
    value.round_to(bits);
    return EvalResult(Complex(value), Real(0, bits), 0, Method::closed_form);
}

EvalResult theta_logderiv_direct(int j, const Real& z, const QPoint& q,
                                 const PrecisionContext& ctx) {
    check_j(j);
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    Real stop_level = Real::pow2(-(bits + 8), p);
    Real za = z;
    za.round_to(p);

    ThetaArgument t = reduce_mod_pi(za, ctx);
    Real pi = Real::pi(p);
    if (j == 1 && t.z_pi.is_zero()) throw domain_error("theta_1 log-derivative pole at z = 0 mod pi");
    if (j == 2 && (t.z_pi - pi / 2).is_zero())
        throw domain_error("theta_2 log-derivative pole at z = pi/2 mod pi");

    Real sum(p);
    if (j == 1) sum = cos(za) / sin(za);
    if (j == 2) sum = -sin(za) / cos(za);

    Real q2 = q.q() * q.q();
    Real qn = q.q();       // q^n
    Real q2n = q2;         // q^(2n)
    long n = 0;
    long consecutive = 0;
    Real coef(p);
    while (true) {
        ++n;
        // numerator power: q^(2n) for j=1,2 and q^n for j=3,4
        Real num = (j <= 2) ? q2n : qn;
        coef = 4 * num / (1 - q2n);
        Real term = coef * sin(2 * n * za);
        if ((j == 2 || j == 3) && n % 2 == 1) term = -term;
        sum += term;
        Real scale = max(abs(sum), Real(1, p));
        consecutive = (coef <= scale * stop_level) ? consecutive + 1 : 0;
        if (consecutive >= 3) break;
        if (n >= ctx.max_terms())
            throw convergence_error("theta log-derivative series: term cap exceeded");
        qn = qn * q.q();
        q2n = q2n * q2;
    }
    Real ratio = (j <= 2) ? q2 : q.q();
    Real err = coef * ratio / (1 - ratio) + round_floor(abs(sum), bits);
    sum.round_to(bits);
    return EvalResult(Complex(sum), err.round_to(bits), n, Method::direct);
}

EvalResult theta_logderiv_asymptotic(int j, const Real& z, const QPoint& q,
                                     const PrecisionContext& ctx) {
    check_j(j);
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    Real pi = Real::pi(p);
    bool shifted = (j == 1 || j == 4);
    ThetaArgument t = reduce_mod_pi(z, ctx, shifted);
    Real u = t.z_pi - pi / 2;
    Real value(p);
    if (j == 1 || j == 2) {
        if (u.is_zero()) throw domain_error("theta log-derivative pole (coth at 0)");
        value = (2 * u + pi * coth(pi * u / q.log_q())) / q.log_q();
    } else {
        value = (2 * u + pi * tanh(pi * u / q.log_q())) / q.log_q();
    }
    value.round_to(bits);
    return EvalResult(Complex(value), Real(0, bits), 0, Method::closed_form);
}

EvalResult eisenstein_from_theta(long k, const QPoint& q, const PrecisionContext& ctx) {
    if (k < 1) throw domain_error("Eisenstein index k must be >= 1");
    mpfr_prec_t p = ctx.work_prec();
    long bits = ctx.precision_bits();
    PrecisionContext wctx = elevated(ctx);
    QPoint qh(sqrt(q.q()), wctx);
    Complex zero(p);
    EvalResult t2 = theta_direct(2, zero, qh, wctx);
    EvalResult t3 = theta_direct(3, zero, qh, wctx);
    Complex num = t2.value + t3.value;
    // 2 sqrt(i) = 2 e^(i pi/4)
    Real quarter_pi = Real::pi(p) / 4;
    Complex denom = Complex(cos(quarter_pi), sin(quarter_pi)) * Real(2, p);
    Complex val = pow(num / denom, 4 * k);
    Real rel = (t2.err_estimate + t3.err_estimate) / abs(num);
    Real err = abs(val) * rel * Real(4 * k, p) + round_floor(abs(val), bits);
    if (abs(val.im) > 10 * ctx.eps() * abs(val.re) + err)
        throw consistency_error("eisenstein_from_theta: imaginary residue above tolerance");
    Real value = val.re;
    value.round_to(bits);
    return EvalResult(Complex(value), err.round_to(bits),
                      std::max(t2.terms_used, t3.terms_used), Method::asymptotic);
}

}  // namespace qasym
