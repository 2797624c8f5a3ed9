#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qasym/qgamma.hpp"

#include <random>

using namespace qasym;

namespace {

const PrecisionContext& ctx256() {
    static PrecisionContext ctx = make_context(256);
    return ctx;
}

Real dec(const std::string& s) { return Real::from_decimal(s, 256); }

bool close_rel(const Real& a, const Real& b, const Real& tol) {
    return abs(a - b) <= tol * max(abs(a), abs(b));
}

}  // namespace

TEST_CASE("qgamma_direct: special values and inversion") {
    const auto& ctx = ctx256();

    // Gamma_q(1) = 1 for any q
    for (const char* qs : {"0.2", "0.7", "3.5"})
        CHECK(close_rel(qgamma_direct(Real(1, 256), dec(qs), ctx).value.re, Real(1, 256),
                        10 * ctx.eps()));

    // Gamma_q(3) = 1 + q (the q-factorial [2]_q)
    {
        Real q = dec("0.99");
        Real v = qgamma_direct(Real(3, 256), q, ctx).value.re;
        CHECK(close_rel(v, 1 + q, Real::from_decimal("1e-70", 64)));
    }

    // q = 2 routes through inversion: both sides from direct products
    {
        Real v = qgamma_direct(Real::pow2(-2, 256), dec("2"), ctx).value.re;
        Real x = Real::pow2(-2, 256);
        Real expo = (x - 1) * (x - 2) / 2;
        Real rhs = pow(dec("2"), expo) * qgamma_direct(x, Real::pow2(-1, 256), ctx).value.re;
        CHECK(close_rel(v, rhs, 10 * ctx.eps()));
    }

    CHECK_THROWS_AS(qgamma_direct(Real(-1, 256), dec("0.5"), ctx), domain_error);

    // q = 1 degenerates to the classical gamma function
    {
        Real v = qgamma_direct(dec("0.3"), Real(1, 256), ctx).value.re;
        CHECK(close_rel(v, gamma(dec("0.3"), ctx), 10 * ctx.eps()));
        CHECK_THROWS_AS(qdigamma_direct(dec("0.3"), Real(1, 256), ctx), domain_error);
    }
}

TEST_CASE("qgamma functional equation and inversion round trip") {
    const auto& ctx = ctx256();
    for (const char* qs : {"0.3", "0.7", "0.9"})
        for (const char* xs : {"0.5", "1", "1.5"}) {
            Real q = dec(qs);
            Real x = dec(xs);
            Real lhs = qgamma_direct(x + 1, q, ctx).value.re;
            Real rhs = (1 - pow(q, x)) / (1 - q) * qgamma_direct(x, q, ctx).value.re;
            CHECK(close_rel(lhs, rhs, 10 * ctx.eps()));
        }
    for (const char* xs : {"0.25", "0.5", "0.75"}) {
        Real q = dec("0.4");
        Real x = dec(xs);
        Real lhs = qgamma_direct(x, q, ctx).value.re;
        Real rhs = pow(q, (x - 1) * (x - 2) / 2) * qgamma_direct(x, dec("2.5"), ctx).value.re;
        CHECK(close_rel(lhs, rhs, 10 * ctx.eps()));
    }
}

TEST_CASE("qgamma_asymptotic against direct products and the classical limit") {
    const auto& ctx = ctx256();
    auto policy = TruncationPolicy::optimal();

    {  // q -> 1 tends to Gamma(x)
        Real v = qgamma_asymptotic(dec("0.3"), dec("0.9999"), policy, ctx).value.re;
        Real g = gamma(dec("0.3"), ctx);
        CHECK(abs(v / g - 1) <= Real::from_decimal("1e-3", 64));
    }
    {  // x = 0.5, q = 0.9
        Real a = qgamma_asymptotic(Real::pow2(-1, 256), dec("0.9"), policy, ctx).value.re;
        Real d = qgamma_direct(Real::pow2(-1, 256), dec("0.9"), ctx).value.re;
        CHECK(close_rel(a, d, Real::from_decimal("1e-12", 64)));
    }
    {  // x > 1 reduced by the functional equation
        Real a = qgamma_asymptotic(dec("2.3"), dec("0.8"), policy, ctx).value.re;
        Real d = qgamma_direct(dec("2.3"), dec("0.8"), ctx).value.re;
        CHECK(close_rel(a, d, Real::from_decimal("1e-12", 64)));
    }
    {  // q > 1 via inversion
        Real a = qgamma_asymptotic(dec("0.4"), dec("1.25"), policy, ctx).value.re;
        Real d = qgamma_direct(dec("0.4"), dec("1.25"), ctx).value.re;
        CHECK(close_rel(a, d, Real::from_decimal("1e-12", 64)));
    }
}

TEST_CASE("qgamma reflection and the x = 1/2 closed form") {
    const auto& ctx = ctx256();

    {  // classical limit of the reflection prefactor
        Real x = dec("0.3");
        Real v = qgamma_reflection(x, dec("0.999999"), ctx).value.re;
        Real pi = Real::pi(256);
        Real classical = pi / sin(pi * x);
        CHECK(abs(v / classical - 1) <= Real::from_decimal("1e-5", 64));
    }
    {  // Gamma_q(1/2)^2 vs pi (q-1)/(q^(1/8) log q) at q = 0.9
        Real q = dec("0.9");
        Real g = qgamma_direct(Real::pow2(-1, 256), q, ctx).value.re;
        Real closed = qgamma_half(q, ctx).value.re;
        CHECK(abs(g * g / (closed * closed) - 1) <= Real::from_decimal("1e-8", 64));
        CHECK(closed > 0);
    }
    {  // x = 1/4 at q = 0.5 vs the direct product pair
        Real q = dec("0.5");
        Real quarter = Real::pow2(-2, 256);
        Real closed = qgamma_reflection(quarter, q, ctx).value.re;
        Real d = qgamma_direct(quarter, q, ctx).value.re *
                 qgamma_direct(3 * quarter, q, ctx).value.re;
        CHECK(abs(closed / d - 1) <= Real::from_decimal("1e-5", 64));
    }
    CHECK_THROWS_AS(qgamma_reflection(Real(1, 256), dec("0.5"), ctx), domain_error);
}

TEST_CASE("qdigamma: direct, asymptotic, variants") {
    const auto& ctx = ctx256();
    auto policy = TruncationPolicy::optimal();

    {  // q -> 1: psi_q(1) -> psi(1) = -gamma; 64 bits is plenty for 1e-3
        PrecisionContext coarse = make_context(64);
        Real v = qdigamma_direct(Real(1, 64), dec("0.9999"), coarse).value.re;
        CHECK(abs(v + Real::euler_gamma(64)) <= Real::from_decimal("1e-3", 64));
    }
    {  // derivative oracle: central difference of log Gamma_q
        Real q = dec("0.5");
        Real x = dec("0.7");
        Real h = dec("1e-8");
        Real fd = (log(qgamma_direct(x + h, q, ctx).value.re) -
                   log(qgamma_direct(x - h, q, ctx).value.re)) /
                  (2 * h);
        Real psi = qdigamma_direct(x, q, ctx).value.re;
        CHECK(abs(fd / psi - 1) <= Real::from_decimal("1e-6", 64));
    }
    {  // x = 1, q = 0.9: both expansion variants against the direct path
        Real q = dec("0.9");
        Real d = qdigamma_direct(Real(1, 256), q, ctx).value.re;
        Real a1 = qdigamma_asymptotic(Real(1, 256), q, DigammaVariant::compact, policy, ctx)
                      .value.re;
        Real a2 = qdigamma_asymptotic(Real(1, 256), q, DigammaVariant::expanded, policy, ctx)
                      .value.re;
        CHECK(abs(a1 - d) <= Real::from_decimal("1e-9", 64));
        CHECK(abs(a2 - d) <= Real::from_decimal("1e-9", 64));
    }
    {  // the variants agree within their own error budgets at x = 0.5
        Real q = dec("0.95");
        EvalResult a1 = qdigamma_asymptotic(Real::pow2(-1, 256), q, DigammaVariant::compact,
                                            policy, ctx);
        EvalResult a2 = qdigamma_asymptotic(Real::pow2(-1, 256), q, DigammaVariant::expanded,
                                            policy, ctx);
        CHECK(abs(a1.value - a2.value) <= 10 * max(a1.err_estimate, a2.err_estimate));
    }
    {  // q > 1 entry point
        Real d = qdigamma_direct(dec("0.6"), dec("1.5"), ctx).value.re;
        Real a = qdigamma_asymptotic(dec("0.6"), dec("1.5"), DigammaVariant::compact, policy, ctx)
                     .value.re;
        CHECK(abs(a - d) <= Real::from_decimal("1e-9", 64) * max(Real(1, 256), abs(d)));
    }
}

TEST_CASE("qpolygamma: identity, asymptotics, q > 1") {
    const auto& ctx = ctx256();
    auto policy = TruncationPolicy::optimal();
    Real pi = Real::pi(256);

    {  // Example values at x = 1/2, q = 0.99
        Real q = dec("0.99");
        Real half = Real::pow2(-1, 256);
        Real v1 = qpolygamma_direct(1, half, q, ctx).value.re;
        Real expect1 = pi * pi / 2 + log(q) / 2;
        CHECK(abs(v1 - expect1) <= Real::from_decimal("1e-4", 64));
        Real v3 = qpolygamma_direct(3, half, q, ctx).value.re;
        Real expect3 = pow(pi, 4L);  // psi'''(1/2) = pi^4
        CHECK(abs(v3 / expect3 - 1) <= Real::from_decimal("1e-3", 64));
    }
    {  // m = 1, x = 1, q = 0.9: asymptotic vs direct
        Real q = dec("0.9");
        Real a = qpolygamma_asymptotic(1, Real(1, 256), q, policy, ctx).value.re;
        Real d = qpolygamma_direct(1, Real(1, 256), q, ctx).value.re;
        CHECK(abs(a - d) <= Real::from_decimal("1e-9", 64) * abs(d));
    }
    {  // m odd, x = 1: the three-term finite form, higher terms vanish
        Real q = dec("0.8");
        long m = 3;
        EvalResult a = qpolygamma_asymptotic(m, Real(1, 256), q, policy, ctx);
        CHECK(a.terms_used <= 2);  // zeta(1-m) = 0 for odd m >= 3 kills k = 0 too
        Real lq = log(q);
        Real closed = polygamma(m, Real(1, 256), ctx) -
                      riemann_zeta_int(1 - m, ctx) * pow(lq, m) -
                      riemann_zeta_int(-m, ctx) * pow(lq, m + 1) / 2;
        CHECK(close_rel(a.value.re, closed, 10 * ctx.eps()));
    }
    {  // m = 2 within the mutual error budget
        Real q = dec("0.95");
        EvalResult a = qpolygamma_asymptotic(2, dec("0.3"), q, policy, ctx);
        EvalResult d = qpolygamma_direct(2, dec("0.3"), q, ctx);
        CHECK(abs(a.value - d.value) <= 10 * max(a.err_estimate, d.err_estimate));
    }
    {  // q > 1: m = 1 picks up log q, m >= 2 is invariant
        Real q = dec("1.5");
        Real qi = dec("2") / 3;
        Real lhs1 = qpolygamma_direct(1, dec("0.4"), q, ctx).value.re;
        Real rhs1 = log(q) + qpolygamma_direct(1, dec("0.4"), qi, ctx).value.re;
        CHECK(close_rel(lhs1, rhs1, Real::from_decimal("1e-70", 64)));
        Real lhs2 = qpolygamma_direct(2, dec("0.4"), q, ctx).value.re;
        Real rhs2 = qpolygamma_direct(2, dec("0.4"), qi, ctx).value.re;
        CHECK(close_rel(lhs2, rhs2, Real::from_decimal("1e-70", 64)));
    }
    CHECK_THROWS_AS(qpolygamma_direct(0, Real(1, 256), dec("0.5"), ctx), domain_error);
}

TEST_CASE("derivative chain: d/dx psi_q^(m-1) = psi_q^(m)") {
    const auto& ctx = ctx256();
    Real q = dec("0.6");
    Real x = dec("0.8");
    Real h = dec("1e-8");
    {
        Real fd = (qdigamma_direct(x + h, q, ctx).value.re -
                   qdigamma_direct(x - h, q, ctx).value.re) /
                  (2 * h);
        Real exact = qpolygamma_direct(1, x, q, ctx).value.re;
        CHECK(abs(fd / exact - 1) <= Real::from_decimal("1e-6", 64));
    }
    {
        Real fd = (qpolygamma_direct(1, x + h, q, ctx).value.re -
                   qpolygamma_direct(1, x - h, q, ctx).value.re) /
                  (2 * h);
        Real exact = qpolygamma_direct(2, x, q, ctx).value.re;
        CHECK(abs(fd / exact - 1) <= Real::from_decimal("1e-6", 64));
    }
}

TEST_CASE("asymptotic paths approach the classical functions as q -> 1") {
    const auto& ctx = ctx256();
    auto policy = TruncationPolicy::optimal();
    Real x = dec("0.7");
    Real prev_gamma(1000, 256), prev_psi(1000, 256), prev_poly(1000, 256);
    for (const char* qs : {"0.99", "0.999", "0.9999"}) {
        Real q = dec(qs);
        Real g = abs(qgamma_asymptotic(x, q, policy, ctx).value.re / gamma(x, ctx) - 1);
        CHECK(g < prev_gamma);
        prev_gamma = g;
        Real ps = abs(qdigamma_asymptotic(x, q, DigammaVariant::compact, policy, ctx).value.re -
                      polygamma(0, x, ctx));
        CHECK(ps < prev_psi);
        prev_psi = ps;
        Real pl = abs(qpolygamma_asymptotic(1, x, q, policy, ctx).value.re -
                      polygamma(1, x, ctx));
        CHECK(pl < prev_poly);
        prev_poly = pl;
    }
}

TEST_CASE("reflection residuals") {
    const auto& ctx = ctx256();

    // antisymmetry point: residual at rounding level
    Real r0 = reflection_residual(ReflectionKind::digamma, 0, Real::pow2(-1, 256), dec("0.7"), ctx);
    CHECK(r0 <= 10 * ctx.eps());

    // m = 1, x = 1/4, q = 0.9
    {
        Real pi = Real::pi(256);
        Real x = Real::pow2(-2, 256);
        Real csc = pi / sin(pi * x);
        Real rhs = csc * csc + log(dec("0.9"));
        Real r = reflection_residual(ReflectionKind::polygamma, 1, x, dec("0.9"), ctx);
        CHECK(r <= Real::from_decimal("1e-6", 64) * abs(rhs));
    }

    // m = 2: the residual is measurable at moderate q and collapses to the
    // rounding floor near q = 1 (where its true size is ~exp(-4 pi^2/|log q|))
    {
        Real r02 = reflection_residual(ReflectionKind::polygamma, 2, dec("0.3"), dec("0.2"), ctx);
        Real r04 = reflection_residual(ReflectionKind::polygamma, 2, dec("0.3"), dec("0.4"), ctx);
        Real r06 = reflection_residual(ReflectionKind::polygamma, 2, dec("0.3"), dec("0.6"), ctx);
        CHECK(r02 > r04);
        CHECK(r04 > r06);
        for (const char* qs : {"0.9", "0.95", "0.99"}) {
            Real r = reflection_residual(ReflectionKind::polygamma, 2, dec("0.3"), dec(qs), ctx);
            CHECK(r <= Real::from_decimal("1e-70", 64));
        }
    }
    CHECK_THROWS_AS(reflection_residual(ReflectionKind::digamma, 0, Real(1, 256), dec("0.5"), ctx),
                    domain_error);
}

TEST_CASE("qdigamma asymptotic handles x > 1 by reduction") {
    const auto& ctx = ctx256();
    Real q = dec("0.9");
    Real x = dec("1.7");
    Real a = qdigamma_asymptotic(x, q, DigammaVariant::compact, TruncationPolicy::optimal(), ctx)
                 .value.re;
    Real d = qdigamma_direct(x, q, ctx).value.re;
    CHECK(abs(a - d) <= Real::from_decimal("1e-9", 64) * max(abs(d), Real(1, 256)));
}

TEST_CASE("seeded random sweep: functional equation and route agreement") {
    const auto& ctx = ctx256();
    std::mt19937 rng(161803);
    auto uniform = [&](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    for (int trial = 0; trial < 10; ++trial) {
        Real q = Real(uniform(20, 95), 256) / 100;
        Real x = Real(uniform(5, 250), 256) / 100;
        Real lhs = qgamma_direct(x + 1, q, ctx).value.re;
        Real rhs = (1 - pow(q, x)) / (1 - q) * qgamma_direct(x, q, ctx).value.re;
        CHECK(abs(lhs - rhs) <= 20 * ctx.eps() * max(abs(lhs), Real(1, 256)));

        EvalResult d = qgamma_direct(x, q, ctx);
        EvalResult a = qgamma_asymptotic(x, q, TruncationPolicy::optimal(), ctx);
        CHECK(abs(d.value.re - a.value.re) <= 10 * max(d.err_estimate, a.err_estimate));
    }
}
