#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qasym/qpochhammer.hpp"

using namespace qasym;

namespace {

const PrecisionContext& ctx256() {
    static PrecisionContext ctx = make_context(256);
    return ctx;
}

Real dec(const std::string& s) { return Real::from_decimal(s, 256); }
QPoint qp(const std::string& s) { return QPoint(dec(s), ctx256()); }

bool close_rel(const Real& a, const Real& b, const Real& tol) {
    return abs(a - b) <= tol * max(abs(a), abs(b));
}

// partial products with a fixed cut, independent of the library path
Real product_oracle(const Real& a, const Real& q, mpfr_prec_t p, long terms) {
    Real prod(1, p);
    Real w = a;
    w.round_to(p);
    for (long n = 0; n < terms; ++n) {
        prod *= (1 - w);
        w = w * q;
    }
    return prod;
}

}  // namespace

TEST_CASE("pochhammer_direct: values, domain, complex a") {
    const auto& ctx = ctx256();

    // empty product
    CHECK(pochhammer_direct(Real(0, 256), qp("0.5"), ctx).value.re == 1L);

    // (1/2; 1/2)_inf frozen value against the product oracle
    {
        QPoint q = qp("0.5");
        Real v = pochhammer_direct(q.q(), q, ctx).value.re;
        Real oracle = product_oracle(dec("0.5"), dec("0.5"), 288, 400);
        CHECK(close_rel(v, oracle, 10 * ctx.eps()));
        CHECK(close_rel(v, dec("0.288788095086602421278899721929230780088911905"), dec("1e-44")));
    }

    // log relation to the Lambert series built from scratch
    {
        QPoint q = qp("0.3");
        Real x = dec("0.7");
        Real v = pochhammer_direct(pow(q.q(), x), q, ctx).value.re;
        mpfr_prec_t p = 288;
        Real lam(0, p);
        Real qx = pow(q.q(), x);
        Real u = qx, pk = q.q();
        for (long k = 1; k <= 300; ++k) {
            lam += u / (Real(k, p) * (1 - pk));
            u = u * qx;
            pk = pk * q.q();
        }
        CHECK(close_rel(log(v), -lam, 10 * ctx.eps()));
    }

    // zero factor is a domain error
    CHECK_THROWS_AS(pochhammer_direct(Real(1, 256), qp("0.5"), ctx), domain_error);
    // safety bound |a| < 1/(1-q)
    CHECK_THROWS_AS(pochhammer_direct(dec("6"), qp("0.8"), ctx), domain_error);

    // complex a: conjugate inputs give conjugate products
    {
        QPoint q = qp("0.6");
        Complex a(dec("0.3"), dec("0.4"));
        Complex v1 = pochhammer_direct(a, q, ctx).value;
        Complex v2 = pochhammer_direct(conj(a), q, ctx).value;
        CHECK(abs(v1 - conj(v2)) <= 10 * ctx.eps() * abs(v1));
    }
}

TEST_CASE("pochhammer_asymptotic vs direct products") {
    const auto& ctx = ctx256();
    auto policy = TruncationPolicy::optimal();

    {  // x = 0.3, q = 0.9
        QPoint q = qp("0.9");
        Real x = dec("0.3");
        Real a = pochhammer_asymptotic(x, q, policy, ctx).value.re;
        Real d = pochhammer_direct(pow(q.q(), x), q, ctx).value.re;
        CHECK(close_rel(a, d, Real::from_decimal("1e-12", 64)));
    }
    {  // x = 0.5, q = 0.99: the reported estimate is far below 1e-20
        QPoint q = qp("0.99");
        EvalResult a = pochhammer_asymptotic(Real::pow2(-1, 256), q, policy, ctx);
        CHECK(a.err_estimate <= Real::from_decimal("1e-20", 64) * abs(a.value.re));
        Real d = pochhammer_direct(pow(q.q(), Real::pow2(-1, 256)), q, ctx).value.re;
        CHECK(abs(a.value.re - d) <= 10 * max(a.err_estimate, Real::from_decimal("1e-60", 64) * d));
    }
    CHECK_THROWS_AS(pochhammer_asymptotic(dec("1.5"), qp("0.9"), policy, ctx), domain_error);
}

TEST_CASE("euler_asymptotic: Watson form") {
    const auto& ctx = ctx256();
    {
        QPoint q = qp("0.9");
        Real a = euler_asymptotic(q, ctx).value.re;
        Real d = pochhammer_direct(q.q(), q, ctx).value.re;
        CHECK(close_rel(a, d, Real::from_decimal("1e-10", 64)));
    }
    {
        QPoint q = qp("0.5");
        Real a = euler_asymptotic(q, ctx).value.re;
        Real d = pochhammer_direct(q.q(), q, ctx).value.re;
        CHECK(abs(a / d - 1) <= Real::from_decimal("1e-5", 64));
        // measured during development: the true gap here is ~1.8e-25
        CHECK(abs(a / d - 1) <= Real::from_decimal("1e-24", 64));
    }
    {  // exactly the x = 1 case of the expansion, term for term
        QPoint q = qp("0.7");
        Real a = euler_asymptotic(q, ctx).value.re;
        Real b = pochhammer_asymptotic(Real(1, 256), q, TruncationPolicy::optimal(), ctx).value.re;
        CHECK(close_rel(a, b, 10 * ctx.eps()));
    }
}

TEST_CASE("pochhammer_reflection formula") {
    const auto& ctx = ctx256();

    // x = 1/4 at q = 0.1: relative error of order 1e-15 vs the direct pair
    {
        QPoint q = qp("0.1");
        Real quarter = Real::pow2(-2, 256);
        Real closed = pochhammer_reflection(quarter, q, ctx).value.re;
        Real d = pochhammer_direct(pow(q.q(), quarter), q, ctx).value.re *
                 pochhammer_direct(pow(q.q(), 3 * quarter), q, ctx).value.re;
        Real rel = abs(closed / d - 1);
        CHECK(rel <= Real::from_decimal("1e-14", 64));
        CHECK(rel >= Real::from_decimal("1e-16", 64));
    }
    // symmetric in x <-> 1-x
    {
        QPoint q = qp("0.4");
        Real a = pochhammer_reflection(dec("0.2"), q, ctx).value.re;
        Real b = pochhammer_reflection(dec("0.8"), q, ctx).value.re;
        CHECK(close_rel(a, b, 10 * ctx.eps()));
    }
    // x = 1/2 at q = 0.5 vs the direct square
    {
        QPoint q = qp("0.5");
        Real half = Real::pow2(-1, 256);
        Real closed = pochhammer_reflection(half, q, ctx).value.re;
        Real droot = pochhammer_direct(pow(q.q(), half), q, ctx).value.re;
        CHECK(abs(closed / (droot * droot) - 1) <= Real::from_decimal("1e-8", 64));
    }
    CHECK_THROWS_AS(pochhammer_reflection(Real(0, 256), qp("0.5"), ctx), domain_error);
    CHECK_THROWS_AS(pochhammer_reflection(Real(1, 256), qp("0.5"), ctx), domain_error);
}

TEST_CASE("reflection cancellation: omitted factors are exactly zero") {
    // zeta(2-k) [B_k(x) + B_k(1-x)] vanishes for every k = 3..12: odd k kills
    // the Bernoulli pair, even k > 2 kills zeta at a negative even integer
    const auto& ctx = ctx256();
    mpq_class x(3, 10);
    for (long k = 3; k <= 12; ++k) {
        if (k % 2 == 0) {
            CHECK(riemann_zeta_int(2 - k, ctx).is_zero());
        } else {
            CHECK(bernoulli_poly_exact(k, x) + bernoulli_poly_exact(k, 1 - x) == 0);
        }
    }
}

TEST_CASE("lemma round trip across the q, x grid") {
    const auto& ctx = ctx256();
    for (const char* qs : {"0.2", "0.5", "0.8"})
        for (const char* xs : {"0.25", "0.5", "1"}) {
            QPoint q = qp(qs);
            Real x = dec(xs);
            Real lam = lambert_direct(SParameter::integer(-1), x, q, ctx).value.re;
            Real lp = log(pochhammer_direct(pow(q.q(), x), q, ctx).value.re);
            CHECK(abs(lp + lam) <= 10 * ctx.eps() * abs(lam));
        }
}

TEST_CASE("expansion vs direct product across the near-1 grid") {
    const auto& ctx = ctx256();
    auto policy = TruncationPolicy::optimal();
    for (const char* qs : {"0.8", "0.9"}) {
        QPoint q = qp(qs);
        for (const char* xs :
             {"0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.85", "1"}) {
            Real x = dec(xs);
            EvalResult a = pochhammer_asymptotic(x, q, policy, ctx);
            Real d = pochhammer_direct(pow(q.q(), x), q, ctx).value.re;
            Real budget = max(a.err_estimate, Real::from_decimal("1e-10", 64) * abs(d));
            CHECK(abs(a.value.re - d) <= budget);
        }
    }
}
