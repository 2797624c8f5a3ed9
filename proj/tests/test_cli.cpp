#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qasym/qexpr.hpp"
#include "qasym/request.hpp"
#include "qasym/tables.hpp"

using namespace qasym;

namespace {

Real dec(const std::string& s) { return Real::from_decimal(s, 256); }

bool close_rel(const Real& a, const Real& b, const Real& tol) {
    return abs(a - b) <= tol * max(abs(a), abs(b));
}

}  // namespace

TEST_CASE("expression grammar") {
    mpfr_prec_t p = 256;
    CHECK(eval_expression("0.5", p) == dec("0.5"));
    CHECK(close_rel(eval_expression("exp(-1/pi)", p), exp(-1 / Real::pi(p)),
                    Real::pow2(-250, 64)));
    CHECK(close_rel(eval_expression("2^(13/32)*pi/log(2)", p),
                    pow(Real(2, p), dec("13") / 32) * Real::pi(p) / log(Real(2, p)),
                    Real::pow2(-250, 64)));
    CHECK(eval_expression("-2 + 3", p) == 1L);
    CHECK(eval_expression(" ( 1 + 2 ) * 4 ", p) == 12L);
    CHECK(close_rel(eval_expression("sqrt(2)^2", p), Real(2, p), Real::pow2(-250, 64)));
    CHECK(close_rel(eval_expression("e", p), exp(Real(1, p)), Real::pow2(-250, 64)));
    // right-associative exponent: 2^3^2 = 2^9
    CHECK(eval_expression("2^3^2", p) == 512L);
    CHECK_THROWS_AS(eval_expression("2 +", p), std::invalid_argument);
    CHECK_THROWS_AS(eval_expression("foo(2)", p), std::invalid_argument);
    CHECK_THROWS_AS(eval_expression("1..2", p), std::invalid_argument);
}

TEST_CASE("digit-to-bits policy") {
    CHECK(bits_for_digits(30) == 256);
    CHECK(bits_for_digits(77) == 287);
    CHECK(bits_for_digits(1) == 256);
    CHECK_THROWS_AS(bits_for_digits(0), domain_error);
}

TEST_CASE("run_request: routing contract") {
    FunctionRequest req;
    req.fn = FunctionId::lambert;
    req.s = "1";
    req.x = "1";
    req.q = "0.5";
    req.digits = 30;
    req.method = RequestMethod::auto_select;
    ResultRecord rec = run_request(req);
    CHECK(rec.method == "direct");
    CHECK(rec.terms_used > 10);

    req.q = "0.95";
    rec = run_request(req);
    CHECK(rec.method == "asymptotic");
}

TEST_CASE("run_request: theta closed form at the e^(-1/pi) point") {
    FunctionRequest req;
    req.fn = FunctionId::theta;
    req.j = 4;
    req.z = "0";
    req.q = "exp(-1/pi)";
    req.q_is_expr = true;
    req.method = RequestMethod::closed;
    req.digits = 40;
    ResultRecord rec = run_request(req);
    mpfr_prec_t p = bits_for_digits(40);
    Real expect = 2 * Real::pi(p) * exp(-pow(Real::pi(p), 3L) / 4);
    Real got = Real::from_decimal(rec.value_re, p);
    CHECK(close_rel(got, expect, Real::from_decimal("1e-38", 64)));
    CHECK(rec.method == "closed_form");
}

TEST_CASE("run_request: domain and validation errors") {
    FunctionRequest req;
    req.fn = FunctionId::lambert;
    req.s = "0";
    req.x = "-1";
    req.q = "0.5";
    CHECK_THROWS_AS(run_request(req), domain_error);

    req.x = "1";
    req.method = RequestMethod::closed;  // undefined for lambert
    CHECK_THROWS_AS(run_request(req), domain_error);

    FunctionRequest missing;
    missing.fn = FunctionId::theta;
    missing.q = "0.5";
    CHECK_THROWS_AS(run_request(missing), domain_error);

    FunctionRequest badq;
    badq.fn = FunctionId::lambert;
    badq.s = "1";
    badq.x = "1";
    badq.q = "1.5";
    CHECK_THROWS_AS(run_request(badq), domain_error);
}

TEST_CASE("run_request: convergence failure surfaces") {
    FunctionRequest req;
    req.fn = FunctionId::lambert;
    req.s = "1";
    req.x = "1";
    req.q = "0.999999";
    req.method = RequestMethod::direct;
    req.digits = 30;
    CHECK_THROWS_AS(run_request(req), convergence_error);
}

TEST_CASE("record serialization round-trips bit-exactly") {
    FunctionRequest req;
    req.fn = FunctionId::qgamma;
    req.x = "0.5";
    req.q = "0.9";
    req.digits = 35;
    req.method = RequestMethod::direct;
    ResultRecord rec = run_request(req);
    ResultRecord back = ResultRecord::from_json_line(rec.to_json_line());
    CHECK(back == rec);
    // and the parsed value string is identical character for character
    CHECK(back.value_re == rec.value_re);
}

TEST_CASE("tables carry the claimed-order verdicts") {
    Table t = run_table(TableId::example_3_4);
    REQUIRE(t.rows.size() == 3);
    for (const auto& r : t.rows) CHECK(r.pass);

    Table refl = run_table(TableId::reflection_suite);
    REQUIRE(refl.rows.size() == 9);
    for (const auto& r : refl.rows) CHECK(r.pass);

    std::string csv = table_csv(t);
    CHECK(csv.find("params,asym_value") == 0);
    CHECK(csv.find("pass") != std::string::npos);
    std::string json = table_json(t);
    CHECK(json.find("\"table\"") != std::string::npos);
}

TEST_CASE("bench rows mark the direct cap near q = 1") {
    auto rows = run_bench(FunctionId::lambert, {"0.2", "0.999999"}, 30);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].direct_status == "ok");
    CHECK(rows[0].direct_terms < 500);
    CHECK(rows[1].direct_status == "cap exceeded");
    CHECK(rows[1].asym_status == "ok");
}

TEST_CASE("verify suites pass at 256 bits") {
    PrecisionContext ctx = make_context(256);
    CHECK(verify_identities(ctx).all_pass);
    CHECK(verify_reflections(ctx).all_pass);
}

TEST_CASE("eisenstein remark table: fifteen green rows") {
    Table t = run_table(TableId::eisenstein_remark);
    REQUIRE(t.rows.size() == 15);
    for (const auto& r : t.rows) CHECK(r.pass);
}

TEST_CASE("records are deterministic apart from wall time") {
    FunctionRequest req;
    req.fn = FunctionId::qdigamma;
    req.x = "0.7";
    req.q = "0.85";
    req.digits = 32;
    ResultRecord a = run_request(req);
    ResultRecord b = run_request(req);
    CHECK(a.value_re == b.value_re);
    CHECK(a.err_estimate == b.err_estimate);
    CHECK(a.terms_used == b.terms_used);
    CHECK(a.method == b.method);
}

TEST_CASE("every function id dispatches through the request layer") {
    struct Case {
        FunctionId fn;
        RequestMethod method;
        const char* s;
        long m;
        const char* x;
        const char* z;
        int j;
        long k;
        const char* q;
    };
    // one direct-style and one asymptotic/closed-style request per function
    Case cases[] = {
        {FunctionId::lambert, RequestMethod::direct, "2", 0, "0.5", nullptr, 0, 0, "0.4"},
        {FunctionId::lambert, RequestMethod::asym, "1.5", 0, "0.5", nullptr, 0, 0, "0.8"},
        {FunctionId::pochhammer, RequestMethod::direct, nullptr, 0, "0.5", nullptr, 0, 0, "0.4"},
        {FunctionId::pochhammer, RequestMethod::asym, nullptr, 0, "0.5", nullptr, 0, 0, "0.9"},
        {FunctionId::euler, RequestMethod::direct, nullptr, 0, nullptr, nullptr, 0, 0, "0.4"},
        {FunctionId::euler, RequestMethod::closed, nullptr, 0, nullptr, nullptr, 0, 0, "0.9"},
        {FunctionId::qgamma, RequestMethod::direct, nullptr, 0, "0.25", nullptr, 0, 0, "2"},
        {FunctionId::qgamma, RequestMethod::closed, nullptr, 0, "0.5", nullptr, 0, 0, "0.9"},
        {FunctionId::qdigamma, RequestMethod::asym, nullptr, 0, "0.7", nullptr, 0, 0, "0.9"},
        {FunctionId::qpolygamma, RequestMethod::direct, nullptr, 2, "0.7", nullptr, 0, 0, "0.5"},
        {FunctionId::eisenstein, RequestMethod::direct, nullptr, 0, nullptr, nullptr, 0, 2, "0.3"},
        {FunctionId::eisenstein, RequestMethod::closed, nullptr, 0, nullptr, nullptr, 0, 2, "0.5"},
        {FunctionId::theta, RequestMethod::direct, nullptr, 0, nullptr, "0.4", 2, 0, "0.6"},
        {FunctionId::theta_logderiv, RequestMethod::asym, nullptr, 0, nullptr, "0.7", 1, 0, "0.9"},
        {FunctionId::divisor_gf, RequestMethod::direct, nullptr, 1, nullptr, nullptr, 0, 0, "0.4"},
        {FunctionId::divisor_gf, RequestMethod::closed, nullptr, -1, nullptr, nullptr, 0, 0, "0.9"},
    };
    for (const auto& c : cases) {
        FunctionRequest req;
        req.fn = c.fn;
        req.method = c.method;
        if (c.s) req.s = c.s;
        if (c.m != 0) req.m = c.m;
        if (c.x) req.x = c.x;
        if (c.z) req.z = c.z;
        if (c.j != 0) req.j = c.j;
        if (c.k != 0) req.k = c.k;
        req.q = c.q;
        req.digits = 25;
        ResultRecord rec = run_request(req);
        CHECK(!rec.value_re.empty());
        CHECK(rec.fn == function_name(c.fn));
    }
}
