#include "qasym/tables.hpp"

#include "qasym/kernel.hpp"
#include "qasym/lambert.hpp"
#include "qasym/qexpr.hpp"
#include "qasym/qgamma.hpp"
#include "qasym/qpochhammer.hpp"
#include "qasym/theta.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace qasym {

namespace {

Real rel_gap(const Real& approx, const Real& oracle) {
    return abs(approx / oracle - 1);
}

// |approx - oracle| / max(|approx|, |oracle|, floor)
Real rel_diff(const Complex& a, const Complex& b, const Real& floor_scale) {
    Real scale = max(max(abs(a), abs(b)), floor_scale);
    return abs(a - b) / scale;
}

std::string fmt(const Real& v, int digits = 3) { return v.to_string(digits); }

bool within_decade(const Real& value, const Real& order) {
    return value >= order / 10 && value <= order * 10;
}

}  // namespace

TableId parse_table_id(const std::string& name) {
    if (name == "abstract_constants") return TableId::abstract_constants;
    if (name == "eisenstein_remark") return TableId::eisenstein_remark;
    if (name == "example_3_4") return TableId::example_3_4;
    if (name == "two_term_claim") return TableId::two_term_claim;
    if (name == "reflection_suite") return TableId::reflection_suite;
    throw domain_error("unknown table id '" + name + "'");
}

// ---------------------------------------------------------------------------
// Probes
// ---------------------------------------------------------------------------

ErrorProbe probe_qgamma_product(const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.work_prec();
    Real two(2, p);
    Real quarter = Real::pow2(-2, p);
    Real three_quarter = 3 * quarter;
    Real a = qgamma_direct(quarter, two, ctx).value.re;
    Real b = qgamma_direct(three_quarter, two, ctx).value.re;
    Real approx = eval_expression("2^(13/32)*pi/log(2)", p);
    Real oracle = a * b;
    return {approx, oracle, rel_gap(approx, oracle).round_to(ctx.precision_bits())};
}

ErrorProbe probe_theta_constant(const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.work_prec();
    Real q = exp(-1 / Real::pi(p));
    QPoint qp(q, ctx);
    Real oracle = theta_direct(4, Complex(Real(0, p)), qp, ctx).value.re;
    Real pi = Real::pi(p);
    Real approx = 2 * pi * exp(-pow(pi, 3L) / 4);
    return {approx, oracle, rel_gap(approx, oracle).round_to(ctx.precision_bits())};
}

ErrorProbe probe_eisenstein(long k, const std::string& q_dec, const PrecisionContext& ctx) {
    QPoint qp(Real::from_decimal(q_dec, ctx.work_prec()), ctx);
    Real closed = eisenstein_asymptotic(k, qp, ctx).value.re;
    Real oracle = eisenstein_modified(k, qp, ctx).value.re;
    return {closed, oracle, rel_gap(closed, oracle).round_to(ctx.precision_bits())};
}

ErrorProbe probe_example34(const std::string& q_dec, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.work_prec();
    QPoint qp(Real::from_decimal(q_dec, p), ctx);
    Real quarter = Real::pow2(-2, p);
    Real closed = pochhammer_reflection(quarter, qp, ctx).value.re;
    Real d1 = pochhammer_direct(pow(qp.q(), quarter), qp, ctx).value.re;
    Real d2 = pochhammer_direct(pow(qp.q(), 3 * quarter), qp, ctx).value.re;
    Real oracle = d1 * d2;
    return {closed, oracle, rel_gap(closed, oracle).round_to(ctx.precision_bits())};
}

ErrorProbe probe_two_term(const std::string& q_dec, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.work_prec();
    QPoint qp(Real::from_decimal(q_dec, p), ctx);
    Real one(1, p);
    SParameter s = SParameter::integer(1);
    // leading Gamma(2) zeta(2,1) / log(1/q)^2 plus the k = 0, 1 corrections
    Real approx = lambert_asymptotic(s, one, qp, TruncationPolicy::fixed(1), ctx).value.re;
    Real oracle = lambert_direct(s, one, qp, ctx).value.re;
    return {approx, oracle, rel_gap(approx, oracle).round_to(ctx.precision_bits())};
}

ErrorProbe probe_reflection(const std::string& kind, long m, const std::string& x_dec,
                            const std::string& q_dec, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.work_prec();
    Real x = Real::from_decimal(x_dec, p);
    Real q = Real::from_decimal(q_dec, p);
    Real pi = Real::pi(p);
    Real lq = log(q);
    Real rhs(p);
    ReflectionKind rk;
    if (kind == "digamma") {
        rk = ReflectionKind::digamma;
        rhs = -pi * cos(pi * x) / sin(pi * x) + (x - Real::pow2(-1, p)) * lq;
    } else if (m == 1) {
        rk = ReflectionKind::polygamma;
        Real csc = pi / sin(pi * x);
        rhs = csc * csc + lq;
    } else {
        rk = ReflectionKind::polygamma;
        Real sign(m % 2 == 0 ? 1 : -1, p);
        rhs = polygamma(m, x, ctx) - sign * polygamma(m, 1 - x, ctx);
    }
    Real residual = reflection_residual(rk, m, x, q, ctx);
    Real rel = residual / max(abs(rhs), Real(1, p));
    return {rhs, residual, rel.round_to(ctx.precision_bits())};
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

Table run_table(TableId id) {
    Table t;
    auto add_row = [&](const std::string& params, const ErrorProbe& pr,
                       const std::string& claimed, bool pass, const std::string& note = "") {
        TableRow row;
        row.params = params;
        row.asym_value = pr.approx.to_string(30);
        row.oracle_value = pr.oracle.to_string(30);
        row.rel_error = fmt(pr.rel_error);
        row.claimed_order = claimed;
        row.pass = pass;
        row.note = note;
        t.rows.push_back(row);
    };
    // a failed oracle marks its row and the run keeps going
    auto guarded = [&](const std::string& params, const std::string& claimed, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            TableRow row;
            row.params = params;
            row.claimed_order = claimed;
            row.error = true;
            row.note = e.what();
            t.rows.push_back(row);
        }
    };

    switch (id) {
        case TableId::abstract_constants: {
            t.id = "abstract_constants";
            PrecisionContext ctx = make_context(512);
            guarded("Gamma_2(1/4)*Gamma_2(3/4) vs 2^(13/32) pi/log 2", "1e-25", [&] {
                ErrorProbe g = probe_qgamma_product(ctx);
                add_row("Gamma_2(1/4)*Gamma_2(3/4) vs 2^(13/32) pi/log 2", g, "1e-25",
                        within_decade(g.rel_error, Real::from_decimal("1e-25", 64)));
            });
            guarded("theta_4(0, exp(-1/pi)) vs 2 pi exp(-pi^3/4)", "1e-27", [&] {
                ErrorProbe th = probe_theta_constant(ctx);
                add_row("theta_4(0, exp(-1/pi)) vs 2 pi exp(-pi^3/4)", th, "1e-27",
                        within_decade(th.rel_error, Real::from_decimal("1e-27", 64)));
            });
            break;
        }
        case TableId::eisenstein_remark: {
            t.id = "eisenstein_remark";
            PrecisionContext ctx = make_context(256);
            const char* qs[] = {"0.1", "0.3", "0.5"};
            const char* claimed[] = {"1e-5", "1e-12", "1e-15"};
            for (long k = 1; k <= 5; ++k)
                for (int i = 0; i < 3; ++i) {
                    std::string params = "k=" + std::to_string(k) + " q=" + qs[i];
                    guarded(params, claimed[i], [&] {
                        ErrorProbe pr = probe_eisenstein(k, qs[i], ctx);
                        bool pass = pr.rel_error <= 10 * Real::from_decimal(claimed[i], 64);
                        add_row(params, pr, claimed[i], pass);
                    });
                }
            break;
        }
        case TableId::example_3_4: {
            t.id = "example_3_4";
            PrecisionContext ctx = make_context(256);
            const char* qs[] = {"0.001", "0.01", "0.1"};
            const char* claimed[] = {"1e-5", "1e-8", "1e-15"};
            for (int i = 0; i < 3; ++i) {
                std::string params = "x=1/4 q=" + std::string(qs[i]);
                guarded(params, claimed[i], [&] {
                    ErrorProbe pr = probe_example34(qs[i], ctx);
                    bool pass = within_decade(pr.rel_error, Real::from_decimal(claimed[i], 64));
                    add_row(params, pr, claimed[i], pass);
                });
            }
            break;
        }
        case TableId::two_term_claim: {
            t.id = "two_term_claim";
            PrecisionContext ctx = make_context(256);
            const char* qs[] = {"0.1", "0.3", "0.5", "0.7", "0.9"};
            for (const char* q : qs) {
                std::string params = "s=1 x=1 q=" + std::string(q);
                guarded(params, "1e-7", [&] {
                    ErrorProbe pr = probe_two_term(q, ctx);
                    bool pass = pr.rel_error <= Real::from_decimal("1e-7", 64);
                    // at s = 1, x = 1 the two correction terms complete the
                    // expansion; any excess over the bound is its intrinsic
                    // exp(-4 pi^2/log(1/q)) floor, not a truncation choice
                    add_row(params, pr, "1e-7", pass,
                            pass ? "" : "at the expansion's beyond-all-orders floor");
                });
            }
            break;
        }
        case TableId::reflection_suite: {
            t.id = "reflection_suite";
            PrecisionContext ctx = make_context(256);
            struct Spec {
                const char* kind;
                long m;
                const char* x;
            };
            Spec specs[] = {{"digamma", 0, "0.25"}, {"polygamma", 1, "0.25"}, {"polygamma", 2, "0.3"}};
            const char* qs[] = {"0.9", "0.95", "0.99"};
            for (const auto& sp : specs)
                for (const char* q : qs) {
                    std::string params = std::string(sp.kind) +
                                         (sp.m > 0 ? " m=" + std::to_string(sp.m) : "") +
                                         " x=" + sp.x + " q=" + q;
                    guarded(params, "1e-6", [&] {
                        ErrorProbe pr = probe_reflection(sp.kind, sp.m, sp.x, q, ctx);
                        bool pass = pr.rel_error <= Real::from_decimal("1e-6", 64);
                        add_row(params, pr, "1e-6", pass, "residual relative to |RHS|");
                    });
                }
            break;
        }
    }
    return t;
}

std::string table_csv(const Table& t) {
    std::ostringstream out;
    out << "params,asym_value,oracle_value,rel_error,claimed_order,pass,note\n";
    for (const auto& r : t.rows) {
        const char* status = r.error ? "ERROR" : (r.pass ? "pass" : "FAIL");
        out << '"' << r.params << "\"," << r.asym_value << ',' << r.oracle_value << ','
            << r.rel_error << ',' << r.claimed_order << ',' << status << ",\"" << r.note
            << "\"\n";
    }
    return out.str();
}

std::string table_json(const Table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"params", r.params},
                        {"asym_value", r.asym_value},
                        {"oracle_value", r.oracle_value},
                        {"rel_error", r.rel_error},
                        {"claimed_order", r.claimed_order},
                        {"pass", r.pass},
                        {"error", r.error},
                        {"note", r.note}});
    return nlohmann::json{{"table", t.id}, {"rows", rows}}.dump(2);
}

// ---------------------------------------------------------------------------
// Verify suites
// ---------------------------------------------------------------------------

namespace {

struct SuiteBuilder {
    VerifySummary summary;
    // worst residual across the checks of one named invariant
    void add(const std::string& name, const Real& worst, const Real& tol, long checks) {
        VerifyItem item;
        item.name = name;
        item.worst_residual = fmt(worst);
        item.tolerance = fmt(tol);
        item.checks = checks;
        item.pass = worst <= tol;
        summary.all_pass = summary.all_pass && item.pass;
        summary.items.push_back(item);
    }
};

}  // namespace

VerifySummary verify_identities(const PrecisionContext& ctx) {
    SuiteBuilder b;
    mpfr_prec_t p = ctx.work_prec();
    Real ten_eps = 10 * ctx.eps();

    {  // Pochhammer log vs Lambert series at s = -1
        Real worst(p);
        long n = 0;
        for (const char* qs : {"0.2", "0.5", "0.8"})
            for (const char* xs : {"0.25", "0.5", "1"}) {
                QPoint qp(Real::from_decimal(qs, p), ctx);
                Real x = Real::from_decimal(xs, p);
                Real lam = lambert_direct(SParameter::integer(-1), x, qp, ctx).value.re;
                Real lp = log(pochhammer_direct(pow(qp.q(), x), qp, ctx).value.re);
                worst = max(worst, abs(lp + lam) / max(abs(lam), Real(1, p)));
                ++n;
            }
        b.add("pochhammer_log_roundtrip", worst, ten_eps, n);
    }
    {  // q-digamma defining identity
        Real worst(p);
        long n = 0;
        for (const char* qs : {"0.3", "0.6", "0.9"})
            for (const char* xs : {"0.3", "0.7", "1.5"}) {
                Real q = Real::from_decimal(qs, p);
                QPoint qp(q, ctx);
                Real x = Real::from_decimal(xs, p);
                Real lhs = qdigamma_direct(x, q, ctx).value.re;
                Real rhs = -log1p(-qp.q()) +
                           qp.log_q() * lambert_direct(SParameter::integer(0), x, qp, ctx).value.re;
                worst = max(worst, abs(lhs - rhs) / max(abs(lhs), Real(1, p)));
                ++n;
            }
        b.add("qdigamma_identity", worst, ten_eps, n);
    }
    {  // q-polygamma defining identity
        Real worst(p);
        long n = 0;
        for (long m : {1L, 2L})
            for (const char* qs : {"0.4", "0.8"}) {
                Real q = Real::from_decimal(qs, p);
                QPoint qp(q, ctx);
                Real x = Real::pow2(-1, p);
                Real lhs = qpolygamma_direct(m, x, q, ctx).value.re;
                Real rhs = pow(qp.log_q(), m + 1) *
                           lambert_direct(SParameter::integer(m), x, qp, ctx).value.re;
                worst = max(worst, abs(lhs - rhs) / max(abs(lhs), Real(1, p)));
                ++n;
            }
        b.add("qpolygamma_identity", worst, ten_eps, n);
    }
    {  // quasi-period relation and reality of theta_1
        Real worst(p);
        long n = 0;
        for (const char* zs : {"0.3", "1.0"})
            for (const char* qs : {"0.4", "0.7"}) {
                QPoint qp(Real::from_decimal(qs, p), ctx);
                Real z = Real::from_decimal(zs, p);
                Complex t1 = theta_direct(1, Complex(z), qp, ctx).value;
                Complex w(z, qp.log_inv_q() / 2);  // z + log(q)/(2i)
                Complex t4 = theta_direct(4, w, qp, ctx).value;
                Real q4 = pow(qp.q(), Real::pow2(-2, p));
                Complex rhs = Complex(Real(0, p), Real(-1, p)) * q4 * exp(Complex(Real(0, p), z)) * t4;
                Real scale = max(abs(t1), Real(1, p));
                worst = max(worst, abs(t1 - rhs) / scale);
                worst = max(worst, abs(t1.im) / scale);
                ++n;
            }
        b.add("theta_quasi_period", worst, ten_eps, n);
    }
    {  // triple product vs series
        Real worst(p);
        long n = 0;
        for (int j = 1; j <= 4; ++j)
            for (const char* zs : {"0", "0.4", "2.8"})
                for (const char* qs : {"0.2", "0.6", "0.9"}) {
                    QPoint qp(Real::from_decimal(qs, p), ctx);
                    Complex z(Real::from_decimal(zs, p));
                    Complex a = theta_direct(j, z, qp, ctx, ThetaRoute::series).value;
                    Complex c = theta_direct(j, z, qp, ctx, ThetaRoute::triple_product).value;
                    worst = max(worst, rel_diff(a, c, Real(1, p)));
                    ++n;
                }
        b.add("theta_triple_product_vs_series", worst, ten_eps, n);
    }
    {  // functional equation Gamma_q(x+1) = [x]_q Gamma_q(x)
        Real worst(p);
        long n = 0;
        for (const char* qs : {"0.3", "0.7", "0.9"})
            for (const char* xs : {"0.5", "1", "1.5"}) {
                Real q = Real::from_decimal(qs, p);
                Real x = Real::from_decimal(xs, p);
                Real lhs = qgamma_direct(x + 1, q, ctx).value.re;
                Real bracket = (1 - pow(q, x)) / (1 - q);
                Real rhs = bracket * qgamma_direct(x, q, ctx).value.re;
                worst = max(worst, abs(lhs - rhs) / max(abs(lhs), Real(1, p)));
                ++n;
            }
        b.add("qgamma_functional_equation", worst, ten_eps, n);
    }
    {  // inversion round trip at q = 0.4
        Real worst(p);
        long n = 0;
        Real q = Real::from_decimal("0.4", p);
        Real qinv = Real::from_decimal("2.5", p);
        for (const char* xs : {"0.25", "0.5", "0.75"}) {
            Real x = Real::from_decimal(xs, p);
            Real lhs = qgamma_direct(x, q, ctx).value.re;
            Real rhs = pow(q, (x - 1) * (x - 2) / 2) * qgamma_direct(x, qinv, ctx).value.re;
            worst = max(worst, abs(lhs - rhs) / max(abs(lhs), Real(1, p)));
            ++n;
        }
        b.add("qgamma_inversion_roundtrip", worst, ten_eps, n);
    }
    return b.summary;
}

VerifySummary verify_overlap(const PrecisionContext& ctx) {
    SuiteBuilder b;
    mpfr_prec_t p = ctx.work_prec();

    {  // direct vs asymptotic over the lambert grid, against error estimates
        Real worst(p);  // gap / (10 max err) — pass iff <= 1
        long n = 0;
        std::vector<SParameter> ss;
        for (long v : {-2L, -1L, 0L, 1L, 2L}) ss.push_back(SParameter::integer(v));
        ss.push_back(SParameter::real(Real::from_decimal("1.5", p)));
        for (const char* qs : {"0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9"}) {
            QPoint qp(Real::from_decimal(qs, p), ctx);
            for (const char* xs : {"0.25", "0.5", "0.75", "1"}) {
                Real x = Real::from_decimal(xs, p);
                for (const auto& s : ss) {
                    EvalResult d = lambert_direct(s, x, qp, ctx);
                    EvalResult a = lambert_asymptotic(s, x, qp, TruncationPolicy::optimal(), ctx);
                    Real gap = abs(d.value - a.value);
                    Real budget = 10 * max(d.err_estimate, a.err_estimate);
                    worst = max(worst, gap / budget);
                    ++n;
                }
            }
        }
        b.add("lambert_overlap_gap_over_budget", worst, Real(1, p), n);
    }
    {  // psi_q as the log-derivative of Gamma_q
        Real worst(p);
        long n = 0;
        Real h = Real::from_decimal("1e-8", p);
        for (const char* qs : {"0.5", "0.9"}) {
            Real q = Real::from_decimal(qs, p);
            Real x = Real::from_decimal("0.7", p);
            Real fp = log(qgamma_direct(x + h, q, ctx).value.re);
            Real fm = log(qgamma_direct(x - h, q, ctx).value.re);
            Real fd = (fp - fm) / (2 * h);
            Real psi = qdigamma_direct(x, q, ctx).value.re;
            worst = max(worst, abs(fd - psi) / abs(psi));
            ++n;
        }
        b.add("qdigamma_is_dlog_qgamma", worst, Real::from_decimal("1e-6", p), n);
    }
    {  // zeta'(0, x) against log(Gamma(x)/sqrt(2 pi))
        Real worst(p);
        long n = 0;
        long digits = static_cast<long>(ctx.precision_bits() * 0.30103);
        Real tol = pow(Real(10, p), 3 - digits);
        for (const char* xs : {"0.1", "0.25", "0.5", "0.75", "1"}) {
            Real x = Real::from_decimal(xs, p);
            Real lhs = hurwitz_zeta_sderiv(1, x, ctx);
            Real rhs = log(gamma(x, ctx) / sqrt(2 * Real::pi(p)));
            worst = max(worst, abs(lhs - rhs));
            ++n;
        }
        b.add("zeta_sderiv_lerch", worst, tol, n);
    }
    {  // polygamma vs central differences of digamma
        Real worst(p);
        long n = 0;
        for (long m : {1L, 2L, 3L}) {
            Real h = Real::pow2(-(ctx.precision_bits() - 8) / (m + 2), p);
            for (const char* xs : {"0.5", "1", "2"}) {
                Real x = Real::from_decimal(xs, p);
                auto psi = [&](const Real& t) { return polygamma(0, t, ctx); };
                Real fd(p);
                if (m == 1) {
                    fd = (psi(x + h) - psi(x - h)) / (2 * h);
                } else if (m == 2) {
                    fd = (psi(x + h) - 2 * psi(x) + psi(x - h)) / (h * h);
                } else {
                    fd = (psi(x + 2 * h) - 2 * psi(x + h) + 2 * psi(x - h) - psi(x - 2 * h)) /
                         (2 * h * h * h);
                }
                Real exact = polygamma(m, x, ctx);
                worst = max(worst, abs(fd - exact) / abs(exact));
                ++n;
            }
        }
        b.add("polygamma_finite_difference", worst, Real::from_decimal("1e-6", p), n);
    }
    return b.summary;
}

VerifySummary verify_reflections(const PrecisionContext& ctx) {
    SuiteBuilder b;
    mpfr_prec_t p = ctx.work_prec();
    {  // digamma antisymmetry point: both sides vanish
        Real x = Real::pow2(-1, p);
        Real r = reflection_residual(ReflectionKind::digamma, 0, x, Real::from_decimal("0.7", p), ctx);
        b.add("digamma_reflection_x_half", r, 10 * ctx.eps(), 1);
    }
    {
        Real worst(p);
        long n = 0;
        for (const char* qs : {"0.9", "0.95", "0.99"}) {
            ErrorProbe pr = probe_reflection("digamma", 0, "0.25", qs, ctx);
            worst = max(worst, pr.rel_error);
            ++n;
        }
        b.add("digamma_reflection_near_1", worst, Real::from_decimal("1e-6", p), n);
    }
    {
        Real worst(p);
        long n = 0;
        for (const char* qs : {"0.9", "0.95", "0.99"}) {
            ErrorProbe pr = probe_reflection("polygamma", 1, "0.25", qs, ctx);
            worst = max(worst, pr.rel_error);
            ++n;
        }
        b.add("trigamma_reflection_near_1", worst, Real::from_decimal("1e-6", p), n);
    }
    {  // m = 2: measurable decrease at moderate q, tiny residual near 1
        Real r1 = probe_reflection("polygamma", 2, "0.3", "0.2", ctx).rel_error;
        Real r2 = probe_reflection("polygamma", 2, "0.3", "0.4", ctx).rel_error;
        Real r3 = probe_reflection("polygamma", 2, "0.3", "0.6", ctx).rel_error;
        bool monotone = r1 > r2 && r2 > r3;
        b.add("polygamma2_reflection_monotone", monotone ? Real(0, p) : Real(1, p),
              Real::pow2(-1, p), 3);
        Real worst(p);
        for (const char* qs : {"0.9", "0.95", "0.99"}) {
            worst = max(worst, probe_reflection("polygamma", 2, "0.3", qs, ctx).rel_error);
        }
        b.add("polygamma2_reflection_near_1", worst, Real::from_decimal("1e-6", p), 3);
    }
    return b.summary;
}

// ---------------------------------------------------------------------------
// Bench
// ---------------------------------------------------------------------------

std::vector<BenchRow> run_bench(FunctionId fn, const std::vector<std::string>& q_list,
                                long digits) {
    long bits = bits_for_digits(digits);
    PrecisionContext ctx = make_context(bits);
    mpfr_prec_t p = ctx.work_prec();
    std::vector<BenchRow> rows;

    auto timed = [&](auto&& f, long& terms, long long& ns, std::string& status) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            EvalResult r = f();
            terms = r.terms_used;
            status = "ok";
        } catch (const convergence_error& e) {
            terms = -1;
            status = "cap exceeded";
        }
        auto t1 = std::chrono::steady_clock::now();
        ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    };

    for (const auto& qs : q_list) {
        Real q = Real::from_decimal(qs, p);
        BenchRow row;
        row.q = qs;
        auto policy = TruncationPolicy::optimal();
        switch (fn) {
            case FunctionId::lambert: {
                QPoint qp(q, ctx);
                Real one(1, p);
                SParameter s = SParameter::integer(1);
                timed([&] { return lambert_direct(s, one, qp, ctx); }, row.direct_terms,
                      row.direct_ns, row.direct_status);
                timed([&] { return lambert_asymptotic(s, one, qp, policy, ctx); }, row.asym_terms,
                      row.asym_ns, row.asym_status);
                break;
            }
            case FunctionId::euler: {
                QPoint qp(q, ctx);
                timed([&] { return pochhammer_direct(qp.q(), qp, ctx); }, row.direct_terms,
                      row.direct_ns, row.direct_status);
                timed([&] { return euler_asymptotic(qp, ctx); }, row.asym_terms, row.asym_ns,
                      row.asym_status);
                break;
            }
            case FunctionId::pochhammer: {
                QPoint qp(q, ctx);
                Real x = Real::pow2(-1, p);
                timed([&] { return pochhammer_direct(pow(qp.q(), x), qp, ctx); }, row.direct_terms,
                      row.direct_ns, row.direct_status);
                timed([&] { return pochhammer_asymptotic(x, qp, policy, ctx); }, row.asym_terms,
                      row.asym_ns, row.asym_status);
                break;
            }
            case FunctionId::qgamma: {
                Real x = Real::pow2(-1, p);
                timed([&] { return qgamma_direct(x, q, ctx); }, row.direct_terms, row.direct_ns,
                      row.direct_status);
                timed([&] { return qgamma_asymptotic(x, q, policy, ctx); }, row.asym_terms,
                      row.asym_ns, row.asym_status);
                break;
            }
            case FunctionId::qdigamma: {
                Real x = Real::pow2(-1, p);
                timed([&] { return qdigamma_direct(x, q, ctx); }, row.direct_terms, row.direct_ns,
                      row.direct_status);
                timed(
                    [&] {
                        return qdigamma_asymptotic(x, q, DigammaVariant::compact, policy, ctx);
                    },
                    row.asym_terms, row.asym_ns, row.asym_status);
                break;
            }
            case FunctionId::qpolygamma: {
                Real x = Real::pow2(-1, p);
                timed([&] { return qpolygamma_direct(1, x, q, ctx); }, row.direct_terms,
                      row.direct_ns, row.direct_status);
                timed([&] { return qpolygamma_asymptotic(1, x, q, policy, ctx); }, row.asym_terms,
                      row.asym_ns, row.asym_status);
                break;
            }
            case FunctionId::eisenstein: {
                QPoint qp(q, ctx);
                timed([&] { return eisenstein_direct(1, qp, ctx); }, row.direct_terms,
                      row.direct_ns, row.direct_status);
                timed([&] { return eisenstein_asymptotic(1, qp, ctx); }, row.asym_terms,
                      row.asym_ns, row.asym_status);
                break;
            }
            case FunctionId::divisor_gf: {
                QPoint qp(q, ctx);
                timed([&] { return divisor_gf_direct(1, qp, ctx); }, row.direct_terms,
                      row.direct_ns, row.direct_status);
                timed([&] { return divisor_gf_asymptotic(1, qp, ctx); }, row.asym_terms,
                      row.asym_ns, row.asym_status);
                break;
            }
            case FunctionId::theta: {
                QPoint qp(q, ctx);
                Real z = Real::from_decimal("0.3", p);
                timed([&] { return theta_direct(3, Complex(z), qp, ctx); }, row.direct_terms,
                      row.direct_ns, row.direct_status);
                timed([&] { return theta_asymptotic(3, z, qp, ctx); }, row.asym_terms, row.asym_ns,
                      row.asym_status);
                break;
            }
            case FunctionId::theta_logderiv: {
                QPoint qp(q, ctx);
                Real z = Real::from_decimal("0.7", p);
                timed([&] { return theta_logderiv_direct(1, z, qp, ctx); }, row.direct_terms,
                      row.direct_ns, row.direct_status);
                timed([&] { return theta_logderiv_asymptotic(1, z, qp, ctx); }, row.asym_terms,
                      row.asym_ns, row.asym_status);
                break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qasym
