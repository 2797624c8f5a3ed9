#include "qasym/context.hpp"
#include "qasym/request.hpp"
#include "qasym/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitDomainError = 2;
constexpr int kExitConvergenceError = 3;

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw qasym::domain_error("cannot open output file '" + out_path + "'");
    f << text;
}

int run_verify(const std::string& suite, long bits) {
    qasym::PrecisionContext ctx = qasym::make_context(bits);
    std::vector<qasym::VerifySummary> parts;
    if (suite == "identities" || suite == "all") parts.push_back(qasym::verify_identities(ctx));
    if (suite == "overlap" || suite == "all") parts.push_back(qasym::verify_overlap(ctx));
    if (suite == "reflections" || suite == "all") parts.push_back(qasym::verify_reflections(ctx));
    if (parts.empty()) throw qasym::domain_error("unknown suite '" + suite + "'");

    long total = 0, failed = 0;
    for (const auto& part : parts)
        for (const auto& item : part.items) {
            total += item.checks;
            if (!item.pass) ++failed;
            std::cout << (item.pass ? "pass " : "FAIL ") << item.name << "  checks=" << item.checks
                      << "  worst=" << item.worst_residual << "  tol=" << item.tolerance << "\n";
        }
    std::cout << "suite=" << suite << " checks=" << total
              << " invariants_failed=" << failed << "\n";
    return failed == 0 ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lambert series and q-function evaluator with q->1 asymptotic expansions"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one function and print a JSON record");
    qasym::FunctionRequest req;
    std::string fn_name, method_name = "auto", s_text, x_text, z_text, q_text, q_expr;
    long m_val = 0;
    int j_val = 0;
    long k_val = 0;
    eval->add_option("--fn", fn_name, "function id")->required();
    eval->add_option("--s", s_text, "order s (integer, decimal, or re,im)");
    eval->add_option("--m", m_val, "integer order m");
    eval->add_option("--x", x_text, "argument x (decimal)");
    eval->add_option("--z", z_text, "phase z in radians (decimal)");
    eval->add_option("--j", j_val, "theta index 1..4");
    eval->add_option("--k", k_val, "Eisenstein index k >= 1");
    eval->add_option("--q", q_text, "nome q (decimal)");
    eval->add_option("--q-expr", q_expr, "nome q as an expression, e.g. exp(-1/pi)");
    eval->add_option("--digits", req.digits, "output significant digits (default 30)");
    eval->add_option("--method", method_name, "direct|asym|auto|closed");
    eval->add_option("--truncation", req.truncation, "optimal (default) or a fixed index K");

    // table
    auto* table = app.add_subcommand("table", "reproduce one of the published-accuracy tables");
    std::string table_name, format = "csv", out_path;
    table->add_option("id", table_name,
                      "abstract_constants|eisenstein_remark|example_3_4|two_term_claim|"
                      "reflection_suite")
        ->required();
    table->add_option("--format", format, "csv|json");
    table->add_option("--out", out_path, "write to file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity/overlap/reflection suites");
    std::string suite;
    long verify_bits = 256;
    verify->add_option("suite", suite, "identities|overlap|reflections|all")->required();
    verify->add_option("--bits", verify_bits, "working precision in bits (default 256)");

    // bench
    auto* bench = app.add_subcommand("bench", "direct vs asymptotic cost at matched accuracy");
    std::string bench_fn = "lambert";
    std::vector<std::string> bench_q;
    long bench_digits = 30;
    bench->add_option("--fn", bench_fn, "function id");
    bench->add_option("--q", bench_q, "q values (repeatable)")->required();
    bench->add_option("--digits", bench_digits, "target accuracy in digits (default 30)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitDomainError;
    }

    try {
        if (app.got_subcommand(eval)) {
            req.fn = qasym::parse_function_id(fn_name);
            req.method = qasym::parse_request_method(method_name);
            if (!s_text.empty()) req.s = s_text;
            if (!x_text.empty()) req.x = x_text;
            if (!z_text.empty()) req.z = z_text;
            if (eval->count("--m")) req.m = m_val;
            if (eval->count("--j")) req.j = j_val;
            if (eval->count("--k")) req.k = k_val;
            if (!q_expr.empty()) {
                req.q = q_expr;
                req.q_is_expr = true;
            } else if (!q_text.empty()) {
                req.q = q_text;
            } else {
                throw qasym::domain_error("one of --q or --q-expr is required");
            }
            qasym::ResultRecord rec = qasym::run_request(req);
            std::cout << rec.to_json_line() << "\n";
            return kExitOk;
        }
        if (app.got_subcommand(table)) {
            qasym::Table t = qasym::run_table(qasym::parse_table_id(table_name));
            bool any_error = false;
            for (const auto& r : t.rows) any_error = any_error || r.error;
            if (format == "csv")
                write_out(qasym::table_csv(t), out_path);
            else if (format == "json")
                write_out(qasym::table_json(t), out_path);
            else
                throw qasym::domain_error("unknown format '" + format + "'");
            return any_error ? kExitVerifyFailure : kExitOk;
        }
        if (app.got_subcommand(verify)) return run_verify(suite, verify_bits);
        if (app.got_subcommand(bench)) {
            auto rows = qasym::run_bench(qasym::parse_function_id(bench_fn), bench_q, bench_digits);
            std::cout << "q,direct_terms,direct_ns,direct_status,asym_terms,asym_ns,asym_status\n";
            for (const auto& r : rows)
                std::cout << r.q << ',' << r.direct_terms << ',' << r.direct_ns << ','
                          << r.direct_status << ',' << r.asym_terms << ',' << r.asym_ns << ','
                          << r.asym_status << "\n";
            return kExitOk;
        }
    } catch (const qasym::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const qasym::convergence_error& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergenceError;
    } catch (const qasym::consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitConvergenceError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConvergenceError;
    }
    return kExitOk;
}
