#pragma once

#include "qasym/context.hpp"
#include "qasym/request.hpp"

#include <string>
#include <vector>

namespace qasym {

enum class TableId {
    abstract_constants,
    eisenstein_remark,
    example_3_4,
    two_term_claim,
    reflection_suite,
};
TableId parse_table_id(const std::string& name);

struct TableRow {
    std::string params;
    std::string asym_value;
    std::string oracle_value;
    std::string rel_error;
    std::string claimed_order;
    bool pass = false;
    bool error = false;
    std::string note;
};

struct Table {
    std::string id;
    std::vector<TableRow> rows;
};

Table run_table(TableId id);
std::string table_csv(const Table& t);
std::string table_json(const Table& t);

// The accuracy probes behind the tables, exposed so the acceptance suite can
// assert on the raw relative errors.
struct ErrorProbe {
    Real approx;
    Real oracle;
    Real rel_error;
};
ErrorProbe probe_qgamma_product(const PrecisionContext& ctx);              // x = 1/4, q = 2
ErrorProbe probe_theta_constant(const PrecisionContext& ctx);              // theta_4(0, e^(-1/pi))
ErrorProbe probe_eisenstein(long k, const std::string& q_dec, const PrecisionContext& ctx);
ErrorProbe probe_example34(const std::string& q_dec, const PrecisionContext& ctx);
ErrorProbe probe_two_term(const std::string& q_dec, const PrecisionContext& ctx);
// residual of the digamma/polygamma reflection, relative to |RHS|
ErrorProbe probe_reflection(const std::string& kind, long m, const std::string& x_dec,
                            const std::string& q_dec, const PrecisionContext& ctx);

// Property suites behind `verify` and the acceptance gate.
struct VerifyItem {
    std::string name;
    std::string worst_residual;
    std::string tolerance;
    long checks = 0;
    bool pass = false;
};
struct VerifySummary {
    std::vector<VerifyItem> items;
    bool all_pass = true;
};
VerifySummary verify_identities(const PrecisionContext& ctx);
VerifySummary verify_overlap(const PrecisionContext& ctx);
VerifySummary verify_reflections(const PrecisionContext& ctx);

// direct-vs-asymptotic cost at matched target accuracy
struct BenchRow {
    std::string q;
    long direct_terms = 0;
    long long direct_ns = 0;
    std::string direct_status;
    long asym_terms = 0;
    long long asym_ns = 0;
    std::string asym_status;
};
std::vector<BenchRow> run_bench(FunctionId fn, const std::vector<std::string>& q_list,
                                long digits);

}  // namespace qasym
