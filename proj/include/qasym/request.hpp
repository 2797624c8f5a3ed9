#pragma once

#include "qasym/context.hpp"

#include <optional>
#include <string>

namespace qasym {

enum class FunctionId {
    lambert,
    pochhammer,
    euler,
    qgamma,
    qdigamma,
    qpolygamma,
    eisenstein,
    theta,
    theta_logderiv,
    divisor_gf,
};

enum class RequestMethod { direct, asym, auto_select, closed };

FunctionId parse_function_id(const std::string& name);
RequestMethod parse_request_method(const std::string& name);
const char* function_name(FunctionId fn);
const char* request_method_name(RequestMethod m);

// One evaluation as described on the command line. Numeric parameters stay
// textual until the working precision is known.
struct FunctionRequest {
    FunctionId fn = FunctionId::lambert;
    std::optional<std::string> s;  // integer, decimal, or "re,im"
    std::optional<long> m;
    std::optional<std::string> x;
    std::optional<std::string> z;
    std::optional<int> j;
    std::optional<long> k;
    std::string q;            // decimal, or expression when q_is_expr
    bool q_is_expr = false;
    RequestMethod method = RequestMethod::auto_select;
    long digits = 30;
    std::string truncation = "optimal";  // "optimal" or a fixed index K
};

struct ResultRecord {
    std::string fn;
    std::string params;
    std::string method;
    std::string value_re;
    std::string value_im;
    std::string err_estimate;
    long terms_used = 0;
    long digits = 0;
    long long wall_time_ns = 0;

    std::string to_json_line() const;
    static ResultRecord from_json_line(const std::string& line);
    bool operator==(const ResultRecord&) const = default;
};

// Precision used for a digit request: at least 256 bits, more when the
// digit count demands it.
long bits_for_digits(long digits);

ResultRecord run_request(const FunctionRequest& req);

}  // namespace qasym
