#include "qasym/request.hpp"

#include "qasym/lambert.hpp"
#include "qasym/qexpr.hpp"
#include "qasym/qgamma.hpp"
#include "qasym/qpochhammer.hpp"
#include "qasym/theta.hpp"

#include <json.hpp>

#include <cctype>
#include <chrono>
#include <map>
#include <sstream>

namespace qasym {

FunctionId parse_function_id(const std::string& name) {
    static const std::map<std::string, FunctionId> table = {
        {"lambert", FunctionId::lambert},
        {"pochhammer", FunctionId::pochhammer},
        {"euler", FunctionId::euler},
        {"qgamma", FunctionId::qgamma},
        {"qdigamma", FunctionId::qdigamma},
        {"qpolygamma", FunctionId::qpolygamma},
        {"eisenstein", FunctionId::eisenstein},
        {"theta", FunctionId::theta},
        {"theta_logderiv", FunctionId::theta_logderiv},
        {"divisor_gf", FunctionId::divisor_gf},
    };
    auto it = table.find(name);
    if (it == table.end()) throw domain_error("unknown function id '" + name + "'");
    return it->second;
}

const char* function_name(FunctionId fn) {
    switch (fn) {
        case FunctionId::lambert: return "lambert";
        case FunctionId::pochhammer: return "pochhammer";
        case FunctionId::euler: return "euler";
        case FunctionId::qgamma: return "qgamma";
        case FunctionId::qdigamma: return "qdigamma";
        case FunctionId::qpolygamma: return "qpolygamma";
        case FunctionId::eisenstein: return "eisenstein";
        case FunctionId::theta: return "theta";
        case FunctionId::theta_logderiv: return "theta_logderiv";
        case FunctionId::divisor_gf: return "divisor_gf";
    }
    return "?";
}

RequestMethod parse_request_method(const std::string& name) {
    if (name == "direct") return RequestMethod::direct;
    if (name == "asym") return RequestMethod::asym;
    if (name == "auto") return RequestMethod::auto_select;
    if (name == "closed") return RequestMethod::closed;
    throw domain_error("unknown method '" + name + "' (direct|asym|auto|closed)");
}

const char* request_method_name(RequestMethod m) {
    switch (m) {
        case RequestMethod::direct: return "direct";
        case RequestMethod::asym: return "asym";
        case RequestMethod::auto_select: return "auto";
        case RequestMethod::closed: return "closed";
    }
    return "?";
}

long bits_for_digits(long digits) {
    if (digits < 1) throw domain_error("digits must be >= 1");
    long bits = static_cast<long>(digits * 3.3219280948873623) + 32;
    return std::max<long>(256, bits);
}

namespace {

bool looks_like_integer(const std::string& t) {
    size_t i = (t.size() > 0 && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

SParameter parse_s(const std::string& text, mpfr_prec_t prec) {
    if (looks_like_integer(text)) return SParameter::integer(std::stol(text));
    auto comma = text.find(',');
    if (comma != std::string::npos) {
        Real re = Real::from_decimal(text.substr(0, comma), prec);
        Real im = Real::from_decimal(text.substr(comma + 1), prec);
        return SParameter::complex(Complex(re, im));
    }
    return SParameter::real(Real::from_decimal(text, prec));
}

TruncationPolicy parse_policy(const std::string& text) {
    if (text == "optimal") return TruncationPolicy::optimal();
    if (looks_like_integer(text)) return TruncationPolicy::fixed(std::stol(text));
    throw domain_error("truncation must be 'optimal' or a fixed index");
}

const std::string& require(const std::optional<std::string>& v, const char* what) {
    if (!v) throw domain_error(std::string("missing required parameter --") + what);
    return *v;
}

[[noreturn]] void reject(FunctionId fn, RequestMethod m) {
    throw domain_error(std::string("method '") + request_method_name(m) +
                       "' is not defined for function '" + function_name(fn) + "'");
}

}  // namespace

ResultRecord run_request(const FunctionRequest& req) {
    long bits = bits_for_digits(req.digits);
    PrecisionContext ctx = make_context(bits);
    mpfr_prec_t p = ctx.work_prec();
    TruncationPolicy policy = parse_policy(req.truncation);
    RequestMethod method = req.method;

    Real qv = req.q_is_expr ? eval_expression(req.q, p) : Real::from_decimal(req.q, p);

    std::ostringstream params;
    params << "q=" << (req.q_is_expr ? req.q : qv.to_string(std::min<long>(req.digits, 30)));

    auto t0 = std::chrono::steady_clock::now();
    EvalResult result(Complex(Real(0, bits)), Real(0, bits), 0, Method::direct);

    auto half = Real::pow2(-1, 64);
    switch (req.fn) {
        case FunctionId::lambert: {
            SParameter s = parse_s(require(req.s, "s"), p);
            Real x = Real::from_decimal(require(req.x, "x"), p);
            params << " s=" << *req.s << " x=" << *req.x;
            QPoint qp(qv, ctx);
            if (method == RequestMethod::closed) reject(req.fn, method);
            if (method == RequestMethod::auto_select) {
                result = lambert_eval(s, x, qp, ctx);
            } else {
                ShiftResult sh = lambert_shift(s, x, qp, ctx);
                EvalResult core = (method == RequestMethod::direct)
                                      ? lambert_direct(s, sh.reduced_x, qp, ctx)
                                      : lambert_asymptotic(s, sh.reduced_x, qp, policy, ctx);
                Complex v = core.value - sh.correction;
                v.round_to(bits);
                result = EvalResult(v, core.err_estimate, core.terms_used, core.method);
            }
            break;
        }
        case FunctionId::pochhammer: {
            Real x = Real::from_decimal(require(req.x, "x"), p);
            params << " x=" << *req.x;
            QPoint qp(qv, ctx);
            if (method == RequestMethod::closed) reject(req.fn, method);
            if (method == RequestMethod::auto_select)
                method = qv <= half ? RequestMethod::direct : RequestMethod::asym;
            if (method == RequestMethod::direct)
                result = pochhammer_direct(pow(qp.q(), x), qp, ctx);
            else
                result = pochhammer_asymptotic(x, qp, policy, ctx);
            break;
        }
        case FunctionId::euler: {
            QPoint qp(qv, ctx);
            if (method == RequestMethod::auto_select)
                method = qv <= half ? RequestMethod::direct : RequestMethod::closed;
            if (method == RequestMethod::direct)
                result = pochhammer_direct(qp.q(), qp, ctx);
            else if (method == RequestMethod::closed || method == RequestMethod::asym)
                result = euler_asymptotic(qp, ctx);
            break;
        }
        case FunctionId::qgamma: {
            Real x = Real::from_decimal(require(req.x, "x"), p);
            params << " x=" << *req.x;
            if (method == RequestMethod::closed) {
                mpq_class half_q(1, 2);
                if (mpfr_cmp_q(x.mp(), half_q.get_mpq_t()) != 0)
                    throw domain_error("closed form for qgamma exists only at x = 1/2");
                result = qgamma_half(qv, ctx);
                break;
            }
            if (method == RequestMethod::auto_select)
                method = (min(qv, 1 / qv) <= half) ? RequestMethod::direct : RequestMethod::asym;
            result = (method == RequestMethod::direct) ? qgamma_direct(x, qv, ctx)
                                                       : qgamma_asymptotic(x, qv, policy, ctx);
            break;
        }
        case FunctionId::qdigamma: {
            Real x = Real::from_decimal(require(req.x, "x"), p);
            params << " x=" << *req.x;
            if (method == RequestMethod::closed) reject(req.fn, method);
            if (method == RequestMethod::auto_select)
                method = (min(qv, 1 / qv) <= half) ? RequestMethod::direct : RequestMethod::asym;
            result = (method == RequestMethod::direct)
                         ? qdigamma_direct(x, qv, ctx)
                         : qdigamma_asymptotic(x, qv, DigammaVariant::compact, policy, ctx);
            break;
        }
        case FunctionId::qpolygamma: {
            if (!req.m) throw domain_error("missing required parameter --m");
            Real x = Real::from_decimal(require(req.x, "x"), p);
            params << " m=" << *req.m << " x=" << *req.x;
            if (method == RequestMethod::closed) reject(req.fn, method);
            if (method == RequestMethod::auto_select)
                method = (min(qv, 1 / qv) <= half) ? RequestMethod::direct : RequestMethod::asym;
            result = (method == RequestMethod::direct)
                         ? qpolygamma_direct(*req.m, x, qv, ctx)
                         : qpolygamma_asymptotic(*req.m, x, qv, policy, ctx);
            break;
        }
        case FunctionId::eisenstein: {
            if (!req.k) throw domain_error("missing required parameter --k");
            params << " k=" << *req.k;
            QPoint qp(qv, ctx);
            if (method == RequestMethod::auto_select)
                method = qv <= half ? RequestMethod::direct : RequestMethod::closed;
            if (method == RequestMethod::direct)
                result = eisenstein_direct(*req.k, qp, ctx);
            else
                result = eisenstein_asymptotic(*req.k, qp, ctx);
            break;
        }
        case FunctionId::theta: {
            if (!req.j) throw domain_error("missing required parameter --j");
            Real z = Real::from_decimal(require(req.z, "z"), p);
            params << " j=" << *req.j << " z=" << *req.z;
            QPoint qp(qv, ctx);
            if (method == RequestMethod::direct || method == RequestMethod::auto_select)
                result = theta_direct(*req.j, Complex(z), qp, ctx);
            else
                result = theta_asymptotic(*req.j, z, qp, ctx);
            break;
        }
        case FunctionId::theta_logderiv: {
            if (!req.j) throw domain_error("missing required parameter --j");
            Real z = Real::from_decimal(require(req.z, "z"), p);
            params << " j=" << *req.j << " z=" << *req.z;
            QPoint qp(qv, ctx);
            if (method == RequestMethod::direct || method == RequestMethod::auto_select)
                result = theta_logderiv_direct(*req.j, z, qp, ctx);
            else
                result = theta_logderiv_asymptotic(*req.j, z, qp, ctx);
            break;
        }
        case FunctionId::divisor_gf: {
            if (!req.m) throw domain_error("missing required parameter --m");
            params << " m=" << *req.m;
            QPoint qp(qv, ctx);
            if (method == RequestMethod::auto_select)
                method = (qv <= half || *req.m % 2 == 0) ? RequestMethod::direct
                                                         : RequestMethod::closed;
            if (method == RequestMethod::direct)
                result = divisor_gf_direct(*req.m, qp, ctx);
            else
                result = divisor_gf_asymptotic(*req.m, qp, ctx);
            break;
        }
    }
    auto t1 = std::chrono::steady_clock::now();

    ResultRecord rec;
    rec.fn = function_name(req.fn);
    rec.params = params.str();
    rec.method = method_name(result.method);
    rec.value_re = result.value.re.to_string(static_cast<int>(req.digits));
    rec.value_im = result.value.im.to_string(static_cast<int>(req.digits));
    rec.err_estimate = result.err_estimate.to_string(3);
    rec.terms_used = result.terms_used;
    rec.digits = req.digits;
    rec.wall_time_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    return rec;
}

std::string ResultRecord::to_json_line() const {
    nlohmann::json j{{"fn", fn},
                     {"params", params},
                     {"method", method},
                     {"value_re", value_re},
                     {"value_im", value_im},
                     {"err_estimate", err_estimate},
                     {"terms_used", terms_used},
                     {"digits", digits},
                     {"wall_time_ns", wall_time_ns}};
    return j.dump();
}

ResultRecord ResultRecord::from_json_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    ResultRecord r;
    r.fn = j.at("fn").get<std::string>();
    r.params = j.at("params").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.value_re = j.at("value_re").get<std::string>();
    r.value_im = j.at("value_im").get<std::string>();
    r.err_estimate = j.at("err_estimate").get<std::string>();
    r.terms_used = j.at("terms_used").get<long>();
    r.digits = j.at("digits").get<long>();
    r.wall_time_ns = j.at("wall_time_ns").get<long long>();
    return r;
}

}  // namespace qasym
