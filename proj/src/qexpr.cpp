#include "qasym/qexpr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace qasym {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    mpfr_prec_t prec;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression error at position " + std::to_string(pos) + ": " +
                                    what);
    }

    Real parse() {
        Real v = sum();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return v;
    }

    Real sum() {
        Real v = product();
        for (;;) {
            if (eat('+'))
                v = v + product();
            else if (eat('-'))
                v = v - product();
            else
                return v;
        }
    }

    Real product() {
        Real v = unary();
        for (;;) {
            if (eat('*'))
                v = v * unary();
            else if (eat('/'))
                v = v / unary();
            else
                return v;
        }
    }

    Real unary() {
        if (eat('-')) return -unary();
        return power();
    }

    Real power() {
        Real base = atom();
        if (eat('^')) return pow(base, unary());  // right-associative
        return base;
    }

    Real atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Real v = sum();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return name();
        fail(std::string("unexpected character '") + c + "'");
    }

    Real number() {
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
            ++pos;
        if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
            size_t mark = pos + 1;
            if (mark < s.size() && (s[mark] == '+' || s[mark] == '-')) ++mark;
            if (mark < s.size() && std::isdigit(static_cast<unsigned char>(s[mark]))) {
                pos = mark;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            }
        }
        return Real::from_decimal(s.substr(start, pos - start), prec);
    }

    Real name() {
        size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string id = s.substr(start, pos - start);
        if (id == "pi") return Real::pi(prec);
        if (id == "e") return exp(Real(1, prec));
        if (id == "exp" || id == "log" || id == "sqrt") {
            if (!eat('(')) fail("expected '(' after " + id);
            Real arg = sum();
            if (!eat(')')) fail("missing ')'");
            if (id == "exp") return exp(arg);
            if (id == "log") return log(arg);
            return sqrt(arg);
        }
        fail("unknown name '" + id + "'");
    }
};

}  // namespace

Real eval_expression(const std::string& text, mpfr_prec_t prec) {
    Parser p{text, 0, prec};
    return p.parse();
}

}  // namespace qasym
