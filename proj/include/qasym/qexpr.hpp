#pragma once

#include "qasym/real.hpp"

namespace qasym {

// Evaluates a tiny constant-expression grammar at the given precision:
// decimal numbers, pi, e, exp(...), log(...), sqrt(...), + - * / ^ and
// unary minus, with parentheses. Whitespace is ignored.
Real eval_expression(const std::string& text, mpfr_prec_t prec);

}  // namespace qasym
