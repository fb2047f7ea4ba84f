#ifndef FRACBURGERS_PARSER_HPP
#define FRACBURGERS_PARSER_HPP

#include "fracburgers/expr.hpp"
#include "fracburgers/power_sum.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace fracburgers {

struct ParseError : std::runtime_error {
    std::size_t column; // 1-based
    ParseError(std::size_t col, const std::string& what)
        : std::runtime_error(what + " at column " + std::to_string(col)), column(col)
    {
    }
};

using ParsedExpr = std::variant<GenPowerSum, CanonicalExpr>;

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' exponent)?
//   base   := number | 'x' | 't' | 'X' | 'T' | func '(' expr ')' | '(' expr ')'
//   func   in {log, exp, erf, cosh, sinh, tanh, sqrt, gamma}
// Exponents are real literals.  Raw-variable input (x, t) yields a
// GenPowerSum; canonical input (X, T, functions) yields a CanonicalExpr.
// gamma(...) requires a constant argument and folds at parse time.
ParsedExpr parse_expr(std::string_view text);

// Conveniences that throw ParseError if the input is of the other kind.
GenPowerSum parse_power_sum(std::string_view text);
CanonicalExpr parse_canonical(std::string_view text);

} // namespace fracburgers

#endif
