#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "lsi/closed_form.hpp"

namespace lsi {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Name classification for the parser: every name in an expression must be a
// known coordinate or parameter. "i", "exp" and "ln" are reserved.
struct ParseContext {
  std::set<std::string> coords;
  std::set<std::string> params;
};

// Parses the textual closed-form grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := primary ['^' exponent]
//   primary:= integer | name | 'i' | 'exp' '(' expr ')' | 'ln' '(' name ')'
//           | '(' expr ')'
//   exponent := integer | '-' integer | name | '(' expr ')'
// Division requires an invertible (single-term) divisor. Non-integer or
// parameter-dependent exponents require a plain coordinate base. Whitespace
// is insignificant. Throws ParseError with a position on any violation.
ClosedForm parse_closed_form(const std::string& text, const ParseContext& ctx);

}  // namespace lsi
