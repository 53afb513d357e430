#ifndef RSTHL_SCALAR_PARSE_HPP
#define RSTHL_SCALAR_PARSE_HPP

#include <string_view>

#include "rsthl/scalar/rational_function.hpp"

namespace rsthl {

/// Parses a scalar expression into canonical form.
///
/// Grammar (whitespace is ignored between tokens):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | 'mu' | '(' expr ')'
///
/// Rational literals are written as quotients, e.g. "1/2". Throws ParseError
/// on malformed input and Error(DivisionByZero) when dividing by zero.
RationalFunction parse_scalar(std::string_view text);

}  // namespace rsthl

#endif  // RSTHL_SCALAR_PARSE_HPP
