#pragma once

#include <string_view>

#include "qu2/element.hpp"

namespace qu2 {

/// Parses element text. Grammar (whitespace between tokens is ignored):
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (factor)*            juxtaposition is the product
///   factor := atom ('*' | '^' int)*       postfix '*' is the adjoint
///   atom   := number ['*']               rational scalar, "3/2*" or "0"
///           | U | S1 | S2 | f | F
///           | S[w] | S*[w] | P[w]         w a word, "e" for empty
///           | phi(expr) | phi^h(expr) | (expr)
///
/// Throws UsageError carrying the byte offset of the problem.
Element parse_element(std::string_view text);

}  // namespace qu2
