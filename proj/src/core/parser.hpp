#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/polynomial.hpp"

namespace nf {

// Grammar (whitespace ignored between tokens):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := INT ['/' INT] | NAME ['^' INT]
// Exponents are non-negative integers. Throws ParseError with a byte offset.
PolynomialGerm parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace nf
