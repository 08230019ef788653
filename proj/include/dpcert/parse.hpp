#pragma once

#include <string_view>

#include "dpcert/poly.hpp"

namespace dpcert {

// Parses the ASCII polynomial grammar:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' nat)?
//   var    := 'x' nat | 't'
//   coeff  := nat | nat '/' nat
// Whitespace is insignificant. 't' denotes sqrt(d) in quadratic domains and
// is rejected elsewhere. ParseError messages carry the offending position.
Polynomial parse_poly(std::string_view text, std::size_t n, const Domain& dom);

}  // namespace dpcert
