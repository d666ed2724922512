#pragma once

#include <string_view>
#include <vector>

#include "kv/polynomial.hpp"

namespace kv {

// Text form of a polynomial over GF(p)[x,y,z]:
//   expr := ('+'|'-')? term (('+'|'-') term)*
//   term := coeff? ('*'? var ('^' nat)?)*   with at least one factor
//   var  := 'x' | 'y' | 'z'      coeff := integer, reduced mod p
// Whitespace is ignored everywhere; '*' between factors is optional on
// input.  to_string(Polynomial) always emits explicit '*', so printed
// output parses back to the same polynomial.
Polynomial parse_polynomial(std::string_view text);

// Comma-separated list of polynomials, e.g. "x*y, x*z, y*z".
std::vector<Polynomial> parse_generator_list(std::string_view text);

}  // namespace kv
