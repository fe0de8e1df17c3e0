#pragma once

#include <string>
#include <string_view>

#include "knotpoly/laurent.hpp"

namespace knotpoly {

/// Plain text, canonical term order: "-M^-2*x + 1 - L + 2*L*M^2".
std::string to_text(const LaurentPoly& p);

/// LaTeX, terms by descending L then M then x exponent: "L^{3} M^{14} - ...".
std::string to_latex(const LaurentPoly& p);

/// Reads what to_text and to_latex write. Factors may be joined by '*' or
/// whitespace; exponents may be written ^3, ^-2, ^{-2} or ^(-2).
/// Throws ParseError on anything else.
LaurentPoly parse_expression(std::string_view text);

}  // namespace knotpoly
