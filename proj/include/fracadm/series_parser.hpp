#pragma once

// Text forms accepted on the command line.
//
// Series grammar (whitespace-insensitive):
//   expr   := sign? term (("+" | "-") term)*
//   term   := number? ("*"? var)*          at least one of number / var
//   var    := ("x" | "y") ("^" number)?     exponents are non-negative
//   number := decimal literal, optional exponent part (1.5, 2e-3)
//
// Grid grammar: "x=SPEC;y=SPEC" where SPEC is a range "a:b:step" (inclusive)
// or a list "v1,v2,...".

#include <string_view>
#include <vector>

#include "fracadm/fracseries.hpp"

namespace fracadm {

/// Throws ParseError with the byte offset of the offending character.
Series parse_series(std::string_view text);

struct GridSpec {
    std::vector<double> x_points;
    std::vector<double> y_points;
};

GridSpec parse_grid(std::string_view text);

} // namespace fracadm
