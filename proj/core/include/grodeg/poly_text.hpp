#ifndef GRODEG_POLY_TEXT_HPP
#define GRODEG_POLY_TEXT_HPP

#include <string>
#include <string_view>

#include "grodeg/polynomial.hpp"

namespace grodeg {

// Parses the polynomial grammar used by files and the command line:
// terms joined by + or -, each term "coeff*X<i>^<e>*...", the coefficient a
// decimal integer or a/b, "^1" and a coefficient of 1 omissible, variables
// X0..X{nvars-1}.  Example: "X0*X2 - X1^2".
// ParseError positions refer to `file` and `line` (column is 1-based).
Polynomial parse_polynomial(std::string_view text, const Field& field, int nvars,
                            const std::string& file = "<string>", int line = 1);

}  // namespace grodeg

#endif
