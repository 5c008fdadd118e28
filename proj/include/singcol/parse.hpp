#pragma once

#include <stdexcept>
#include <string>

#include "singcol/polynomial.hpp"

namespace singcol {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar: terms joined by + / -; a term is an optional rational coefficient
// joined by '*' to a monomial; a monomial is x^a*y^b*e^c where '^1' and '*'
// may be omitted. Examples: "y^2*x + x^5", "3/2*x^2 - y".
Polynomial parse_polynomial(const std::string& text);

} // namespace singcol
