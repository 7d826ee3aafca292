#pragma once

#include <string>

#include "vvlab/poly.hpp"

namespace vvlab {

// Parses a polynomial in the ring's variables.  Grammar: sums/differences of
// terms; a term is an optional integer coefficient and variable powers with
// `^`; `*` between factors is optional.  Examples: "y^3 - x^4", "3x y^2",
// "x^2*y + 7".
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

} // namespace vvlab
