#pragma once

#include "reembed/graded_ring.hpp"
#include "reembed/polynomial.hpp"

#include <string>
#include <string_view>

namespace reembed {

/// Parses integers, rationals `p/q`, indeterminate names, `+ - * ^` and
/// parentheses. Multiplication must be written explicitly. Throws
/// ParseError with the byte offset of the problem.
Polynomial parse_polynomial(std::string_view text, const GradedRing& ring);

/// Printer matching parse_polynomial.
std::string to_string(const Polynomial& p, const GradedRing& ring);

}  // namespace reembed
