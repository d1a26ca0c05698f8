#pragma once

#include "reembed/graded_ring.hpp"
#include "reembed/matrix.hpp"
#include "reembed/presentation.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace reembed {

/// Contents of a problem file:
///
///   # comment
///   ring Q[a,b,x,y,z];
///   grading [0,0,1,1,1];
///   ideal [ x - a^3*y + z, x - (a*b+1)*y, a^2*y + a*z ];
///   point [1, 0];                 (repeatable)
///   matrix B2 [[a, a^2-1], [-1, -a]];
///   tuple F [ x + z + a^2*z, ... ];
///   option k 2;
struct ProblemFile {
  GradedRing ring;
  std::vector<Polynomial> ideal;
  std::vector<std::vector<Rational>> points;
  std::map<std::string, PolyMatrix> matrices;
  std::map<std::string, std::vector<Polynomial>> tuples;
  std::map<std::string, std::string> options;

  [[nodiscard]] IdealPresentation presentation() const { return IdealPresentation(ring, ideal); }
};

/// Throws ParseError with the byte offset into `text`.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

/// Matrices only (a fixture file); the ring supplies the names.
std::map<std::string, PolyMatrix> parse_matrices(std::string_view text, const GradedRing& ring);

/// Comma separated indeterminate names, e.g. "x,y".
std::vector<std::size_t> parse_indeterminates(std::string_view text, const GradedRing& ring);

/// Comma separated rationals, e.g. "1,-1/2".
std::vector<Rational> parse_rationals(std::string_view text);

}  // namespace reembed
