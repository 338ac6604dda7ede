#pragma once
// Problem files: flat `key = value` lines.
//
//   char = 5
//   ext_degree = 1            # optional
//   cubic = "x^3 + y^3 + z^3"
//   generators = ["x^2", "y^2", "z^2"]
//   candidate = "x*y*z"       # optional
//   e_max = 4                 # optional

#include <optional>
#include <string>
#include <vector>

#include "tc/curve.hpp"

namespace tc {

struct ProblemFile {
  long characteristic = 0;
  int ext_degree = 1;
  std::string cubic;
  std::vector<std::string> generators;
  std::optional<std::string> candidate;
  std::optional<int> e_max;
};

// Throws Error(syntax) or Error(missing_field) with a "line N:" prefix.
ProblemFile parse_problem(const std::string& text);

struct Problem {
  FieldPtr field;
  CubicCurve curve;
  IdealData ideal;
  std::optional<Polynomial> candidate;
  int e_max = 4;
};

// Builds the field, curve and ideal, raising the matching error codes.
Problem build_problem(const ProblemFile& file);

}  // namespace tc
