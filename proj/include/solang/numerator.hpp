#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solang/rational.hpp"

namespace solang {

// Coefficients a_0..a_d of the series numerator over (1-z)^(d+1). Exact
// values are set for counting valuations; errors are propagated bounds.
struct NumeratorVector {
  std::vector<double> entries;
  std::vector<double> errors;
  std::vector<std::optional<Rational>> exact;
  int denominator_exponent = 0;  // d + 1
  std::string provenance = "exact";
  std::vector<std::string> violations;

  int degree_bound() const { return static_cast<int>(entries.size()) - 1; }
};

}  // namespace solang
