#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "solang/angle.hpp"
#include "solang/polytope.hpp"

namespace solang {

struct CheckResult {
  std::string id;         // stable slug, e.g. "reeve-ehrhart"
  std::string statement;  // the identity or bound being checked
  bool pass = false;
  std::string detail;     // measured numbers
  double seconds = 0.0;
};

struct VerifySuite {
  std::vector<CheckResult> results;
  bool all_pass() const;
};

// Runs the full theorem-verification suite on the built-in families plus
// seeded random polytopes. Progress lines go to *progress when given.
VerifySuite run_verification(const EnginePolicy& policy, std::ostream* progress = nullptr);

// Deterministic generators used by the suite and the tests.
Polytope random_lattice_polytope(int d, std::uint64_t index, std::uint64_t seed = 0);
Polytope random_lattice_simplex(int d, std::uint64_t index, std::uint64_t seed = 0);
std::pair<Polytope, Polytope> random_nested_pair(int d, std::uint64_t index,
                                                 std::uint64_t seed = 0);
PointedCone random_pointed_cone(int d, std::uint64_t index, std::uint64_t seed = 0);
Polytope cross_polytope(int d);

}  // namespace solang
