#pragma once

#include <array>
#include <string>
#include <vector>

#include "solang/angle.hpp"
#include "solang/polytope.hpp"

namespace solang {

enum class FamilyName {
  Reeve,               // (0,0,0),(1,0,0),(0,1,0),(1,1,h), h >= 1
  PermutationSimplex,  // conv{0, e_p1, e_p1+e_p2, ...}
  UnitCube,            // [0,1]^d
  DeltaH,              // conv{0, e_1..e_{d-1}, (h_1..h_{d-1}, 1)}, d > 2
  RegularTetrahedron,  // conv{(0,0,0),(0,1,1),(1,0,1),(1,1,0)}
  StandardSimplex,     // conv{0, e_1..e_d}
  HalfPrism,           // [0,1/2] x [0,1]^{d-1}
  Interval,            // [a, b]
};

FamilyName family_by_name(const std::string& name);
std::string family_name(FamilyName f);

struct FamilySpec {
  FamilyName name = FamilyName::UnitCube;
  long h = 1;                    // reeve
  int d = 3;                     // dimension parameter
  std::vector<int> pi;           // permutation of 1..d
  std::vector<long> h_list;      // delta parameters h_1..h_{d-1}
  Rational a = 0, b = 1;         // interval endpoints
};

// Exact vertex lists per family; invalid parameters raise ValidationError
// naming the violated constraint.
Polytope build(const FamilySpec& spec);

// The four closed-form vertex angles of Delta(h,h) at 0, e1, e2, (h,h,1).
// The argument of the last arccos is -h^2/(h^2+1); the variant with a
// square root in the denominator leaves arccos for h >= 2 and disagrees
// with the excess formula already at h = 1.
std::array<double, 4> delta3_vertex_angle_formulas(double h);

enum class DeltaPattern { AllEqual, TwoThenOnes };

struct VertexSumScanRow {
  long h;
  double vertex_sum;
  double error;
};

struct VertexSumScan {
  std::vector<VertexSumScanRow> rows;
  bool monotone_decreasing = false;  // trend on the positive branch
};

// S(Delta(...)) over a list of h values; d = 3 uses the exact engines,
// d = 4 needs a Monte Carlo-backed policy.
VertexSumScan asymptotic_vertex_sum_scan(int d, const std::vector<long>& h_values,
                                         DeltaPattern pattern = DeltaPattern::AllEqual,
                                         const EnginePolicy& policy = {});

}  // namespace solang
