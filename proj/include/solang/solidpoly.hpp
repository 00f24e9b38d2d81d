#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "solang/angle.hpp"
#include "solang/ehrhart.hpp"
#include "solang/numerator.hpp"
#include "solang/polytope.hpp"

namespace solang {

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;
  bool used_series = false;       // any contributing angle came from the series engine
  bool used_monte_carlo = false;  // any contributing angle came from Monte Carlo
};

std::string provenance_name(bool used_series, bool used_monte_carlo);

// Solid-angle polynomial with parity structure: coefficients of degree
// opposite in parity to d are identically zero, and the constant term
// vanishes. Exact rational values are recovered where the engines allow.
struct SolidPolynomial {
  int dim = 0;
  std::vector<double> coeffs;  // by degree, 0..d
  std::vector<double> errors;
  std::vector<std::optional<Rational>> exact;
  bool parity_enforced = true;
  std::string provenance = "exact";  // union of engines behind the evaluations

  double eval(double t) const;
};

// Per-residue solid-angle quasipolynomial for rational polytopes. Unlike
// the lattice case, individual constituents carry both parities.
struct SolidQuasiPolynomial {
  long period = 1;
  int dim = 0;
  std::vector<std::vector<double>> constituents;  // [r][degree]
  std::vector<std::vector<double>> errors;
  std::string provenance = "exact";

  double eval(long t) const;
  // Smallest divisor of period under which constituents agree within tol.
  long minimal_period(double tol = 1e-9) const;
  std::vector<long> coefficient_periods(double tol = 1e-9) const;
};

// Sum of solid angles over the lattice points of t*P.
ValueWithError a_eval(const Polytope& p, long t, const EnginePolicy& policy = {});

// Same value through the face decomposition: sum over faces of
// (face angle) * (relative-interior count).
ValueWithError a_eval_by_faces(const Polytope& p, long t, const EnginePolicy& policy = {});

// Parity-restricted fit from ceil(d/2) evaluations, validated on two more.
// Lattice polytopes only; rational ones go through fit_solid_quasi.
SolidPolynomial fit_solid(const Polytope& p, const EnginePolicy& policy = {});
SolidQuasiPolynomial fit_solid_quasi(const Polytope& p, const EnginePolicy& policy = {});

// Binomial transform of A(0..d) with A(0) = 0; checks a_0 = 0, positivity
// and palindromy, reporting violations (they indicate engine inaccuracy).
NumeratorVector solid_numerator(const Polytope& p, const EnginePolicy& policy = {});

struct UnimodalityReport {
  double volume = 0.0;
  double linear_coeff = 0.0;
  std::array<double, 3> numerator_inner;  // a_1, a_2, a_3
  bool unimodal = false;                  // c <= vol
  bool only_vertex_lattice_points = false;
  std::optional<double> vertex_sum;       // for only-vertex simplices
  std::optional<bool> vertex_sum_below_third;
};

// d = 3 lattice polytopes: numerator pattern (vol+c, 4vol-2c, vol+c) and
// the unimodality threshold c <= vol; for only-vertex simplices also the
// S <= 1/3 reading.
UnimodalityReport unimodality_report(const Polytope& p, const EnginePolicy& policy = {});

struct GramCheck {
  double residual = 0.0;     // |alternating face-angle sum|
  double error_bound = 0.0;  // summed per-face engine bounds
};

GramCheck brianchon_gram_residual(const Polytope& p, const EnginePolicy& policy = {});

// Sum of solid angles at the vertices.
ValueWithError vertex_sum(const Polytope& p, const EnginePolicy& policy = {});

struct PeriodReport {
  long declared_period = 1;
  SolidQuasiPolynomial quasi;
  bool collapsed = false;
  std::vector<long> coefficient_periods;
  std::vector<long> j_indices;                  // p_j per degree
  std::vector<bool> period_divides_j_index;
  std::vector<bool> coefficient_is_zero;        // identically zero within tol
  std::vector<std::optional<Rational>> collapsed_coefficients;  // when collapsed
};

// Rational polytopes, d <= 3, vertex-denominator lcm <= 6: observed
// coefficient periods, collapse decision, and the divisibility check
// against the face-span indices p_j.
PeriodReport period_report(const Polytope& p, const EnginePolicy& policy = {});

// j-index: smallest q such that q times the affine span of every j-face
// contains an integer point.
std::vector<long> j_indices(const Polytope& p);

// Rounds x to a rational with denominator <= max_den when within tol.
std::optional<Rational> rationalize(double x, long max_den, double tol = 1e-9);

}  // namespace solang
