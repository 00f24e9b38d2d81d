#pragma once

#include <functional>
#include <string>
#include <vector>

#include "solang/numerator.hpp"
#include "solang/solidpoly.hpp"

namespace solang {

// Translation-invariant nonnegative valuation, evaluated on a
// full-dimensional body at a rational point. Point-slices (the height-0
// parallelepiped slice) are handled by eval_point_slice.
struct Valuation {
  std::string name;
  bool integer_valued = false;
  double value_at_zero = 0.0;  // N(0) convention
  std::function<AngleValue(const Polytope&, const RVec&, const EnginePolicy&)> eval;
  std::function<double(const RVec& slice_point, const RVec& x)> eval_point_slice;
};

// nu'(K, x) = 1 when x is a lattice point of K. N(0) = 1.
Valuation indicator_valuation();
// nu(K, x) = solid angle of x with respect to K. N(0) = 0.
Valuation solid_angle_valuation();
Valuation valuation_by_name(const std::string& name);

struct NEvalResult {
  double value = 0.0;
  double error = 0.0;
  bool used_series = false;
  bool used_monte_carlo = false;
  std::optional<Int> exact;  // integer-valued valuations
};

// N(t) = sum of nu(tP, x) over lattice points x of tP.
NEvalResult n_eval(const Polytope& p, long t, const Valuation& v,
                   const EnginePolicy& policy = {});

// Numerator of sum_t N(t) z^t over (1-z)^(d+1); nonnegativity checked.
NumeratorVector g_numerator(const Polytope& p, const Valuation& v,
                            const EnginePolicy& policy = {});

struct MonotonicityReport {
  NumeratorVector inner;  // P
  NumeratorVector outer;  // Q
  bool holds = true;
  std::vector<int> violated_indices;
};

// Requires vertex-verified containment P inside Q (ContainmentError else);
// checks a_i <= b_i componentwise within error bounds.
MonotonicityReport monotonicity_compare(const Polytope& p, const Polytope& q,
                                        const Valuation& v, const EnginePolicy& policy = {});

// Numerator from the half-open parallelepiped over the lifted simplex
// generators (v_i, 1): entry k collects the valuation over lattice points
// at height k. Indicator uses half-open membership; solid angle evaluates
// on the closed height-k slice.
NumeratorVector parallelepiped_numerator(const Polytope& simplex, const Valuation& v,
                                         const EnginePolicy& policy = {});

// Lattice points of the half-open parallelepiped grouped by height; their
// total equals |det| of the lifted generator matrix.
std::vector<long> half_open_parallelepiped_counts(const Polytope& simplex);

}  // namespace solang
