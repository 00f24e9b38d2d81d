#pragma once

#include <string>
#include <vector>

#include "solang/polynomial.hpp"
#include "solang/polytope.hpp"

namespace solang {

// Counting quasipolynomial: constituents[r] holds the exact coefficients
// (by degree) of the polynomial governing t = r (mod period).
struct QuasiPolynomial {
  long period = 1;
  std::vector<std::vector<Rational>> constituents;

  Rational eval(long t) const;  // t may be negative
  long minimal_period() const;
  std::vector<long> coefficient_periods() const;  // per degree
  bool is_polynomial() const { return minimal_period() == 1; }
  const std::vector<Rational>& polynomial() const;  // requires period collapse
};

long ehrhart_count(const Polytope& p, long t);

// Exact fit: degree-d polynomial for lattice polytopes (anchored at
// L(0) = 1), per-residue fits for rational ones, each validated on two
// extra evaluations; exact mismatch raises ConsistencyError.
QuasiPolynomial fit_ehrhart(const Polytope& p);

struct ReciprocityReport {
  bool holds = true;
  std::vector<long> checked_t;
  std::vector<Rational> lhs;  // L(-t)
  std::vector<Int> interior_counts;
};

// Verifies L(-t) = (-1)^d L_interior(t) exactly for t = 1..3.
ReciprocityReport reciprocity_check(const Polytope& p);

struct HStarVector {
  std::vector<Int> entries;  // a_0..a_d
  std::vector<std::string> violations;
};

// Binomial transform of the counting sequence; entries are nonnegative for
// lattice polytopes (violations reported, they indicate a bug).
HStarVector hstar(const Polytope& p);

Int binomial(int n, int k);

}  // namespace solang
