#pragma once

#include <vector>

#include "solang/rational.hpp"

namespace solang {

// Dense exact rational matrix. Row-major; immutable use intended.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  explicit RMatrix(std::vector<RVec> rows);

  static RMatrix identity(int n);
  static RMatrix from_columns(const std::vector<RVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  RVec row(int i) const;
  RVec col(int j) const;
  RMatrix transpose() const;
  RMatrix mul(const RMatrix& other) const;
  RVec apply(const RVec& x) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Exact determinant via fraction-free Bareiss elimination (rows are scaled
// to integers first; the scale is divided back out).
Rational det(const RMatrix& m);

// Exact solution of m x = rhs for square nonsingular m.
RVec solve(const RMatrix& m, const RVec& rhs);

int rank(const RMatrix& m);

// Basis of {x : m x = 0}. Entries are exact; basis not normalized.
std::vector<RVec> null_space(const RMatrix& m);

// Normal of the hyperplane through the d points (in R^d), i.e. a generalized
// cross product of their pairwise differences. Zero vector when the points
// are affinely dependent. For d == 1 returns (1).
RVec hyperplane_normal(const std::vector<RVec>& points);

// Affine rank of a point set (dimension of the affine hull).
int affine_rank(const std::vector<RVec>& points);

// Smallest positive q such that q*(x0 + span(directions)) contains an
// integer point; used for face affine spans. x0 rational, directions exact.
// Returns 0 when the subspace misses every dilate (cannot happen for the
// affine span of a rational polytope's face, kept for safety).
Int min_dilation_with_integer_point(const RVec& x0, const std::vector<RVec>& directions);

}  // namespace solang
