#include "solang/linalg.hpp"

#include <algorithm>

namespace solang {

RMatrix::RMatrix(std::vector<RVec> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows[0].size()) : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw ShapeError("RMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RMatrix RMatrix::identity(int n) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::from_columns(const std::vector<RVec>& cols) {
  if (cols.empty()) return RMatrix();
  RMatrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != cols[0].size()) throw ShapeError("from_columns: ragged columns");
    for (size_t i = 0; i < cols[j].size(); ++i) m(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

RVec RMatrix::row(int i) const {
  RVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RVec RMatrix::col(int j) const {
  RVec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RMatrix RMatrix::mul(const RMatrix& other) const {
  if (cols_ != other.rows_) throw ShapeError("mul: inner dimension mismatch");
  RMatrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  return r;
}

RVec RMatrix::apply(const RVec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw ShapeError("apply: size mismatch");
  RVec y(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

Rational det(const RMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("det: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;

  // Scale rows to integers so Bareiss stays fraction-free.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Int scale = 1;
  for (int i = 0; i < n; ++i) {
    Int l = 1;
    for (int j = 0; j < n; ++j) l = lcm_int(l, den(m(i, j)));
    for (int j = 0; j < n; ++j) a[i][j] = num(m(i, j)) * (l / den(m(i, j)));
    scale *= l;
  }

  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return Rational(sign * a[n - 1][n - 1], scale);
}

namespace {

// Reduced row echelon form; returns pivot column per eliminated row.
std::vector<int> rref(RMatrix& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = Rational(1) / a(r, c);
    for (int j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RVec solve(const RMatrix& m, const RVec& rhs) {
  if (m.rows() != m.cols()) throw ShapeError("solve: matrix not square");
  if (static_cast<int>(rhs.size()) != m.rows()) throw ShapeError("solve: rhs size mismatch");
  const int n = m.rows();
  RMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() == n)
    throw SingularMatrixError("solve: singular matrix");
  RVec x(n);
  for (int i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

int rank(const RMatrix& m) {
  RMatrix a = m;
  return static_cast<int>(rref(a).size());
}

std::vector<RVec> null_space(const RMatrix& m) {
  RMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    RVec v(m.cols(), Rational(0));
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

RVec hyperplane_normal(const std::vector<RVec>& points) {
  if (points.empty()) throw ShapeError("hyperplane_normal: no points");
  const int d = static_cast<int>(points[0].size());
  if (static_cast<int>(points.size()) != d)
    throw ShapeError("hyperplane_normal: need exactly d points in R^d");
  if (d == 1) return RVec{Rational(1)};
  RMatrix diffs(d - 1, d);
  for (int i = 1; i < d; ++i)
    for (int j = 0; j < d; ++j) diffs(i - 1, j) = points[i][j] - points[0][j];
  RVec n(d);
  for (int j = 0; j < d; ++j) {
    RMatrix minor(d - 1, d - 1);
    for (int i = 0; i < d - 1; ++i) {
      int cc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == j) continue;
        minor(i, cc++) = diffs(i, c);
      }
    }
    Rational md = det(minor);
    n[j] = (j % 2 == 0) ? md : -md;
  }
  return n;
}

int affine_rank(const std::vector<RVec>& points) {
  if (points.size() <= 1) return 0;
  std::vector<RVec> diffs;
  diffs.reserve(points.size() - 1);
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return rank(RMatrix(std::move(diffs)));
}

namespace {

// Brings an integer matrix to lower-triangular form by unimodular column
// operations; w has full row rank r and at least r columns.
void triangularize_columns(std::vector<std::vector<Int>>& w) {
  const int r = static_cast<int>(w.size());
  const int d = r ? static_cast<int>(w[0].size()) : 0;
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < r; ++i) std::swap(w[i][a], w[i][b]);
  };
  // col[a] -= q * col[b]
  auto axpy_col = [&](int a, const Int& q, int b) {
    for (int i = 0; i < r; ++i) w[i][a] -= q * w[i][b];
  };
  for (int i = 0; i < r; ++i) {
    for (;;) {
      int nz = -1;
      for (int j = i; j < d; ++j)
        if (w[i][j] != 0) { nz = (nz < 0 || (abs(w[i][j]) < abs(w[i][nz])) ? j : nz); }
      if (nz < 0) throw ConsistencyError("triangularize: rank deficiency");
      bool done = true;
      for (int j = i; j < d; ++j) {
        if (j == nz || w[i][j] == 0) continue;
        Int q = w[i][j] / w[i][nz];
        axpy_col(j, q, nz);
        if (w[i][j] != 0) done = false;
      }
      if (done) {
        if (nz != i) swap_cols(i, nz);
        break;
      }
    }
    if (w[i][i] < 0)
      for (int k = 0; k < r; ++k) w[k][i] = -w[k][i];
  }
}

}  // namespace

Int min_dilation_with_integer_point(const RVec& x0, const std::vector<RVec>& directions) {
  const int d = static_cast<int>(x0.size());
  // Functionals vanishing on the direction space.
  std::vector<RVec> w_rows;
  if (directions.empty()) {
    for (int i = 0; i < d; ++i) {
      RVec e(d, Rational(0));
      e[i] = 1;
      w_rows.push_back(std::move(e));
    }
  } else {
    w_rows = null_space(RMatrix(directions));
  }
  if (w_rows.empty()) return 1;  // directions span R^d

  const int r = static_cast<int>(w_rows.size());
  std::vector<std::vector<Int>> w(r, std::vector<Int>(d));
  RVec c0(r);
  for (int i = 0; i < r; ++i) {
    RVec prim = primitive_integer_direction(w_rows[i]);
    for (int j = 0; j < d; ++j) w[i][j] = num(prim[j]);
    Rational s = 0;
    for (int j = 0; j < d; ++j) s += prim[j] * x0[j];
    c0[i] = s;
  }
  triangularize_columns(w);
  // Forward-substitute H y = q*c0 symbolically: y = q*u with u rational.
  RVec u(r);
  for (int i = 0; i < r; ++i) {
    Rational s = c0[i];
    for (int j = 0; j < i; ++j) s -= Rational(w[i][j]) * u[j];
    if (w[i][i] == 0) throw ConsistencyError("min_dilation: singular triangular factor");
    u[i] = s / Rational(w[i][i]);
  }
  Int q = 1;
  for (int i = 0; i < r; ++i) q = lcm_int(q, den(u[i]));
  return q;
}

}  // namespace solang
