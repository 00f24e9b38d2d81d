#include "solang/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "solang/linalg.hpp"

namespace solang {

Polynomial::Polynomial(std::vector<double> c) : coeffs(std::move(c)) {
  exact.assign(coeffs.size(), std::nullopt);
  trim();
}

Polynomial Polynomial::from_exact(std::vector<Rational> c) {
  Polynomial p;
  p.coeffs.resize(c.size());
  p.exact.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    p.coeffs[i] = to_double(c[i]);
    p.exact[i] = std::move(c[i]);
  }
  p.trim();
  return p;
}

int Polynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0.0) return i;
  return 0;
}

double Polynomial::eval(double t) const {
  double v = 0.0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) v = v * t + coeffs[i];
  return v;
}

Rational Polynomial::eval_exact(const Rational& t) const {
  Rational v = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (!exact[i]) throw ValidationError("eval_exact: coefficient lacks exact value");
    v = v * t + *exact[i];
  }
  return v;
}

bool Polynomial::all_exact() const {
  return std::all_of(exact.begin(), exact.end(), [](const auto& e) { return e.has_value(); });
}

void Polynomial::trim() {
  while (coeffs.size() > 1 && coeffs.back() == 0.0 &&
         (!exact.back() || *exact.back() == 0)) {
    coeffs.pop_back();
    exact.pop_back();
  }
}

namespace {

void check_fit_inputs(size_t n_points, const std::vector<int>& support,
                      const std::set<long>& seen) {
  if (support.empty()) throw ValidationError("fit_polynomial: empty support");
  if (n_points < support.size())
    throw ArityError("fit_polynomial: fewer points than allowed exponents");
  if (seen.size() != n_points)
    throw ValidationError("fit_polynomial: repeated t values");
}

Rational pow_rat(long t, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= t;
  return r;
}

}  // namespace

ExactFit fit_polynomial(const std::vector<std::pair<long, Rational>>& points,
                        const std::vector<int>& support) {
  std::set<long> seen;
  for (const auto& [t, v] : points) seen.insert(t);
  check_fit_inputs(points.size(), support, seen);

  const int k = static_cast<int>(support.size());
  RMatrix vand(k, k);
  RVec rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) vand(i, j) = pow_rat(points[i].first, support[j]);
    rhs[i] = points[i].second;
  }
  RVec c = solve(vand, rhs);

  ExactFit fit;
  fit.coeffs_by_exponent = c;
  int max_e = *std::max_element(support.begin(), support.end());
  std::vector<Rational> full(max_e + 1, Rational(0));
  for (int j = 0; j < k; ++j) full[support[j]] = c[j];
  fit.poly = Polynomial::from_exact(std::move(full));
  fit.max_residual = 0;
  for (size_t i = k; i < points.size(); ++i) {
    Rational r = fit.poly.eval_exact(Rational(points[i].first)) - points[i].second;
    if (r < 0) r = -r;
    fit.max_residual = std::max(fit.max_residual, r);
  }
  return fit;
}

namespace {

// Dense double solve with partial pivoting; also returns the inverse for
// error propagation. Matrices here are tiny (k <= 5).
std::vector<double> solve_with_inverse(std::vector<std::vector<double>> a,
                                       std::vector<double> b,
                                       std::vector<std::vector<double>>* inv_out) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (a[p][k] == 0.0) throw SingularMatrixError("fit: singular design matrix");
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    std::swap(inv[k], inv[p]);
    double piv = a[k][k];
    for (int j = 0; j < n; ++j) { a[k][j] /= piv; inv[k][j] /= piv; }
    b[k] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0.0) continue;
      double f = a[i][k];
      for (int j = 0; j < n; ++j) { a[i][j] -= f * a[k][j]; inv[i][j] -= f * inv[k][j]; }
      b[i] -= f * b[k];
    }
  }
  if (inv_out) *inv_out = std::move(inv);
  return b;
}

}  // namespace

RealFit fit_polynomial(const std::vector<std::pair<long, double>>& points,
                       const std::vector<double>& point_errors,
                       const std::vector<int>& support) {
  std::set<long> seen;
  for (const auto& [t, v] : points) seen.insert(t);
  check_fit_inputs(points.size(), support, seen);
  if (!point_errors.empty() && point_errors.size() != points.size())
    throw ShapeError("fit_polynomial: error vector size mismatch");

  const int k = static_cast<int>(support.size());
  std::vector<std::vector<double>> vand(k, std::vector<double>(k));
  std::vector<double> rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) vand[i][j] = std::pow(static_cast<double>(points[i].first), support[j]);
    rhs[i] = points[i].second;
  }
  std::vector<std::vector<double>> inv;
  RealFit fit;
  fit.coeffs_by_exponent = solve_with_inverse(vand, rhs, &inv);
  fit.coeff_errors.assign(k, 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      fit.coeff_errors[i] += std::abs(inv[i][j]) * (point_errors.empty() ? 0.0 : point_errors[j]);

  int max_e = *std::max_element(support.begin(), support.end());
  std::vector<double> full(max_e + 1, 0.0);
  for (int j = 0; j < k; ++j) full[support[j]] = fit.coeffs_by_exponent[j];
  fit.poly = Polynomial(std::move(full));
  for (size_t i = k; i < points.size(); ++i) {
    double r = std::abs(fit.poly.eval(static_cast<double>(points[i].first)) - points[i].second);
    fit.max_residual = std::max(fit.max_residual, r);
  }
  return fit;
}

}  // namespace solang
