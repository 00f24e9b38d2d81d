#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "solang/rational.hpp"

namespace solang {

// Polynomial with double coefficients indexed by degree. Coefficients that
// are known exactly carry their rational value alongside.
struct Polynomial {
  std::vector<double> coeffs;
  std::vector<std::optional<Rational>> exact;

  Polynomial() = default;
  explicit Polynomial(std::vector<double> c);
  static Polynomial from_exact(std::vector<Rational> c);

  int degree() const;
  double eval(double t) const;
  // Requires every coefficient to carry an exact value.
  Rational eval_exact(const Rational& t) const;
  bool all_exact() const;
  void trim();
};

struct ExactFit {
  std::vector<Rational> coeffs_by_exponent;  // parallel to the support list
  Polynomial poly;
  Rational max_residual;  // over the extra points beyond the solve set
};

struct RealFit {
  std::vector<double> coeffs_by_exponent;
  std::vector<double> coeff_errors;  // propagated from per-point error bounds
  Polynomial poly;
  double max_residual = 0.0;
};

// Interpolation restricted to the allowed exponents. The first
// |support| points determine the solve; any extra points contribute to the
// residual report. Throws ArityError when underdetermined and
// ValidationError on repeated t values.
ExactFit fit_polynomial(const std::vector<std::pair<long, Rational>>& points,
                        const std::vector<int>& support);

RealFit fit_polynomial(const std::vector<std::pair<long, double>>& points,
                       const std::vector<double>& point_errors,
                       const std::vector<int>& support);

}  // namespace solang
