#include "solang/solidpoly.hpp"

#include <algorithm>
#include <cmath>

namespace solang {

double SolidPolynomial::eval(double t) const {
  double v = 0.0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) v = v * t + coeffs[i];
  return v;
}

double SolidQuasiPolynomial::eval(long t) const {
  long r = ((t % period) + period) % period;
  const auto& c = constituents[r];
  double v = 0.0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * t + c[i];
  return v;
}

long SolidQuasiPolynomial::minimal_period(double tol) const {
  for (long q = 1; q <= period; ++q) {
    if (period % q != 0) continue;
    bool ok = true;
    for (long r = 0; r < period && ok; ++r)
      for (size_t j = 0; j < constituents[r].size() && ok; ++j)
        ok = std::abs(constituents[r][j] - constituents[r % q][j]) <= tol;
    if (ok) return q;
  }
  return period;
}

std::vector<long> SolidQuasiPolynomial::coefficient_periods(double tol) const {
  std::vector<long> out(dim + 1, 1);
  for (int j = 0; j <= dim; ++j) {
    for (long q = 1; q <= period; ++q) {
      if (period % q != 0) continue;
      bool ok = true;
      for (long r = 0; r < period && ok; ++r)
        ok = std::abs(constituents[r][j] - constituents[r % q][j]) <= tol;
      if (ok) { out[j] = q; break; }
    }
  }
  return out;
}

std::string provenance_name(bool used_series, bool used_monte_carlo) {
  std::string s = "exact";
  if (used_series) s += "+aomoto";
  if (used_monte_carlo) s += "+monte-carlo";
  return s;
}

ValueWithError a_eval(const Polytope& p, long t, const EnginePolicy& policy) {
  if (t < 1) throw ValidationError("a_eval: dilation must be >= 1");
  ValueWithError out;
  Rational rt(t);
  for (const auto& pt : p.lattice_points(t)) {
    RVec x(pt.size());
    for (size_t i = 0; i < pt.size(); ++i) x[i] = pt[i];
    AngleValue a = solid_angle_dilated(p, rt, x, policy);
    out.value += a.value;
    out.error += a.abs_error;
    out.used_series |= a.method == AngleMethod::Aomoto;
    out.used_monte_carlo |= a.method == AngleMethod::MonteCarlo;
  }
  return out;
}

ValueWithError a_eval_by_faces(const Polytope& p, long t, const EnginePolicy& policy) {
  if (t < 1) throw ValidationError("a_eval_by_faces: dilation must be >= 1");
  ValueWithError out;
  for (const auto& f : p.faces()) {
    AngleValue w = solid_angle(p, p.relint_point(f), policy);
    long count = p.count_relative_interior(f, t);
    out.value += w.value * static_cast<double>(count);
    out.error += w.abs_error * static_cast<double>(count);
    out.used_series |= w.method == AngleMethod::Aomoto;
    out.used_monte_carlo |= w.method == AngleMethod::MonteCarlo;
  }
  return out;
}

namespace {

std::vector<int> parity_support(int d) {
  std::vector<int> s;
  for (int e = d; e >= 1; e -= 2) s.push_back(e);
  std::sort(s.begin(), s.end());
  return s;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::optional<Rational> rationalize(double x, long max_den, double tol) {
  for (long q = 1; q <= max_den; ++q) {
    double scaled = x * static_cast<double>(q);
    double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) <= tol * static_cast<double>(q)) {
      Rational r(static_cast<long>(rounded), q);
      if (std::abs(to_double(r) - x) <= tol) return r;
    }
  }
  return std::nullopt;
}

SolidPolynomial fit_solid(const Polytope& p, const EnginePolicy& policy) {
  if (lcm_of_denominators(p.vertices()) != 1)
    throw ValidationError("fit_solid: lattice polytope required; use fit_solid_quasi");
  const int d = p.dim();
  auto support = parity_support(d);
  const int m = static_cast<int>(support.size());

  std::vector<std::pair<long, double>> pts;
  std::vector<double> errs;
  bool used_series = false, used_mc = false;
  for (long t = 1; t <= m + 2; ++t) {
    auto v = a_eval(p, t, policy);
    pts.emplace_back(t, v.value);
    errs.push_back(v.error);
    used_series |= v.used_series;
    used_mc |= v.used_monte_carlo;
  }
  auto fit = fit_polynomial(pts, errs, support);

  double allowed = policy.tol;
  for (int i = 0; i < m + 2; ++i) allowed += errs[i];
  if (fit.max_residual > allowed)
    throw EngineAccuracyError("fit_solid: residual exceeds engine error bound; raise mc_samples");

  SolidPolynomial sp;
  sp.dim = d;
  sp.provenance = provenance_name(used_series, used_mc);
  sp.coeffs.assign(d + 1, 0.0);
  sp.errors.assign(d + 1, 0.0);
  sp.exact.assign(d + 1, std::nullopt);
  for (int j = 0; j < m; ++j) {
    sp.coeffs[support[j]] = fit.coeffs_by_exponent[j];
    sp.errors[support[j]] = fit.coeff_errors[j];
  }
  // Parity-suppressed coefficients are exactly zero.
  for (int e = 0; e <= d; ++e)
    if ((d - e) % 2 == 1 || e == 0) sp.exact[e] = Rational(0);

  // Recover exact rationals when every evaluation was exact-engine.
  double total_eval_err = 0.0;
  for (double e : errs) total_eval_err += e;
  if (total_eval_err < 1e-10) {
    for (int j = 0; j < m; ++j) {
      auto r = rationalize(fit.coeffs_by_exponent[j], 2 * factorial(d), 1e-9);
      if (r) {
        // re-verify the candidate against the measured evaluations
        bool ok = true;
        for (int i = 0; i < m + 2 && ok; ++i) {
          double with = pts[i].second;
          double predicted = fit.poly.eval(static_cast<double>(pts[i].first)) -
                             fit.coeffs_by_exponent[j] * std::pow(static_cast<double>(pts[i].first), support[j]) +
                             to_double(*r) * std::pow(static_cast<double>(pts[i].first), support[j]);
          ok = std::abs(predicted - with) <= 1e-8;
        }
        if (ok) sp.exact[support[j]] = *r;
      }
    }
  }
  return sp;
}

SolidQuasiPolynomial fit_solid_quasi(const Polytope& p, const EnginePolicy& policy) {
  const int d = p.dim();
  long period = lcm_of_denominators(p.vertices()).convert_to<long>();
  const long t_cap = 2 * (d + 1) * period;

  // Constituents of rational polytopes mix parities, so fit full degree.
  std::vector<int> support(d + 1);
  for (int i = 0; i <= d; ++i) support[i] = i;

  SolidQuasiPolynomial q;
  q.period = period;
  q.dim = d;
  q.constituents.resize(period);
  q.errors.resize(period);

  bool used_series = false, used_mc = false;
  for (long r = 0; r < period; ++r) {
    std::vector<std::pair<long, double>> pts;
    std::vector<double> errs;
    long k = (r == 0) ? 1 : 0;
    while (static_cast<int>(pts.size()) < d + 3) {
      long t = r + (k++) * period;
      if (t == 0) continue;
      if (t > t_cap) throw SizeGuardError("fit_solid_quasi: evaluation cap exceeded");
      auto v = a_eval(p, t, policy);
      pts.emplace_back(t, v.value);
      errs.push_back(v.error);
      used_series |= v.used_series;
      used_mc |= v.used_monte_carlo;
    }
    auto fit = fit_polynomial(pts, errs, support);
    double allowed = policy.tol;
    for (double e : errs) allowed += e;
    if (fit.max_residual > allowed)
      throw EngineAccuracyError("fit_solid_quasi: residual exceeds engine error bound");
    q.constituents[r].assign(d + 1, 0.0);
    q.errors[r].assign(d + 1, 0.0);
    for (int j = 0; j <= d; ++j) {
      q.constituents[r][j] = fit.coeffs_by_exponent[j];
      q.errors[r][j] = fit.coeff_errors[j];
    }
  }
  q.provenance = provenance_name(used_series, used_mc);
  return q;
}

NumeratorVector solid_numerator(const Polytope& p, const EnginePolicy& policy) {
  if (lcm_of_denominators(p.vertices()) != 1)
    throw ValidationError("solid_numerator: lattice polytope required");
  const int d = p.dim();
  std::vector<double> a_vals(d + 1, 0.0), a_errs(d + 1, 0.0);
  bool used_series = false, used_mc = false;
  for (long t = 1; t <= d; ++t) {
    auto v = a_eval(p, t, policy);
    a_vals[t] = v.value;
    a_errs[t] = v.error;
    used_series |= v.used_series;
    used_mc |= v.used_monte_carlo;
  }

  NumeratorVector nv;
  nv.provenance = provenance_name(used_series, used_mc);
  nv.denominator_exponent = d + 1;
  nv.entries.assign(d + 1, 0.0);
  nv.errors.assign(d + 1, 0.0);
  nv.exact.assign(d + 1, std::nullopt);
  for (int k = 0; k <= d; ++k) {
    double a = 0.0, e = 0.0;
    for (int j = 0; j <= k; ++j) {
      double c = to_double(binomial(d + 1, j));
      a += ((j % 2 == 0) ? 1.0 : -1.0) * c * a_vals[k - j];
      e += c * a_errs[k - j];
    }
    nv.entries[k] = a;
    nv.errors[k] = e;
  }

  if (std::abs(nv.entries[0]) > std::max(1e-9, nv.errors[0]))
    nv.violations.push_back("a_0 deviates from zero");
  for (int j = 1; j <= d; ++j)
    if (nv.entries[j] <= -(nv.errors[j] + 1e-9))
      nv.violations.push_back("a_" + std::to_string(j) + " is negative");
  for (int j = 1; j <= d; ++j) {
    int jj = d + 1 - j;
    if (jj <= d && std::abs(nv.entries[j] - nv.entries[jj]) >
                       nv.errors[j] + nv.errors[jj] + 1e-8)
      nv.violations.push_back("palindromy fails at " + std::to_string(j));
  }
  return nv;
}

UnimodalityReport unimodality_report(const Polytope& p, const EnginePolicy& policy) {
  if (p.dim() != 3) throw ValidationError("unimodality_report: d = 3 only");
  auto sp = fit_solid(p, policy);
  UnimodalityReport rep;
  rep.volume = sp.coeffs[3];
  rep.linear_coeff = sp.coeffs[1];
  rep.numerator_inner = {rep.volume + rep.linear_coeff, 4 * rep.volume - 2 * rep.linear_coeff,
                         rep.volume + rep.linear_coeff};
  rep.unimodal = rep.linear_coeff <= rep.volume;
  long nverts = static_cast<long>(p.vertices().size());
  rep.only_vertex_lattice_points = (p.count_lattice_points(1) == nverts);
  if (rep.only_vertex_lattice_points && nverts == 4) {
    auto vs = vertex_sum(p, policy);
    rep.vertex_sum = vs.value;
    rep.vertex_sum_below_third = vs.value <= 1.0 / 3.0;
  }
  return rep;
}

GramCheck brianchon_gram_residual(const Polytope& p, const EnginePolicy& policy) {
  double sum = 0.0, err = 0.0;
  for (const auto& f : p.faces()) {
    AngleValue w = solid_angle(p, p.relint_point(f), policy);
    sum += ((f.dim % 2 == 0) ? 1.0 : -1.0) * w.value;
    err += w.abs_error;
  }
  return {std::abs(sum), err};
}

ValueWithError vertex_sum(const Polytope& p, const EnginePolicy& policy) {
  double total = 0.0, err = 0.0;
  for (const auto& v : p.vertices()) {
    AngleValue a = solid_angle(p, v, policy);
    total += a.value;
    err += a.abs_error;
  }
  return {total, err};
}

std::vector<long> j_indices(const Polytope& p) {
  std::vector<long> out(p.dim() + 1, 1);
  for (int j = 0; j <= p.dim(); ++j) {
    Int pj = 1;
    for (const auto& f : p.faces()) {
      if (f.dim != j) continue;
      const RVec& x0 = p.vertices()[f.vertices[0]];
      std::vector<RVec> dirs;
      for (size_t i = 1; i < f.vertices.size(); ++i)
        dirs.push_back(sub(p.vertices()[f.vertices[i]], x0));
      pj = lcm_int(pj, min_dilation_with_integer_point(x0, dirs));
    }
    out[j] = pj.convert_to<long>();
  }
  return out;
}

PeriodReport period_report(const Polytope& p, const EnginePolicy& policy) {
  long period = lcm_of_denominators(p.vertices()).convert_to<long>();
  if (p.dim() > 3) throw SizeGuardError("period_report: d <= 3 only");
  if (period > 6) throw SizeGuardError("period_report: vertex denominator lcm must be <= 6");

  PeriodReport rep;
  rep.declared_period = period;
  rep.quasi = fit_solid_quasi(p, policy);
  rep.coefficient_periods = rep.quasi.coefficient_periods();
  rep.collapsed = rep.quasi.minimal_period() == 1;
  rep.j_indices = j_indices(p);

  const int d = p.dim();
  rep.period_divides_j_index.resize(d + 1);
  rep.coefficient_is_zero.resize(d + 1);
  for (int j = 0; j <= d; ++j) {
    rep.period_divides_j_index[j] = (rep.j_indices[j] % rep.coefficient_periods[j]) == 0;
    bool zero = true;
    for (long r = 0; r < period && zero; ++r)
      zero = std::abs(rep.quasi.constituents[r][j]) <= 1e-9;
    rep.coefficient_is_zero[j] = zero;
  }
  if (rep.collapsed) {
    rep.collapsed_coefficients.resize(d + 1);
    for (int j = 0; j <= d; ++j)
      rep.collapsed_coefficients[j] = rationalize(rep.quasi.constituents[0][j], 2 * factorial(d) * period * period, 1e-7);
  }
  return rep;
}

}  // namespace solang
