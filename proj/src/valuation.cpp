#include "solang/valuation.hpp"

#include <algorithm>
#include <cmath>

namespace solang {

Valuation indicator_valuation() {
  Valuation v;
  v.name = "indicator";
  v.integer_valued = true;
  v.value_at_zero = 1.0;
  v.eval = [](const Polytope& body, const RVec& x, const EnginePolicy&) {
    bool in = is_integer_point(x) && body.contains(x);
    return AngleValue::exact(in ? 1.0 : 0.0);
  };
  v.eval_point_slice = [](const RVec& slice_pt, const RVec& x) {
    return (is_integer_point(x) && slice_pt == x) ? 1.0 : 0.0;
  };
  return v;
}

Valuation solid_angle_valuation() {
  Valuation v;
  v.name = "solid-angle";
  v.integer_valued = false;
  v.value_at_zero = 0.0;
  v.eval = [](const Polytope& body, const RVec& x, const EnginePolicy& policy) {
    return solid_angle(body, x, policy);
  };
  // measure-zero slice: the angle is 0 by convention
  v.eval_point_slice = [](const RVec&, const RVec&) { return 0.0; };
  return v;
}

Valuation valuation_by_name(const std::string& name) {
  if (name == "indicator") return indicator_valuation();
  if (name == "solid" || name == "solid-angle") return solid_angle_valuation();
  throw ValidationError("unknown valuation: " + name);
}

NEvalResult n_eval(const Polytope& p, long t, const Valuation& v, const EnginePolicy& policy) {
  if (t < 1) throw ValidationError("n_eval: dilation must be >= 1");
  Polytope dilated = p.dilate(Rational(t));
  NEvalResult res;
  double total = 0.0, err = 0.0;
  for (const auto& pt : dilated.lattice_points(1)) {
    RVec x(pt.size());
    for (size_t i = 0; i < pt.size(); ++i) x[i] = pt[i];
    AngleValue a = v.eval(dilated, x, policy);
    total += a.value;
    err += a.abs_error;
    res.used_series |= a.method == AngleMethod::Aomoto;
    res.used_monte_carlo |= a.method == AngleMethod::MonteCarlo;
  }
  res.value = total;
  res.error = err;
  if (v.integer_valued) res.exact = Int(std::llround(total));
  return res;
}

namespace {

NumeratorVector transform_to_numerator(int d, const std::vector<double>& n_vals,
                                       const std::vector<double>& n_errs,
                                       bool integer_valued) {
  NumeratorVector nv;
  nv.denominator_exponent = d + 1;
  nv.entries.assign(d + 1, 0.0);
  nv.errors.assign(d + 1, 0.0);
  nv.exact.assign(d + 1, std::nullopt);
  for (int k = 0; k <= d; ++k) {
    double a = 0.0, e = 0.0;
    for (int j = 0; j <= k; ++j) {
      double c = to_double(binomial(d + 1, j));
      a += ((j % 2 == 0) ? 1.0 : -1.0) * c * n_vals[k - j];
      e += c * n_errs[k - j];
    }
    nv.entries[k] = a;
    nv.errors[k] = e;
    if (integer_valued) nv.exact[k] = Int(std::llround(a));
  }
  for (int j = 0; j <= d; ++j)
    if (nv.entries[j] < -(nv.errors[j] + 1e-9))
      nv.violations.push_back("a_" + std::to_string(j) + " is negative");
  return nv;
}

}  // namespace

NumeratorVector g_numerator(const Polytope& p, const Valuation& v, const EnginePolicy& policy) {
  if (lcm_of_denominators(p.vertices()) != 1)
    throw ValidationError("g_numerator: lattice polytope required");
  const int d = p.dim();
  std::vector<double> vals(d + 1, 0.0), errs(d + 1, 0.0);
  bool used_series = false, used_mc = false;
  for (long t = 1; t <= d; ++t) {
    auto r = n_eval(p, t, v, policy);
    vals[t] = r.value;
    errs[t] = r.error;
    used_series |= r.used_series;
    used_mc |= r.used_monte_carlo;
  }
  vals[0] = v.value_at_zero;
  auto nv = transform_to_numerator(d, vals, errs, v.integer_valued);
  nv.provenance = provenance_name(used_series, used_mc);
  return nv;
}

MonotonicityReport monotonicity_compare(const Polytope& p, const Polytope& q,
                                        const Valuation& v, const EnginePolicy& policy) {
  if (p.dim() != q.dim())
    throw ValidationError("monotonicity_compare: ambient dimensions differ");
  for (const auto& vert : p.vertices())
    if (!q.contains(vert))
      throw ContainmentError("monotonicity_compare: P is not contained in Q");

  MonotonicityReport rep;
  rep.inner = g_numerator(p, v, policy);
  rep.outer = g_numerator(q, v, policy);
  for (int i = 0; i <= p.dim(); ++i) {
    double slack = rep.inner.errors[i] + rep.outer.errors[i] + 1e-9;
    if (rep.inner.entries[i] > rep.outer.entries[i] + slack) {
      rep.holds = false;
      rep.violated_indices.push_back(i);
    }
  }
  return rep;
}

namespace {

// Height-k slice of the closed parallelepiped, dropped to R^d: the hull of
// the k-subset sums of the simplex vertices.
std::vector<RVec> slice_points(const std::vector<RVec>& verts, int k) {
  const int n = static_cast<int>(verts.size());
  std::vector<RVec> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    RVec s(verts[0].size(), Rational(0));
    for (int i : idx) s = add(s, verts[i]);
    out.push_back(std::move(s));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Lambda-coordinates of (x, k) in the lifted generator basis.
RVec lambda_coords(const RMatrix& lifted_inv_cols, const RVec& x, long k) {
  RVec rhs = x;
  rhs.push_back(Rational(k));
  return lifted_inv_cols.apply(rhs);
}

RMatrix lifted_inverse(const std::vector<RVec>& verts) {
  const int d = static_cast<int>(verts[0].size());
  std::vector<RVec> cols;
  for (const auto& v : verts) {
    RVec w = v;
    w.push_back(Rational(1));
    cols.push_back(std::move(w));
  }
  RMatrix w = RMatrix::from_columns(cols);
  // invert by solving against the identity
  RMatrix inv(d + 1, d + 1);
  for (int j = 0; j <= d; ++j) {
    RVec e(d + 1, Rational(0));
    e[j] = 1;
    RVec col = solve(w, e);
    for (int i = 0; i <= d; ++i) inv(i, j) = col[i];
  }
  return inv;
}

}  // namespace

NumeratorVector parallelepiped_numerator(const Polytope& simplex, const Valuation& v,
                                         const EnginePolicy& policy) {
  const int d = simplex.dim();
  const auto& verts = simplex.vertices();
  if (static_cast<int>(verts.size()) != d + 1)
    throw ShapeError("parallelepiped_numerator: input must be a simplex");
  if (lcm_of_denominators(verts) != 1)
    throw ValidationError("parallelepiped_numerator: lattice simplex required");

  RMatrix inv = lifted_inverse(verts);

  NumeratorVector nv;
  nv.denominator_exponent = d + 1;
  nv.entries.assign(d + 1, 0.0);
  nv.errors.assign(d + 1, 0.0);
  nv.exact.assign(d + 1, std::nullopt);

  bool used_series = false, used_mc = false;
  // height 0: the slice is the single point at the origin
  RVec origin(d, Rational(0));
  nv.entries[0] = v.eval_point_slice(origin, origin);
  if (v.integer_valued) nv.exact[0] = Int(std::llround(nv.entries[0]));

  for (int k = 1; k <= d; ++k) {
    Polytope slice = Polytope::from_points(slice_points(verts, k));
    double total = 0.0, err = 0.0;
    for (const auto& pt : slice.lattice_points(1)) {
      RVec x(pt.size());
      for (size_t i = 0; i < pt.size(); ++i) x[i] = pt[i];
      if (v.integer_valued) {
        // half-open membership in the canonical lambda-coordinates; a
        // lattice point inside contributes nu({x}, x) = 1
        RVec lam = lambda_coords(inv, x, k);
        bool in = std::all_of(lam.begin(), lam.end(),
                              [](const Rational& l) { return l >= 0 && l < 1; });
        if (in) total += 1.0;
      } else {
        AngleValue a = v.eval(slice, x, policy);
        total += a.value;
        err += a.abs_error;
        used_series |= a.method == AngleMethod::Aomoto;
        used_mc |= a.method == AngleMethod::MonteCarlo;
      }
    }
    nv.entries[k] = total;
    nv.errors[k] = err;
    if (v.integer_valued) nv.exact[k] = Int(std::llround(total));
  }

  nv.provenance = provenance_name(used_series, used_mc);
  for (int j = 0; j <= d; ++j)
    if (nv.entries[j] < -(nv.errors[j] + 1e-9))
      nv.violations.push_back("a_" + std::to_string(j) + " is negative");
  return nv;
}

std::vector<long> half_open_parallelepiped_counts(const Polytope& simplex) {
  const int d = simplex.dim();
  const auto& verts = simplex.vertices();
  if (static_cast<int>(verts.size()) != d + 1)
    throw ShapeError("half_open_parallelepiped_counts: input must be a simplex");
  RMatrix inv = lifted_inverse(verts);

  std::vector<long> counts(d + 1, 0);
  counts[0] = 1;  // the origin
  for (int k = 1; k <= d; ++k) {
    Polytope slice = Polytope::from_points(slice_points(verts, k));
    for (const auto& pt : slice.lattice_points(1)) {
      RVec x(pt.size());
      for (size_t i = 0; i < pt.size(); ++i) x[i] = pt[i];
      RVec lam = lambda_coords(inv, x, k);
      bool in = std::all_of(lam.begin(), lam.end(),
                            [](const Rational& l) { return l >= 0 && l < 1; });
      if (in) ++counts[k];
    }
  }
  return counts;
}

}  // namespace solang
