#include "solang/angle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace solang {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExactErr = 1e-14;  // float rounding bookkeeping for arccos paths

double clamp_cos(double c) {
  if (c > 1.0 && c < 1.0 + 1e-12) return 1.0;
  if (c < -1.0 && c > -1.0 - 1e-12) return -1.0;
  if (c > 1.0 || c < -1.0) throw DegeneracyError("arccos argument out of range");
  return c;
}

double dotd(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double normd(const std::vector<double>& a) { return std::sqrt(dotd(a, a)); }

std::vector<double> crossd(const std::vector<double>& a, const std::vector<double>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Small dense double inverse; matrices here are d x d with d <= 4.
std::vector<std::vector<double>> invert(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (a[p][k] == 0.0) throw DegeneracyError("singular matrix");
    std::swap(a[k], a[p]);
    std::swap(inv[k], inv[p]);
    double piv = a[k][k];
    for (int j = 0; j < n; ++j) { a[k][j] /= piv; inv[k][j] /= piv; }
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0.0) continue;
      double f = a[i][k];
      for (int j = 0; j < n; ++j) { a[i][j] -= f * a[k][j]; inv[i][j] -= f * inv[k][j]; }
    }
  }
  return inv;
}

double determinant(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (a[p][k] == 0.0) return 0.0;
    if (p != k) { std::swap(a[k], a[p]); det = -det; }
    det *= a[k][k];
    for (int i = k + 1; i < n; ++i) {
      double f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace

std::string method_name(AngleMethod m) {
  switch (m) {
    case AngleMethod::Exact: return "exact";
    case AngleMethod::Aomoto: return "aomoto";
    case AngleMethod::MonteCarlo: return "monte-carlo";
  }
  return "?";
}

EnginePolicy EnginePolicy::from_name(const std::string& name) {
  EnginePolicy p;
  if (name == "exact" || name == "aomoto") {
    p.high_dim = HighDimEngine::AomotoThenMc;
  } else if (name == "mc") {
    p.high_dim = HighDimEngine::McOnly;
  } else {
    throw ValidationError("unknown engine policy: " + name);
  }
  return p;
}

// ---------------------------------------------------------------------------
// CounterRng

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t index)
    : state_(mix(mix(seed) ^ mix(index * 0xD1B54A32D192ED03ULL + 1))) {}

std::uint64_t CounterRng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform01() {
  // 53-bit mantissa in (0,1); never exactly 0.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  double u1 = uniform01(), u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * kPi * u2;
  cached_ = r * std::sin(a);
  have_cached_ = true;
  return r * std::cos(a);
}

// ---------------------------------------------------------------------------
// Exact engines

AngleValue planar_angle(const PointedCone& c) {
  if (c.dim() != 2) throw ShapeError("planar_angle: cone must be 2-dimensional");
  if (c.lineality_dim() > 0) {
    // A halfplane is the closure limit and has angle exactly 1/2.
    if (c.lineality_dim() == 1 && c.halfspace_normals().size() == 1)
      return AngleValue::exact(0.5);
    throw LinealityError("planar_angle: cone is not pointed");
  }
  auto rays = c.extreme_rays();
  if (rays.size() != 2) throw DegeneracyError("planar_angle: expected two extreme rays");
  PointedCone reduced = PointedCone::from_generators_and_halfspaces(
      2, rays, c.halfspace_normals(), std::vector<Rational>(c.metric_diag()));
  auto eg = reduced.euclidean_generators();
  double co = clamp_cos(dotd(eg[0], eg[1]) / (normd(eg[0]) * normd(eg[1])));
  return AngleValue::exact(std::acos(co) / (2.0 * kPi), kExactErr);
}

AngleValue girard_angle(const std::array<std::vector<double>, 3>& gens) {
  for (const auto& g : gens)
    if (g.size() != 3) throw ShapeError("girard_angle: generators must be 3-vectors");
  auto corner = [&](int i, int j, int k) {
    auto a = crossd(gens[i], gens[j]);
    auto b = crossd(gens[i], gens[k]);
    double na = normd(a), nb = normd(b);
    if (na < 1e-14 || nb < 1e-14)
      throw DegeneracyError("girard_angle: linearly dependent generators");
    return std::acos(clamp_cos(dotd(a, b) / (na * nb)));
  };
  double excess = corner(0, 1, 2) + corner(1, 0, 2) + corner(2, 0, 1) - kPi;
  return {excess / (4.0 * kPi), AngleMethod::Exact, kExactErr, {}, {}};
}

AngleValue girard_angle(const RVec& v1, const RVec& v2, const RVec& v3) {
  RMatrix m(std::vector<RVec>{v1, v2, v3});
  if (det(m) == 0) throw DegeneracyError("girard_angle: linearly dependent generators");
  return girard_angle({to_double_vec(v1), to_double_vec(v2), to_double_vec(v3)});
}

AngleValue cone_angle_3d(const PointedCone& c) {
  if (c.dim() != 3) throw ShapeError("cone_angle_3d: cone must be 3-dimensional");
  if (c.lineality_dim() > 0) throw LinealityError("cone_angle_3d: cone is not pointed");
  double total = 0.0;
  double err = 0.0;
  for (const auto& piece : triangulate_cone(c)) {
    auto eg = piece.euclidean_generators();
    if (eg.size() != 3) throw ConsistencyError("cone_angle_3d: non-simplicial piece");
    AngleValue a = girard_angle({eg[0], eg[1], eg[2]});
    total += a.value;
    err += a.abs_error;
  }
  return {total, AngleMethod::Exact, err, {}, {}};
}

// ---------------------------------------------------------------------------
// Hypergeometric series

AomotoInput AomotoInput::from_generators(const std::vector<std::vector<double>>& gens) {
  const int d = static_cast<int>(gens.size());
  if (d < 2) throw ShapeError("AomotoInput: need dimension >= 2");
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != d) throw ShapeError("AomotoInput: ragged generators");

  AomotoInput in;
  in.dim = d;

  // Columns are generators; rows of the inverse are inward facet normals.
  std::vector<std::vector<double>> vmat(d, std::vector<double>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) vmat[i][j] = gens[j][i];
  if (std::abs(determinant(vmat)) < 1e-12)
    throw DegeneracyError("AomotoInput: generators are linearly dependent");
  auto vinv = invert(vmat);
  in.unit_normals.resize(d);
  for (int i = 0; i < d; ++i) {
    double n = normd(vinv[i]);
    in.unit_normals[i].resize(d);
    for (int j = 0; j < d; ++j) in.unit_normals[i][j] = vinv[i][j] / n;
  }

  in.gram.assign(d, std::vector<double>(d));
  in.dihedral_cos.assign(d, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      in.gram[i][j] = dotd(in.unit_normals[i], in.unit_normals[j]);
      if (i != j) in.dihedral_cos[i][j] = -in.gram[i][j];
    }

  double det_g = determinant(in.gram);
  in.k_diag.resize(d);
  for (int k = 0; k < d; ++k) {
    std::vector<std::vector<double>> minor(d - 1, std::vector<double>(d - 1));
    for (int i = 0, ii = 0; i < d; ++i) {
      if (i == k) continue;
      for (int j = 0, jj = 0; j < d; ++j) {
        if (j == k) continue;
        minor[ii][jj++] = in.gram[i][j];
      }
      ++ii;
    }
    in.k_diag[k] = determinant(minor) / det_g;
  }
  auto ginv = invert(in.gram);
  in.b_matrix.assign(d, std::vector<double>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) in.b_matrix[i][j] = ginv[i][j] / (in.k_diag[i] * in.k_diag[j]);

  in.generator_gram.assign(d, std::vector<double>(d));
  std::vector<std::vector<double>> unit_gens = gens;
  for (auto& g : unit_gens) {
    double n = normd(g);
    for (auto& e : g) e /= n;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) in.generator_gram[i][j] = dotd(unit_gens[i], unit_gens[j]);
  return in;
}

AomotoInput AomotoInput::from_cone(const PointedCone& c) {
  if (!c.is_simplicial()) throw ShapeError("AomotoInput: cone is not simplicial");
  PointedCone reduced = PointedCone::from_generators(c.dim(), c.extreme_rays(),
                                                     std::vector<Rational>(c.metric_diag()));
  return from_generators(reduced.euclidean_generators());
}

namespace {

// Enumerates multi-indices with given total; fn(m, sums) where sums[k] is
// the total of entries whose pair contains k.
struct SeriesTables {
  std::vector<double> lgamma_half;  // lgamma(j/2), j >= 1
  std::vector<double> lfact;        // log(j!)
  explicit SeriesTables(int max_arg) {
    lgamma_half.resize(2 * max_arg + 4);
    for (size_t j = 1; j < lgamma_half.size(); ++j) lgamma_half[j] = std::lgamma(j / 2.0);
    lfact.resize(max_arg + 2);
    lfact[0] = 0.0;
    for (size_t j = 1; j < lfact.size(); ++j) lfact[j] = lfact[j - 1] + std::log(static_cast<double>(j));
  }
};

}  // namespace

AngleValue aomoto_angle(const AomotoInput& a, double tol, int max_total_order,
                        AomotoVariant variant) {
  const int d = a.dim;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  const int p = static_cast<int>(pairs.size());

  std::vector<double> coef(p);
  for (int q = 0; q < p; ++q) {
    auto [i, j] = pairs[q];
    coef[q] = (variant == AomotoVariant::NormalGram) ? a.b_matrix[i][j] : a.generator_gram[i][j];
  }

  double prefactor;
  if (variant == AomotoVariant::NormalGram) {
    prefactor = std::sqrt(determinant(a.b_matrix)) / std::pow(kPi, d / 2.0);
  } else {
    prefactor = std::sqrt(determinant(a.generator_gram)) / std::pow(4.0 * kPi, d / 2.0);
  }

  SeriesTables tables(max_total_order + 2);
  std::vector<int> m(p, 0);
  std::vector<int> s(d, 0);

  double total = 0.0;
  double prev_contrib = 0.0;
  int rising = 0;
  std::uint64_t term_budget = 20'000'000;
  for (int order = 0; order <= max_total_order; ++order) {
    double contrib = 0.0;
    // Enumerate compositions of `order` into p parts.
    std::vector<int> comp(p, 0);
    comp[p - 1] = order;
    for (;;) {
      double lt = 0.0;
      bool dead = false;
      int sign = 1;
      std::fill(s.begin(), s.end(), 0);
      for (int q = 0; q < p; ++q) {
        int mq = comp[q];
        if (mq) {
          double c = coef[q];
          if (c == 0.0) { dead = true; break; }
          lt += mq * std::log(std::abs(2.0 * c)) - tables.lfact[mq];
          if (-2.0 * c < 0.0 && (mq & 1)) sign = -sign;
        }
        s[pairs[q].first] += mq;
        s[pairs[q].second] += mq;
      }
      if (!dead) {
        for (int k = 0; k < d; ++k) lt += tables.lgamma_half[s[k] + 1];
        contrib += sign * std::exp(lt);
      }
      if (--term_budget == 0)
        throw SeriesDivergence("series term budget exhausted before tolerance");
      // next composition with the same total
      int q = p - 1;
      while (q > 0 && comp[q] == 0) --q;
      if (q == 0) break;
      int carry = comp[q];
      comp[q] = 0;
      ++comp[q - 1];
      comp[p - 1] = carry - 1;
    }
    total += contrib;
    if (order > 0) {
      rising = (std::abs(contrib) > std::abs(prev_contrib)) ? rising + 1 : 0;
      if (rising >= 4)
        throw SeriesDivergence("series order contributions are increasing; fall back to Monte Carlo");
      if (std::abs(contrib) < tol) {
        return {prefactor * total, AngleMethod::Aomoto, std::abs(prefactor * contrib) + 10 * tol, {}, {}};
      }
    } else if (p == 0 || order == 0) {
      // Orthogonal data: only the order-0 term survives.
      bool all_zero = std::all_of(coef.begin(), coef.end(), [](double c) { return c == 0.0; });
      if (all_zero)
        return {prefactor * total, AngleMethod::Aomoto, 10 * tol, {}, {}};
    }
    prev_contrib = contrib;
  }
  throw SeriesDivergence("series did not meet tolerance before the order cap");
}

AomotoCalibration aomoto_calibration_report(int dim, int n_cones, std::uint64_t seed) {
  AomotoCalibration cal;
  cal.dim = dim;

  std::vector<std::vector<double>> orthant(dim, std::vector<double>(dim, 0.0));
  for (int i = 0; i < dim; ++i) orthant[i][i] = 1.0;
  AomotoInput in = AomotoInput::from_generators(orthant);
  cal.orthant_raw = aomoto_angle(in, 1e-12, 60, AomotoVariant::NormalGram).value;
  cal.orthant_expected = std::pow(2.0, -dim);
  cal.measured_ratio = cal.orthant_raw / cal.orthant_expected;

  // The residual study needs the exact oracle, so it runs in dimension 3.
  for (int t = 0; dim == 3 && t < n_cones; ++t) {
    CounterRng rng(seed, static_cast<std::uint64_t>(t) + 1);
    std::vector<std::vector<double>> gens(dim, std::vector<double>(dim, 0.0));
    for (int i = 0; i < dim; ++i) {
      gens[i][i] = 1.0;
      for (int j = 0; j < dim; ++j) gens[i][j] += 0.26 * (rng.uniform01() - 0.5);
    }
    double reference = girard_angle({gens[0], gens[1], gens[2]}).value;
    AomotoInput ai = AomotoInput::from_generators(gens);
    double printed = aomoto_angle(ai, 1e-12, 80, AomotoVariant::NormalGram).value;
    double gram = aomoto_angle(ai, 1e-12, 80, AomotoVariant::GeneratorGram).value;
    cal.residuals_after_calibration.push_back(std::abs(printed / cal.measured_ratio - reference));
    cal.generator_gram_residuals.push_back(std::abs(gram - reference));
  }
  for (double r : cal.residuals_after_calibration) cal.max_residual = std::max(cal.max_residual, r);
  for (double r : cal.generator_gram_residuals)
    cal.generator_gram_max_residual = std::max(cal.generator_gram_max_residual, r);
  cal.constant_calibration_suffices = !cal.residuals_after_calibration.empty() &&
                                      cal.max_residual < 1e-6;
  return cal;
}

// ---------------------------------------------------------------------------
// Monte Carlo

AngleValue monte_carlo_angle(const PointedCone& c, std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("monte_carlo_angle: need at least one sample");
  const int k = c.dim();
  if (k == 0) return {1.0, AngleMethod::MonteCarlo, 0.0, seed, n};
  auto hs = c.euclidean_halfspaces();

  std::uint64_t hits = 0;
  std::vector<double> z(k);
  for (std::uint64_t i = 0; i < n; ++i) {
    CounterRng rng(seed, i);
    for (int j = 0; j < k; ++j) z[j] = rng.normal();
    bool inside = true;
    for (const auto& h : hs) {
      if (dotd(h, z) < 0.0) { inside = false; break; }
    }
    if (inside) ++hits;
  }
  double phat = static_cast<double>(hits) / static_cast<double>(n);
  double err = 3.0 * std::sqrt(phat * (1.0 - phat) / static_cast<double>(n));
  return {phat, AngleMethod::MonteCarlo, err, seed, n};
}

// ---------------------------------------------------------------------------
// Dispatcher

AngleValue cone_angle(const PointedCone& c, const EnginePolicy& policy, std::uint64_t seed_salt) {
  const int k = c.dim();
  if (k == 0) return AngleValue::exact(1.0);
  if (k == 1) {
    if (c.halfspace_normals().empty()) return AngleValue::exact(1.0);  // whole line
    return AngleValue::exact(0.5);
  }
  if (k == 2) return planar_angle(c);
  if (k == 3) {
    if (c.lineality_dim() > 0) {
      if (c.halfspace_normals().size() == 1) return AngleValue::exact(0.5);
      throw LinealityError("cone_angle: non-pointed 3-dimensional cone");
    }
    return cone_angle_3d(c);
  }
  std::uint64_t mc_seed = CounterRng::mix(policy.seed ^ CounterRng::mix(seed_salt));
  if (policy.high_dim == HighDimEngine::AomotoThenMc) {
    try {
      double total = 0.0, err = 0.0;
      for (const auto& piece : triangulate_cone(c)) {
        AngleValue v = aomoto_angle(AomotoInput::from_cone(piece), policy.aomoto_tol,
                                    policy.aomoto_max_order, AomotoVariant::GeneratorGram);
        total += v.value;
        err += v.abs_error;
      }
      return {std::clamp(total, 0.0, 1.0), AngleMethod::Aomoto, err, {}, {}};
    } catch (const SeriesDivergence&) {
      // fall through to Monte Carlo on the whole cone
    }
  }
  return monte_carlo_angle(c, policy.mc_samples, mc_seed);
}

std::uint64_t point_seed_salt(const Rational& t, const RVec& x) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001B3ULL;
    }
  };
  feed(rational_to_string(t));
  for (const auto& c : x) feed(rational_to_string(c));
  return h;
}

AngleValue solid_angle_dilated(const Polytope& p, const Rational& t, const RVec& x,
                               const EnginePolicy& policy) {
  if (!p.contains(x, t)) return AngleValue::exact(0.0);
  auto tc = p.tangent_cone(x, t);
  return cone_angle(tc.cone, policy, point_seed_salt(t, x));
}

AngleValue solid_angle(const Polytope& p, const RVec& x, const EnginePolicy& policy) {
  return solid_angle_dilated(p, Rational(1), x, policy);
}

// ---------------------------------------------------------------------------
// Prism corner bound

double unit_ball_volume(int d) {
  return std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

PrismBoundReport prism_angle_bound_check(const PointedCone& c, const RVec& x,
                                         std::uint64_t n, std::uint64_t seed) {
  (void)x;  // the bound is translation-invariant; the apex is echoed by callers
  const int k = c.dim();
  if (k > 3) throw SizeGuardError("prism_angle_bound_check: base dimension must be <= 3");
  if (c.lineality_dim() > 0) throw LinealityError("prism_angle_bound_check: base cone not pointed");

  auto lift = [&](int updown) {
    std::vector<RVec> gens;
    for (const auto& g : c.generators()) {
      RVec v = g;
      v.push_back(Rational(0));
      gens.push_back(std::move(v));
    }
    RVec e(k + 1, Rational(0));
    e[k] = updown;
    gens.push_back(std::move(e));
    std::vector<RVec> hs;
    for (const auto& h : c.halfspace_normals()) {
      RVec v = h;
      v.push_back(Rational(0));
      hs.push_back(std::move(v));
    }
    RVec he(k + 1, Rational(0));
    he[k] = updown;
    hs.push_back(std::move(he));
    std::vector<Rational> metric = c.metric_diag();
    if (!metric.empty()) metric.push_back(Rational(1));
    return PointedCone::from_generators_and_halfspaces(k + 1, std::move(gens), std::move(hs),
                                                       std::move(metric));
  };

  PrismBoundReport rep;
  rep.base = cone_angle(c);
  rep.corner_bottom = monte_carlo_angle(lift(+1), n, CounterRng::mix(seed ^ 0x626F74ULL));
  rep.corner_top = monte_carlo_angle(lift(-1), n, CounterRng::mix(seed ^ 0x746F70ULL));
  rep.ball_ratio = unit_ball_volume(k) / unit_ball_volume(k + 1);

  double sb = rep.corner_bottom.abs_error / 3.0;
  double st = rep.corner_top.abs_error / 3.0;
  rep.symmetric_within_4sigma =
      std::abs(rep.corner_bottom.value - rep.corner_top.value) <= 4.0 * std::hypot(sb, st) + 1e-12;
  rep.bound_holds =
      rep.corner_bottom.value <= rep.ball_ratio * rep.base.value + 4.0 * sb + 1e-12 &&
      rep.corner_top.value <= rep.ball_ratio * rep.base.value + 4.0 * st + 1e-12;
  return rep;
}

}  // namespace solang
