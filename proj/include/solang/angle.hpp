#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solang/polytope.hpp"

namespace solang {

enum class AngleMethod { Exact, Aomoto, MonteCarlo };

std::string method_name(AngleMethod m);

// Normalized solid angle in [0,1] with provenance and an error bound.
struct AngleValue {
  double value = 0.0;
  AngleMethod method = AngleMethod::Exact;
  double abs_error = 0.0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> sample_count;

  static AngleValue exact(double v, double err = 0.0) { return {v, AngleMethod::Exact, err, {}, {}}; }
};

// Engine selection for quotient dimension >= 4. Dimensions <= 3 always use
// the exact formulas.
enum class HighDimEngine { AomotoThenMc, McOnly };

struct EnginePolicy {
  HighDimEngine high_dim = HighDimEngine::AomotoThenMc;
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double aomoto_tol = 1e-10;
  int aomoto_max_order = 60;

  static EnginePolicy from_name(const std::string& name);  // exact | aomoto | mc
};

// Counter-based generator: draw i depends only on (seed, i), so results are
// independent of any partitioning of the index range.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index);
  std::uint64_t next_u64();
  double uniform01();          // in (0,1)
  double normal();             // standard normal (Box-Muller, cached pair)
  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

// --- Exact engines (quotient dimension <= 3) -------------------------------

// Angle of a 2-dimensional cone: arc between the extreme rays over 2*pi.
// Accepts the degenerate halfplane (value 1/2); other non-pointed inputs
// raise LinealityError.
AngleValue planar_angle(const PointedCone& c);

// Spherical-excess formula for a simplicial 3-dimensional cone given by
// three linearly independent generators: the three dihedral angles, read off
// cross products, sum to pi plus the spherical area.
AngleValue girard_angle(const std::array<std::vector<double>, 3>& gens);
AngleValue girard_angle(const RVec& v1, const RVec& v2, const RVec& v3);

// Fan triangulation + Girard on the pieces.
AngleValue cone_angle_3d(const PointedCone& c);

// --- Series engine ---------------------------------------------------------

// Data for the hypergeometric series of a simplicial cone: unit inward facet
// normals with the derived Gram machinery, plus the generator Gram matrix
// used by the cross-validated variant.
struct AomotoInput {
  int dim = 0;
  std::vector<std::vector<double>> unit_normals;   // rows n_0..n_{d-1}
  std::vector<std::vector<double>> gram;           // G = <n_i, n_j>
  std::vector<std::vector<double>> b_matrix;       // B = K^-1 G^-1 K^-1
  std::vector<double> k_diag;                      // K_ii = det G_i / det G
  std::vector<std::vector<double>> dihedral_cos;   // cos(theta_ij) = -<n_i,n_j>
  std::vector<std::vector<double>> generator_gram; // <v_i, v_j>, unit generators

  static AomotoInput from_generators(const std::vector<std::vector<double>>& gens);
  static AomotoInput from_cone(const PointedCone& c);
};

enum class AomotoVariant {
  NormalGram,     // series coefficients from B (normal-based, as displayed)
  GeneratorGram,  // series coefficients from the generator Gram matrix
};

// Partial sum grouped by total order |m| over nonnegative multi-indices,
// stopping once an order contributes less than tol. Throws SeriesDivergence
// when order contributions fail to decrease before max_total_order.
//
// NormalGram returns the raw series value C * sum (no normalization); its
// measured orthant value is 2^d times the orthant angle, and the residual
// discrepancy after that constant is data-dependent -- see
// aomoto_calibration_report. GeneratorGram is normalized to the angle
// directly and is the variant used as an engine.
AngleValue aomoto_angle(const AomotoInput& a, double tol = 1e-10, int max_total_order = 60,
                        AomotoVariant variant = AomotoVariant::GeneratorGram);

struct AomotoCalibration {
  int dim;
  double orthant_raw;        // raw NormalGram series value on the orthant
  double orthant_expected;   // 2^-d
  double measured_ratio;     // orthant_raw / orthant_expected
  // Residual relative discrepancy of ratio-calibrated NormalGram vs the
  // exact engine on random near-orthogonal cones (empty for d > 3).
  std::vector<double> residuals_after_calibration;
  double max_residual = 0.0;
  bool constant_calibration_suffices = false;
  // Same study for the GeneratorGram variant.
  std::vector<double> generator_gram_residuals;
  double generator_gram_max_residual = 0.0;
};

AomotoCalibration aomoto_calibration_report(int dim, int n_cones = 100, std::uint64_t seed = 0);

// --- Monte Carlo -----------------------------------------------------------

// Fraction of uniform sphere directions inside the cone;
// abs_error = 3*sqrt(p(1-p)/n). Deterministic given (seed, n).
AngleValue monte_carlo_angle(const PointedCone& c, std::uint64_t n, std::uint64_t seed);

// --- Dispatcher ------------------------------------------------------------

// Solid angle of x with respect to t*P: 0 outside, 1 in the interior, 1/2 in
// a facet's relative interior, else the quotient tangent-cone angle.
AngleValue solid_angle(const Polytope& p, const RVec& x, const EnginePolicy& policy = {});
AngleValue solid_angle_dilated(const Polytope& p, const Rational& t, const RVec& x,
                               const EnginePolicy& policy = {});

// Angle of a pointed cone by quotient dimension: <=3 exact, >=4 per policy.
AngleValue cone_angle(const PointedCone& c, const EnginePolicy& policy = {},
                      std::uint64_t seed_salt = 0);

// --- Prism corner bound ----------------------------------------------------

struct PrismBoundReport {
  AngleValue corner_bottom;   // angle of (K x [0,1]) at (x, 0), Monte Carlo
  AngleValue corner_top;      // angle of (K x [0,1]) at (x, 1), Monte Carlo
  AngleValue base;            // angle of K at x, exact
  double ball_ratio;          // c = vol(B^d) / vol(B^(d+1))
  bool symmetric_within_4sigma;
  bool bound_holds;           // corner <= c * base within 4 sigma
};

// Checks the prism-corner identity and inequality for a pointed cone of
// dimension <= 3 with apex x.
PrismBoundReport prism_angle_bound_check(const PointedCone& c, const RVec& x,
                                         std::uint64_t n, std::uint64_t seed);

double unit_ball_volume(int d);

// Stable salt for per-point Monte Carlo seeds.
std::uint64_t point_seed_salt(const Rational& t, const RVec& x);

}  // namespace solang
