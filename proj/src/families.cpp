#include "solang/families.hpp"

#include <algorithm>
#include <cmath>

#include "solang/solidpoly.hpp"

namespace solang {

FamilyName family_by_name(const std::string& name) {
  if (name == "reeve") return FamilyName::Reeve;
  if (name == "permutation") return FamilyName::PermutationSimplex;
  if (name == "cube") return FamilyName::UnitCube;
  if (name == "delta") return FamilyName::DeltaH;
  if (name == "regular-tetrahedron") return FamilyName::RegularTetrahedron;
  if (name == "simplex") return FamilyName::StandardSimplex;
  if (name == "half-prism") return FamilyName::HalfPrism;
  if (name == "interval") return FamilyName::Interval;
  throw ValidationError("unknown family: " + name);
}

std::string family_name(FamilyName f) {
  switch (f) {
    case FamilyName::Reeve: return "reeve";
    case FamilyName::PermutationSimplex: return "permutation";
    case FamilyName::UnitCube: return "cube";
    case FamilyName::DeltaH: return "delta";
    case FamilyName::RegularTetrahedron: return "regular-tetrahedron";
    case FamilyName::StandardSimplex: return "simplex";
    case FamilyName::HalfPrism: return "half-prism";
    case FamilyName::Interval: return "interval";
  }
  return "?";
}

namespace {

RVec unit(int d, int i) {
  RVec e(d, Rational(0));
  e[i] = 1;
  return e;
}

std::vector<RVec> cube_vertices(int d) {
  std::vector<RVec> out;
  for (int mask = 0; mask < (1 << d); ++mask) {
    RVec v(d);
    for (int j = 0; j < d; ++j) v[j] = (mask >> j) & 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Polytope build(const FamilySpec& spec) {
  switch (spec.name) {
    case FamilyName::Reeve: {
      if (spec.h < 1) throw ValidationError("reeve: requires h >= 1");
      return Polytope::from_points({RVec{0, 0, 0}, RVec{1, 0, 0}, RVec{0, 1, 0},
                                    RVec{Rational(1), Rational(1), Rational(spec.h)}});
    }
    case FamilyName::PermutationSimplex: {
      const int d = spec.d;
      if (d < 1 || d > 4) throw ValidationError("permutation: requires 1 <= d <= 4");
      std::vector<int> pi = spec.pi;
      if (pi.empty()) {
        pi.resize(d);
        for (int i = 0; i < d; ++i) pi[i] = i + 1;
      }
      std::vector<int> sorted = pi;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < d; ++i)
        if (sorted[i] != i + 1)
          throw ValidationError("permutation: pi must be a permutation of 1..d");
      // The hull as displayed lacks the origin and is (d-1)-dimensional;
      // the cube tiling needs the d-simplex, so the origin is included.
      std::vector<RVec> pts{RVec(d, Rational(0))};
      RVec acc(d, Rational(0));
      for (int i = 0; i < d; ++i) {
        acc = add(acc, unit(d, pi[i] - 1));
        pts.push_back(acc);
      }
      return Polytope::from_points(pts);
    }
    case FamilyName::UnitCube: {
      if (spec.d < 1 || spec.d > 4) throw ValidationError("cube: requires 1 <= d <= 4");
      return Polytope::from_points(cube_vertices(spec.d));
    }
    case FamilyName::DeltaH: {
      const int d = spec.d;
      if (d <= 2) throw ValidationError("delta: requires d > 2");
      if (d > 4) throw ValidationError("delta: requires d <= 4");
      if (static_cast<int>(spec.h_list.size()) != d - 1)
        throw ValidationError("delta: needs d-1 slope parameters");
      std::vector<RVec> pts{RVec(d, Rational(0))};
      for (int i = 0; i < d - 1; ++i) pts.push_back(unit(d, i));
      RVec top(d);
      for (int i = 0; i < d - 1; ++i) top[i] = spec.h_list[i];
      top[d - 1] = 1;
      pts.push_back(std::move(top));
      return Polytope::from_points(pts);
    }
    case FamilyName::RegularTetrahedron:
      return Polytope::from_points({RVec{0, 0, 0}, RVec{0, 1, 1}, RVec{1, 0, 1}, RVec{1, 1, 0}});
    case FamilyName::StandardSimplex: {
      if (spec.d < 1 || spec.d > 4) throw ValidationError("simplex: requires 1 <= d <= 4");
      std::vector<RVec> pts{RVec(spec.d, Rational(0))};
      for (int i = 0; i < spec.d; ++i) pts.push_back(unit(spec.d, i));
      return Polytope::from_points(pts);
    }
    case FamilyName::HalfPrism: {
      if (spec.d < 1 || spec.d > 4) throw ValidationError("half-prism: requires 1 <= d <= 4");
      auto pts = cube_vertices(spec.d);
      for (auto& v : pts)
        if (v[0] == 1) v[0] = Rational(1, 2);
      return Polytope::from_points(pts);
    }
    case FamilyName::Interval: {
      if (spec.a >= spec.b) throw ValidationError("interval: requires a < b");
      return Polytope::from_points({RVec{spec.a}, RVec{spec.b}});
    }
  }
  throw ValidationError("unknown family");
}

std::array<double, 4> delta3_vertex_angle_formulas(double h) {
  const double pi = 3.14159265358979323846;
  double c1 = h / std::sqrt(h * h + 1);
  double c2 = -h * h / (h * h + 1);
  double c3 = (-2 * h + 1) / std::sqrt(4 * h * h - 4 * h + 3);
  double c4 = (2 * h * h - h + 1) / std::sqrt((h * h + 1) * (4 * h * h - 4 * h + 3));
  double w0 = (2 * std::acos(c1) + std::acos(c2) - pi) / (4 * pi);
  double w1 = (std::acos(c1) + std::acos(c3) + std::acos(c4) - pi) / (4 * pi);
  double w3 = (std::acos(c2) + 2 * std::acos(c4) - pi) / (4 * pi);
  return {w0, w1, w1, w3};
}

VertexSumScan asymptotic_vertex_sum_scan(int d, const std::vector<long>& h_values,
                                         DeltaPattern pattern, const EnginePolicy& policy) {
  if (d != 3 && d != 4)
    throw ValidationError("asymptotic_vertex_sum_scan: d must be 3 or 4");
  VertexSumScan scan;
  for (long h : h_values) {
    FamilySpec spec;
    spec.name = FamilyName::DeltaH;
    spec.d = d;
    spec.h_list.assign(d - 1, 1);
    spec.h_list[0] = h;
    spec.h_list[1] = h;
    if (pattern == DeltaPattern::AllEqual)
      for (auto& x : spec.h_list) x = h;
    auto vs = vertex_sum(build(spec), policy);
    scan.rows.push_back({h, vs.value, vs.error});
  }
  scan.monotone_decreasing = true;
  for (size_t i = 1; i < scan.rows.size(); ++i)
    if (scan.rows[i].vertex_sum >= scan.rows[i - 1].vertex_sum) scan.monotone_decreasing = false;
  return scan;
}

}  // namespace solang
