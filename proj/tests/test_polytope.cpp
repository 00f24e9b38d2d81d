#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "solang/polytope.hpp"

using namespace solang;

namespace {

RVec rv(std::initializer_list<long> xs) {
  RVec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
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

std::vector<RVec> reeve_vertices(long h) {
  return {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), {Rational(1), Rational(1), Rational(h)}};
}

std::map<int, int> face_counts(const Polytope& p) {
  std::map<int, int> c;
  for (const auto& f : p.faces()) c[f.dim]++;
  return c;
}

}  // namespace

TEST_CASE("hull facets of the unit square") {
  auto hs = hull_facets(cube_vertices(2));
  REQUIRE(hs.size() == 4);
  auto has = [&](std::initializer_list<long> n, long off) {
    Halfspace want{rv(n), Rational(off)};
    return std::any_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return h == want; });
  };
  CHECK(has({1, 0}, 0));
  CHECK(has({0, 1}, 0));
  CHECK(has({-1, 0}, -1));
  CHECK(has({0, -1}, -1));
}

TEST_CASE("hull facets of the standard 3-simplex") {
  auto hs = hull_facets({rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
  REQUIRE(hs.size() == 4);
  Halfspace top{rv({-1, -1, -1}), Rational(-1)};
  CHECK(std::count(hs.begin(), hs.end(), top) == 1);
}

TEST_CASE("hull facets of the Reeve tetrahedron") {
  // oracle: all vertex triples, keep one-sided hyperplanes
  auto hs = hull_facets(reeve_vertices(2));
  CHECK(hs.size() == 4);
  for (const auto& h : hs) {
    int tight = 0;
    for (const auto& v : reeve_vertices(2))
      if (dot(h.normal, v) == h.offset) ++tight;
    CHECK(tight == 3);
  }
}

TEST_CASE("hull facets reject degenerate input") {
  CHECK_THROWS_AS(hull_facets({rv({0, 0}), rv({1, 0}), rv({2, 0})}), DimensionError);
}

TEST_CASE("hull facets are invariant under permuting the input") {
  auto pts = reeve_vertices(3);
  auto base = Polytope::from_points(pts);
  std::mt19937 rng(42);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(pts.begin(), pts.end(), rng);
    auto p = Polytope::from_points(pts);
    CHECK(p.facets() == base.facets());
    CHECK(p.vertices() == base.vertices());
  }
}

TEST_CASE("non-vertex input points are pruned") {
  auto pts = cube_vertices(2);
  pts.push_back({Rational(1, 2), Rational(1, 2)});  // center
  pts.push_back({Rational(1, 2), Rational(0)});     // edge midpoint
  auto p = Polytope::from_points(pts);
  CHECK(p.vertices().size() == 4);
}

TEST_CASE("face lattice of the 3-cube") {
  auto p = Polytope::from_points(cube_vertices(3));
  auto counts = face_counts(p);
  CHECK(counts[0] == 8);
  CHECK(counts[1] == 12);
  CHECK(counts[2] == 6);
  CHECK(counts[3] == 1);
}

TEST_CASE("face lattice of simplices matches binomial counts") {
  for (int d = 1; d <= 4; ++d) {
    std::vector<RVec> pts{RVec(d, Rational(0))};
    for (int i = 0; i < d; ++i) {
      RVec e(d, Rational(0));
      e[i] = 1;
      pts.push_back(std::move(e));
    }
    auto p = Polytope::from_points(pts);
    auto counts = face_counts(p);
    auto binom = [](int n, int k) {
      long r = 1;
      for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
      return static_cast<int>(r);
    };
    for (int k = 0; k <= d; ++k) CHECK(counts[k] == binom(d + 1, k + 1));
  }
}

TEST_CASE("face lattice of the square pyramid") {
  // oracle: tight sets enumerated by hand
  auto pts = cube_vertices(2);
  for (auto& v : pts) v.push_back(Rational(0));
  pts.push_back({Rational(1, 2), Rational(1, 2), Rational(1)});
  auto p = Polytope::from_points(pts);
  auto counts = face_counts(p);
  CHECK(counts[0] == 5);
  CHECK(counts[1] == 8);
  CHECK(counts[2] == 5);
  CHECK(counts[3] == 1);
}

TEST_CASE("lattice points of cubes and simplices") {
  for (int d = 1; d <= 3; ++d) {
    auto cube = Polytope::from_points(cube_vertices(d));
    for (long t = 1; t <= 3; ++t) {
      long expect = 1;
      for (int i = 0; i < d; ++i) expect *= (t + 1);
      CHECK(cube.count_lattice_points(t) == expect);
    }
  }
  for (long h : {1L, 5L, 12L}) {
    auto reeve = Polytope::from_points(reeve_vertices(h));
    CHECK(reeve.count_lattice_points(1) == 4);
  }
  auto tri = Polytope::from_points({rv({0, 0}), rv({1, 0}), rv({0, 1})});
  CHECK(tri.count_lattice_points(2) == 6);
}

TEST_CASE("lattice points are sorted and exact") {
  auto tri = Polytope::from_points({rv({0, 0}), rv({1, 0}), rv({0, 1})});
  auto pts = tri.lattice_points(2);
  REQUIRE(pts.size() == 6);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(pts.front() == std::vector<long>{0, 0});
  CHECK(pts.back() == std::vector<long>{2, 0});
}

TEST_CASE("relative interior counts") {
  auto sq = Polytope::from_points(cube_vertices(2));
  CHECK(sq.count_relative_interior(sq.top_face(), 2) == 1);  // (1,1)

  auto seg = Polytope::from_points({rv({0}), rv({1})});
  CHECK(seg.count_relative_interior(seg.top_face(), 3) == 2);

  auto tri = Polytope::from_points({rv({0, 0}), rv({1, 0}), rv({0, 1})});
  CHECK(tri.count_relative_interior(tri.top_face(), 3) == 1);
}

TEST_CASE("faces partition the lattice points") {
  for (auto pts : {reeve_vertices(3), cube_vertices(3)}) {
    auto p = Polytope::from_points(pts);
    for (long t = 1; t <= 3; ++t) {
      long total = 0;
      for (const auto& f : p.faces()) total += p.count_relative_interior(f, t);
      CHECK(total == p.count_lattice_points(t));
    }
  }
}

TEST_CASE("tangent cone at an interior point is trivial") {
  auto cube = Polytope::from_points(cube_vertices(3));
  auto tc = cube.tangent_cone({Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  CHECK(tc.carrier.dim == 3);
  CHECK(tc.cone.dim() == 0);
}

TEST_CASE("tangent cone at a square edge midpoint is a halfline") {
  auto sq = Polytope::from_points(cube_vertices(2));
  auto tc = sq.tangent_cone({Rational(1, 2), Rational(0)});
  CHECK(tc.carrier.dim == 1);
  CHECK(tc.cone.dim() == 1);
  REQUIRE(tc.cone.generators().size() == 1);
  CHECK(tc.cone.generators()[0][0] > 0);
}

TEST_CASE("tangent cone at a regular tetrahedron vertex") {
  auto p = Polytope::from_points({rv({0, 0, 0}), rv({0, 1, 1}), rv({1, 0, 1}), rv({1, 1, 0})});
  auto tc = p.tangent_cone(rv({0, 0, 0}));
  CHECK(tc.carrier.dim == 0);
  CHECK(tc.cone.dim() == 3);
  auto rays = tc.cone.extreme_rays();
  REQUIRE(rays.size() == 3);
  std::vector<RVec> want{rv({0, 1, 1}), rv({1, 0, 1}), rv({1, 1, 0})};
  std::sort(want.begin(), want.end());
  CHECK(rays == want);
}

TEST_CASE("tangent cone rejects outside points") {
  auto sq = Polytope::from_points(cube_vertices(2));
  CHECK_THROWS_AS(sq.tangent_cone(rv({5, 5})), ContainmentError);
}

TEST_CASE("tangent cones at vertices are full-dimensional and pointed") {
  for (auto pts : {reeve_vertices(2), cube_vertices(3)}) {
    auto p = Polytope::from_points(pts);
    for (const auto& v : p.vertices()) {
      auto tc = p.tangent_cone(v);
      CHECK(tc.carrier.dim == 0);
      CHECK(tc.cone.dim() == p.dim());
      CHECK(tc.cone.lineality_dim() == 0);
    }
  }
}

TEST_CASE("tangent cone classifies relative-interior samples to their face") {
  for (auto pts : {cube_vertices(3), reeve_vertices(4)}) {
    auto p = Polytope::from_points(pts);
    for (const auto& f : p.faces()) {
      CHECK(p.tangent_cone(p.relint_point(f)).carrier.vertices == f.vertices);
      // skewed interior combination of the face's vertices
      RVec skew(p.dim(), Rational(0));
      Rational total = 0;
      for (size_t i = 0; i < f.vertices.size(); ++i) {
        Rational w(static_cast<long>(2 * i + 1));
        skew = add(skew, scale(p.vertices()[f.vertices[i]], w));
        total += w;
      }
      skew = scale(skew, Rational(1) / total);
      CHECK(p.tangent_cone(skew).carrier.vertices == f.vertices);
    }
  }
}

TEST_CASE("pointed cone basics") {
  auto orthant = PointedCone::from_generators(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
  CHECK(orthant.lineality_dim() == 0);
  CHECK(orthant.is_simplicial());
  CHECK(orthant.contains(rv({2, 3, 1})));
  CHECK(!orthant.contains(rv({-1, 0, 0})));

  auto halfplane = PointedCone::from_generators(2, {rv({1, 0}), rv({-1, 0}), rv({0, 1})});
  CHECK(halfplane.lineality_dim() == 1);

  CHECK_THROWS_AS(PointedCone::from_generators(3, {rv({1, 0, 0}), rv({0, 1, 0})}),
                  DegeneracyError);
}

TEST_CASE("triangulating a simplicial cone returns it unchanged") {
  auto orthant = PointedCone::from_generators(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
  auto pieces = triangulate_cone(orthant);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].extreme_rays() == orthant.extreme_rays());
}

TEST_CASE("triangulating cones over polygons gives rays-minus-two pieces") {
  auto square_cone = PointedCone::from_generators(
      3, {rv({1, 1, 1}), rv({-1, 1, 1}), rv({1, -1, 1}), rv({-1, -1, 1})});
  CHECK(triangulate_cone(square_cone).size() == 2);

  // cone over a pentagon
  std::vector<RVec> gens{rv({2, 0, 1}), rv({1, 2, 1}), rv({-1, 1, 1}), rv({-1, -1, 1}), rv({1, -2, 1})};
  auto penta_cone = PointedCone::from_generators(3, gens);
  auto pieces = triangulate_cone(penta_cone);
  CHECK(pieces.size() == 3);
  for (const auto& piece : pieces) CHECK(piece.is_simplicial());
}

TEST_CASE("triangulating a non-pointed cone fails") {
  auto halfplane = PointedCone::from_generators(2, {rv({1, 0}), rv({-1, 0}), rv({0, 1})});
  CHECK_THROWS_AS(triangulate_cone(halfplane), LinealityError);
}

TEST_CASE("polytope triangulation and volume") {
  auto cube = Polytope::from_points(cube_vertices(3));
  auto tris = cube.triangulate();
  CHECK(tris.size() >= 5);
  CHECK(cube.volume() == 1);

  for (long h = 1; h <= 6; ++h) {
    auto reeve = Polytope::from_points(reeve_vertices(h));
    CHECK(reeve.volume() == Rational(h, 6));
  }

  auto seg = Polytope::from_points({{Rational(1, 3)}, {Rational(4, 3)}});
  CHECK(seg.volume() == 1);
}

TEST_CASE("dilation scales offsets only") {
  auto sq = Polytope::from_points(cube_vertices(2));
  auto big = sq.dilate(Rational(3));
  CHECK(big.count_lattice_points(1) == sq.count_lattice_points(3));
  CHECK(big.facets().size() == 4);
}
