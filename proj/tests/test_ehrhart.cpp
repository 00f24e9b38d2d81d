#include "doctest.h"

#include "solang/ehrhart.hpp"
#include "solang/families.hpp"

using namespace solang;

namespace {

Polytope reeve(long h) {
  FamilySpec s;
  s.name = FamilyName::Reeve;
  s.h = h;
  return build(s);
}

Polytope unit_cube(int d) {
  FamilySpec s;
  s.name = FamilyName::UnitCube;
  s.d = d;
  return build(s);
}

Polytope std_simplex(int d) {
  FamilySpec s;
  s.name = FamilyName::StandardSimplex;
  s.d = d;
  return build(s);
}

}  // namespace

TEST_CASE("counts on the named families") {
  // Reeve at t=2 equals h+9 (substituting into the closed form; confirmed
  // by direct enumeration here)
  for (long h : {1L, 2L, 7L, 12L}) CHECK(ehrhart_count(reeve(h), 2) == h + 9);
  CHECK(ehrhart_count(unit_cube(3), 2) == 27);
  // standard simplex: C(t+d, d) by direct enumeration
  auto choose = [](long n, long k) {
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  for (int d = 1; d <= 3; ++d)
    for (long t = 1; t <= 4; ++t) CHECK(ehrhart_count(std_simplex(d), t) == choose(t + d, d));
}

TEST_CASE("ehrhart fit of the Reeve family") {
  for (long h : {1L, 12L, 20L}) {
    auto q = fit_ehrhart(reeve(h));
    REQUIRE(q.is_polynomial());
    const auto& c = q.polynomial();
    CHECK(c[3] == Rational(h, 6));
    CHECK(c[2] == 1);
    CHECK(c[1] == Rational(2) - Rational(h, 6));
    CHECK(c[0] == 1);
  }
}

TEST_CASE("ehrhart fit of the unit cube is (t+1)^d") {
  for (int d = 1; d <= 3; ++d) {
    auto q = fit_ehrhart(unit_cube(d));
    REQUIRE(q.is_polynomial());
    for (int j = 0; j <= d; ++j) CHECK(q.polynomial()[j] == binomial(d, j));
  }
}

TEST_CASE("ehrhart quasipolynomial of the half-open segment") {
  FamilySpec s;
  s.name = FamilyName::Interval;
  s.a = Rational(0);
  s.b = Rational(1, 2);
  auto q = fit_ehrhart(build(s));
  CHECK(q.period == 2);
  // even: t/2 + 1, odd: (t+1)/2
  CHECK(q.constituents[0] == std::vector<Rational>{Rational(1), Rational(1, 2)});
  CHECK(q.constituents[1] == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(q.minimal_period() == 2);
  // direct-count oracle floor(t/2) + 1
  for (long t = 1; t <= 8; ++t) CHECK(q.eval(t) == t / 2 + 1);
}

TEST_CASE("reciprocity on the named families") {
  for (auto& p : {reeve(1), reeve(12), unit_cube(2), unit_cube(3), std_simplex(3)}) {
    auto rep = reciprocity_check(p);
    CHECK(rep.holds);
  }
  // L(-1) = 0 for the Reeve family: no interior points
  auto q = fit_ehrhart(reeve(5));
  CHECK(q.eval(-1) == 0);
}

TEST_CASE("reciprocity requires lattice polytopes") {
  FamilySpec s;
  s.name = FamilyName::Interval;
  s.a = Rational(0);
  s.b = Rational(1, 2);
  CHECK_THROWS_AS(reciprocity_check(build(s)), ValidationError);
}

TEST_CASE("hstar vectors") {
  for (long h : {1L, 2L, 12L}) {
    auto hs = hstar(reeve(h));
    CHECK(hs.entries == std::vector<Int>{1, 0, h - 1, 0});
    CHECK(hs.violations.empty());
  }
  CHECK(hstar(unit_cube(2)).entries == std::vector<Int>{1, 1, 0});
  for (int d = 1; d <= 3; ++d) {
    auto hs = hstar(std_simplex(d));
    CHECK(hs.entries[0] == 1);
    for (int j = 1; j <= d; ++j) CHECK(hs.entries[j] == 0);
  }
}

TEST_CASE("hstar entries sum to the normalized volume on simplices") {
  for (long h : {1L, 2L, 5L, 12L}) {
    auto p = reeve(h);
    Int sum = 0;
    for (const auto& e : hstar(p).entries) sum += e;
    // d! * vol = h
    CHECK(Rational(sum) == p.volume() * 6);
  }
}

TEST_CASE("leading and second coefficients match volume and facet volumes") {
  // leading = volume; second = half the facet (d-1)-volume sum, checked on
  // the cube where facet volumes are 1 each
  for (int d = 2; d <= 3; ++d) {
    auto q = fit_ehrhart(unit_cube(d));
    CHECK(q.polynomial()[d] == unit_cube(d).volume());
    CHECK(q.polynomial()[d - 1] == Rational(2 * d, 2));
  }
  for (long h : {2L, 12L}) {
    auto q = fit_ehrhart(reeve(h));
    CHECK(q.polynomial()[3] == reeve(h).volume());
  }
  // standard triangle: edge lattice lengths are 1 each, so c_1 = 3/2
  auto tri = fit_ehrhart(std_simplex(2));
  CHECK(tri.polynomial()[1] == Rational(3, 2));
}
