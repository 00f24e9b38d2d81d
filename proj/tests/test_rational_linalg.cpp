#include "doctest.h"

#include "solang/linalg.hpp"
#include "solang/polynomial.hpp"
#include "solang/rational.hpp"

using namespace solang;

namespace {

RVec rv(std::initializer_list<long> xs) {
  RVec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("rational parsing and serialization round-trip") {
  CHECK(rational_to_string(parse_rational("3/6")) == "1/2");
  CHECK(rational_to_string(parse_rational("-4/2")) == "-2");
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK(parse_rational("0") == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
  CHECK(floor_rat(Rational(-1, 2)) == -1);
  CHECK(ceil_rat(Rational(-1, 2)) == 0);
  CHECK(floor_rat(Rational(7, 2)) == 3);
}

TEST_CASE("determinant") {
  CHECK(det(RMatrix::identity(3)) == 1);

  RMatrix m(std::vector<RVec>{rv({0, 1, 1}), rv({1, 0, 1}), rv({1, 1, 0})});
  CHECK(det(m) == 2);  // cofactor expansion by hand: 0*(0-1) - 1*(0-1) + 1*(1-0)

  RMatrix s(std::vector<RVec>{rv({1, 2}), rv({2, 4})});
  CHECK(det(s) == 0);

  RMatrix ns(2, 3);
  CHECK_THROWS_AS(det(ns), ShapeError);

  // fractional entries
  RMatrix f(std::vector<RVec>{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}});
  CHECK(f.rows() == 2);
  CHECK(det(f) == Rational(1, 10) - Rational(1, 12));
}

TEST_CASE("determinant is multiplicative on random exact matrices") {
  auto random_matrix = [](int n, int salt) {
    RMatrix m(n, n);
    long state = 12345 + salt;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        state = (state * 1103515245 + 12345) & 0x7FFFFFFF;
        m(i, j) = Rational((state % 13) - 6, 1 + (state % 4));
      }
    return m;
  };
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      RMatrix a = random_matrix(n, trial);
      RMatrix b = random_matrix(n, trial + 1000);
      CHECK(det(a.mul(b)) == det(a) * det(b));
    }
  }
}

TEST_CASE("solve") {
  CHECK(solve(RMatrix::identity(2), rv({3, 5})) == rv({3, 5}));

  RMatrix diag(std::vector<RVec>{rv({2, 0}), rv({0, 4})});
  RVec x = solve(diag, rv({1, 1}));
  CHECK(x == RVec{Rational(1, 2), Rational(1, 4)});

  // Reeve h=2 barycentric coordinates of (1,1,1)
  RMatrix basis = RMatrix::from_columns({rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 1, 2})});
  RVec bary = solve(basis, rv({1, 1, 1}));
  CHECK(bary == RVec{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  CHECK(basis.apply(bary) == rv({1, 1, 1}));  // substitute back

  RMatrix sing(std::vector<RVec>{rv({1, 2}), rv({2, 4})});
  CHECK_THROWS_AS(solve(sing, rv({1, 1})), SingularMatrixError);
}

TEST_CASE("solve followed by multiply reproduces rhs exactly") {
  RMatrix m(std::vector<RVec>{rv({3, 1, -2}), rv({0, 5, 7}), rv({2, -1, 1})});
  RVec rhs{Rational(1, 3), Rational(-2, 7), Rational(5)};
  CHECK(m.apply(solve(m, rhs)) == rhs);
}

TEST_CASE("rank and null space") {
  RMatrix m(std::vector<RVec>{rv({1, 2, 3}), rv({2, 4, 6}), rv({0, 0, 1})});
  CHECK(rank(m) == 2);
  auto ns = null_space(m);
  REQUIRE(ns.size() == 1);
  CHECK(dot(m.row(0), ns[0]) == 0);
  CHECK(dot(m.row(2), ns[0]) == 0);
}

TEST_CASE("hyperplane normal") {
  // plane through (1,0,0),(0,1,0),(0,0,1): normal proportional to (1,1,1)
  RVec n = hyperplane_normal({rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
  RVec p = primitive_integer_direction(n);
  if (p[0] < 0) p = scale(p, Rational(-1));
  CHECK(p == rv({1, 1, 1}));
  // affinely dependent points give the zero vector
  CHECK(is_zero_vec(hyperplane_normal({rv({0, 0, 0}), rv({1, 0, 0}), rv({2, 0, 0})})));
  // d = 1
  CHECK(hyperplane_normal({rv({5})}) == rv({1}));
}

TEST_CASE("exact polynomial fit") {
  SUBCASE("pure cubic") {
    auto fit = fit_polynomial({{1, Rational(1)}, {2, Rational(8)}, {3, Rational(27)}}, {3});
    CHECK(fit.coeffs_by_exponent == RVec{Rational(1)});
    CHECK(fit.max_residual == 0);
  }
  SUBCASE("pure square") {
    auto fit = fit_polynomial({{1, Rational(1)}, {2, Rational(4)}}, {2});
    CHECK(fit.coeffs_by_exponent == RVec{Rational(1)});
  }
  SUBCASE("Reeve h=12 lattice-count fit") {
    auto fit = fit_polynomial(
        {{1, Rational(4)}, {2, Rational(21)}, {3, Rational(64)}, {4, Rational(145)}},
        {0, 1, 2, 3});
    CHECK(fit.poly.eval_exact(Rational(5)) == Rational(2 * 125 + 25 + 1));
    CHECK(*fit.poly.exact[3] == 2);
    CHECK(*fit.poly.exact[2] == 1);
    CHECK(*fit.poly.exact[1] == 0);
    CHECK(*fit.poly.exact[0] == 1);
  }
  SUBCASE("underdetermined input") {
    CHECK_THROWS_AS(fit_polynomial({{1, Rational(1)}}, {0, 1}), ArityError);
  }
  SUBCASE("repeated t values") {
    CHECK_THROWS_AS(fit_polynomial({{1, Rational(1)}, {1, Rational(2)}}, {0, 1}),
                    ValidationError);
  }
  SUBCASE("recovers a known polynomial with zero residual") {
    auto value = [](long t) { return Rational(3) * t * t * t - Rational(5) * t; };
    std::vector<std::pair<long, Rational>> pts;
    for (long t = 1; t <= 5; ++t) pts.emplace_back(t, value(t));
    auto fit = fit_polynomial(pts, {1, 3});
    CHECK(fit.coeffs_by_exponent == RVec{Rational(-5), Rational(3)});
    CHECK(fit.max_residual == 0);
  }
}

TEST_CASE("real polynomial fit propagates error bounds") {
  std::vector<std::pair<long, double>> pts{{1, 1.0}, {2, 8.0}, {3, 27.0}, {4, 64.0}};
  auto fit = fit_polynomial(pts, {1e-6, 1e-6, 1e-6, 1e-6}, {1, 3});
  CHECK(fit.coeffs_by_exponent[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fit.coeffs_by_exponent[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(fit.coeff_errors[0] > 0.0);
  CHECK(fit.max_residual < 1e-6);
}

TEST_CASE("minimal dilation meeting the integer lattice") {
  // point 1/3 on the line
  CHECK(min_dilation_with_integer_point({Rational(1, 3)}, {}) == 3);
  // point (1/2,1/2)
  CHECK(min_dilation_with_integer_point({Rational(1, 2), Rational(1, 2)}, {}) == 2);
  // vertical line through (1/2, 0)
  CHECK(min_dilation_with_integer_point({Rational(1, 2), Rational(0)},
                                        {RVec{Rational(0), Rational(1)}}) == 2);
  // line through (1/3, 2/3) with direction (1,1)
  CHECK(min_dilation_with_integer_point({Rational(1, 3), Rational(2, 3)},
                                        {RVec{Rational(1), Rational(1)}}) == 3);
  // full space
  CHECK(min_dilation_with_integer_point({Rational(1, 7), Rational(1, 7)},
                                        {RVec{Rational(1), Rational(0)}, RVec{Rational(0), Rational(1)}}) == 1);
}
