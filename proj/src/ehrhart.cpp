#include "solang/ehrhart.hpp"

#include <numeric>

namespace solang {

Rational QuasiPolynomial::eval(long t) const {
  long r = ((t % period) + period) % period;
  const auto& c = constituents[r];
  Rational v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * t + c[i];
  return v;
}

long QuasiPolynomial::minimal_period() const {
  for (long q = 1; q <= period; ++q) {
    if (period % q != 0) continue;
    bool ok = true;
    for (long r = 0; r < period && ok; ++r) ok = constituents[r] == constituents[r % q];
    if (ok) return q;
  }
  return period;
}

std::vector<long> QuasiPolynomial::coefficient_periods() const {
  size_t deg = 0;
  for (const auto& c : constituents) deg = std::max(deg, c.size());
  std::vector<long> out(deg, 1);
  auto coeff = [&](long r, size_t j) {
    const auto& c = constituents[r];
    return j < c.size() ? c[j] : Rational(0);
  };
  for (size_t j = 0; j < deg; ++j) {
    for (long q = 1; q <= period; ++q) {
      if (period % q != 0) continue;
      bool ok = true;
      for (long r = 0; r < period && ok; ++r) ok = coeff(r, j) == coeff(r % q, j);
      if (ok) { out[j] = q; break; }
    }
  }
  return out;
}

const std::vector<Rational>& QuasiPolynomial::polynomial() const {
  if (minimal_period() != 1) throw ValidationError("quasipolynomial has period > 1");
  return constituents[0];
}

long ehrhart_count(const Polytope& p, long t) { return p.count_lattice_points(t); }

QuasiPolynomial fit_ehrhart(const Polytope& p) {
  const int d = p.dim();
  long period = lcm_of_denominators(p.vertices()).convert_to<long>();
  const long t_cap = 2 * (d + 1) * period;

  std::vector<int> support(d + 1);
  std::iota(support.begin(), support.end(), 0);

  QuasiPolynomial q;
  q.period = period;
  q.constituents.resize(period);

  for (long r = 0; r < period; ++r) {
    std::vector<std::pair<long, Rational>> pts;
    if (period == 1 && r == 0) pts.emplace_back(0, Rational(1));  // L(0) = 1 anchor
    long k0 = (r == 0) ? 1 : 0;
    while (static_cast<int>(pts.size()) < d + 3) {
      long t = r + (k0++) * period;
      if (t == 0) continue;
      if (t > t_cap) throw SizeGuardError("fit_ehrhart: evaluation cap exceeded");
      pts.emplace_back(t, Rational(ehrhart_count(p, t)));
    }
    auto fit = fit_polynomial(pts, support);
    if (fit.max_residual != 0)
      throw ConsistencyError("fit_ehrhart: residual check failed (enumeration bug?)");
    std::vector<Rational> coeffs(d + 1);
    for (int j = 0; j <= d; ++j) coeffs[j] = fit.coeffs_by_exponent[j];
    q.constituents[r] = std::move(coeffs);
  }
  return q;
}

ReciprocityReport reciprocity_check(const Polytope& p) {
  if (lcm_of_denominators(p.vertices()) != 1)
    throw ValidationError("reciprocity_check: lattice polytope required");
  auto q = fit_ehrhart(p);
  ReciprocityReport rep;
  int sign = (p.dim() % 2 == 0) ? 1 : -1;
  for (long t = 1; t <= 3; ++t) {
    Rational lhs = q.eval(-t);
    Int interior = p.count_relative_interior(p.top_face(), t);
    rep.checked_t.push_back(t);
    rep.lhs.push_back(lhs);
    rep.interior_counts.push_back(interior);
    if (lhs != Rational(sign) * Rational(interior)) rep.holds = false;
  }
  return rep;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

HStarVector hstar(const Polytope& p) {
  if (lcm_of_denominators(p.vertices()) != 1)
    throw ValidationError("hstar: lattice polytope required");
  const int d = p.dim();
  std::vector<Int> counts(d + 1);
  counts[0] = 1;
  for (long t = 1; t <= d; ++t) counts[t] = ehrhart_count(p, t);

  HStarVector h;
  h.entries.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    Int a = 0;
    for (int j = 0; j <= k; ++j) {
      Int term = binomial(d + 1, j) * counts[k - j];
      a += (j % 2 == 0) ? term : -term;
    }
    h.entries[k] = a;
    if (a < 0)
      h.violations.push_back("entry " + std::to_string(k) + " is negative: " + a.str());
  }
  return h;
}

}  // namespace solang
