#include "solang/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace solang {

namespace {

// All k-element index subsets of {0..n-1}, visited in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Coordinates of rhs in the span of the given (independent) columns.
RVec coords_in_basis(const std::vector<RVec>& basis_cols, const RVec& rhs) {
  const int d = static_cast<int>(rhs.size());
  const int k = static_cast<int>(basis_cols.size());
  RMatrix aug(d, k + 1);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < d; ++i) aug(i, j) = basis_cols[j][i];
  for (int i = 0; i < d; ++i) aug(i, k) = rhs[i];
  // Row-reduce and read off the unique solution.
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  int r = 0;
  for (int c = 0; c <= k && r < d; ++c) {
    int p = -1;
    for (int i = r; i < d; ++i)
      if (aug(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j <= k; ++j) std::swap(aug(p, j), aug(r, j));
    Rational inv = Rational(1) / aug(r, c);
    for (int j = 0; j <= k; ++j) aug(r, j) *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      Rational f = aug(i, c);
      for (int j = 0; j <= k; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  RVec x(k, Rational(0));
  for (auto [row, col] : pivots) {
    if (col == k) throw ConsistencyError("coords_in_basis: inconsistent system");
    x[col] = aug(row, k);
  }
  return x;
}

bool lex_less(const RVec& a, const RVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace

// ---------------------------------------------------------------------------
// PointedCone

PointedCone PointedCone::from_generators(int dim, std::vector<RVec> gens,
                                         std::vector<Rational> metric_diag) {
  PointedCone c;
  c.dim_ = dim;
  c.metric_ = std::move(metric_diag);
  std::set<std::vector<std::string>> seen;
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != dim) throw ShapeError("cone generator dimension mismatch");
    RVec p = primitive_integer_direction(g);
    if (is_zero_vec(p)) continue;
    std::vector<std::string> key;
    key.reserve(p.size());
    for (const auto& e : p) key.push_back(rational_to_string(e));
    if (seen.insert(key).second) c.generators_.push_back(std::move(p));
  }
  if (dim > 0) {
    std::vector<RVec> rows = c.generators_;
    int r = rows.empty() ? 0 : rank(RMatrix(rows));
    if (r != dim) throw DegeneracyError("cone generators do not span the ambient dimension");
  }
  std::sort(c.generators_.begin(), c.generators_.end(), lex_less);
  return c;
}

PointedCone PointedCone::from_generators_and_halfspaces(int dim, std::vector<RVec> gens,
                                                        std::vector<RVec> halfspace_normals,
                                                        std::vector<Rational> metric_diag) {
  PointedCone c;
  c.dim_ = dim;
  for (auto& g : gens) {
    RVec p = primitive_integer_direction(g);
    if (!is_zero_vec(p)) c.generators_.push_back(std::move(p));
  }
  std::sort(c.generators_.begin(), c.generators_.end(), lex_less);
  c.generators_.erase(std::unique(c.generators_.begin(), c.generators_.end()), c.generators_.end());
  std::vector<RVec> hs;
  for (auto& h : halfspace_normals) {
    RVec p = primitive_integer_direction(h);
    if (!is_zero_vec(p)) hs.push_back(std::move(p));
  }
  std::sort(hs.begin(), hs.end(), lex_less);
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  c.halfspaces_ = std::move(hs);
  c.metric_ = std::move(metric_diag);
  return c;
}

void PointedCone::compute_halfspaces() const {
  std::vector<RVec> result;
  const int d = dim_;
  const auto& gens = generators_;
  if (d == 1) {
    bool pos = false, neg = false;
    for (const auto& g : gens) (g[0] > 0 ? pos : neg) = true;
    if (pos && !neg) result.push_back({Rational(1)});
    if (neg && !pos) result.push_back({Rational(-1)});
    // both signs: a line, no valid halfspace
  } else if (d >= 2) {
    std::set<std::vector<std::string>> seen;
    for_each_subset(static_cast<int>(gens.size()), d - 1, [&](const std::vector<int>& idx) {
      std::vector<RVec> rows;
      rows.reserve(d - 1);
      for (int i : idx) rows.push_back(gens[i]);
      auto ns = null_space(RMatrix(rows));
      if (ns.size() != 1) return;  // subset does not span a hyperplane
      RVec n = primitive_integer_direction(ns[0]);
      bool above = false, below = false;
      for (const auto& g : gens) {
        Rational s = dot(n, g);
        if (s > 0) above = true;
        if (s < 0) below = true;
        if (above && below) return;
      }
      if (below) n = scale(n, Rational(-1));
      std::vector<std::string> key;
      for (const auto& e : n) key.push_back(rational_to_string(e));
      if (seen.insert(key).second) result.push_back(std::move(n));
    });
  }
  std::sort(result.begin(), result.end(), lex_less);
  halfspaces_ = std::move(result);
}

const std::vector<RVec>& PointedCone::halfspace_normals() const {
  if (!halfspaces_) compute_halfspaces();
  return *halfspaces_;
}

int PointedCone::lineality_dim() const {
  if (!lineality_) {
    if (dim_ == 0 || generators_.empty()) {
      lineality_ = 0;
    } else {
      const auto& hs = halfspace_normals();
      int r = hs.empty() ? 0 : rank(RMatrix(hs));
      lineality_ = dim_ - r;
    }
  }
  return *lineality_;
}

bool PointedCone::contains(const RVec& x) const {
  if (dim_ == 0 || generators_.empty()) return is_zero_vec(x);
  for (const auto& h : halfspace_normals())
    if (dot(h, x) < 0) return false;
  return true;
}

std::vector<RVec> PointedCone::extreme_rays() const {
  if (dim_ == 0 || generators_.empty()) return {};
  if (dim_ == 1) return generators_;
  const auto& hs = halfspace_normals();
  std::vector<RVec> rays;
  for (const auto& g : generators_) {
    std::vector<RVec> tight;
    for (const auto& h : hs)
      if (dot(h, g) == 0) tight.push_back(h);
    int r = tight.empty() ? 0 : rank(RMatrix(tight));
    if (r == dim_ - 1) rays.push_back(g);
  }
  std::sort(rays.begin(), rays.end(), lex_less);
  return rays;
}

bool PointedCone::is_simplicial() const {
  return static_cast<int>(extreme_rays().size()) == dim_;
}

std::vector<std::vector<double>> PointedCone::euclidean_generators() const {
  std::vector<std::vector<double>> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) {
    std::vector<double> v = to_double_vec(g);
    for (size_t i = 0; i < v.size(); ++i)
      if (!metric_.empty()) v[i] *= std::sqrt(to_double(metric_[i]));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<double>> PointedCone::euclidean_halfspaces() const {
  std::vector<std::vector<double>> out;
  for (const auto& h : halfspace_normals()) {
    std::vector<double> v = to_double_vec(h);
    for (size_t i = 0; i < v.size(); ++i)
      if (!metric_.empty()) v[i] /= std::sqrt(to_double(metric_[i]));
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Pulling triangulation on ray indices; rays are extreme and full-dim.
std::vector<std::vector<int>> triangulate_rays(int dim, const std::vector<RVec>& rays) {
  const int n = static_cast<int>(rays.size());
  if (n == dim) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return {all};
  }
  PointedCone cone = PointedCone::from_generators(dim, rays);
  const auto& hs = cone.halfspace_normals();
  std::vector<std::vector<int>> out;
  const RVec& r0 = rays[0];
  for (const auto& h : hs) {
    if (dot(h, r0) == 0) continue;  // facet contains the pulled ray
    std::vector<int> sub_idx;
    for (int i = 0; i < n; ++i)
      if (dot(h, rays[i]) == 0) sub_idx.push_back(i);
    // Reduce the facet cone to its own (dim-1)-dimensional coordinates.
    auto basis = null_space(RMatrix(std::vector<RVec>{h}));
    std::vector<RVec> reduced;
    reduced.reserve(sub_idx.size());
    for (int i : sub_idx) reduced.push_back(coords_in_basis(basis, rays[i]));
    for (auto& piece : triangulate_rays(dim - 1, reduced)) {
      std::vector<int> simplex;
      simplex.reserve(dim);
      for (int local : piece) simplex.push_back(sub_idx[local]);
      simplex.push_back(0);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace

std::vector<PointedCone> triangulate_cone(const PointedCone& c) {
  if (c.lineality_dim() != 0) throw LinealityError("triangulate_cone: cone is not pointed");
  if (c.dim() <= 1) return {c};
  auto rays = c.extreme_rays();
  if (static_cast<int>(rays.size()) == c.dim()) {
    return {PointedCone::from_generators_and_halfspaces(
        c.dim(), rays, c.halfspace_normals(),
        std::vector<Rational>(c.metric_diag()))};
  }
  std::vector<PointedCone> pieces;
  for (const auto& idx : triangulate_rays(c.dim(), rays)) {
    std::vector<RVec> gens;
    gens.reserve(idx.size());
    for (int i : idx) gens.push_back(rays[i]);
    pieces.push_back(PointedCone::from_generators(c.dim(), std::move(gens),
                                                  std::vector<Rational>(c.metric_diag())));
  }
  return pieces;
}

// ---------------------------------------------------------------------------
// hull_facets

std::vector<Halfspace> hull_facets(const std::vector<RVec>& pts) {
  if (pts.empty()) throw DimensionError("hull_facets: no points");
  const int d = static_cast<int>(pts[0].size());
  if (d > 4) throw SizeGuardError("hull_facets: dimension > 4 not supported");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != d) throw ShapeError("hull_facets: ragged points");
  if (affine_rank(pts) != d)
    throw DimensionError("hull_facets: points do not affinely span R^d");

  std::vector<Halfspace> facets;
  std::set<std::vector<std::string>> seen;
  for_each_subset(static_cast<int>(pts.size()), d, [&](const std::vector<int>& idx) {
    std::vector<RVec> subset;
    subset.reserve(d);
    for (int i : idx) subset.push_back(pts[i]);
    RVec n = hyperplane_normal(subset);
    if (is_zero_vec(n)) return;
    n = primitive_integer_direction(n);
    Rational off = dot(n, subset[0]);
    bool above = false, below = false;
    for (const auto& p : pts) {
      Rational s = dot(n, p) - off;
      if (s > 0) above = true;
      if (s < 0) below = true;
      if (above && below) return;
    }
    if (below) {
      n = scale(n, Rational(-1));
      off = -off;
    }
    std::vector<std::string> key;
    key.reserve(n.size() + 1);
    for (const auto& e : n) key.push_back(rational_to_string(e));
    key.push_back(rational_to_string(off));
    if (seen.insert(key).second) facets.push_back({std::move(n), std::move(off)});
  });
  return facets;
}

// ---------------------------------------------------------------------------
// Polytope

Polytope Polytope::from_points(std::vector<RVec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw DimensionError("Polytope: no points");

  Polytope p;
  p.dim_ = static_cast<int>(pts[0].size());
  p.facets_ = hull_facets(pts);

  // Keep only genuine vertices: points whose tight facet normals span R^d.
  for (const auto& x : pts) {
    std::vector<RVec> tight;
    for (const auto& f : p.facets_)
      if (dot(f.normal, x) == f.offset) tight.push_back(f.normal);
    if (!tight.empty() && rank(RMatrix(tight)) == p.dim_) p.verts_.push_back(x);
  }
  if (p.verts_.empty()) throw ConsistencyError("Polytope: vertex identification failed");
  std::sort(p.facets_.begin(), p.facets_.end(),
            [](const Halfspace& a, const Halfspace& b) {
              if (a.normal != b.normal) return lex_less(a.normal, b.normal);
              return a.offset < b.offset;
            });
  p.build_faces();
  return p;
}

void Polytope::build_faces() {
  const int nf = static_cast<int>(facets_.size());
  const int nv = static_cast<int>(verts_.size());
  // incidence[v][f] = vertex v lies on facet f
  std::vector<std::vector<bool>> tight(nv, std::vector<bool>(nf));
  for (int v = 0; v < nv; ++v)
    for (int f = 0; f < nf; ++f)
      tight[v][f] = dot(facets_[f].normal, verts_[v]) == facets_[f].offset;

  auto canonical_tight = [&](const std::vector<int>& vs) {
    std::vector<int> t;
    for (int f = 0; f < nf; ++f) {
      bool all = true;
      for (int v : vs)
        if (!tight[v][f]) { all = false; break; }
      if (all) t.push_back(f);
    }
    return t;
  };

  std::vector<int> all_verts(nv);
  for (int v = 0; v < nv; ++v) all_verts[v] = v;

  std::map<std::vector<int>, Face> found;
  Face top;
  top.dim = dim_;
  top.vertices = all_verts;
  top.tight_facets = canonical_tight(all_verts);
  found[top.vertices] = top;

  std::vector<Face> queue{top};
  while (!queue.empty()) {
    Face cur = std::move(queue.back());
    queue.pop_back();
    for (int f = 0; f < nf; ++f) {
      std::vector<int> sub;
      for (int v : cur.vertices)
        if (tight[v][f]) sub.push_back(v);
      if (sub.empty() || sub == cur.vertices) continue;
      if (found.count(sub)) continue;
      Face next;
      next.vertices = sub;
      next.tight_facets = canonical_tight(sub);
      std::vector<RVec> coords;
      coords.reserve(sub.size());
      for (int v : sub) coords.push_back(verts_[v]);
      next.dim = affine_rank(coords);
      found[next.vertices] = next;
      queue.push_back(std::move(next));
    }
  }

  faces_.clear();
  faces_.reserve(found.size());
  for (auto& [k, f] : found) faces_.push_back(std::move(f));
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });

  long euler = 0;
  for (const auto& f : faces_) euler += (f.dim % 2 == 0) ? 1 : -1;
  if (euler != 1) throw ConsistencyError("face lattice violates the Euler relation");
}

const Face& Polytope::top_face() const { return faces_.back(); }

bool Polytope::contains(const RVec& x, const Rational& t) const {
  for (const auto& f : facets_)
    if (dot(f.normal, x) < t * f.offset) return false;
  return true;
}

std::vector<int> Polytope::tight_at(const RVec& x, const Rational& t) const {
  std::vector<int> out;
  for (size_t i = 0; i < facets_.size(); ++i)
    if (dot(facets_[i].normal, x) == t * facets_[i].offset) out.push_back(static_cast<int>(i));
  return out;
}

Polytope Polytope::dilate(const Rational& t) const {
  if (t <= 0) throw ValidationError("dilate: factor must be positive");
  Polytope p = *this;
  for (auto& v : p.verts_)
    for (auto& c : v) c *= t;
  for (auto& f : p.facets_) f.offset *= t;
  return p;
}

namespace {

struct IntFacet {
  std::vector<long long> normal;
  long long offset_num;  // offset = num/den
  long long offset_den;
};

std::vector<IntFacet> int_facets(const std::vector<Halfspace>& facets) {
  std::vector<IntFacet> out;
  out.reserve(facets.size());
  for (const auto& f : facets) {
    IntFacet g;
    for (const auto& e : f.normal) g.normal.push_back(num(e).convert_to<long long>());
    g.offset_num = num(f.offset).convert_to<long long>();
    g.offset_den = den(f.offset).convert_to<long long>();
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<std::vector<long>> Polytope::lattice_points(long t) const {
  if (t < 1) throw ValidationError("lattice_points: dilation must be >= 1");
  std::vector<long> lo(dim_), hi(dim_);
  double box = 1.0;
  for (int j = 0; j < dim_; ++j) {
    Rational mn = verts_[0][j], mx = verts_[0][j];
    for (const auto& v : verts_) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil_rat(mn * t).convert_to<long>();
    hi[j] = floor_rat(mx * t).convert_to<long>();
    box *= std::max(0.0, static_cast<double>(hi[j] - lo[j] + 1));
  }
  if (box > 5e7) throw SizeGuardError("lattice_points: bounding box too large");

  auto facets = int_facets(facets_);
  std::vector<std::vector<long>> out;
  std::vector<long> x = lo;
  if (box < 1.0) return out;
  for (;;) {
    bool inside = true;
    for (const auto& f : facets) {
      long long s = 0;
      for (int j = 0; j < dim_; ++j) s += f.normal[j] * x[j];
      if (s * f.offset_den < t * f.offset_num) { inside = false; break; }
    }
    if (inside) out.push_back(x);
    int j = dim_ - 1;
    while (j >= 0 && x[j] == hi[j]) { x[j] = lo[j]; --j; }
    if (j < 0) break;
    ++x[j];
  }
  return out;
}

long Polytope::count_lattice_points(long t) const {
  return static_cast<long>(lattice_points(t).size());
}

long Polytope::count_relative_interior(const Face& f, long t) const {
  if (t < 1) throw ValidationError("count_relative_interior: dilation must be >= 1");
  std::vector<bool> is_tight(facets_.size(), false);
  for (int i : f.tight_facets) is_tight[i] = true;

  std::vector<long> lo(dim_), hi(dim_);
  for (int j = 0; j < dim_; ++j) {
    Rational mn = verts_[f.vertices[0]][j], mx = mn;
    for (int v : f.vertices) {
      mn = std::min(mn, verts_[v][j]);
      mx = std::max(mx, verts_[v][j]);
    }
    lo[j] = ceil_rat(mn * t).convert_to<long>();
    hi[j] = floor_rat(mx * t).convert_to<long>();
    if (lo[j] > hi[j]) return 0;
  }

  auto facets = int_facets(facets_);
  long count = 0;
  std::vector<long> x = lo;
  for (;;) {
    bool ok = true;
    for (size_t i = 0; i < facets.size(); ++i) {
      long long s = 0;
      for (int j = 0; j < dim_; ++j) s += facets[i].normal[j] * x[j];
      long long lhs = s * facets[i].offset_den;
      long long rhs = t * facets[i].offset_num;
      if (is_tight[i] ? (lhs != rhs) : (lhs <= rhs)) { ok = false; break; }
    }
    if (ok) ++count;
    int j = dim_ - 1;
    while (j >= 0 && x[j] == hi[j]) { x[j] = lo[j]; --j; }
    if (j < 0) break;
    ++x[j];
  }
  return count;
}

Polytope::TangentConeResult Polytope::tangent_cone(const RVec& x, const Rational& t) const {
  if (!contains(x, t)) throw ContainmentError("tangent_cone: point outside the polytope");
  std::vector<int> tight = tight_at(x, t);

  TangentConeResult res;
  if (tight.empty()) {
    res.carrier = top_face();
    res.cone = PointedCone::from_generators_and_halfspaces(0, {}, {});
    return res;
  }

  // Carrier face: vertices on every facet tight at x.
  std::vector<int> carrier_verts;
  for (size_t v = 0; v < verts_.size(); ++v) {
    bool all = true;
    for (int fi : tight)
      if (dot(facets_[fi].normal, verts_[v]) != facets_[fi].offset) { all = false; break; }
    if (all) carrier_verts.push_back(static_cast<int>(v));
  }
  const Face* carrier = nullptr;
  for (const auto& f : faces_)
    if (f.vertices == carrier_verts) { carrier = &f; break; }
  if (!carrier) throw ConsistencyError("tangent_cone: carrier face not in the lattice");
  res.carrier = *carrier;

  // Quotient coordinates: rational Gram-Schmidt basis of the tight normals'
  // row space; the quotient metric is diagonal in this basis. When the
  // normals span all of R^d (x is a vertex) the ambient basis is kept.
  std::vector<RVec> tn;
  tn.reserve(tight.size());
  for (int fi : tight) tn.push_back(facets_[fi].normal);
  std::vector<RVec> w;
  for (const auto& row : tn) {
    RVec r = row;
    for (const auto& b : w) {
      Rational c = dot(r, b) / dot(b, b);
      r = sub(r, scale(b, c));
    }
    if (!is_zero_vec(r)) w.push_back(primitive_integer_direction(r));
  }
  if (static_cast<int>(w.size()) == dim_) {
    w.clear();
    for (int i = 0; i < dim_; ++i) {
      RVec e(dim_, Rational(0));
      e[i] = 1;
      w.push_back(std::move(e));
    }
  }
  const int k = static_cast<int>(w.size());
  std::vector<Rational> metric(k);
  for (int i = 0; i < k; ++i) metric[i] = dot(w[i], w[i]);

  std::vector<RVec> gens;
  for (const auto& v : verts_) {
    // Directions toward vertices of t*P.
    RVec g = sub(scale(v, t), x);
    RVec y(k);
    bool zero = true;
    for (int i = 0; i < k; ++i) {
      y[i] = dot(g, w[i]) / metric[i];
      if (y[i] != 0) zero = false;
    }
    if (!zero) gens.push_back(std::move(y));
  }
  std::vector<RVec> hs;
  for (int fi : tight) {
    RVec h(k);
    for (int i = 0; i < k; ++i) h[i] = dot(facets_[fi].normal, w[i]);
    hs.push_back(std::move(h));
  }
  res.cone = PointedCone::from_generators_and_halfspaces(k, std::move(gens), std::move(hs),
                                                         std::move(metric));
  return res;
}

RVec Polytope::relint_point(const Face& f) const {
  RVec p(dim_, Rational(0));
  for (int v : f.vertices) p = add(p, verts_[v]);
  return scale(p, Rational(1, static_cast<long>(f.vertices.size())));
}

namespace {

std::vector<std::vector<int>> triangulate_points(const std::vector<RVec>& pts, int dim) {
  const int n = static_cast<int>(pts.size());
  if (n == dim + 1) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return {all};
  }
  Polytope p = Polytope::from_points(pts);
  // Map polytope vertices back to input indices (inputs may contain
  // non-vertex points; triangulation uses vertices only).
  std::vector<int> to_input;
  for (const auto& v : p.vertices()) {
    auto it = std::find(pts.begin(), pts.end(), v);
    to_input.push_back(static_cast<int>(it - pts.begin()));
  }
  const auto& verts = p.vertices();
  const RVec& v0 = verts[0];
  std::vector<std::vector<int>> out;
  for (const auto& facet : p.facets()) {
    if (dot(facet.normal, v0) == facet.offset) continue;
    std::vector<int> on_facet;
    for (size_t i = 0; i < verts.size(); ++i)
      if (dot(facet.normal, verts[i]) == facet.offset) on_facet.push_back(static_cast<int>(i));
    if (dim == 1) {
      // Facet of a segment is a single vertex.
      out.push_back({to_input[on_facet[0]], to_input[0]});
      continue;
    }
    auto basis = null_space(RMatrix(std::vector<RVec>{facet.normal}));
    const RVec& base = verts[on_facet[0]];
    std::vector<RVec> reduced;
    reduced.reserve(on_facet.size());
    for (int i : on_facet) reduced.push_back(coords_in_basis(basis, sub(verts[i], base)));
    for (auto& piece : triangulate_points(reduced, dim - 1)) {
      std::vector<int> simplex;
      simplex.reserve(dim + 1);
      for (int local : piece) simplex.push_back(to_input[on_facet[local]]);
      simplex.push_back(to_input[0]);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> Polytope::triangulate() const {
  return triangulate_points(verts_, dim_);
}

Rational Polytope::volume() const {
  Rational vol = 0;
  Rational dfact = 1;
  for (int i = 2; i <= dim_; ++i) dfact *= i;
  for (const auto& s : triangulate()) {
    RMatrix edges(dim_, dim_);
    for (int i = 1; i <= dim_; ++i) {
      RVec e = sub(verts_[s[i]], verts_[s[0]]);
      for (int j = 0; j < dim_; ++j) edges(i - 1, j) = e[j];
    }
    Rational dv = det(edges);
    if (dv < 0) dv = -dv;
    vol += dv;
  }
  return vol / dfact;
}

}  // namespace solang
