#pragma once

#include <optional>
#include <vector>

#include "solang/linalg.hpp"
#include "solang/rational.hpp"

namespace solang {

// Inward halfspace <normal, x> >= offset. Normal entries are coprime
// integers (stored as rationals); dilation by t scales the offset only.
struct Halfspace {
  RVec normal;
  Rational offset;

  bool operator==(const Halfspace& o) const { return normal == o.normal && offset == o.offset; }
};

// A face is identified by its vertex set; tight_facets is canonical (every
// facet containing the face).
struct Face {
  int dim = 0;
  std::vector<int> vertices;
  std::vector<int> tight_facets;
};

// Apex-at-origin cone, full-dimensional in its own coordinate system.
// Tangent-cone quotients carry a diagonal metric: Euclidean coordinates are
// y_i * sqrt(metric_diag[i]). An empty metric_diag means the identity.
class PointedCone {
 public:
  PointedCone() = default;

  static PointedCone from_generators(int dim, std::vector<RVec> gens,
                                     std::vector<Rational> metric_diag = {});
  static PointedCone from_generators_and_halfspaces(int dim, std::vector<RVec> gens,
                                                    std::vector<RVec> halfspace_normals,
                                                    std::vector<Rational> metric_diag = {});

  int dim() const { return dim_; }
  const std::vector<RVec>& generators() const { return generators_; }
  const std::vector<RVec>& halfspace_normals() const;
  const std::vector<Rational>& metric_diag() const { return metric_; }
  int lineality_dim() const;

  bool contains(const RVec& x) const;
  // Primitive directions of the extreme rays, lexicographically sorted.
  std::vector<RVec> extreme_rays() const;
  bool is_simplicial() const;

  // Generators mapped into Euclidean coordinates (metric applied).
  std::vector<std::vector<double>> euclidean_generators() const;
  std::vector<std::vector<double>> euclidean_halfspaces() const;

 private:
  int dim_ = 0;
  std::vector<RVec> generators_;
  std::vector<Rational> metric_;
  mutable std::optional<std::vector<RVec>> halfspaces_;
  mutable std::optional<int> lineality_;

  void compute_halfspaces() const;
};

// Fan/pulling triangulation into simplicial cones on the extreme rays.
std::vector<PointedCone> triangulate_cone(const PointedCone& c);

// Exact, irredundant facet list of conv(pts) by brute force over d-subsets.
// Requires the points to affinely span R^d (d <= 4).
std::vector<Halfspace> hull_facets(const std::vector<RVec>& pts);

class Polytope {
 public:
  // Builds the hull: prunes non-vertices, derives facets and the face
  // lattice. Throws DimensionError unless the points span R^d.
  static Polytope from_points(std::vector<RVec> pts);

  int dim() const { return dim_; }
  const std::vector<RVec>& vertices() const { return verts_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  // All nonempty faces including the polytope itself, sorted by (dim, verts).
  const std::vector<Face>& faces() const { return faces_; }
  const Face& top_face() const;

  // Membership and tightness in the dilate t*P without materializing it.
  bool contains(const RVec& x, const Rational& t = Rational(1)) const;
  std::vector<int> tight_at(const RVec& x, const Rational& t = Rational(1)) const;

  Polytope dilate(const Rational& t) const;

  // Integer points of t*P, lexicographically sorted.
  std::vector<std::vector<long>> lattice_points(long t) const;
  long count_lattice_points(long t) const;
  // Integer points in the relative interior of t*F.
  long count_relative_interior(const Face& f, long t) const;

  struct TangentConeResult {
    Face carrier;
    PointedCone cone;  // quotient cone, dimension dim() - carrier.dim
  };
  // Carrier face and quotient tangent cone of x in t*P.
  TangentConeResult tangent_cone(const RVec& x, const Rational& t = Rational(1)) const;

  RVec relint_point(const Face& f) const;

  // Pulling triangulation into vertex-index simplices.
  std::vector<std::vector<int>> triangulate() const;
  Rational volume() const;

 private:
  int dim_ = 0;
  std::vector<RVec> verts_;
  std::vector<Halfspace> facets_;
  std::vector<Face> faces_;

  void build_faces();
};

}  // namespace solang
