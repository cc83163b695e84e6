#pragma once

#include <cstddef>
#include <vector>

#include "toricfano/lattice_point.hpp"

namespace toricfano {

/// Inequality <normal, x> <= offset with a primitive normal.
struct Halfspace {
  LatticePoint normal;
  Coord offset = 0;

  Coord evaluate(const LatticePoint& x) const { return dot(normal, x); }
  bool contains(const LatticePoint& x) const { return evaluate(x) <= offset; }
  bool supports(const LatticePoint& x) const { return evaluate(x) == offset; }

  auto operator<=>(const Halfspace&) const = default;
  bool operator==(const Halfspace&) const = default;
};

/// Convex hull of primitive ray generators in N. The constructor checks the
/// local invariants (dimension, distinctness, primitivity); spanning,
/// origin-interiority and vertex minimality are established by
/// facet_enumeration.
class FanoPolytope {
 public:
  FanoPolytope(int dim, std::vector<LatticePoint> vertices);

  int dim() const noexcept { return dim_; }
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }

  bool operator==(const FanoPolytope&) const = default;

 private:
  int dim_;
  std::vector<LatticePoint> vertices_;
};

/// A full-dimensional lattice polytope with its facets and the vertex-facet
/// incidence. Both P (via hull) and the anticanonical polytope (via
/// polar_dual) are represented this way.
class LatticePolytope {
 public:
  LatticePolytope(int dim, std::vector<LatticePoint> vertices, std::vector<Halfspace> facets,
                  std::vector<std::vector<std::size_t>> facet_vertices);

  int dim() const noexcept { return dim_; }
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  const std::vector<Halfspace>& facets() const noexcept { return facets_; }
  /// Sorted indices into vertices() of the vertices lying on facet i.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const noexcept {
    return facet_vertices_;
  }

 private:
  int dim_;
  std::vector<LatticePoint> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
};

struct Face {
  int dim = 0;
  std::vector<std::size_t> vertex_indices;

  auto operator<=>(const Face&) const = default;
  bool operator==(const Face&) const = default;
};

/// All nonempty faces of a polytope grouped by dimension; the polytope itself
/// is the unique face of top dimension.
class FaceLattice {
 public:
  explicit FaceLattice(std::vector<std::vector<Face>> faces_by_dim)
      : faces_by_dim_(std::move(faces_by_dim)) {}

  int dim() const noexcept { return static_cast<int>(faces_by_dim_.size()) - 1; }
  const std::vector<Face>& faces(int k) const;
  /// f_k for k = 0..dim.
  std::vector<std::size_t> f_vector() const;
  std::size_t count(int k) const;

 private:
  std::vector<std::vector<Face>> faces_by_dim_;
};

/// Facets of the convex hull of `points` (full-dimensional in Z^dim) found by
/// an exhaustive scan over dim-subsets with exact sidedness tests. Results are
/// sorted, so the output is independent of input order.
LatticePolytope convex_hull(int dim, const std::vector<LatticePoint>& points);

/// Facet halfspaces of P. Throws DegenerateInput when P is not full
/// dimensional, OriginNotInterior when some offset is <= 0 and
/// RedundantVertex when an input point is not a vertex.
std::vector<Halfspace> facet_enumeration(const FanoPolytope& p);

/// P together with its facets, validated as in facet_enumeration.
LatticePolytope hull(const FanoPolytope& p);

bool is_reflexive(const FanoPolytope& p);
bool is_reflexive(const LatticePolytope& p);
bool is_smooth(const FanoPolytope& p);
bool is_smooth(const LatticePolytope& p);

/// Anticanonical polytope {m : <m, v> >= -1 for all vertices v of P}. Vertex i
/// of the result is dual to facet i of hull(p); facet j is dual to vertex j of P.
LatticePolytope polar_dual(const FanoPolytope& p);

/// Inverse of polar_dual: recovers the ray generators {v : <m, v> >= -1} of a
/// reflexive polytope given in M.
FanoPolytope fano_from_dual(int dim, const std::vector<LatticePoint>& dual_vertices);

/// Closure of the facet vertex sets under intersection.
FaceLattice face_lattice(const LatticePolytope& p);

/// Number of lattice points strictly inside the segment [a, b].
Coord edge_interior_points(const LatticePoint& a, const LatticePoint& b);

}  // namespace toricfano
