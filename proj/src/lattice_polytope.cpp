#include "toricfano/lattice_polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "toricfano/arithmetic.hpp"
#include "toricfano/error.hpp"

namespace toricfano {

namespace {

std::string describe(const LatticePoint& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

LatticePoint divide(const LatticePoint& p, Coord g) {
  std::vector<Coord> c(p.coords().begin(), p.coords().end());
  for (auto& x : c) x /= g;
  return LatticePoint(std::move(c));
}

void require_minimal(const LatticePolytope& poly) {
  const auto n = static_cast<std::size_t>(poly.dim());
  std::vector<std::vector<LatticePoint>> normals(poly.vertices().size());
  for (std::size_t f = 0; f < poly.facets().size(); ++f) {
    for (std::size_t v : poly.facet_vertices()[f]) normals[v].push_back(poly.facets()[f].normal);
  }
  for (std::size_t v = 0; v < normals.size(); ++v) {
    if (linalg::rank(normals[v], n) != n) {
      throw Error(Errc::RedundantVertex, describe(poly.vertices()[v]) + " is not a vertex");
    }
  }
}

void require_origin_interior(const LatticePolytope& poly) {
  for (const auto& h : poly.facets()) {
    if (h.offset <= 0) {
      throw Error(Errc::OriginNotInterior,
                  "facet with normal " + describe(h.normal) + " has offset " + std::to_string(h.offset));
    }
  }
}

}  // namespace

FanoPolytope::FanoPolytope(int dim, std::vector<LatticePoint> vertices)
    : dim_(dim), vertices_(std::move(vertices)) {
  if (dim_ < 1) throw Error(Errc::InvalidDimension, "dimension must be positive");
  std::set<LatticePoint> seen;
  for (const auto& v : vertices_) {
    if (v.dim() != static_cast<std::size_t>(dim_)) {
      throw Error(Errc::DimensionMismatch,
                  describe(v) + " does not have " + std::to_string(dim_) + " coordinates");
    }
    if (!v.is_primitive()) throw Error(Errc::NonPrimitiveVertex, describe(v));
    if (!seen.insert(v).second) throw Error(Errc::DuplicateVertex, describe(v));
  }
}

LatticePolytope::LatticePolytope(int dim, std::vector<LatticePoint> vertices,
                                 std::vector<Halfspace> facets,
                                 std::vector<std::vector<std::size_t>> facet_vertices)
    : dim_(dim),
      vertices_(std::move(vertices)),
      facets_(std::move(facets)),
      facet_vertices_(std::move(facet_vertices)) {
  if (facets_.size() != facet_vertices_.size()) {
    throw Error(Errc::DimensionMismatch, "facet incidence does not match facet list");
  }
}

const std::vector<Face>& FaceLattice::faces(int k) const {
  return faces_by_dim_.at(static_cast<std::size_t>(k));
}

std::size_t FaceLattice::count(int k) const {
  if (k < 0 || k > dim()) return 0;
  return faces(k).size();
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f;
  f.reserve(faces_by_dim_.size());
  for (const auto& layer : faces_by_dim_) f.push_back(layer.size());
  return f;
}

LatticePolytope convex_hull(int dim, const std::vector<LatticePoint>& points) {
  if (dim < 1) throw Error(Errc::InvalidDimension, "dimension must be positive");
  const auto n = static_cast<std::size_t>(dim);
  for (const auto& p : points) {
    if (p.dim() != n) throw Error(Errc::DimensionMismatch, describe(p));
  }
  if (linalg::affine_dimension(points) != dim) {
    throw Error(Errc::DegenerateInput, "points do not span " + std::to_string(dim) + " dimensions");
  }

  std::map<Halfspace, std::vector<std::size_t>> found;
  std::vector<LatticePoint> subset(n);
  for_each_subset(points.size(), n, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < n; ++i) subset[i] = points[idx[i]];
    LatticePoint normal = linalg::hyperplane_normal(subset);
    if (normal.is_zero()) return;
    normal = divide(normal, normal.content());
    Coord offset = dot(normal, subset[0]);

    bool below = false;
    bool above = false;
    for (const auto& p : points) {
      const Coord value = dot(normal, p);
      below = below || value < offset;
      above = above || value > offset;
      if (below && above) return;
    }
    if (above) {
      normal = -normal;
      offset = checked::neg(offset);
    }
    Halfspace h{std::move(normal), offset};
    if (found.contains(h)) return;
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (h.supports(points[i])) incident.push_back(i);
    }
    found.emplace(std::move(h), std::move(incident));
  });

  std::vector<Halfspace> facets;
  std::vector<std::vector<std::size_t>> incidence;
  for (auto& [h, inc] : found) {
    facets.push_back(h);
    incidence.push_back(std::move(inc));
  }
  return LatticePolytope(dim, points, std::move(facets), std::move(incidence));
}

LatticePolytope hull(const FanoPolytope& p) {
  LatticePolytope poly = convex_hull(p.dim(), p.vertices());
  require_origin_interior(poly);
  require_minimal(poly);
  return poly;
}

std::vector<Halfspace> facet_enumeration(const FanoPolytope& p) { return hull(p).facets(); }

bool is_reflexive(const LatticePolytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(), [](const Halfspace& h) {
    return h.offset == 1 && h.normal.is_primitive();
  });
}

bool is_reflexive(const FanoPolytope& p) { return is_reflexive(hull(p)); }

bool is_smooth(const LatticePolytope& p) {
  const auto n = static_cast<std::size_t>(p.dim());
  std::vector<LatticePoint> rows(n);
  for (const auto& inc : p.facet_vertices()) {
    if (inc.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) rows[i] = p.vertices()[inc[i]];
    const Coord d = linalg::determinant(rows);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

bool is_smooth(const FanoPolytope& p) { return is_smooth(hull(p)); }

LatticePolytope polar_dual(const FanoPolytope& p) {
  const LatticePolytope primal = hull(p);
  if (!is_reflexive(primal)) throw Error(Errc::NotReflexive, "some facet is not at lattice distance 1");
  if (!is_smooth(primal)) throw Error(Errc::NotSmooth, "some facet is not a unimodular simplex");

  const auto n = static_cast<std::size_t>(p.dim());
  std::vector<LatticePoint> dual_vertices;
  dual_vertices.reserve(primal.facets().size());
  std::vector<LatticePoint> rows(n);
  for (std::size_t f = 0; f < primal.facets().size(); ++f) {
    const auto& inc = primal.facet_vertices()[f];
    for (std::size_t i = 0; i < n; ++i) rows[i] = p.vertices()[inc[i]];
    const Coord det = linalg::determinant(rows);

    // Cramer's rule for <m, v_i> = -1: replace column j by the right-hand side.
    std::vector<Coord> m(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<LatticePoint> replaced;
      replaced.reserve(n);
      for (const auto& r : rows) {
        std::vector<Coord> c(r.coords().begin(), r.coords().end());
        c[j] = -1;
        replaced.emplace_back(std::move(c));
      }
      const Coord num = linalg::determinant(replaced);
      if (num % det != 0) throw Error(Errc::NonIntegralDual, "facet " + std::to_string(f));
      m[j] = num / det;
    }
    LatticePoint vertex(std::move(m));
    if (vertex != -primal.facets()[f].normal) {
      throw Error(Errc::NonIntegralDual, "dual vertex disagrees with facet normal");
    }
    dual_vertices.push_back(std::move(vertex));
  }

  std::vector<Halfspace> dual_facets;
  std::vector<std::vector<std::size_t>> dual_incidence(p.vertices().size());
  for (const auto& v : p.vertices()) dual_facets.push_back(Halfspace{-v, 1});
  for (std::size_t f = 0; f < primal.facet_vertices().size(); ++f) {
    for (std::size_t v : primal.facet_vertices()[f]) dual_incidence[v].push_back(f);
  }
  return LatticePolytope(p.dim(), std::move(dual_vertices), std::move(dual_facets),
                         std::move(dual_incidence));
}

FanoPolytope fano_from_dual(int dim, const std::vector<LatticePoint>& dual_vertices) {
  const LatticePolytope delta = convex_hull(dim, dual_vertices);
  require_origin_interior(delta);
  require_minimal(delta);
  if (!is_reflexive(delta)) throw Error(Errc::NotReflexive, "dual polytope is not reflexive");
  std::vector<LatticePoint> rays;
  rays.reserve(delta.facets().size());
  for (const auto& h : delta.facets()) rays.push_back(-h.normal);
  return FanoPolytope(dim, std::move(rays));
}

FaceLattice face_lattice(const LatticePolytope& p) {
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::set<std::vector<std::size_t>> seen{all};
  std::deque<std::vector<std::size_t>> pending{all};
  std::vector<std::size_t> meet;
  while (!pending.empty()) {
    const auto face = std::move(pending.front());
    pending.pop_front();
    for (const auto& facet : p.facet_vertices()) {
      meet.clear();
      std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(),
                            std::back_inserter(meet));
      if (meet.empty() || meet.size() == face.size()) continue;
      if (seen.insert(meet).second) pending.push_back(meet);
    }
  }

  std::vector<std::vector<Face>> layers(static_cast<std::size_t>(p.dim()) + 1);
  std::vector<LatticePoint> pts;
  for (const auto& s : seen) {
    pts.clear();
    for (std::size_t i : s) pts.push_back(p.vertices()[i]);
    const int d = linalg::affine_dimension(pts);
    layers.at(static_cast<std::size_t>(d)).push_back(Face{d, s});
  }
  return FaceLattice(std::move(layers));
}

Coord edge_interior_points(const LatticePoint& a, const LatticePoint& b) {
  if (a == b) throw Error(Errc::DegenerateEdge, "segment endpoints coincide");
  return (b - a).content() - 1;
}

}  // namespace toricfano
