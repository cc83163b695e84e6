#include "toricfano/lattice_point.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

#include "toricfano/arithmetic.hpp"

namespace toricfano {

namespace {

__extension__ using Wide = __int128;

Coord narrow(Wide v) {
  if (v > std::numeric_limits<Coord>::max() || v < std::numeric_limits<Coord>::min()) {
    throw Error(Errc::Overflow, "intermediate value exceeds int64");
  }
  return static_cast<Coord>(v);
}

// a*d - b*c computed in 128 bits.
Wide cross_term(Coord a, Coord d, Coord b, Coord c) {
  Wide r;
  if (__builtin_sub_overflow(Wide(a) * d, Wide(b) * c, &r)) {
    throw Error(Errc::Overflow, "int128 elimination step");
  }
  return r;
}

Coord abs_checked(Coord v) { return v < 0 ? checked::neg(v) : v; }

void require_same_dim(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "lattice points of different rank");
}

}  // namespace

LatticePoint LatticePoint::unit(std::size_t dim, std::size_t axis) {
  std::vector<Coord> c(dim, 0);
  c.at(axis) = 1;
  return LatticePoint(std::move(c));
}

bool LatticePoint::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

Coord LatticePoint::content() const {
  Coord g = 0;
  for (Coord c : coords_) g = std::gcd(g, abs_checked(c));
  return g;
}

bool LatticePoint::is_primitive() const { return content() == 1; }

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a, b);
  std::vector<Coord> c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::add(a[i], b[i]);
  return LatticePoint(std::move(c));
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a, b);
  std::vector<Coord> c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::sub(a[i], b[i]);
  return LatticePoint(std::move(c));
}

LatticePoint operator-(const LatticePoint& a) {
  std::vector<Coord> c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::neg(a[i]);
  return LatticePoint(std::move(c));
}

Coord dot(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a, b);
  Coord s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

LatticePoint concat(const LatticePoint& a, const LatticePoint& b) {
  std::vector<Coord> c(a.coords().begin(), a.coords().end());
  c.insert(c.end(), b.coords().begin(), b.coords().end());
  return LatticePoint(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

namespace linalg {

Coord determinant(std::span<const LatticePoint> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  std::vector<std::vector<Coord>> m;
  m.reserve(n);
  for (const auto& r : rows) {
    if (r.dim() != n) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
    m.emplace_back(r.coords().begin(), r.coords().end());
  }
  Coord sign = 1;
  Coord prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t i = k + 1;
      while (i < n && m[i][k] == 0) ++i;
      if (i == n) return 0;
      std::swap(m[k], m[i]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = narrow(cross_term(m[i][j], m[k][k], m[i][k], m[k][j]) / prev);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return checked::mul(sign, m[n - 1][n - 1]);
}

std::size_t rank(std::span<const LatticePoint> rows, std::size_t cols) {
  std::vector<std::vector<Coord>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.dim() != cols) throw Error(Errc::DimensionMismatch, "ragged matrix");
    m.emplace_back(r.coords().begin(), r.coords().end());
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const Coord factor = m[i][col];
      if (factor == 0) continue;
      Coord g = 0;
      for (std::size_t j = col; j < cols; ++j) {
        m[i][j] = narrow(cross_term(m[i][j], m[r][col], factor, m[r][j]));
        g = std::gcd(g, abs_checked(m[i][j]));
      }
      if (g > 1) {
        for (std::size_t j = col; j < cols; ++j) m[i][j] /= g;
      }
    }
    ++r;
  }
  return r;
}

int affine_dimension(std::span<const LatticePoint> points) {
  if (points.empty()) return -1;
  std::vector<LatticePoint> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(diffs, points[0].dim()));
}

LatticePoint hyperplane_normal(std::span<const LatticePoint> points) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(Errc::DegenerateInput, "hyperplane through no points");
  for (const auto& p : points) {
    if (p.dim() != n) throw Error(Errc::DimensionMismatch, "hyperplane needs dim points in Z^dim");
  }
  std::vector<LatticePoint> diffs;
  for (std::size_t i = 1; i < n; ++i) diffs.push_back(points[i] - points[0]);

  std::vector<Coord> normal(n);
  std::vector<LatticePoint> minor(n - 1);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<Coord> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(diffs[i][j]);
      }
      minor[i] = LatticePoint(std::move(row));
    }
    const Coord d = determinant(minor);
    normal[col] = (col % 2 == 0) ? d : checked::neg(d);
  }
  return LatticePoint(std::move(normal));
}

}  // namespace linalg
}  // namespace toricfano
