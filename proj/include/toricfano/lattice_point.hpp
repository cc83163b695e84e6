#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace toricfano {

using Coord = std::int64_t;

/// Integer vector in a fixed-rank lattice. Arithmetic on points is overflow
/// checked and throws Errc::Overflow rather than wrapping.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<Coord> coords) : coords_(coords) {}

  static LatticePoint zero(std::size_t dim) { return LatticePoint(std::vector<Coord>(dim, 0)); }
  static LatticePoint unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const noexcept { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Coord> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  /// gcd of the coordinates equals 1.
  bool is_primitive() const;
  /// gcd of the absolute coordinates; 0 for the zero vector.
  Coord content() const;

  auto operator<=>(const LatticePoint&) const = default;
  bool operator==(const LatticePoint&) const = default;

 private:
  std::vector<Coord> coords_;
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a);
Coord dot(const LatticePoint& a, const LatticePoint& b);

/// Concatenation a ⊕ b in the lattice of rank dim(a) + dim(b).
LatticePoint concat(const LatticePoint& a, const LatticePoint& b);

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

namespace linalg {

/// Exact determinant of a square integer matrix given by its rows (fraction-free
/// Bareiss elimination).
Coord determinant(std::span<const LatticePoint> rows);

/// Rank of the matrix whose rows are given; `cols` is the row length.
std::size_t rank(std::span<const LatticePoint> rows, std::size_t cols);

/// Dimension of the affine hull; -1 for an empty set.
int affine_dimension(std::span<const LatticePoint> points);

/// Integer normal to the affine hull of `dim` points in Z^dim (generalized
/// cross product of the differences). Zero iff the points are affinely dependent.
LatticePoint hyperplane_normal(std::span<const LatticePoint> points);

}  // namespace linalg
}  // namespace toricfano
