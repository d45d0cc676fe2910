#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace hrnum {

using Coord = std::int64_t;

// Checked integer arithmetic. Overflow throws OverflowError, never wraps.
Coord checked_add(Coord a, Coord b);
Coord checked_sub(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);

/// A point of Z^d with exact integer coordinates.
///
/// Ordering is lexicographic, which is the tie-breaking order used by every
/// enumeration in the library.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<Coord> coords) : coords_(coords) {}

  static LatticePoint zero(std::size_t rank) { return LatticePoint(std::vector<Coord>(rank, 0)); }
  static LatticePoint unit(std::size_t rank, std::size_t axis);

  std::size_t rank() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Coord>& coords() const { return coords_; }

  bool is_zero() const;
  // All coordinates >= 0.
  bool is_nonnegative() const;
  // Coordinatewise <=.
  bool dominated_by(const LatticePoint& other) const;
  // Sum of absolute values of the coordinates.
  Coord l1_norm() const;

  LatticePoint scaled(Coord n) const;

  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
  LatticePoint operator-() const;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
    return a.coords_ <=> b.coords_;
  }

  std::string to_string() const;

 private:
  std::vector<Coord> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

// Coordinatewise maximum of a nonempty list of points of equal rank.
LatticePoint coordinatewise_max(const std::vector<LatticePoint>& points);

}  // namespace hrnum
