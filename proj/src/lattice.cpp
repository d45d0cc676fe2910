#include "hrnum/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hrnum/errors.hpp"

namespace hrnum {

Coord checked_add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coordinate overflow in addition");
  return r;
}

Coord checked_sub(Coord a, Coord b) {
  Coord r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coordinate overflow in subtraction");
  return r;
}

Coord checked_mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coordinate overflow in multiplication");
  return r;
}

LatticePoint LatticePoint::unit(std::size_t rank, std::size_t axis) {
  LatticePoint e = zero(rank);
  e.coords_.at(axis) = 1;
  return e;
}

bool LatticePoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

bool LatticePoint::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c >= 0; });
}

bool LatticePoint::dominated_by(const LatticePoint& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

Coord LatticePoint::l1_norm() const {
  Coord sum = 0;
  for (Coord c : coords_) sum = checked_add(sum, c < 0 ? checked_sub(0, c) : c);
  return sum;
}

LatticePoint LatticePoint::scaled(Coord n) const {
  LatticePoint r = *this;
  for (Coord& c : r.coords_) c = checked_mul(c, n);
  return r;
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  require_rank(a.rank(), b, "addition");
  LatticePoint r = a;
  for (std::size_t i = 0; i < r.rank(); ++i) r.coords_[i] = checked_add(a.coords_[i], b.coords_[i]);
  return r;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  require_rank(a.rank(), b, "subtraction");
  LatticePoint r = a;
  for (std::size_t i = 0; i < r.rank(); ++i) r.coords_[i] = checked_sub(a.coords_[i], b.coords_[i]);
  return r;
}

LatticePoint LatticePoint::operator-() const { return zero(rank()) - *this; }

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  if (p.rank() == 1) return os << p[0];
  os << '(';
  for (std::size_t i = 0; i < p.rank(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

LatticePoint coordinatewise_max(const std::vector<LatticePoint>& points) {
  LatticePoint m = points.at(0);
  for (const auto& p : points) {
    require_rank(m.rank(), p, "coordinatewise max");
    for (std::size_t i = 0; i < m.rank(); ++i) m[i] = std::max(m[i], p[i]);
  }
  return m;
}

SupportError::SupportError(std::vector<LatticePoint> offending)
    : Error(ErrorKind::Support,
            [&] {
              std::string msg = "support escapes cone: offending exponents [";
              for (std::size_t i = 0; i < offending.size(); ++i)
                msg += (i ? ", " : "") + offending[i].to_string();
              return msg + "]";
            }()),
      offending_(std::move(offending)) {}

void require_rank(std::size_t expected, const LatticePoint& p, const char* what) {
  if (p.rank() != expected)
    throw Error(ErrorKind::RankMismatch, std::string("rank mismatch in ") + what + ": expected " +
                                             std::to_string(expected) + " coordinates, got " +
                                             std::to_string(p.rank()));
}

}  // namespace hrnum
