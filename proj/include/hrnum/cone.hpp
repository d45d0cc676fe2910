#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hrnum/errors.hpp"
#include "hrnum/lattice.hpp"

namespace hrnum {

/// A finitely generated submonoid of Z_+^d, stored by its generators.
///
/// Only validate_cone() constructs one, so every instance satisfies: rank >= 1,
/// a nonempty duplicate-free generator list sorted lexicographically, and every
/// generator nonnegative and nonzero.
class Cone {
 public:
  std::size_t rank() const { return rank_; }
  const std::vector<LatticePoint>& generators() const { return generators_; }

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  friend Cone validate_cone(std::size_t rank, std::vector<LatticePoint> generators);
  Cone(std::size_t rank, std::vector<LatticePoint> generators)
      : rank_(rank), generators_(std::move(generators)) {}

  std::size_t rank_ = 0;
  std::vector<LatticePoint> generators_;
};

Cone validate_cone(std::size_t rank, std::vector<LatticePoint> generators);

// Z_+^d presented by the unit vectors.
Cone free_cone(std::size_t rank);

/// Membership table for S ∩ [0, bound], filled by dynamic programming in
/// lexicographic order: m is a member iff m = 0 or m - g is a member for some
/// generator g <= m.
class BoxTable {
 public:
  // Largest number of box points a table may hold.
  static constexpr std::size_t kMaxPoints = 20'000'000;

  BoxTable(const Cone& cone, const LatticePoint& bound);

  const LatticePoint& bound() const { return bound_; }
  std::size_t size() const { return via_.size(); }

  bool in_box(const LatticePoint& p) const;
  // False for points with a negative coordinate; throws for points beyond the box.
  bool contains(const LatticePoint& p) const;
  // Generators summing to p (empty for 0). Requires contains(p).
  std::vector<LatticePoint> decomposition(const LatticePoint& p) const;

  // Members and non-members of the box, each lexicographically sorted.
  std::vector<LatticePoint> members() const;
  std::vector<LatticePoint> non_members() const;

 private:
  static constexpr std::int32_t kAbsent = -1;
  static constexpr std::int32_t kOrigin = -2;

  std::size_t index_of(const LatticePoint& p) const;

  std::vector<LatticePoint> generators_;
  LatticePoint bound_;
  std::vector<std::size_t> strides_;
  // Per box point: kAbsent, kOrigin, or the index of the last generator used.
  std::vector<std::int32_t> via_;
};

struct MembershipCertificate {
  LatticePoint point;
  bool member = false;
  // Generators summing to point; present iff member.
  std::optional<std::vector<LatticePoint>> decomposition;
};

MembershipCertificate membership(const Cone& cone, const LatticePoint& s);

std::vector<LatticePoint> enumerate_box(const Cone& cone, const LatticePoint& bound);

std::vector<LatticePoint> gaps_in_box(const Cone& cone, const LatticePoint& bound);

/// Intersection of the cone with one coordinate axis, S(i) = S ∩ Z_+ e_i.
struct AxisProfile {
  std::size_t axis = 0;  // 0-based
  Coord gcd = 0;         // 0 when S(i) = {0}
  std::optional<Coord> multiplicity;
  std::optional<Coord> conductor;  // present iff gcd == 1
  std::vector<Coord> gaps;         // positive n < conductor with n e_i outside S
  // Smallest n >= 1 with n e_i and (n+1) e_i both in S (present iff gcd == 1).
  std::optional<Coord> recovery_index;

  friend bool operator==(const AxisProfile&, const AxisProfile&) = default;
};

inline constexpr Coord kDefaultAxisSearchBound = 10'000;

AxisProfile axis_profile(const Cone& cone, std::size_t axis,
                         Coord search_bound = kDefaultAxisSearchBound);

struct HigherRankVerdict {
  bool higher_rank = false;
  std::vector<AxisProfile> profiles;
};

HigherRankVerdict is_higher_rank_numerical(const Cone& cone);

class HypothesisError : public Error {
 public:
  explicit HypothesisError(AxisProfile failing);
  const AxisProfile& failing_profile() const { return failing_; }

 private:
  AxisProfile failing_;
};

// Axis profiles of a higher-rank numerical cone; throws HypothesisError with
// the first failing axis otherwise.
std::vector<AxisProfile> require_higher_rank(const Cone& cone);

enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);

struct EventualVerdict {
  Verdict verdict = Verdict::Unknown;
  // n g ∈ S for every n >= threshold; present iff Yes.
  std::optional<Coord> threshold;
  // The n of the witnessed pair n g, (n+1) g ∈ S; present iff Yes.
  std::optional<Coord> witness;
  Coord search_bound = 0;
};

EventualVerdict seminormalization_membership(const Cone& cone, const LatticePoint& g, Coord bound);

struct NormalizationVerdict {
  Verdict verdict = Verdict::Unknown;  // Yes or Unknown
  std::optional<Coord> witness;        // smallest n with n g ∈ S
  Coord search_bound = 0;
};

NormalizationVerdict normalization_membership(const Cone& cone, const LatticePoint& g, Coord bound);

struct SeminormalityCheck {
  bool seminormal = true;
  // First (s, t) with 3s = 2t, s, t ∈ S and t - s ∉ S.
  std::optional<std::pair<LatticePoint, LatticePoint>> counterexample;
};

SeminormalityCheck is_seminormal_in_box(const Cone& cone, const LatticePoint& bound);

}  // namespace hrnum
