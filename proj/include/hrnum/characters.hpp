#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hrnum/cone.hpp"
#include "hrnum/polynomial.hpp"

namespace hrnum {

// Values below this modulus are treated as zero by the ratio formulas.
inline constexpr double kZeroThreshold = 1e-12;
// Slack allowed outside the closed unit disc.
inline constexpr double kDiscTolerance = 1e-12;
inline constexpr double kRecoveryDiscTolerance = 1e-9;
inline constexpr double kConsistencyTolerance = 1e-9;

/// A point of the closed polydisc, i.e. the character ev_ζ.
class CharacterPoint {
 public:
  explicit CharacterPoint(std::vector<Complex> zeta);

  std::size_t rank() const { return zeta_.size(); }
  const std::vector<Complex>& zeta() const { return zeta_; }
  Complex operator[](std::size_t i) const { return zeta_[i]; }

 private:
  std::vector<Complex> zeta_;
};

/// Finitely many values of a semicharacter χ : S -> closed disc.
struct SemicharacterSample {
  std::map<LatticePoint, Complex> values;

  // χ(s) from a stored key, or from a split s = a + b into derivable parts.
  std::optional<Complex> lookup(const LatticePoint& s) const;
  // values[s+t] = values[s] values[t] whenever all three keys are stored.
  bool is_multiplicative(double tol = 1e-10) const;
};

// ζ^s = Π ζ_i^{s_i}, with 0^0 = 1.
Complex evaluate(const CharacterPoint& zeta, const LatticePoint& s);
Complex evaluate(const CharacterPoint& zeta, const Polynomial& p);

SemicharacterSample restrict_evaluation(const Cone& cone, const CharacterPoint& zeta,
                                        const std::vector<LatticePoint>& consulted);

// The points n_i e_i and (n_i + 1) e_i consulted by recover_point.
std::vector<LatticePoint> recovery_points(const Cone& cone);

// ζ_i = χ((n_i+1) e_i) / χ(n_i e_i), or 0 when χ(n_i e_i) vanishes.
CharacterPoint recover_point(const Cone& cone, const SemicharacterSample& chi);

struct ExtensionResult {
  Complex value;
  // Smallest n with n t, (n+1) t ∈ S and χ(n t) nonzero; absent on the zero branch.
  std::optional<Coord> n_used;
  // Every n <= bound with n t, (n+1) t ∈ S.
  std::vector<Coord> admissible;
  // Largest |χ((n+1)t) χ(mt) - χ((m+1)t) χ(nt)| over admissible pairs.
  double max_inconsistency = 0.0;
};

// χ̃(t) on the seminormalization. Throws Error(Data) on "insufficient data"
// or "inconsistent sample".
ExtensionResult extend_semicharacter(const Cone& cone, const SemicharacterSample& chi,
                                     const LatticePoint& t, Coord bound);

// Two distinct points with equal evaluations on S, for an axis of gcd k >= 2.
std::pair<CharacterPoint, CharacterPoint> gcd_counterexample(const Cone& cone, std::size_t axis);

struct PolyMembership {
  bool member = true;
  std::vector<LatticePoint> offending;  // sorted
};

PolyMembership poly_membership(const Cone& cone, const Polynomial& p);

CharacterPoint pullback_under_rotation(const CharacterPoint& zeta, const std::vector<double>& theta);

}  // namespace hrnum
