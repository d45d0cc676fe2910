#include "hrnum/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hrnum {

CharacterPoint::CharacterPoint(std::vector<Complex> zeta) : zeta_(std::move(zeta)) {
  for (std::size_t i = 0; i < zeta_.size(); ++i)
    if (std::abs(zeta_[i]) > 1.0 + kDiscTolerance)
      throw std::invalid_argument("coordinate " + std::to_string(i + 1) +
                                  " lies outside the closed unit disc");
}

// ---------------------------------------------------------------------------
// Samples

namespace {

std::optional<Complex> derive(const std::map<LatticePoint, Complex>& values, const LatticePoint& s,
                              std::map<LatticePoint, std::optional<Complex>>& memo) {
  if (const auto it = values.find(s); it != values.end()) return it->second;
  if (s.is_zero()) return Complex(1.0);
  if (const auto it = memo.find(s); it != memo.end()) return it->second;
  memo[s] = std::nullopt;  // guards against revisiting while in progress
  std::optional<Complex> found;
  for (const auto& [key, value] : values) {
    if (key.rank() != s.rank() || key.is_zero() || key == s || !key.dominated_by(s)) continue;
    if (const auto rest = derive(values, s - key, memo)) {
      found = value * *rest;
      break;
    }
  }
  memo[s] = found;
  return found;
}

}  // namespace

std::optional<Complex> SemicharacterSample::lookup(const LatticePoint& s) const {
  std::map<LatticePoint, std::optional<Complex>> memo;
  return derive(values, s, memo);
}

bool SemicharacterSample::is_multiplicative(double tol) const {
  for (const auto& [s, a] : values)
    for (const auto& [t, b] : values) {
      if (s.rank() != t.rank()) return false;
      const auto it = values.find(s + t);
      if (it != values.end() && std::abs(it->second - a * b) > tol) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Evaluation, restriction, recovery

Complex evaluate(const CharacterPoint& zeta, const LatticePoint& s) {
  require_rank(zeta.rank(), s, "evaluation");
  if (!s.is_nonnegative()) throw std::invalid_argument("evaluation exponent must be nonnegative");
  Complex v(1.0);
  for (std::size_t i = 0; i < s.rank(); ++i) v *= integer_power(zeta[i], s[i]);
  return v;
}

Complex evaluate(const CharacterPoint& zeta, const Polynomial& p) {
  return evaluate_polynomial(p, zeta.zeta());
}

SemicharacterSample restrict_evaluation(const Cone& cone, const CharacterPoint& zeta,
                                        const std::vector<LatticePoint>& consulted) {
  if (zeta.rank() != cone.rank()) throw Error(ErrorKind::RankMismatch, "character rank differs from cone rank");
  SemicharacterSample chi;
  for (const auto& s : consulted) {
    if (!membership(cone, s).member)
      throw Error(ErrorKind::Data, "consulted point outside S: " + s.to_string());
    chi.values[s] = evaluate(zeta, s);
  }
  return chi;
}

std::vector<LatticePoint> recovery_points(const Cone& cone) {
  const auto profiles = require_higher_rank(cone);
  std::vector<LatticePoint> pts;
  for (const auto& prof : profiles) {
    const auto e = LatticePoint::unit(cone.rank(), prof.axis);
    pts.push_back(e.scaled(*prof.recovery_index));
    pts.push_back(e.scaled(*prof.recovery_index + 1));
  }
  return pts;
}

CharacterPoint recover_point(const Cone& cone, const SemicharacterSample& chi) {
  const auto profiles = require_higher_rank(cone);
  std::vector<Complex> zeta(cone.rank());
  for (const auto& prof : profiles) {
    const auto e = LatticePoint::unit(cone.rank(), prof.axis);
    const auto lo = e.scaled(*prof.recovery_index);
    const auto hi = e.scaled(*prof.recovery_index + 1);
    const auto a = chi.lookup(lo);
    const auto b = chi.lookup(hi);
    if (!a) throw Error(ErrorKind::Data, "missing consulted value at " + lo.to_string());
    if (!b) throw Error(ErrorKind::Data, "missing consulted value at " + hi.to_string());
    Complex z = std::abs(*a) > kZeroThreshold ? *b / *a : Complex(0.0);
    const double r = std::abs(z);
    if (r > 1.0 + kRecoveryDiscTolerance)
      throw Error(ErrorKind::Data, "recovered point outside closed disc on axis " +
                                       std::to_string(prof.axis + 1));
    if (r > 1.0) z /= r;
    zeta[prof.axis] = z;
  }
  return CharacterPoint(std::move(zeta));
}

// ---------------------------------------------------------------------------
// Extension to the seminormalization

ExtensionResult extend_semicharacter(const Cone& cone, const SemicharacterSample& chi,
                                     const LatticePoint& t, Coord bound) {
  require_rank(cone.rank(), t, "extension");
  if (bound < 1) throw std::invalid_argument("extension search bound must be at least 1");
  if (!t.is_nonnegative())
    throw Error(ErrorKind::Data, "insufficient data: " + t.to_string() + " is not in the seminormalization");
  ExtensionResult res{Complex(1.0), std::nullopt, {}, 0.0};
  if (t.is_zero()) return res;

  const BoxTable table(cone, t.scaled(checked_add(bound, 1)));
  struct Pair {
    Coord n;
    Complex lo, hi;
  };
  std::vector<Pair> pairs;
  for (Coord n = 1; n <= bound; ++n) {
    const auto nt = t.scaled(n);
    const auto n1t = t.scaled(n + 1);
    if (!table.contains(nt) || !table.contains(n1t)) continue;
    res.admissible.push_back(n);
    const auto lo = chi.lookup(nt);
    const auto hi = chi.lookup(n1t);
    if (lo && hi) pairs.push_back({n, *lo, *hi});
  }
  if (res.admissible.empty())
    throw Error(ErrorKind::Data, "insufficient data: no n <= " + std::to_string(bound) +
                                     " with n t and (n+1) t in S for t = " + t.to_string());
  if (pairs.empty())
    throw Error(ErrorKind::Data, "insufficient data: sample does not determine chi at any admissible multiple of " +
                                     t.to_string());

  // χ((n+1)t) χ(mt) = χ((m+1)t) χ(nt) for all admissible n, m.
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      res.max_inconsistency =
          std::max(res.max_inconsistency,
                   std::abs(pairs[i].hi * pairs[j].lo - pairs[j].hi * pairs[i].lo));
  if (res.max_inconsistency > kConsistencyTolerance)
    throw Error(ErrorKind::Data, "inconsistent sample: ratio depends on n (deviation " +
                                     std::to_string(res.max_inconsistency) + ")");

  res.value = Complex(0.0);
  for (const auto& p : pairs) {
    if (std::abs(p.lo) > kZeroThreshold) {
      res.n_used = p.n;
      res.value = p.hi / p.lo;
      break;
    }
  }
  // On S the extension is χ itself.
  if (table.contains(t))
    if (const auto direct = chi.lookup(t)) res.value = *direct;
  return res;
}

// ---------------------------------------------------------------------------
// Counterexample, support membership, rotation

std::pair<CharacterPoint, CharacterPoint> gcd_counterexample(const Cone& cone, std::size_t axis) {
  const auto prof = axis_profile(cone, axis);
  const std::size_t d = cone.rank();
  std::vector<Complex> a(d, Complex(0.0));
  std::vector<Complex> b(d, Complex(0.0));
  if (prof.gcd == 1)
    throw Error(ErrorKind::Data, "axis gcd is 1 on axis " + std::to_string(axis + 1) +
                                     ": no counterexample exists");
  if (prof.gcd == 0) {
    // Every member has a nonzero coordinate off this axis.
    a[axis] = 1.0;
  } else if (prof.gcd == 2) {
    a[axis] = 1.0;
    b[axis] = -1.0;
  } else {
    const double k = static_cast<double>(prof.gcd);
    a[axis] = std::polar(1.0, 2.0 * std::numbers::pi / k);
    b[axis] = std::polar(1.0, 4.0 * std::numbers::pi / k);
  }
  CharacterPoint za(std::move(a));
  CharacterPoint zb(std::move(b));
  for (const auto& g : cone.generators())
    if (std::abs(evaluate(za, g) - evaluate(zb, g)) > 1e-12)
      throw std::logic_error("counterexample points differ on generator " + g.to_string());
  return {std::move(za), std::move(zb)};
}

PolyMembership poly_membership(const Cone& cone, const Polynomial& p) {
  if (p.rank() != cone.rank()) throw Error(ErrorKind::RankMismatch, "polynomial rank differs from cone rank");
  PolyMembership out;
  const auto support = p.support();
  if (support.empty()) return out;
  const BoxTable table(cone, coordinatewise_max(support));
  for (const auto& s : support)
    if (!table.contains(s)) out.offending.push_back(s);
  out.member = out.offending.empty();
  return out;
}

CharacterPoint pullback_under_rotation(const CharacterPoint& zeta, const std::vector<double>& theta) {
  if (theta.size() != zeta.rank()) throw Error(ErrorKind::RankMismatch, "rotation angle count differs from rank");
  std::vector<Complex> z(zeta.rank());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = zeta[i] * std::polar(1.0, theta[i]);
  return CharacterPoint(std::move(z));
}

}  // namespace hrnum
