#include "hrnum/cone.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hrnum {

Cone validate_cone(std::size_t rank, std::vector<LatticePoint> generators) {
  if (rank < 1) throw Error(ErrorKind::InvalidCone, "rank must be at least 1");
  if (generators.empty()) throw Error(ErrorKind::InvalidCone, "empty generator list");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& g = generators[k];
    const std::string where = "generator " + std::to_string(k) + " " + g.to_string();
    if (g.rank() != rank)
      throw Error(ErrorKind::InvalidCone, "coordinate-length mismatch: " + where + " has " +
                                              std::to_string(g.rank()) + " coordinates, rank is " +
                                              std::to_string(rank));
    if (!g.is_nonnegative())
      throw Error(ErrorKind::InvalidCone, "negative coordinate: " + where);
    if (g.is_zero()) throw Error(ErrorKind::InvalidCone, "zero generator: " + where);
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return Cone(rank, std::move(generators));
}

Cone free_cone(std::size_t rank) {
  std::vector<LatticePoint> units;
  for (std::size_t i = 0; i < rank; ++i) units.push_back(LatticePoint::unit(rank, i));
  return validate_cone(rank, std::move(units));
}

// ---------------------------------------------------------------------------
// BoxTable

BoxTable::BoxTable(const Cone& cone, const LatticePoint& bound)
    : generators_(cone.generators()), bound_(bound) {
  require_rank(cone.rank(), bound, "box bound");
  if (!bound.is_nonnegative())
    throw std::invalid_argument("box bound must be nonnegative: " + bound.to_string());

  const std::size_t d = bound.rank();
  strides_.assign(d, 1);
  std::size_t total = 1;
  for (std::size_t i = d; i-- > 0;) {
    strides_[i] = total;
    const auto extent = static_cast<std::size_t>(bound[i]) + 1;
    if (extent > kMaxPoints || total > kMaxPoints / extent)
      throw Error(ErrorKind::SearchBound, "box " + bound.to_string() + " exceeds " +
                                              std::to_string(kMaxPoints) + " points");
    total *= extent;
  }
  via_.assign(total, kAbsent);

  // Index offsets of the generators that fit into the box at all.
  std::vector<std::pair<std::int32_t, std::size_t>> usable;
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const auto& g = generators_[k];
    if (!g.dominated_by(bound)) continue;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < d; ++i) offset += static_cast<std::size_t>(g[i]) * strides_[i];
    usable.emplace_back(static_cast<std::int32_t>(k), offset);
  }

  std::vector<Coord> cur(d, 0);
  via_[0] = kOrigin;
  for (std::size_t idx = 1; idx < total; ++idx) {
    // Advance the odometer; the last coordinate varies fastest.
    for (std::size_t i = d; i-- > 0;) {
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
    }
    for (const auto& [k, offset] : usable) {
      const auto& g = generators_[static_cast<std::size_t>(k)];
      bool fits = true;
      for (std::size_t i = 0; i < d && fits; ++i) fits = g[i] <= cur[i];
      if (fits && via_[idx - offset] != kAbsent) {
        via_[idx] = k;
        break;
      }
    }
  }
}

bool BoxTable::in_box(const LatticePoint& p) const {
  return p.rank() == bound_.rank() && p.is_nonnegative() && p.dominated_by(bound_);
}

std::size_t BoxTable::index_of(const LatticePoint& p) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < p.rank(); ++i) idx += static_cast<std::size_t>(p[i]) * strides_[i];
  return idx;
}

bool BoxTable::contains(const LatticePoint& p) const {
  require_rank(bound_.rank(), p, "box lookup");
  if (!p.is_nonnegative()) return false;
  if (!p.dominated_by(bound_))
    throw std::out_of_range("point " + p.to_string() + " lies outside box " + bound_.to_string());
  return via_[index_of(p)] != kAbsent;
}

std::vector<LatticePoint> BoxTable::decomposition(const LatticePoint& p) const {
  if (!contains(p)) throw std::logic_error("decomposition requested for non-member " + p.to_string());
  std::vector<LatticePoint> parts;
  LatticePoint cur = p;
  while (true) {
    const auto v = via_[index_of(cur)];
    if (v == kOrigin) break;
    const auto& g = generators_[static_cast<std::size_t>(v)];
    parts.push_back(g);
    cur = cur - g;
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

namespace {

std::vector<LatticePoint> collect(const LatticePoint& bound, const std::vector<std::int32_t>& via,
                                  bool want_members, std::int32_t absent) {
  std::vector<LatticePoint> out;
  const std::size_t d = bound.rank();
  LatticePoint cur = LatticePoint::zero(d);
  for (std::size_t idx = 0; idx < via.size(); ++idx) {
    if (idx > 0) {
      for (std::size_t i = d; i-- > 0;) {
        if (cur[i] < bound[i]) {
          ++cur[i];
          break;
        }
        cur[i] = 0;
      }
    }
    if ((via[idx] != absent) == want_members) out.push_back(cur);
  }
  return out;
}

}  // namespace

std::vector<LatticePoint> BoxTable::members() const { return collect(bound_, via_, true, kAbsent); }

std::vector<LatticePoint> BoxTable::non_members() const {
  return collect(bound_, via_, false, kAbsent);
}

// ---------------------------------------------------------------------------
// Membership and enumeration

MembershipCertificate membership(const Cone& cone, const LatticePoint& s) {
  require_rank(cone.rank(), s, "membership");
  MembershipCertificate cert{s, false, std::nullopt};
  if (!s.is_nonnegative()) return cert;
  BoxTable table(cone, s);
  if (table.contains(s)) {
    cert.member = true;
    cert.decomposition = table.decomposition(s);
  }
  return cert;
}

std::vector<LatticePoint> enumerate_box(const Cone& cone, const LatticePoint& bound) {
  return BoxTable(cone, bound).members();
}

std::vector<LatticePoint> gaps_in_box(const Cone& cone, const LatticePoint& bound) {
  return BoxTable(cone, bound).non_members();
}

// ---------------------------------------------------------------------------
// Axis profiles

AxisProfile axis_profile(const Cone& cone, std::size_t axis, Coord search_bound) {
  if (axis >= cone.rank())
    throw std::out_of_range("axis " + std::to_string(axis + 1) + " outside 1.." +
                            std::to_string(cone.rank()));
  AxisProfile profile;
  profile.axis = axis;

  // A sum of nonnegative generators lies on the axis iff every summand does,
  // so S(i) is generated by the generators supported on axis i alone.
  std::vector<Coord> steps;
  for (const auto& g : cone.generators()) {
    bool on_axis = true;
    for (std::size_t j = 0; j < cone.rank() && on_axis; ++j) on_axis = (j == axis) || g[j] == 0;
    if (on_axis) steps.push_back(g[axis]);
  }
  if (steps.empty()) return profile;

  profile.gcd = std::accumulate(steps.begin(), steps.end(), Coord{0},
                                [](Coord a, Coord b) { return std::gcd(a, b); });
  const Coord m = *std::min_element(steps.begin(), steps.end());
  profile.multiplicity = m;
  if (profile.gcd != 1) return profile;

  std::vector<char> member(1, 1);
  auto extend = [&](Coord n) {
    bool in = false;
    for (Coord a : steps)
      if (a <= n && member[static_cast<std::size_t>(n - a)]) {
        in = true;
        break;
      }
    member.push_back(in ? 1 : 0);
    return in;
  };

  // Scan n = 1, 2, ... until a run of m consecutive members: adding m then
  // covers every larger n.
  Coord run = 0;
  Coord last_gap = 0;
  Coord n = 1;
  for (;; ++n) {
    if (n > search_bound)
      throw Error(ErrorKind::SearchBound, "axis search exceeded bound " +
                                              std::to_string(search_bound) + " on axis " +
                                              std::to_string(axis + 1));
    if (extend(n)) {
      if (++run == m) break;
    } else {
      run = 0;
      last_gap = n;
      profile.gaps.push_back(n);
    }
  }
  profile.conductor = last_gap == 0 ? 0 : last_gap + 1;
  extend(n + 1);
  for (Coord k = 1;; ++k) {
    if (member[static_cast<std::size_t>(k)] && member[static_cast<std::size_t>(k + 1)]) {
      profile.recovery_index = k;
      break;
    }
  }
  return profile;
}

HigherRankVerdict is_higher_rank_numerical(const Cone& cone) {
  HigherRankVerdict v;
  v.higher_rank = true;
  for (std::size_t i = 0; i < cone.rank(); ++i) {
    v.profiles.push_back(axis_profile(cone, i));
    if (v.profiles.back().gcd != 1) v.higher_rank = false;
  }
  return v;
}

HypothesisError::HypothesisError(AxisProfile failing)
    : Error(ErrorKind::Hypothesis,
            "hypothesis violated: not a higher-rank numerical semigroup (axis " +
                std::to_string(failing.axis + 1) + " has gcd " + std::to_string(failing.gcd) + ")"),
      failing_(std::move(failing)) {}

std::vector<AxisProfile> require_higher_rank(const Cone& cone) {
  auto v = is_higher_rank_numerical(cone);
  if (!v.higher_rank)
    for (const auto& p : v.profiles)
      if (p.gcd != 1) throw HypothesisError(p);
  return v.profiles;
}

// ---------------------------------------------------------------------------
// Seminormalization, normalization, seminormality

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

EventualVerdict seminormalization_membership(const Cone& cone, const LatticePoint& g, Coord bound) {
  require_rank(cone.rank(), g, "seminormalization membership");
  if (bound < 2) throw std::invalid_argument("seminormalization search bound must be at least 2");
  EventualVerdict v;
  v.search_bound = bound;
  if (!g.is_nonnegative()) {
    v.verdict = Verdict::No;
    return v;
  }
  if (g.is_zero()) {
    v.verdict = Verdict::Yes;
    v.witness = 1;
    v.threshold = 1;
    return v;
  }
  const BoxTable table(cone, g.scaled(checked_add(bound, 1)));
  bool prev = table.contains(g);
  for (Coord n = 1; n <= bound; ++n) {
    const bool next = table.contains(g.scaled(n + 1));
    if (prev && next) {
      v.verdict = Verdict::Yes;
      v.witness = n;
      // <n, n+1> has Frobenius number n^2 - n - 1; multiples are indexed from 1.
      v.threshold = std::max<Coord>(checked_sub(checked_mul(n, n), n), 1);
      return v;
    }
    prev = next;
  }
  return v;
}

NormalizationVerdict normalization_membership(const Cone& cone, const LatticePoint& g, Coord bound) {
  require_rank(cone.rank(), g, "normalization membership");
  if (bound < 1) throw std::invalid_argument("normalization search bound must be at least 1");
  NormalizationVerdict v;
  v.search_bound = bound;
  if (!g.is_nonnegative()) return v;
  if (g.is_zero()) {
    v.verdict = Verdict::Yes;
    v.witness = 1;
    return v;
  }
  const BoxTable table(cone, g.scaled(bound));
  for (Coord n = 1; n <= bound; ++n) {
    if (table.contains(g.scaled(n))) {
      v.verdict = Verdict::Yes;
      v.witness = n;
      return v;
    }
  }
  return v;
}

SeminormalityCheck is_seminormal_in_box(const Cone& cone, const LatticePoint& bound) {
  const BoxTable table(cone, bound);
  // 3s = 2t forces s = 2p, t = 3p with p = t - s, so the pairs are indexed
  // by p with 3p inside the box, in the same lexicographic order as s.
  LatticePoint pbound = bound;
  for (std::size_t i = 0; i < pbound.rank(); ++i) pbound[i] /= 3;
  SeminormalityCheck check;
  for (const auto& p : BoxTable(free_cone(cone.rank()), pbound).members()) {
    const LatticePoint s = p.scaled(2);
    const LatticePoint t = p.scaled(3);
    if (table.contains(s) && table.contains(t) && !table.contains(p)) {
      check.seminormal = false;
      check.counterexample = std::make_pair(s, t);
      return check;
    }
  }
  return check;
}

}  // namespace hrnum
