#include "hrnum/cone.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support/oracles.hpp"

namespace hrnum {
namespace {

Cone c1d(std::vector<Coord> gens) {
  std::vector<LatticePoint> pts;
  for (Coord g : gens) pts.push_back(LatticePoint{g});
  return validate_cone(1, pts);
}

const Cone kTwoThree = c1d({2, 3});
const Cone kThreeFive = c1d({3, 5});
const Cone kFourSix = c1d({4, 6});
const Cone kMixed = validate_cone(2, {{2, 0}, {3, 0}, {0, 1}});
const Cone kEvenAxis = validate_cone(2, {{2, 0}, {0, 2}, {0, 3}, {1, 1}});

std::string error_message(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(ValidateCone, SortsAndDeduplicates) {
  const Cone c = validate_cone(1, {{3}, {2}, {3}});
  ASSERT_EQ(c.generators().size(), 2u);
  EXPECT_EQ(c.generators()[0], LatticePoint{2});
  EXPECT_EQ(c.generators()[1], LatticePoint{3});
  EXPECT_EQ(free_cone(2).generators(), (std::vector<LatticePoint>{{0, 1}, {1, 0}}));
}

TEST(ValidateCone, DistinctDiagnostics) {
  const auto zero = error_message([] { validate_cone(1, {{0}}); });
  const auto negative = error_message([] { validate_cone(2, {{1, -1}}); });
  const auto length = error_message([] { validate_cone(2, {{1}}); });
  const auto empty = error_message([] { validate_cone(2, {}); });
  EXPECT_NE(zero.find("zero generator"), std::string::npos);
  EXPECT_NE(negative.find("negative coordinate"), std::string::npos);
  EXPECT_NE(length.find("coordinate-length mismatch"), std::string::npos);
  EXPECT_NE(empty.find("empty generator list"), std::string::npos);
  EXPECT_THROW(validate_cone(0, {{1}}), Error);
}

TEST(Membership, Examples) {
  const auto seven = membership(kTwoThree, {7});
  ASSERT_TRUE(seven.member);
  LatticePoint sum{0};
  for (const auto& g : *seven.decomposition) sum = sum + g;
  EXPECT_EQ(sum, LatticePoint{7});

  EXPECT_FALSE(membership(kMixed, {1, 1}).member);
  EXPECT_FALSE(membership(kMixed, {1, 1}).decomposition.has_value());

  const auto zero = membership(kMixed, {0, 0});
  EXPECT_TRUE(zero.member);
  EXPECT_TRUE(zero.decomposition->empty());

  EXPECT_FALSE(membership(kTwoThree, {-2}).member);
  EXPECT_THROW(membership(kTwoThree, {1, 1}), Error);
}

TEST(Membership, OverflowIsAnError) {
  const LatticePoint big{std::numeric_limits<Coord>::max()};
  EXPECT_THROW(big + LatticePoint{1}, OverflowError);
  EXPECT_THROW(big.scaled(2), OverflowError);
}

TEST(EnumerateBox, Examples) {
  EXPECT_EQ(enumerate_box(kTwoThree, {5}),
            (std::vector<LatticePoint>{{0}, {2}, {3}, {4}, {5}}));
  EXPECT_EQ(enumerate_box(free_cone(2), {1, 1}),
            (std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(enumerate_box(kMixed, {3, 1}),
            (std::vector<LatticePoint>{{0, 0}, {0, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 1}}));
}

TEST(EnumerateBox, MatchesBruteForceOnRandomCones) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Cone c = oracle::random_cone(rng, 2, 4, 4);
    const LatticePoint bound{8, 8};
    EXPECT_EQ(enumerate_box(c, bound), oracle::brute_members(c, bound)) << "trial " << trial;
  }
}

TEST(EnumerateBox, ClosedUnderRecurrence) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Cone c = oracle::random_cone(rng, 2, 5, 4);
    const LatticePoint bound{10, 10};
    const auto members = enumerate_box(c, bound);
    const std::set<LatticePoint> in(members.begin(), members.end());
    for (const auto& p : oracle::box_points(bound)) {
      bool reached = p.is_zero();
      for (const auto& g : c.generators())
        if (g.dominated_by(p) && in.count(p - g)) reached = true;
      EXPECT_EQ(reached, in.count(p) == 1) << p;
    }
  }
}

TEST(EnumerateBox, Monotone) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Cone c = oracle::random_cone(rng, 2, 6, 3);
    const auto small = enumerate_box(c, {5, 7});
    const auto large = enumerate_box(c, {9, 8});
    for (const auto& p : small) EXPECT_TRUE(std::binary_search(large.begin(), large.end(), p));
  }
}

TEST(Membership, AdditivityAndCertificates) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Cone c = oracle::random_cone(rng, 2, 4, 3);
    const LatticePoint bound{8, 8};
    const auto members = enumerate_box(c, bound);
    for (const auto& s : members)
      for (const auto& t : members) {
        const auto st = s + t;
        if (st.dominated_by(bound)) EXPECT_TRUE(membership(c, st).member);
      }
    for (const auto& p : oracle::box_points(bound)) {
      const auto cert = membership(c, p);
      EXPECT_EQ(cert.member, oracle::decomposes(c.generators(), p));
      if (cert.member) {
        LatticePoint sum = LatticePoint::zero(2);
        for (const auto& g : *cert.decomposition) sum = sum + g;
        EXPECT_EQ(sum, p);
      }
    }
  }
}

TEST(AxisProfile, ThreeFive) {
  const auto p = axis_profile(kThreeFive, 0);
  EXPECT_EQ(p.gcd, 1);
  EXPECT_EQ(p.multiplicity, 3);
  EXPECT_EQ(p.conductor, 8);
  EXPECT_EQ(p.gaps, (std::vector<Coord>{1, 2, 4, 7}));
  EXPECT_EQ(p.recovery_index, 5);
}

TEST(AxisProfile, FullAxis) {
  const auto p = axis_profile(kMixed, 1);
  EXPECT_EQ(p.gcd, 1);
  EXPECT_EQ(p.multiplicity, 1);
  EXPECT_EQ(p.conductor, 0);
  EXPECT_TRUE(p.gaps.empty());
  EXPECT_EQ(p.recovery_index, 1);
  EXPECT_EQ(axis_profile(kMixed, 0).conductor, 2);
  EXPECT_EQ(axis_profile(kTwoThree, 0).recovery_index, 2);
}

TEST(AxisProfile, EvenAxisHasNoConductor) {
  const auto p = axis_profile(kEvenAxis, 0);
  EXPECT_EQ(p.gcd, 2);
  EXPECT_FALSE(p.conductor.has_value());
  EXPECT_TRUE(p.gaps.empty());
  // Brute force: only even multiples of e_1 decompose.
  for (Coord n = 1; n <= 12; ++n)
    EXPECT_EQ(oracle::decomposes(kEvenAxis.generators(), {n, 0}), n % 2 == 0);
}

TEST(AxisProfile, EmptyAxisAndSearchBound) {
  const Cone diagonal = validate_cone(2, {{1, 1}, {0, 1}});
  const auto p = axis_profile(diagonal, 0);
  EXPECT_EQ(p.gcd, 0);
  EXPECT_FALSE(p.multiplicity.has_value());
  // Frobenius number of <200, 201> is 39799, beyond a bound of 1000.
  EXPECT_THROW(axis_profile(c1d({200, 201}), 0, 1000), Error);
}

TEST(AxisProfile, StabilizesPastConductor) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const Cone c = oracle::random_cone(rng, 1, 9, 3);
    const auto p = axis_profile(c, 0);
    Coord g = 0;
    for (const auto& x : c.generators()) g = std::gcd(g, x[0]);
    ASSERT_EQ(p.gcd, g);
    if (p.gcd != 1) continue;
    const Coord cond = *p.conductor;
    for (Coord n = cond; n < cond + 50; ++n) EXPECT_TRUE(membership(c, {n}).member);
    std::vector<Coord> gaps;
    for (Coord n = 1; n < cond; ++n)
      if (!oracle::decomposes(c.generators(), {n})) gaps.push_back(n);
    EXPECT_EQ(p.gaps, gaps);
  }
}

TEST(HigherRank, Examples) {
  EXPECT_TRUE(is_higher_rank_numerical(kMixed).higher_rank);
  const auto even = is_higher_rank_numerical(kEvenAxis);
  EXPECT_FALSE(even.higher_rank);
  EXPECT_EQ(even.profiles[0].gcd, 2);
  EXPECT_TRUE(is_higher_rank_numerical(free_cone(3)).higher_rank);
  EXPECT_THROW(require_higher_rank(kEvenAxis), HypothesisError);
  try {
    require_higher_rank(kEvenAxis);
  } catch (const HypothesisError& e) {
    EXPECT_EQ(e.failing_profile().axis, 0u);
  }
}

TEST(HigherRank, RankOneCharacterization) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Cone c = oracle::random_cone(rng, 1, 12, 3);
    Coord g = 0;
    for (const auto& x : c.generators()) g = std::gcd(g, x[0]);
    const bool hr = is_higher_rank_numerical(c).higher_rank;
    EXPECT_EQ(hr, g == 1);
    // Finitely many gaps iff gcd 1: gaps stop well before 2 * 12^2.
    const auto gaps = gaps_in_box(c, {400});
    const bool gaps_stop = gaps.empty() || gaps.back()[0] < 300;
    EXPECT_EQ(gaps_stop, g == 1);
  }
}

TEST(Seminormalization, Examples) {
  const auto a = seminormalization_membership(kThreeFive, {1}, 10);
  EXPECT_EQ(a.verdict, Verdict::Yes);
  EXPECT_EQ(a.witness, 5);
  EXPECT_EQ(a.threshold, 20);

  const auto b = seminormalization_membership(kFourSix, {3}, 50);
  EXPECT_EQ(b.verdict, Verdict::Unknown);
  EXPECT_FALSE(b.threshold.has_value());

  const auto c = seminormalization_membership(kMixed, {0, 0}, 2);
  EXPECT_EQ(c.verdict, Verdict::Yes);
  EXPECT_EQ(c.threshold, 1);

  EXPECT_EQ(seminormalization_membership(kMixed, {-1, 0}, 5).verdict, Verdict::No);
}

TEST(Seminormalization, ThresholdHolds) {
  for (const auto& cone : {kTwoThree, kThreeFive, c1d({5, 7})}) {
    const auto v = seminormalization_membership(cone, {1}, 20);
    ASSERT_EQ(v.verdict, Verdict::Yes);
    for (Coord m = *v.threshold; m < *v.threshold + 30; ++m)
      EXPECT_TRUE(membership(cone, {m}).member) << m;
  }
}

TEST(Seminormalization, ContainsCone) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const Cone c = oracle::random_cone(rng, 2, 4, 3);
    for (const auto& g : enumerate_box(c, {5, 5}))
      EXPECT_EQ(seminormalization_membership(c, g, 4).verdict, Verdict::Yes);
  }
}

TEST(Normalization, Examples) {
  const auto a = normalization_membership(kFourSix, {3}, 10);
  EXPECT_EQ(a.verdict, Verdict::Yes);
  EXPECT_EQ(a.witness, 2);
  EXPECT_EQ(normalization_membership(kTwoThree, {1}, 10).witness, 2);
  EXPECT_EQ(normalization_membership(kMixed, {0, 0}, 2).witness, 1);
  EXPECT_EQ(normalization_membership(kEvenAxis, {1, 0}, 1).verdict, Verdict::Unknown);
}

TEST(Seminormality, Examples) {
  const auto a = is_seminormal_in_box(kTwoThree, {12});
  EXPECT_FALSE(a.seminormal);
  EXPECT_EQ(a.counterexample->first, LatticePoint{2});
  EXPECT_EQ(a.counterexample->second, LatticePoint{3});

  EXPECT_TRUE(is_seminormal_in_box(free_cone(2), {5, 5}).seminormal);

  const auto c = is_seminormal_in_box(kFourSix, {24});
  EXPECT_FALSE(c.seminormal);
  EXPECT_EQ(c.counterexample->first, LatticePoint{4});
  EXPECT_EQ(c.counterexample->second, LatticePoint{6});
}

TEST(Gaps, Examples) {
  EXPECT_EQ(gaps_in_box(kThreeFive, {10}), (std::vector<LatticePoint>{{1}, {2}, {4}, {7}}));
  EXPECT_EQ(gaps_in_box(kTwoThree, {10}), (std::vector<LatticePoint>{{1}}));
  EXPECT_TRUE(gaps_in_box(free_cone(2), {3, 3}).empty());
}

}  // namespace
}  // namespace hrnum
