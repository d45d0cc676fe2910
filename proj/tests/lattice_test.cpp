#include "hrnum/lattice.hpp"

#include <gtest/gtest.h>

#include "hrnum/errors.hpp"

namespace hrnum {
namespace {

TEST(LatticePoint, ArithmeticAndOrder) {
  const LatticePoint a{1, -2};
  const LatticePoint b{0, 5};
  EXPECT_EQ(a + b, (LatticePoint{1, 3}));
  EXPECT_EQ(a - b, (LatticePoint{1, -7}));
  EXPECT_EQ(-a, (LatticePoint{-1, 2}));
  EXPECT_EQ(a.scaled(3), (LatticePoint{3, -6}));
  EXPECT_LT(b, a);
  EXPECT_EQ(a.l1_norm(), 3);
  EXPECT_FALSE(a.is_nonnegative());
  EXPECT_TRUE(LatticePoint::zero(3).is_zero());
  EXPECT_EQ(LatticePoint::unit(3, 1), (LatticePoint{0, 1, 0}));
}

TEST(LatticePoint, Dominance) {
  EXPECT_TRUE((LatticePoint{1, 2}).dominated_by({1, 3}));
  EXPECT_FALSE((LatticePoint{2, 2}).dominated_by({1, 3}));
  EXPECT_EQ(coordinatewise_max({{1, 4}, {3, 0}}), (LatticePoint{3, 4}));
}

TEST(LatticePoint, Formatting) {
  EXPECT_EQ((LatticePoint{7}).to_string(), "7");
  EXPECT_EQ((LatticePoint{1, -2}).to_string(), "(1,-2)");
}

TEST(LatticePoint, CheckedArithmetic) {
  const Coord max = std::numeric_limits<Coord>::max();
  EXPECT_THROW(checked_add(max, 1), OverflowError);
  EXPECT_THROW(checked_sub(-max - 1, 1), OverflowError);
  EXPECT_THROW(checked_mul(max / 2 + 1, 2), OverflowError);
  EXPECT_EQ(checked_mul(-3, 4), -12);
  EXPECT_THROW((LatticePoint{1}) + (LatticePoint{1, 2}), Error);
}

}  // namespace
}  // namespace hrnum
