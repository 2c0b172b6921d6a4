#include <gtest/gtest.h>

#include <random>

#include "addcomb/constructions.hpp"
#include "addcomb/set_calculus.hpp"
#include "oracles.hpp"

using namespace addcomb;

namespace {
// D4 indices: rotations r^i at i, reflections s r^i at 4 + i.
constexpr element r = 1, s = 4, sr = 5, sr3 = 7;
}  // namespace

TEST(Sumset, Examples) {
  EXPECT_EQ(sumset(cyclic(5), {0, 1}, {0, 1}), (element_set{0, 1, 2}));
  EXPECT_EQ(sumset(dihedral(4), {}, {0, 1}), element_set{});
  EXPECT_EQ(sumset(dihedral(4), {s}, {r}), element_set{sr});
  EXPECT_EQ(sumset(dihedral(4), {r}, {s}), element_set{sr3});
}

TEST(Sumset, MatchesModularArithmetic) {
  for (std::size_t m : {6u, 7u}) {
    const auto a = cyclic(m);
    for (element_set x : oracle::all_subsets(m))
      for (element_set y : oracle::all_subsets(m)) ASSERT_EQ(sumset(a, x, y), oracle::zmod_sumset(m, x, y));
  }
}

TEST(NFold, Examples) {
  EXPECT_EQ(n_fold(cyclic(15), {1, 4, 7, 10, 13}, 2), (element_set{2, 5, 8, 11, 14}));
  EXPECT_EQ(n_fold(cyclic(5), {0}, 7), element_set{0});
  EXPECT_EQ(n_fold(cyclic(12), {1, 4, 7, 10}, 2), (element_set{2, 5, 8, 11}));
}

TEST(NFold, DoublingAgreesWithLeftToRight) {
  for (const auto& a : {dihedral(3), quaternion8(), max_chain(4), left_zero(3)}) {
    for (element_set z : oracle::all_subsets(std::min<std::size_t>(a.size(), 6)))
      for (std::size_t k = 1; k <= 9; ++k)
        ASSERT_EQ(n_fold_doubling(a, z, k), n_fold_left_to_right(a, z, k)) << z << " " << k;
  }
}

TEST(RightDifference, Examples) {
  EXPECT_EQ(right_difference(cyclic(6), {0, 1}, {2}), (element_set{4, 5}));
  EXPECT_EQ(right_difference(max_chain(3), {1}, {2}), element_set{});
  for (const auto& a : {dihedral(4), quaternion8()})
    for (element x = 0; x < 8; ++x)
      for (element y = 0; y < 8; ++y)
        EXPECT_EQ(right_difference(a, {x}, {y}), element_set{a.op(x, *a.inverse(y))});
}

TEST(LeftDifference, Examples) {
  EXPECT_EQ(left_difference(cyclic(6), {2}, {0, 1}), (element_set{4, 5}));
  const auto d4 = dihedral(4);
  EXPECT_EQ(left_difference(d4, {s}, {r}), element_set{sr});
  EXPECT_EQ(right_difference(d4, {r}, {s}), element_set{sr3});
}

TEST(LeftDifference, MirrorsRightDifferenceWhenCommutative) {
  const auto a = cyclic(6);
  for (element_set x : oracle::all_subsets(6))
    for (element_set y : oracle::all_subsets(6)) ASSERT_EQ(left_difference(a, x, y), right_difference(a, y, x));
}

TEST(SpanCheck, Examples) {
  EXPECT_EQ(span_check(cyclic(4), {0}, {0, 2}), (span_check_result{true, true, true}));
  EXPECT_EQ(span_check(cyclic(8), {0, 1}, {0, 1}), (span_check_result{false, false, false}));
  EXPECT_EQ(span_check(dihedral(4), {0, 5}, {}), (span_check_result{true, true, true}));
}

TEST(SpanCheck, ComponentsAlwaysAgree) {
  for (const auto& a : {dihedral(3), max_chain(5), direct_product(left_zero(2), cyclic(3))})
    for (element_set x : oracle::all_subsets(a.size()))
      for (element_set y : oracle::all_subsets(a.size())) ASSERT_TRUE(span_check(a, x, y).consistent()) << x << y;
}

TEST(SetCalculusInvariants, Monotonicity) {
  const auto a = cyclic(6);
  const auto subsets = oracle::all_subsets(6);
  for (element_set y1 : subsets)
    for (element_set y2 : subsets) {
      const element_set big = sumset(a, y1, y2);
      // every X_i within Y_i: walk submasks
      for (auto x1 = y1.bits();; x1 = (x1 - 1) & y1.bits()) {
        for (auto x2 = y2.bits();; x2 = (x2 - 1) & y2.bits()) {
          const element_set small = sumset(a, element_set(x1), element_set(x2));
          ASSERT_TRUE(small.subset_of(big));
          ASSERT_LE(small.size(), big.size());
          if (x2 == 0) break;
        }
        if (x1 == 0) break;
      }
    }
}

TEST(SetCalculusInvariants, CancellativeLowerAndGeneralUpperBounds) {
  for (const auto& g : oracle::small_groups()) {
    const auto& a = g.semigroup;
    for (element_set x : oracle::all_subsets(a.size()))
      for (element_set y : oracle::all_subsets(a.size())) {
        const std::size_t n = sumset(a, x, y).size();
        ASSERT_LE(n, x.size() * y.size());
        if (!x.empty() && !y.empty()) { ASSERT_GE(n, std::max(x.size(), y.size())) << g.name; }
      }
  }
  for (const auto& a : {max_chain(4), left_zero(4)})
    for (element_set x : oracle::all_subsets(4))
      for (element_set y : oracle::all_subsets(4)) ASSERT_LE(sumset(a, x, y).size(), x.size() * y.size());
}

TEST(SetCalculusInvariants, TranslationInvariance) {
  for (const auto& a : {dihedral(3), quaternion8()}) {
    for (element_set x : oracle::all_subsets(std::min<std::size_t>(a.size(), 6)))
      for (element_set y : oracle::all_subsets(4)) {
        const element_set xy = sumset(a, x, y);
        for (element z = 0; z < a.size(); ++z) {
          ASSERT_EQ(translate_left(a, z, xy).size(), xy.size());
          ASSERT_EQ(translate_right(a, xy, z).size(), xy.size());
        }
      }
  }
}

TEST(SetCalculusInvariants, DifferenceByUnitIsTranslateByInverse) {
  for (const auto& g : oracle::small_monoids()) {
    const auto& a = g.semigroup;
    for (element_set x : oracle::all_subsets(a.size()))
      for (element z : a.units()) {
        const element back = *a.inverse(z);
        const element_set right = right_difference(a, x, {z});
        const element_set left = left_difference(a, {z}, x);
        ASSERT_EQ(right, translate_right(a, x, back)) << g.name;
        ASSERT_EQ(left, translate_left(a, back, x)) << g.name;
        ASSERT_EQ(right.size(), x.size());
        ASSERT_EQ(left.size(), x.size());
      }
  }
}

TEST(SumsetKernel, AgreesWithReference) {
  std::mt19937_64 rng(7);
  for (const auto& a : {cyclic(13), dihedral(5), quaternion8(), max_chain(9), cyclic(64),
                        direct_product(dihedral(4), cyclic(4))}) {
    const sumset_kernel kernel(a);
    const element_set all = a.carrier();
    for (int trial = 0; trial < 2000; ++trial) {
      const element_set x(rng() & all.bits()), y(rng() & all.bits());
      ASSERT_EQ(kernel.sum(x, y), sumset(a, x, y));
    }
  }
}
