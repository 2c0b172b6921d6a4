#include <gtest/gtest.h>

#include "addcomb/constructions.hpp"
#include "addcomb/sweep.hpp"
#include "addcomb/theorems.hpp"
#include "oracles.hpp"

using namespace addcomb;

namespace {
const extended_nat inf = extended_nat::infinity();
// D4: e = 0, r = 1, s = 4, s r = 5
constexpr element e = 0, r = 1, s = 4;
}  // namespace

TEST(Statement, ParsesCaseInsensitively) {
  EXPECT_EQ(parse_statement("thm2.2"), statement::thm2_2);
  EXPECT_EQ(parse_statement("CD-1813"), statement::cd_1813);
  EXPECT_EQ(parse_statement("cd"), statement::cd_1813);
  EXPECT_EQ(parse_statement("kemperman-weak"), statement::kemperman_weak);
  for (statement st : all_statements) EXPECT_EQ(parse_statement(to_string(st)), st);
  EXPECT_THROW(parse_statement("kneser"), error);
}

TEST(VerifyMain, CauchyDavenportInstance) {
  const auto b = verify_main(cyclic(5), {0, 1}, {0, 1});
  EXPECT_TRUE(b.applicable);
  EXPECT_EQ(b.lhs, 3u);
  EXPECT_EQ(b.rhs, extended_nat(3));
  EXPECT_TRUE(b.satisfied);
  EXPECT_TRUE(b.tight());
}

TEST(VerifyMain, DihedralRotationSummand) {
  const auto b = verify_main(dihedral(4), {e, s}, {e, r});
  EXPECT_TRUE(b.applicable);
  EXPECT_EQ(b.lhs, 4u);
  EXPECT_EQ(omega(dihedral(4), {e, r}).overall, extended_nat(4));
  EXPECT_EQ(b.rhs, extended_nat(3));
  EXPECT_TRUE(b.satisfied);
}

TEST(VerifyMain, GatedOnCancellativity) {
  const auto b = verify_main(max_chain(3), {1}, {1, 2});
  EXPECT_FALSE(b.applicable);
  EXPECT_FALSE(b.satisfied);
  EXPECT_FALSE(b.violated());
  ASSERT_EQ(b.hypotheses.size(), 2u);
  EXPECT_EQ(b.hypotheses[0].name, "cancellative");
  EXPECT_FALSE(b.hypotheses[0].holds);
}

TEST(VerifyMain, RejectsEmptyOperands) {
  EXPECT_THROW(verify_main(cyclic(5), {}, {0}), error);
}

TEST(VerifyMirror, SwappedDihedralExample) {
  const auto reports = verify_mirror(dihedral(4), {e, r}, {e, s});
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].id, statement::cor2_4);
  EXPECT_TRUE(reports[0].applicable);
  EXPECT_EQ(reports[0].lhs, 4u);
  EXPECT_EQ(reports[0].rhs, extended_nat(3));
  // <{e, s}> = {e, s} is commutative too
  EXPECT_EQ(reports[1].id, statement::cor2_7);
  EXPECT_TRUE(reports[1].applicable);
  EXPECT_TRUE(reports[1].satisfied);
}

TEST(VerifyMirror, OmegaBoundIsTightOnProgression) {
  const element_set ap{1, 4, 7, 10, 13};
  const auto reports = verify_mirror(cyclic(15), ap, ap);
  EXPECT_EQ(reports[1].lhs, 5u);
  EXPECT_EQ(reports[1].rhs, extended_nat(5));
  EXPECT_TRUE(reports[1].tight());
}

TEST(VerifyMirror, SingletonIsTight) {
  const auto reports = verify_mirror(quaternion8(), {3}, {0, 1, 4});
  EXPECT_EQ(reports[1].rhs, extended_nat(3));
  EXPECT_EQ(reports[1].lhs, 3u);
  EXPECT_TRUE(reports[1].tight());
}

TEST(VerifyKempermanWeak, Examples) {
  const auto z13 = verify_kemperman_weak(cyclic(13), {0, 1, 2}, {0, 1, 2, 3});
  EXPECT_TRUE(z13.applicable);
  EXPECT_EQ(z13.rhs, extended_nat(6));
  EXPECT_GE(z13.lhs, 6u);

  const auto z4 = verify_kemperman_weak(cyclic(4), {0, 1, 2}, {0, 1, 2, 3});
  EXPECT_FALSE(z4.applicable);
  EXPECT_FALSE(z4.hypotheses[1].holds);

  const auto q8 = verify_kemperman_weak(quaternion8(), {0, 1}, {0, 1});
  EXPECT_FALSE(q8.applicable);
  EXPECT_FALSE(q8.hypotheses[1].holds);
  EXPECT_TRUE(q8.hypotheses[2].holds);
}

TEST(VerifyZmod, ChowlaApplies) {
  const auto reports = verify_zmod(8, {0, 2, 4}, {0, 1});
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].id, statement::chowla);
  EXPECT_TRUE(reports[0].applicable);
  EXPECT_EQ(reports[0].lhs, 6u);
  EXPECT_EQ(reports[0].rhs, extended_nat(4));
}

TEST(VerifyZmod, GcdCorollaryBeatsPillai) {
  const auto reports = verify_zmod(12, {0, 1}, {0, 6});
  const auto& pillai = reports[1];
  const auto& sharper = reports[2];
  EXPECT_EQ(pillai.rhs, extended_nat(2));
  EXPECT_EQ(sharper.rhs, extended_nat(3));
  EXPECT_EQ(sharper.lhs, 4u);
  ASSERT_TRUE(sharper.comparison);
  EXPECT_TRUE(sharper.comparison->strict());
  EXPECT_FALSE(reports[0].applicable);  // gcd(12, 6) != 1
}

TEST(VerifyZmod, PrimeModulusCollapsesToCauchyDavenport) {
  for (element_set x : oracle::all_subsets(5))
    for (element_set y : oracle::all_subsets(5)) {
      if (x.empty() || y.empty()) continue;
      const extended_nat expected = min(5, x.size() + y.size() - 1);
      const auto reports = verify_zmod(5, x, y);
      EXPECT_EQ(reports[0].applicable, y.contains(0));
      for (const auto& rep : reports) EXPECT_EQ(rep.rhs, expected) << to_string(rep.id);
    }
}

TEST(VerifyZmod, RequiresCyclicAmbient) {
  EXPECT_THROW(verify_zmod(dihedral(3), {0}, {1}), error);
  EXPECT_THROW(verify_zmod(5, {7}, {1}), error);
}

TEST(VerifyHk, CompositeProgression) {
  const element_set x{1, 4, 7, 10};
  const auto b = verify_hk(cyclic(12), x, x);
  EXPECT_EQ(b.rhs, extended_nat(2));
  EXPECT_EQ(b.lhs, 4u);
  ASSERT_TRUE(b.comparison);
  EXPECT_EQ(b.comparison->stronger, statement::thm2_2);
  EXPECT_EQ(b.comparison->stronger_rhs, extended_nat(2));
  EXPECT_TRUE(b.comparison->holds());
}

TEST(VerifyHk, DihedralUsesPTwoAndTrivialGroupUsesSumBound) {
  const auto b = verify_hk(dihedral(4), {0, 1, 2}, {4, 5});
  EXPECT_EQ(b.rhs, extended_nat(2));
  const auto t = verify_hk(cyclic(1), {0}, {0});
  EXPECT_EQ(t.rhs, extended_nat(1));
  EXPECT_EQ(p_constant(cyclic(1)), inf);
}

TEST(VerifyHk, RejectsNonGroups) {
  try {
    verify_hk(max_chain(3), {0}, {1});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::not_group);
  }
}

TEST(VerifyCd, PrimeOrderGate) {
  EXPECT_TRUE(verify(statement::cd_1813, cyclic(7), {0, 1}, {0, 3}).applicable);
  EXPECT_FALSE(verify(statement::cd_1813, cyclic(8), {0, 1}, {0, 3}).applicable);
  EXPECT_FALSE(verify(statement::cd_1813, max_chain(3), {0, 1}, {0, 2}).applicable);
}

TEST(Sweep, CauchyDavenportOnZ7) {
  const auto s = sweep(cyclic(7), statement::cd_1813);
  EXPECT_EQ(s.pairs, 127u * 127u);
  EXPECT_EQ(s.applicable, s.pairs);
  EXPECT_TRUE(s.violations.empty());
  EXPECT_GT(s.tight, 0u);
  ASSERT_TRUE(s.first_tight);
  EXPECT_EQ(s.first_tight->x, element_set{0});
}

TEST(Sweep, MainBoundOnDihedral) {
  const auto s = sweep(dihedral(4), statement::thm2_2);
  EXPECT_EQ(s.pairs, 255u * 255u);
  EXPECT_GT(s.applicable, 0u);
  EXPECT_LT(s.applicable, s.pairs);
  EXPECT_TRUE(s.violations.empty());
}

TEST(Sweep, NothingApplicableOnMaxChain) {
  const auto s = sweep(max_chain(3), statement::thm2_2);
  EXPECT_EQ(s.pairs, 49u);
  EXPECT_EQ(s.applicable, 0u);
}

TEST(Sweep, ApplicableCountMatchesDirectEnumeration) {
  const auto a = dihedral(3);
  std::uint64_t expected = 0;
  for (element_set y : oracle::all_subsets(6))
    if (!y.empty() && generates_commutative(a, y)) expected += 63;
  EXPECT_EQ(sweep(a, statement::thm2_2).applicable, expected);
}

TEST(Sweep, WorkerCountDoesNotChangeTheSummary) {
  const auto a = quaternion8();
  const auto one = sweep(a, statement::cor2_7, {std::nullopt, 1});
  for (std::size_t jobs : {2u, 3u, 8u, 300u}) EXPECT_EQ(sweep(a, statement::cor2_7, {std::nullopt, jobs}), one);
}

TEST(Sweep, SizeCapAndLargeCarriers) {
  EXPECT_THROW(sweep(cyclic(17), statement::cd_1813), error);
  const auto s = sweep(cyclic(17), statement::cd_1813, {std::size_t{2}, 1});
  EXPECT_EQ(s.pairs, 153u * 153u);  // 17 + C(17, 2) sets
  EXPECT_TRUE(s.violations.empty());
  const auto big = sweep(cyclic(40), statement::thm2_2, {std::size_t{1}, 1});
  EXPECT_EQ(big.pairs, 1600u);
  EXPECT_EQ(big.tight, 1600u);
}

TEST(Sweep, EnumerationIsInBitOrder) {
  const auto small = enumerate_subsets(20, 2);
  EXPECT_EQ(small.size(), 20u + 190u);
  EXPECT_TRUE(std::is_sorted(small.begin(), small.end()));
  EXPECT_EQ(enumerate_subsets(3, std::nullopt).size(), 7u);
}

TEST(Sweep, HkNeedsGroup) {
  EXPECT_THROW(sweep(max_chain(3), statement::hk), error);
}

TEST(TheoremInvariants, NoViolationsOnSmallCarriers) {
  std::vector<oracle::named> carriers = oracle::small_groups();
  for (std::size_t m = 9; m <= 11; ++m) carriers.push_back({"cyclic:" + std::to_string(m), cyclic(m)});
  for (const auto& c : carriers) {
    const ambient amb(c.semigroup);
    for (statement st : all_statements) {
      const auto s = sweep(amb, st, {}, c.name);
      EXPECT_TRUE(s.clean()) << c.name << " " << to_string(st);
    }
  }
}

TEST(TheoremInvariants, HkNeverBeatsMainBound) {
  for (const auto& g : oracle::small_groups()) {
    const auto s = sweep(g.semigroup, statement::hk);
    EXPECT_TRUE(s.comparison_failures.empty()) << g.name;
    EXPECT_GT(s.comparisons, 0u);
  }
}

TEST(TheoremInvariants, GcdCorollaryDominatesPillai) {
  for (std::size_t m = 1; m <= 12; ++m) {
    const auto s = sweep(cyclic(m), statement::cor2_9);
    EXPECT_TRUE(s.comparison_failures.empty()) << m;
    EXPECT_EQ(s.comparisons, s.pairs);
    if (m == 12) { EXPECT_GT(s.strict_comparisons, 0u); }
  }
}

TEST(TheoremInvariants, EveryStatementHasATightPair) {
  const ambient z7(cyclic(7));
  for (statement st : all_statements) {
    const auto s = sweep(z7, st);
    EXPECT_GT(s.tight, 0u) << to_string(st);
  }
}
