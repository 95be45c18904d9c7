#include <gtest/gtest.h>

#include "hyperset/audit.hpp"
#include "hyperset/error.hpp"
#include "hyperset/functors.hpp"
#include "hyperset/igs.hpp"
#include "hyperset/rank.hpp"
#include "support.hpp"

using namespace hyperset;
using testing_support::Branches;

namespace {

class RankTest : public ::testing::Test {
 protected:
  SetSystem sys;
  NodeId n(std::size_t k) { return mk_numeral(sys, k); }
  NodeId set(std::initializer_list<NodeId> m) { return mk_set_of(sys, m); }
};

std::vector<NodeId> corpus(SetSystem& sys) {
  std::vector<NodeId> out = testing_support::stage(sys, 4);
  const auto igs = testing_support::igs_corpus(sys, testing_support::stage(sys, 3));
  out.insert(out.end(), igs.begin(), igs.end());
  for (std::size_t i = 0; i < igs.size(); i += 4) {
    out.push_back(mk_set_of(sys, {igs[i], out[2]}));
    out.push_back(mk_set_of(sys, {mk_set_of(sys, {igs[i], out[0]})}));
  }
  return out;
}

}  // namespace

TEST_F(RankTest, Classification) {
  EXPECT_EQ(classify(sys, n(5)), Classification::WF);
  EXPECT_EQ(classify(sys, infiniton(sys, sys.empty())), Classification::TNWF);
  EXPECT_EQ(classify(sys, semi_infiniton(sys, set({n(0)}), sys.empty())), Classification::NWF);
  EXPECT_EQ(to_string(Classification::TNWF), "TNWF");
}

TEST_F(RankTest, VonNeumannRank) {
  EXPECT_EQ(rank_v(sys, sys.empty()), Ordinal::finite(1));
  EXPECT_EQ(rank_v(sys, n(4)), Ordinal::finite(5));
  EXPECT_EQ(rank_v(sys, set({set({sys.empty()})})), Ordinal::finite(3));
  EXPECT_THROW(rank_v(sys, infiniton(sys, sys.empty())), PreconditionError);
}

TEST_F(RankTest, TotalRank) {
  EXPECT_EQ(rank_t(sys, n(3)), Ordinal::finite(4));
  const NodeId b = n(1);
  const NodeId q = quasi_infiniton(sys, std::vector{set({b}), set({n(0), n(2)})}, n(2), 0);
  EXPECT_EQ(rank_t(sys, set({b, q})), Ordinal::omega());
  const NodeId i = infiniton(sys, sys.empty());
  EXPECT_EQ(rank_t(sys, set({i, n(1)})), ord_successor(Ordinal::omega()));
  EXPECT_EQ(rank_t(sys, set({set({i, n(1)})})), Ordinal::omega() + Ordinal::finite(2));
  EXPECT_EQ(rank(sys, n(2)).universe, Universe::V);
  EXPECT_EQ(rank(sys, i).universe, Universe::T);
}

TEST_F(RankTest, Dimension) {
  EXPECT_EQ(dimension(sys, n(2)), Dimension::fin(3));
  for (std::size_t k = 0; k <= 8; ++k) EXPECT_EQ(dimension(sys, n(k)), Dimension::fin(k + 1));
  EXPECT_TRUE(dimension(sys, semi_infiniton(sys, set({n(2)}), sys.empty())).is_aleph0());
  EXPECT_TRUE(dimension(sys, set({infiniton(sys, sys.empty())})).is_aleph0());
}

TEST_F(RankTest, PartitionClasses) {
  const PartitionClass two = partition_class(sys, n(2));
  EXPECT_FALSE(two.limit);
  EXPECT_EQ(two.rank, Ordinal::finite(3));
  EXPECT_EQ(two.describe(), "successor class A_3 = T_3 - T_2");
  const NodeId i = infiniton(sys, sys.empty());
  EXPECT_TRUE(partition_class(sys, i).limit);
  EXPECT_EQ(partition_class(sys, i).rank, Ordinal::omega());
  EXPECT_TRUE(partition_class(sys, set({i})).limit);
  EXPECT_EQ(partition_class(sys, set({i, n(0)})).describe(), "successor class A_w+1 = T_w+1 - T_w");
}

// Exhaustive properties.

TEST(RankProperty, WellFoundedRanksMatchCodes) {
  SetSystem sys;
  for (std::uint64_t code = 0; code < 16; ++code) {
    const NodeId s = testing_support::from_code(sys, code);
    const Ordinal want = Ordinal::finite(testing_support::code_rank(code));
    ASSERT_EQ(rank_v(sys, s), want);
    ASSERT_EQ(rank_t(sys, s), want);
    ASSERT_NE(ord_kind(rank_v(sys, s)), OrdinalKind::Limit);
  }
}

TEST(RankProperty, ClassificationMatchesBranchEnumeration) {
  SetSystem sys;
  for (NodeId s : corpus(sys)) {
    const Branches want = testing_support::branch_class(sys, s);
    const Classification got = classify(sys, s);
    ASSERT_EQ(static_cast<int>(got), static_cast<int>(want)) << serialize(sys, s);
    ASSERT_EQ(got == Classification::WF, sys.well_founded(s));
  }
}

TEST(RankProperty, MembershipMonotonicity) {
  SetSystem sys;
  for (NodeId x : corpus(sys)) {
    const Ordinal rx = rank_t(sys, x);
    const bool successor = ord_kind(rx) == OrdinalKind::Successor;
    for (NodeId y : sys.members(x)) {
      ASSERT_LE(rank_t(sys, y), rx);
      if (successor) {
        ASSERT_LT(rank_t(sys, y), rx);
      }
    }
    if (successor) {
      ASSERT_FALSE(sys.contains(x, x));
    }
    ASSERT_LE(rx, Ordinal::omega() + Ordinal::finite(8));
  }
}

TEST(RankProperty, DimensionIncreasesAlongMembership) {
  SetSystem sys;
  for (NodeId s2 : testing_support::stage(sys, 4))
    for (NodeId s1 : sys.members(s2)) ASSERT_LT(dimension(sys, s1), dimension(sys, s2));
  for (NodeId s : corpus(sys))
    if (sys.on_cycle(s)) {
      ASSERT_TRUE(dimension(sys, s).is_aleph0());
    }
}

TEST(RankProperty, RegularityOnWellFoundedSets) {
  SetSystem sys;
  for (NodeId s : testing_support::stage(sys, 4)) {
    const RegularityReport r = check_regularity(sys, s);
    ASSERT_TRUE(r.holds);
    if (s == sys.empty()) {
      ASSERT_TRUE(r.vacuous);
      continue;
    }
    ASSERT_TRUE(r.witness.has_value());
    ASSERT_TRUE(sys.contains(s, *r.witness));
    ASSERT_EQ(set_intersect(sys, *r.witness, s), sys.empty());
  }
  // The converse fails: Z = {0, Z} satisfies regularity but is not well founded.
  const NodeId z = semi_infiniton(sys, mk_set_of(sys, {sys.empty()}), sys.empty());
  EXPECT_TRUE(check_regularity(sys, z).holds);
  EXPECT_NE(classify(sys, z), Classification::WF);
}
