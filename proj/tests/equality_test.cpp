#include <gtest/gtest.h>

#include "hyperset/equality.hpp"
#include "hyperset/error.hpp"
#include "hyperset/igs.hpp"
#include "support.hpp"

using namespace hyperset;

namespace {

class EqualityTest : public ::testing::Test {
 protected:
  SetSystem sys;
  NodeId n(std::size_t k) { return mk_numeral(sys, k); }
  NodeId set(std::initializer_list<NodeId> m) { return mk_set_of(sys, m); }
};

// The corpus the coherence properties quantify over: V_3 plus every IGS
// with generators from V_2, plus a few mixed sets.
std::vector<NodeId> corpus(SetSystem& sys) {
  std::vector<NodeId> out = testing_support::stage(sys, 3);
  const auto igs = testing_support::igs_corpus(sys, testing_support::stage(sys, 2));
  out.insert(out.end(), igs.begin(), igs.end());
  for (NodeId s : igs) out.push_back(mk_set_of(sys, {s, sys.empty()}));
  return out;
}

}  // namespace

TEST_F(EqualityTest, InfinitonExamples) {
  const NodeId i0 = infiniton(sys, sys.empty());
  const EqReport same = ezf_equal(sys, i0, infiniton(sys, n(1)));
  EXPECT_TRUE(same.equal);
  EXPECT_EQ(same.reason, EqReason::GeneratorMatch);

  const NodeId i2 = infiniton(sys, n(2));
  const EqReport diff = ezf_equal(sys, i0, i2);
  EXPECT_FALSE(diff.equal);
  EXPECT_EQ(diff.reason, EqReason::GeneratorMismatch);
  EXPECT_FALSE(diff.witness.has_value());
  EXPECT_TRUE(bisimilar(sys, i0, i2));
}

TEST_F(EqualityTest, ExtensionalExamples) {
  const EqReport r = ezf_equal(sys, set({n(0), n(1)}), set({n(1), n(0)}));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.reason, EqReason::Extensional);

  const EqReport m = ezf_equal(sys, set({n(0), n(2)}), set({n(0), n(3)}));
  EXPECT_FALSE(m.equal);
  EXPECT_EQ(m.reason, EqReason::MemberMismatch);
  ASSERT_TRUE(m.witness.has_value());
  EXPECT_FALSE(m.witness->empty());
}

TEST_F(EqualityTest, IgsNeverEqualsPlainSet) {
  const NodeId i = infiniton(sys, sys.empty());
  EXPECT_FALSE(ezf_equal(sys, i, set({n(1)})).equal);
  EXPECT_FALSE(ezf_equal(sys, i, sys.empty()).equal);
}

TEST_F(EqualityTest, BisimulationExamples) {
  const NodeId i = infiniton(sys, sys.empty());
  const NodeId z = semi_infiniton(sys, set({n(2)}), sys.empty());
  EXPECT_FALSE(bisimilar(sys, z, i));
  EXPECT_TRUE(bisimilar(sys, z, z));
  // Two syntactically different cycles that unfold to the same tree.
  const NodeId i3 = infiniton(sys, n(3));
  EXPECT_TRUE(bisimilar(sys, set({i, n(1)}), set({i3, n(1)})));
  EXPECT_FALSE(ezf_equal(sys, set({i, n(1)}), set({i3, n(1)})).equal);
}

TEST_F(EqualityTest, CanonicalBase) {
  EXPECT_EQ(canonical_base(sys, set({set({sys.empty()})})), sys.empty());
  EXPECT_EQ(canonical_base(sys, n(2)), n(2));
  EXPECT_EQ(canonical_base(sys, set({n(2)})), n(2));
  EXPECT_THROW(canonical_base(sys, infiniton(sys, sys.empty())), PreconditionError);
}

TEST_F(EqualityTest, Distinctions) {
  const auto m = eq_distinguish(sys, set({n(0)}), set({n(1)}));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->description, "member {} vs member {{}}");
  EXPECT_FALSE(eq_distinguish(sys, n(3), n(3)).has_value());

  const auto g = eq_distinguish(sys, infiniton(sys, sys.empty()), infiniton(sys, n(2)));
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(g->description, "base generator {} vs {{},{{}}}");

  const NodeId g1 = set({n(1)}), g2 = set({n(0), n(1)});
  const auto p = eq_distinguish(sys, quasi_infiniton(sys, std::vector{g1, g2}, sys.empty(), 0),
                                quasi_infiniton(sys, std::vector{g1, g2}, sys.empty(), 1));
  ASSERT_TRUE(p.has_value());
  EXPECT_NE(p->description.find("phase"), std::string::npos);
}

TEST(EqualityProperty, EquivalenceAndAgreementWithIdentity) {
  SetSystem sys;
  const auto all = corpus(sys);
  for (NodeId a : all)
    for (NodeId b : all) {
      const bool ab = ezf_equal(sys, a, b).equal;
      ASSERT_EQ(ab, ezf_equal(sys, b, a).equal);
      // Hash-consing makes EZF equality coincide with node identity.
      ASSERT_EQ(ab, a == b);
      if (ab) {
        ASSERT_TRUE(bisimilar(sys, a, b));
      }
    }
  for (NodeId a : all) ASSERT_TRUE(ezf_equal(sys, a, a).equal);
}

TEST(EqualityProperty, BisimulationMatchesBruteForce) {
  SetSystem sys;
  const auto all = corpus(sys);
  for (std::size_t i = 0; i < all.size(); i += 2)
    for (std::size_t j = 0; j < all.size(); j += 3)
      ASSERT_EQ(bisimilar(sys, all[i], all[j]), testing_support::brute_bisimilar(sys, all[i], all[j]))
          << serialize(sys, all[i]) << " ~ " << serialize(sys, all[j]);
}

TEST(EqualityProperty, BlocksAreAPartitionRespectingBisimilarity) {
  SetSystem sys;
  corpus(sys);
  const auto blocks = bisimulation_blocks(sys);
  ASSERT_EQ(blocks.size(), sys.size());
  for (std::uint32_t a = 0; a < sys.size(); a += 3)
    for (std::uint32_t b = 0; b < sys.size(); b += 5)
      ASSERT_EQ(blocks[a] == blocks[b], testing_support::brute_bisimilar(sys, NodeId{a}, NodeId{b}));
}

TEST(EqualityProperty, Substitutivity) {
  SetSystem sys;
  const auto all = corpus(sys);
  const auto v2 = testing_support::stage(sys, 2);
  for (const auto& members : testing_support::small_subsets(v2, 2)) {
    const NodeId s = mk_set_of(sys, members);
    for (NodeId a : all)
      for (NodeId b : all) {
        if (!ezf_equal(sys, a, b).equal) continue;
        ASSERT_TRUE(ezf_equal(sys, set_union(sys, mk_set_of(sys, {a}), s), set_union(sys, mk_set_of(sys, {b}), s)).equal);
      }
  }
}

TEST(EqualityProperty, CanonicalBaseIsIdempotent) {
  SetSystem sys;
  for (NodeId b : testing_support::stage(sys, 4)) {
    const NodeId c = canonical_base(sys, b);
    ASSERT_EQ(canonical_base(sys, c), c);
    ASSERT_TRUE(sys.cardinality(c) != 1 || !sys.well_founded(sys.members(c)[0]));
  }
}
