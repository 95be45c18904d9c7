#include <array>
#include <bit>
#include <functional>

#include <gtest/gtest.h>

#include "hyperset/audit.hpp"
#include "hyperset/error.hpp"
#include "hyperset/functors.hpp"
#include "hyperset/igs.hpp"
#include "support.hpp"

using namespace hyperset;

namespace {

class FunctorTest : public ::testing::Test {
 protected:
  SetSystem sys;
  NodeId n(std::size_t k) { return mk_numeral(sys, k); }
  NodeId set(std::initializer_list<NodeId> m) { return mk_set_of(sys, m); }
};

}  // namespace

TEST_F(FunctorTest, InfinitonFunctor) {
  EXPECT_EQ(functor_inf(sys, sys.empty()), sys.empty());
  EXPECT_EQ(functor_inf(sys, n(2)), set({infiniton(sys, sys.empty())}));
  const NodeId two = functor_inf(sys, set({n(0), n(2)}));
  EXPECT_EQ(sys.cardinality(two), 2u);
  EXPECT_THROW(functor_inf(sys, infiniton(sys, sys.empty())), PreconditionError);
}

TEST_F(FunctorTest, SemiFunctor) {
  EXPECT_EQ(functor_semi(sys, sys.empty()), sys.empty());
  EXPECT_EQ(functor_semi(sys, n(1)), set({infiniton(sys, sys.empty())}));
  const NodeId s = functor_semi(sys, n(2));
  EXPECT_EQ(s, set({infiniton(sys, sys.empty()), semi_infiniton(sys, n(1), n(0)), semi_infiniton(sys, n(1), n(1))}));
}

TEST_F(FunctorTest, QuasiFunctor) {
  EXPECT_EQ(functor_quasi(sys, n(1)), sys.empty());
  const NodeId s = set({n(0), n(1), n(2)});
  EXPECT_EQ(quasi_specs(sys, s, {2}).size(), 18u);
  EXPECT_EQ(sys.cardinality(functor_quasi(sys, s, {2})), 18u);
  // l = 3 adds the single chain 0 < 1 < 2 with three bases and three phases.
  EXPECT_EQ(quasi_specs(sys, s, {3}).size(), 27u);
  const NodeId q = quasi_infiniton(sys, std::vector{n(1), n(2)}, n(0), 1);
  EXPECT_TRUE(sys.contains(functor_quasi(sys, s, {2}), q));
}

namespace {

// Functor images of every subset of V_3, indexed by member mask.
struct Images {
  SetSystem sys;
  std::vector<NodeId> pool = testing_support::stage(sys, 3);
  std::array<NodeId, 16> arg{}, inf{}, semi{}, quasi{};

  Images() {
    for (std::uint32_t m = 0; m < 16; ++m) {
      std::vector<NodeId> members;
      for (std::size_t i = 0; i < 4; ++i)
        if (m >> i & 1) members.push_back(pool[i]);
      arg[m] = mk_set_of(sys, members);
      inf[m] = functor_inf(sys, arg[m]);
      semi[m] = functor_semi(sys, arg[m]);
      quasi[m] = functor_quasi(sys, arg[m]);
    }
  }

  bool subset(NodeId a, NodeId b) const { return is_subset(sys, a, b); }
  NodeId join(NodeId a, NodeId b) { return set_union(sys, a, b); }
  NodeId meet(NodeId a, NodeId b) { return set_intersect(sys, a, b); }
};

bool small(std::uint32_t m) { return std::popcount(m) <= 3; }

}  // namespace

TEST(FunctorProperty, InfinitonLaws) {
  Images im;
  std::size_t pairs = 0;
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      if (!small(a) || !small(b)) continue;
      ++pairs;
      if ((a & ~b) == 0) {
        ASSERT_TRUE(im.subset(im.inf[a], im.inf[b]));
      }
      ASSERT_EQ(im.inf[a | b], im.join(im.inf[a], im.inf[b]));
      ASSERT_TRUE(im.subset(im.inf[a & b], im.meet(im.inf[a], im.inf[b])));
      ASSERT_TRUE(im.subset(set_difference(im.sys, im.inf[a], im.inf[b]), im.inf[a & ~b]));
      for (std::uint32_t c = 0; c < 16; ++c)
        if (small(c)) {
          ASSERT_EQ(im.inf[a | b | c], im.join(im.join(im.inf[a], im.inf[b]), im.inf[c]));
        }
    }
  EXPECT_EQ(pairs, 225u);
}

namespace {

void check_cumulative_laws(Images& im, const std::array<NodeId, 16>& f) {
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      if (!small(a) || !small(b)) continue;
      if ((a & ~b) == 0) {
        ASSERT_TRUE(im.subset(f[a], f[b]));
      }
      ASSERT_TRUE(im.subset(im.join(f[a], f[b]), f[a | b]));
      ASSERT_TRUE(im.subset(f[a & b], im.meet(f[a], f[b])));
      for (std::uint32_t c = 0; c < 16; ++c) {
        if (!small(c)) continue;
        ASSERT_TRUE(im.subset(im.join(im.join(f[a], f[b]), f[c]), f[a | b | c]));
        // Ascending chain a <= b <= c: the union commutes with the functor.
        if ((a & ~b) == 0 && (b & ~c) == 0) {
          ASSERT_EQ(f[a | b | c], im.join(im.join(f[a], f[b]), f[c]));
        }
      }
    }
}

}  // namespace

TEST(FunctorProperty, SemiLaws) {
  Images im;
  check_cumulative_laws(im, im.semi);
  // {G0}_I = semi(0, G0) needs the empty generator among the members.
  for (std::uint32_t a = 1; a < 16; a += 2) ASSERT_TRUE(im.subset(im.inf[a], im.semi[a]));
  EXPECT_FALSE(im.subset(im.inf[0b0010], im.semi[0b0010]));
}

TEST(FunctorProperty, QuasiLaws) {
  Images im;
  check_cumulative_laws(im, im.quasi);
}

TEST(FunctorProperty, UnionLawsAreStrictForCrossTuples) {
  Images im;
  // Tuples drawing generators from both halves only appear in the image of the union.
  EXPECT_NE(im.semi[0b0011], im.join(im.semi[0b0001], im.semi[0b0010]));
  EXPECT_NE(im.quasi[0b0011], im.join(im.quasi[0b0001], im.quasi[0b0010]));
}

TEST(FunctorProperty, SetsOfInfinitons) {
  Images im;
  std::size_t plural = 0;
  for (std::uint32_t m = 1; m < 16; ++m) {
    const NodeId s = im.inf[m];
    ASSERT_FALSE(check_regularity(im.sys, s).holds);
    // A single infiniton I gives {I} = I, which is its own member.
    if (im.sys.cardinality(s) == 1) {
      ASSERT_TRUE(im.sys.contains(s, s));
    } else {
      ++plural;
      ASSERT_FALSE(im.sys.on_cycle(s));
      ASSERT_FALSE(im.sys.contains(s, s));
    }
    for (NodeId i : im.sys.members(s)) ASSERT_FALSE(check_regularity(im.sys, i).holds);
  }
  EXPECT_GT(plural, 0u);
}
