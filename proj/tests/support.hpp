#pragma once

// Independent oracles shared by the test suites. Nothing here calls the
// library's own rank, equality or classification code.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hyperset/igs.hpp"
#include "hyperset/set_system.hpp"

namespace testing_support {

using hyperset::GenKind;
using hyperset::GenSpec;
using hyperset::NodeId;
using hyperset::SetSystem;

/// |P^n(0)|: 1, 2, 4, 16, 65536.
inline std::uint64_t stage_size(std::size_t n) {
  std::uint64_t size = 1;
  for (std::size_t i = 1; i < n; ++i) size = std::uint64_t{1} << size;
  return size;
}

/// Builds the hereditarily finite set with Ackermann code `code`
/// (bit i set iff the set with code i is a member).
inline NodeId from_code(SetSystem& sys, std::uint64_t code) {
  std::vector<NodeId> members;
  for (std::uint64_t i = 0; i < 64; ++i)
    if (code >> i & 1) members.push_back(from_code(sys, i));
  return hyperset::mk_set_of(sys, members);
}

/// Elements of V_n as Ackermann codes 0 .. |V_n|-1 (n <= 4 here).
inline std::vector<NodeId> stage(SetSystem& sys, std::size_t n) {
  std::vector<NodeId> out;
  for (std::uint64_t c = 0; c < stage_size(n); ++c) out.push_back(from_code(sys, c));
  return out;
}

/// Rank with R(0) = 1, straight from the code: R(c) = R(highest bit) + 1.
inline std::uint64_t code_rank(std::uint64_t code) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < 64; ++i)
    if (code >> i & 1) r = std::max(r, code_rank(i) + 1);
  return r;
}

/// Nodes reachable from `roots` along membership edges, roots included.
inline std::vector<NodeId> closure(const SetSystem& sys, std::vector<NodeId> roots) {
  std::set<NodeId> seen(roots.begin(), roots.end());
  std::vector<NodeId> todo = roots;
  while (!todo.empty()) {
    NodeId n = todo.back();
    todo.pop_back();
    for (NodeId m : sys.members(n))
      if (seen.insert(m).second) todo.push_back(m);
  }
  return {seen.begin(), seen.end()};
}

/// Greatest bisimulation by naive pair elimination.
inline bool brute_bisimilar(const SetSystem& sys, NodeId a, NodeId b) {
  const std::vector<NodeId> nodes = closure(sys, {a, b});
  std::map<NodeId, std::size_t> ix;
  for (std::size_t i = 0; i < nodes.size(); ++i) ix[nodes[i]] = i;
  const std::size_t n = nodes.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, true));
  auto covered = [&](NodeId x, NodeId y) {
    for (NodeId mx : sys.members(x)) {
      bool found = false;
      for (NodeId my : sys.members(y))
        if (rel[ix[mx]][ix[my]]) found = true;
      if (!found) return false;
    }
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][j] && !(covered(nodes[i], nodes[j]) && covered(nodes[j], nodes[i]))) {
          rel[i][j] = false;
          changed = true;
        }
  }
  return rel[ix[a]][ix[b]];
}

enum class Branches { WF, NWF, TNWF };

/// Classifies by walking membership branches: an infinite branch exists iff
/// a cycle is reachable; a finite branch exists iff the empty set is reachable.
inline Branches branch_class(const SetSystem& sys, NodeId s) {
  enum Colour { White, Grey, Black };
  std::map<NodeId, Colour> colour;
  bool cycle = false;
  std::function<void(NodeId)> dfs = [&](NodeId n) {
    colour[n] = Grey;
    for (NodeId m : sys.members(n)) {
      if (colour[m] == Grey) cycle = true;
      if (colour[m] == White) dfs(m);
    }
    colour[n] = Black;
  };
  dfs(s);
  if (!cycle) return Branches::WF;
  for (NodeId n : closure(sys, {s}))
    if (sys.cardinality(n) == 0) return Branches::NWF;
  return Branches::TNWF;
}

/// Every sequence of distinct generators with strictly increasing
/// cardinality and length in [min_len, max_len].
inline std::vector<std::vector<NodeId>> quasi_cycles(const SetSystem& sys, const std::vector<NodeId>& gens,
                                                     std::size_t min_len, std::size_t max_len) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> cur;
  std::function<void()> extend = [&] {
    if (cur.size() >= min_len) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (NodeId g : gens)
      if (cur.empty() || sys.cardinality(g) > sys.cardinality(cur.back())) {
        cur.push_back(g);
        extend();
        cur.pop_back();
      }
  };
  extend();
  return out;
}

/// All infinitons, semi-infinitons and quasi-infinitons (every phase, l <= 3)
/// whose generators come from `gens`.
inline std::vector<NodeId> igs_corpus(SetSystem& sys, const std::vector<NodeId>& gens) {
  std::vector<NodeId> out;
  for (NodeId b : gens) {
    out.push_back(hyperset::infiniton(sys, b));
    for (NodeId g : gens) out.push_back(hyperset::semi_infiniton(sys, g, b));
    for (const auto& cycle : quasi_cycles(sys, gens, 2, 3))
      for (std::size_t q = 0; q < cycle.size(); ++q) out.push_back(hyperset::quasi_infiniton(sys, cycle, b, q));
  }
  return out;
}

/// Subsets of `pool` with at most `max_size` members, as member lists.
inline std::vector<std::vector<NodeId>> small_subsets(const std::vector<NodeId>& pool, std::size_t max_size) {
  std::vector<std::vector<NodeId>> out;
  for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
    std::vector<NodeId> s;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) s.push_back(pool[i]);
    if (s.size() <= max_size) out.push_back(s);
  }
  return out;
}

}  // namespace testing_support
