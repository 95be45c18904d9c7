#include "hyperset/rank.hpp"

#include <functional>
#include <unordered_map>

#include "hyperset/error.hpp"

namespace hyperset {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::WF:
      return "WF";
    case Classification::NWF:
      return "NWF";
    case Classification::TNWF:
      return "TNWF";
  }
  return "?";
}

Classification classify(const SetSystem& sys, NodeId s) {
  if (sys.well_founded(s)) return Classification::WF;
  const auto below = reachable(sys, s, false);
  for (NodeId n : below) {
    // Only the empty set is terminal; reaching it from s ends a finite branch.
    if (n == sys.empty()) return Classification::NWF;
  }
  return Classification::TNWF;
}

namespace {

template <typename Value, typename Step>
Value memo_recurse(NodeId s, Step step) {
  std::unordered_map<NodeId, Value> memo;
  std::function<Value(NodeId)> go = [&](NodeId n) -> Value {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    Value v = step(n, go);
    memo.emplace(n, v);
    return v;
  };
  return go(s);
}

Ordinal successor_rank(const SetSystem& sys, NodeId n, const std::function<Ordinal(NodeId)>& member_rank) {
  Ordinal sup;
  for (NodeId m : sys.members(n)) sup = ord_max(sup, member_rank(m));
  return ord_successor(sup);
}

}  // namespace

Ordinal rank_v(const SetSystem& sys, NodeId s) {
  if (!sys.well_founded(s)) throw PreconditionError("not in V: the set is non-well-founded");
  return memo_recurse<Ordinal>(s, [&](NodeId n, const std::function<Ordinal(NodeId)>& go) {
    return successor_rank(sys, n, go);
  });
}

Ordinal rank_t(const SetSystem& sys, NodeId s) {
  return memo_recurse<Ordinal>(s, [&](NodeId n, const std::function<Ordinal(NodeId)>& go) {
    if (sys.on_cycle(n)) return Ordinal::omega();
    return successor_rank(sys, n, go);
  });
}

RankResult rank(const SetSystem& sys, NodeId s) {
  if (sys.well_founded(s)) return {rank_v(sys, s), Universe::V};
  return {rank_t(sys, s), Universe::T};
}

Dimension dimension(const SetSystem& sys, NodeId s) {
  if (!sys.well_founded(s)) return Dimension::aleph0();
  return memo_recurse<Dimension>(s, [&](NodeId n, const std::function<Dimension(NodeId)>& go) {
    std::vector<Dimension> ds;
    for (NodeId m : sys.members(n)) ds.push_back(go(m));
    return dim_sup_plus1(ds);
  });
}

std::string PartitionClass::describe() const {
  const std::string a = to_string(rank);
  if (limit) return "limit class A_" + a + " = intersection over b<" + a + " of (T_" + a + " - T_b)";
  // Successor rank: the predecessor drops one from the trailing finite term.
  std::vector<CnfTerm> terms(rank.terms().begin(), rank.terms().end());
  if (--terms.back().coefficient == 0) terms.pop_back();
  return "successor class A_" + a + " = T_" + a + " - T_" + to_string(Ordinal(std::move(terms)));
}

PartitionClass partition_class(const SetSystem& sys, NodeId s) {
  return PartitionClass{rank_t(sys, s), sys.on_cycle(s)};
}

}  // namespace hyperset
