#include "hyperset/equality.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "hyperset/error.hpp"

namespace hyperset {

std::string_view reason_name(EqReason reason) {
  switch (reason) {
    case EqReason::Extensional:
      return "extensional";
    case EqReason::GeneratorMatch:
      return "generator-match";
    case EqReason::GeneratorMismatch:
      return "generator-mismatch";
    case EqReason::MemberMismatch:
      return "member-mismatch";
  }
  return "?";
}

namespace {

// Structural EZF comparison. Recursion follows members of ordinary sets and
// generators of IGS; both orders are well-founded, so no cycle is entered.
class EzfComparer {
 public:
  explicit EzfComparer(const SetSystem& sys) : sys_(sys) {}

  bool equal(NodeId a, NodeId b) {
    const std::uint64_t key = (std::uint64_t{a.value} << 32) | b.value;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool result = compute(a, b);
    memo_[key] = result;
    return result;
  }

  bool specs_equal(const GenSpec& x, const GenSpec& y) {
    if (x.kind != y.kind || x.phase != y.phase || x.cycle.size() != y.cycle.size()) return false;
    if (!equal(x.base, y.base)) return false;
    for (std::size_t i = 0; i < x.cycle.size(); ++i)
      if (!equal(x.cycle[i], y.cycle[i])) return false;
    return true;
  }

  /// A member of `a` with no EZF-equal member in `b`.
  std::optional<NodeId> unmatched_member(NodeId a, NodeId b) {
    for (NodeId x : sys_.members(a)) {
      const auto others = sys_.members(b);
      if (std::none_of(others.begin(), others.end(), [&](NodeId y) { return equal(x, y); })) return x;
    }
    return std::nullopt;
  }

 private:
  bool compute(NodeId a, NodeId b) {
    const GenSpec* ta = sys_.tag(a);
    const GenSpec* tb = sys_.tag(b);
    if (ta != nullptr && tb != nullptr) return specs_equal(*ta, *tb);
    if (ta != nullptr || tb != nullptr) return false;
    return !unmatched_member(a, b) && !unmatched_member(b, a);
  }

  const SetSystem& sys_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

std::vector<std::uint32_t> refine(const SetSystem& sys, const std::vector<NodeId>& universe) {
  std::unordered_map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i) index[universe[i]] = i;

  std::vector<std::uint32_t> block(universe.size(), 0);
  std::size_t block_count = universe.empty() ? 0 : 1;
  for (;;) {
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> signatures;
    std::vector<std::uint32_t> next(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) {
      std::vector<std::uint32_t> succ;
      for (NodeId m : sys.members(universe[i])) succ.push_back(block[index.at(m)]);
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
      auto [it, inserted] = signatures.try_emplace({block[i], std::move(succ)},
                                                   static_cast<std::uint32_t>(signatures.size()));
      next[i] = it->second;
    }
    block = std::move(next);
    if (signatures.size() == block_count) break;
    block_count = signatures.size();
  }
  return block;
}

}  // namespace

EqReport ezf_equal(const SetSystem& sys, NodeId a, NodeId b) {
  EzfComparer cmp(sys);
  const GenSpec* ta = sys.tag(a);
  const GenSpec* tb = sys.tag(b);
  EqReport report;
  report.equal = cmp.equal(a, b);
  const bool generated = ta != nullptr && tb != nullptr;
  if (report.equal) {
    report.reason = generated ? EqReason::GeneratorMatch : EqReason::Extensional;
    return report;
  }
  report.reason = generated ? EqReason::GeneratorMismatch : EqReason::MemberMismatch;
  if (generated && bisimilar(sys, a, b)) return report;
  if (auto x = cmp.unmatched_member(a, b)) report.witness = std::vector<NodeId>{*x};
  else if (auto y = cmp.unmatched_member(b, a)) report.witness = std::vector<NodeId>{*y};
  return report;
}

std::vector<std::uint32_t> bisimulation_blocks(const SetSystem& sys) {
  std::vector<NodeId> all(sys.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = NodeId{static_cast<std::uint32_t>(i)};
  return refine(sys, all);
}

bool bisimilar(const SetSystem& sys, NodeId a, NodeId b) {
  if (a == b) return true;
  std::vector<NodeId> universe = reachable(sys, a, false);
  const std::vector<NodeId> from_b = reachable(sys, b, false);
  universe.insert(universe.end(), from_b.begin(), from_b.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  const auto block = refine(sys, universe);
  const auto pos = [&](NodeId n) { return std::lower_bound(universe.begin(), universe.end(), n) - universe.begin(); };
  return block[pos(a)] == block[pos(b)];
}

NodeId canonical_base(const SetSystem& sys, NodeId b) {
  if (!sys.well_founded(b)) throw PreconditionError("base generator must be well-founded");
  while (sys.cardinality(b) == 1) b = sys.members(b).front();
  return b;
}

std::optional<Distinction> eq_distinguish(const SetSystem& sys, NodeId a, NodeId b) {
  EzfComparer cmp(sys);
  if (cmp.equal(a, b)) return std::nullopt;
  Serializer text(sys);
  const GenSpec* ta = sys.tag(a);
  const GenSpec* tb = sys.tag(b);
  if (ta != nullptr && tb != nullptr) {
    if (ta->kind != tb->kind)
      return Distinction{{}, "kind " + std::string(kind_name(ta->kind)) + " vs " + std::string(kind_name(tb->kind))};
    if (!cmp.equal(ta->base, tb->base))
      return Distinction{{}, "base generator " + text(ta->base) + " vs " + text(tb->base)};
    if (ta->cycle.size() != tb->cycle.size())
      return Distinction{{}, "cycle length " + std::to_string(ta->cycle.size()) + " vs " +
                                 std::to_string(tb->cycle.size())};
    for (std::size_t i = 0; i < ta->cycle.size(); ++i)
      if (!cmp.equal(ta->cycle[i], tb->cycle[i]))
        return Distinction{{}, "principal generator " + std::to_string(i + 1) + ": " + text(ta->cycle[i]) + " vs " +
                                   text(tb->cycle[i])};
    return Distinction{{}, "phase " + std::to_string(ta->phase) + " vs " + std::to_string(tb->phase)};
  }
  const auto left = cmp.unmatched_member(a, b);
  const auto right = cmp.unmatched_member(b, a);
  if (left && right) return Distinction{{*left}, "member " + text(*left) + " vs member " + text(*right)};
  if (left) return Distinction{{*left}, "member " + text(*left) + " only on the left"};
  if (right) return Distinction{{*right}, "member " + text(*right) + " only on the right"};
  return Distinction{{}, ta != nullptr ? "generated set vs ordinary set" : "ordinary set vs generated set"};
}

}  // namespace hyperset
