#include "hyperset/set_system.hpp"

#include <algorithm>

#include "hyperset/error.hpp"

namespace hyperset {

NodeId outer_generator(const GenSpec& spec, NodeId empty) {
  switch (spec.kind) {
    case GenKind::Infiniton:
      return empty;
    case GenKind::Semi:
      return spec.cycle.front();
    case GenKind::Quasi: {
      const std::size_t l = spec.cycle.size();
      return spec.cycle[(spec.phase + l - 1) % l];
    }
  }
  return empty;
}

NodeId continuation_generator(const GenSpec& spec, NodeId empty) {
  switch (spec.kind) {
    case GenKind::Infiniton:
      return empty;
    case GenKind::Semi:
      return spec.cycle.front();
    case GenKind::Quasi:
      return spec.cycle[spec.phase];
  }
  return empty;
}

std::size_t period(const GenSpec& spec) { return spec.kind == GenKind::Quasi ? spec.cycle.size() : 1; }

std::string_view kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::Infiniton:
      return "infiniton";
    case GenKind::Semi:
      return "semi-infiniton";
    case GenKind::Quasi:
      return "quasi-infiniton";
  }
  return "?";
}

std::size_t SetSystem::MembersHash::operator()(const std::vector<NodeId>& v) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (NodeId n : v) {
    h ^= n.value;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SetSystem::SetSystem(SystemOptions options) : options_(options) {
  nodes_.push_back(Node{});
  plain_index_.emplace(std::vector<NodeId>{}, NodeId{0});
}

const SetSystem::Node& SetSystem::node(NodeId n) const {
  if (n.value >= nodes_.size()) throw PreconditionError("dangling node id " + std::to_string(n.value));
  return nodes_[n.value];
}

bool SetSystem::contains(NodeId set, NodeId member) const {
  const auto& m = node(set).members;
  return std::binary_search(m.begin(), m.end(), member);
}

void SetSystem::set_root(NodeId n) {
  node(n);
  root_ = n;
}

std::optional<NodeId> SetSystem::omega_rewrite(const std::vector<NodeId>& sorted) const {
  for (NodeId m : sorted) {
    const GenSpec* spec = tag(m);
    if (spec == nullptr) continue;
    const auto& gen = members(continuation_generator(*spec, empty()));
    if (gen.size() + 1 != sorted.size()) continue;
    std::vector<NodeId> expected(gen.begin(), gen.end());
    expected.insert(std::upper_bound(expected.begin(), expected.end(), m), m);
    if (expected != sorted) continue;
    if (spec->kind != GenKind::Quasi) return m;
    GenSpec next = *spec;
    next.phase = static_cast<std::uint32_t>((spec->phase + 1) % spec->cycle.size());
    return find_igs(next);
  }
  return std::nullopt;
}

NodeId SetSystem::make(std::vector<NodeId> members) {
  for (NodeId m : members) node(m);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (auto it = plain_index_.find(members); it != plain_index_.end()) return it->second;
  if (auto merged = omega_rewrite(members)) return *merged;

  Node fresh;
  fresh.well_founded = std::all_of(members.begin(), members.end(), [&](NodeId m) { return well_founded(m); });
  fresh.members = members;
  const NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(std::move(fresh));
  plain_index_.emplace(std::move(members), id);
  return id;
}

std::optional<NodeId> SetSystem::find_igs(const GenSpec& spec) const {
  if (auto it = igs_index_.find(spec); it != igs_index_.end()) return it->second;
  return std::nullopt;
}

NodeId SetSystem::make_igs(const GenSpec& requested) {
  // Copied: `requested` may alias a tag stored in nodes_.
  const GenSpec spec = requested;
  if (auto found = find_igs(spec)) return *found;
  node(spec.base);
  for (NodeId g : spec.cycle) node(g);

  auto member_list = [&](NodeId generator, NodeId continuation) {
    std::vector<NodeId> m(members(generator).begin(), members(generator).end());
    m.insert(std::upper_bound(m.begin(), m.end(), continuation), continuation);
    return m;
  };

  switch (spec.kind) {
    case GenKind::Infiniton:
    case GenKind::Semi: {
      if (spec.kind == GenKind::Semi && spec.cycle.size() != 1)
        throw PreconditionError("a semi-infiniton has exactly one principal generator");
      if (spec.kind == GenKind::Infiniton && !spec.cycle.empty())
        throw PreconditionError("an infiniton has no principal generators");
      const NodeId id{static_cast<std::uint32_t>(nodes_.size())};
      nodes_.push_back(Node{{}, spec, false});
      nodes_[id.value].members = member_list(outer_generator(spec, empty()), id);
      igs_index_.emplace(spec, id);
      return id;
    }
    case GenKind::Quasi: {
      const std::size_t l = spec.cycle.size();
      if (l < 2) throw PreconditionError("a quasi-infiniton needs at least two principal generators");
      if (spec.phase >= l) throw PreconditionError("quasi-infiniton phase out of range");
      const auto first = static_cast<std::uint32_t>(nodes_.size());
      for (std::size_t p = 0; p < l; ++p) {
        GenSpec phased = spec;
        phased.phase = static_cast<std::uint32_t>(p);
        nodes_.push_back(Node{{}, phased, false});
        igs_index_.emplace(std::move(phased), NodeId{first + static_cast<std::uint32_t>(p)});
      }
      for (std::size_t p = 0; p < l; ++p) {
        Node& n = nodes_[first + p];
        const NodeId previous{first + static_cast<std::uint32_t>((p + l - 1) % l)};
        n.members = member_list(outer_generator(*n.tag, empty()), previous);
      }
      return NodeId{first + spec.phase};
    }
  }
  throw PreconditionError("unknown generator kind");
}

bool SetSystem::operator==(const SetSystem& other) const { return nodes_ == other.nodes_ && root_ == other.root_; }

// ---------------------------------------------------------------------------

NodeId mk_set(SetSystem& sys, std::span<const Item> items) {
  std::vector<NodeId> members;
  for (const Item& item : items) {
    switch (item.kind()) {
      case Item::Kind::Plain:
        members.push_back(item.node());
        break;
      case Item::Kind::Unpack: {
        const auto spliced = sys.members(item.node());
        members.insert(members.end(), spliced.begin(), spliced.end());
        break;
      }
      case Item::Kind::Nullity:
        break;
    }
  }
  return sys.make(std::move(members));
}

NodeId mk_set(SetSystem& sys, std::initializer_list<Item> items) {
  return mk_set(sys, std::span<const Item>(items.begin(), items.size()));
}

NodeId mk_set_of(SetSystem& sys, std::span<const NodeId> members) {
  return sys.make(std::vector<NodeId>(members.begin(), members.end()));
}

NodeId mk_set_of(SetSystem& sys, std::initializer_list<NodeId> members) {
  return sys.make(std::vector<NodeId>(members));
}

NodeId mk_numeral(SetSystem& sys, std::size_t n) {
  if (n > sys.options().max_numeral)
    throw BoundError("numeral " + std::to_string(n) + " exceeds bound " + std::to_string(sys.options().max_numeral));
  NodeId current = sys.empty();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<NodeId> next(sys.members(current).begin(), sys.members(current).end());
    next.push_back(current);
    current = sys.make(std::move(next));
  }
  return current;
}

std::optional<std::size_t> as_numeral(const SetSystem& sys, NodeId s) {
  if (!sys.well_founded(s)) return std::nullopt;
  std::unordered_map<NodeId, std::optional<std::size_t>> memo;
  std::function<std::optional<std::size_t>(NodeId)> go = [&](NodeId x) -> std::optional<std::size_t> {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const auto members = sys.members(x);
    std::vector<bool> seen(members.size(), false);
    std::optional<std::size_t> result = members.size();
    for (NodeId m : members) {
      const auto v = go(m);
      if (!v || *v >= members.size() || seen[*v]) {
        result = std::nullopt;
        break;
      }
      seen[*v] = true;
    }
    memo[x] = result;
    return result;
  };
  return go(s);
}

NodeId kuratowski_pair(SetSystem& sys, NodeId x, NodeId y) {
  const NodeId single = sys.make({x});
  const NodeId both = sys.make({x, y});
  return sys.make({single, both});
}

NodeId set_union(SetSystem& sys, NodeId a, NodeId b) {
  std::vector<NodeId> m(sys.members(a).begin(), sys.members(a).end());
  m.insert(m.end(), sys.members(b).begin(), sys.members(b).end());
  return sys.make(std::move(m));
}

NodeId set_intersect(SetSystem& sys, NodeId a, NodeId b) {
  std::vector<NodeId> m;
  std::ranges::set_intersection(sys.members(a), sys.members(b), std::back_inserter(m));
  return sys.make(std::move(m));
}

NodeId set_difference(SetSystem& sys, NodeId a, NodeId b) {
  std::vector<NodeId> m;
  std::ranges::set_difference(sys.members(a), sys.members(b), std::back_inserter(m));
  return sys.make(std::move(m));
}

bool is_subset(const SetSystem& sys, NodeId a, NodeId b) { return std::ranges::includes(sys.members(b), sys.members(a)); }

NodeId set_product(SetSystem& sys, NodeId a, NodeId b) {
  const std::vector<NodeId> left(sys.members(a).begin(), sys.members(a).end());
  const std::vector<NodeId> right(sys.members(b).begin(), sys.members(b).end());
  std::vector<NodeId> pairs;
  for (NodeId x : left)
    for (NodeId y : right) pairs.push_back(kuratowski_pair(sys, x, y));
  return sys.make(std::move(pairs));
}

NodeId big_union_k(SetSystem& sys, NodeId s, std::size_t k) {
  NodeId current = s;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<NodeId> flat;
    for (NodeId y : sys.members(current)) {
      const auto inner = sys.members(y);
      flat.insert(flat.end(), inner.begin(), inner.end());
    }
    const NodeId next = sys.make(std::move(flat));
    if (next == current) break;
    current = next;
  }
  return current;
}

namespace {

void collect(const SetSystem& sys, NodeId n, bool include_generators, std::vector<char>& seen, std::vector<NodeId>& out) {
  std::vector<NodeId> stack{n};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    if (seen[x.value]) continue;
    seen[x.value] = 1;
    out.push_back(x);
    for (NodeId m : sys.members(x)) stack.push_back(m);
    if (include_generators) {
      if (const GenSpec* spec = sys.tag(x)) {
        stack.push_back(spec->base);
        for (NodeId g : spec->cycle) stack.push_back(g);
      }
    }
  }
}

}  // namespace

std::vector<NodeId> reachable(const SetSystem& sys, NodeId from, bool include_generators) {
  std::vector<char> seen(sys.size(), 0);
  std::vector<NodeId> out;
  collect(sys, from, include_generators, seen, out);
  std::sort(out.begin(), out.end());
  return out;
}

NodeId transitive_closure(SetSystem& sys, NodeId s) {
  std::vector<char> seen(sys.size(), 0);
  std::vector<NodeId> out;
  for (NodeId m : sys.members(s)) collect(sys, m, false, seen, out);
  return sys.make(std::move(out));
}

bool is_transitive(const SetSystem& sys, NodeId s) {
  for (NodeId m : sys.members(s))
    for (NodeId x : sys.members(m))
      if (!sys.contains(s, x)) return false;
  return true;
}

}  // namespace hyperset
