#pragma once

// Finitely presented sets as rooted membership graphs.
//
// A SetSystem owns a pool of nodes; every node is a set whose members are
// other nodes of the same pool. Construction is hash-consed: every public
// constructor returns the canonical node for its value, so two NodeIds of
// one system denote EZF-equal sets exactly when they are the same id.
// Membership cycles only arise through infinitely generated sets (IGS),
// which carry a GenSpec tag describing their generators.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hyperset {

struct NodeId {
  std::uint32_t value = 0;

  auto operator<=>(const NodeId&) const = default;
};

enum class GenKind : std::uint8_t { Infiniton, Semi, Quasi };

/// Provenance of an infinitely generated set.
///
/// Infiniton: `cycle` is empty. Semi: `cycle` holds the one principal
/// generator. Quasi: `cycle` holds G_1..G_l with strictly increasing
/// cardinality and `phase` selects the sublimit Q_{w,phase}, whose outermost
/// generator is G_phase (G_0 read as G_l).
struct GenSpec {
  GenKind kind = GenKind::Infiniton;
  NodeId base;
  std::vector<NodeId> cycle;
  std::uint32_t phase = 0;

  auto operator<=>(const GenSpec&) const = default;
  bool operator==(const GenSpec&) const = default;
};

/// Generator whose members sit directly in the tagged node.
NodeId outer_generator(const GenSpec& spec, NodeId empty);
/// Generator G with {*G, node} equal to the next IGS along the cycle.
NodeId continuation_generator(const GenSpec& spec, NodeId empty);
/// Period of the generator schedule: 1 for infinitons and semis, l for quasis.
std::size_t period(const GenSpec& spec);
std::string_view kind_name(GenKind kind);

/// One entry of a brace expression: a member, a spliced set, or nullity.
class Item {
 public:
  enum class Kind { Plain, Unpack, Nullity };

  static Item plain(NodeId n) { return Item(Kind::Plain, n); }
  static Item unpack(NodeId n) { return Item(Kind::Unpack, n); }
  static Item nullity() { return Item(Kind::Nullity, NodeId{}); }

  Kind kind() const { return kind_; }
  NodeId node() const { return node_; }

 private:
  Item(Kind k, NodeId n) : kind_(k), node_(n) {}
  Kind kind_;
  NodeId node_;
};

struct SystemOptions {
  std::size_t max_numeral = 12;
  /// Bound on unfold depth and on homogeneity prefix checks.
  std::size_t max_unfold = 16;
};

class SetSystem {
 public:
  explicit SetSystem(SystemOptions options = {});

  NodeId empty() const { return NodeId{0}; }
  std::size_t size() const { return nodes_.size(); }
  const SystemOptions& options() const { return options_; }
  SystemOptions& options() { return options_; }

  /// Members sorted by id.
  std::span<const NodeId> members(NodeId n) const { return node(n).members; }
  std::size_t cardinality(NodeId n) const { return node(n).members.size(); }
  bool contains(NodeId set, NodeId member) const;
  /// Non-null iff the node lies on a membership cycle.
  const GenSpec* tag(NodeId n) const { return node(n).tag ? &*node(n).tag : nullptr; }
  bool on_cycle(NodeId n) const { return node(n).tag.has_value(); }
  /// No membership cycle is reachable from n.
  bool well_founded(NodeId n) const { return node(n).well_founded; }
  bool valid(NodeId n) const { return n.value < nodes_.size(); }

  NodeId root() const { return root_; }
  void set_root(NodeId n);

  /// Canonical plain set with the given members. Duplicates are removed and
  /// a member set of the form members(G) + {M}, where M is an IGS whose
  /// continuation generator is G, is identified with the next IGS after M.
  NodeId make(std::vector<NodeId> members);

  /// Interns an infinitely generated set (and, for quasis, its whole phase
  /// family). The spec must already be validated and its generators
  /// well-founded; see igs.hpp for the checked constructors.
  NodeId make_igs(const GenSpec& spec);
  std::optional<NodeId> find_igs(const GenSpec& spec) const;

  /// Node-for-node identity of two systems.
  bool operator==(const SetSystem& other) const;

 private:
  struct Node {
    std::vector<NodeId> members;
    std::optional<GenSpec> tag;
    bool well_founded = true;

    bool operator==(const Node&) const = default;
  };

  struct MembersHash {
    std::size_t operator()(const std::vector<NodeId>& v) const;
  };

  const Node& node(NodeId n) const;
  std::optional<NodeId> omega_rewrite(const std::vector<NodeId>& sorted) const;

  SystemOptions options_;
  std::vector<Node> nodes_;
  std::unordered_map<std::vector<NodeId>, NodeId, MembersHash> plain_index_;
  std::map<GenSpec, NodeId> igs_index_;
  NodeId root_;
};

// ---------------------------------------------------------------------------
// Construction

/// Brace construction with splicing: Plain items become members, Unpack items
/// contribute their members, nullity contributes nothing.
NodeId mk_set(SetSystem& sys, std::span<const Item> items);
NodeId mk_set(SetSystem& sys, std::initializer_list<Item> items);
/// Plain members only.
NodeId mk_set_of(SetSystem& sys, std::span<const NodeId> members);
NodeId mk_set_of(SetSystem& sys, std::initializer_list<NodeId> members);

/// Von Neumann numeral. Throws BoundError above options().max_numeral.
NodeId mk_numeral(SetSystem& sys, std::size_t n);
/// Returns n if `s` is the von Neumann numeral n.
std::optional<std::size_t> as_numeral(const SetSystem& sys, NodeId s);

/// Kuratowski pair {{x},{x,y}}.
NodeId kuratowski_pair(SetSystem& sys, NodeId x, NodeId y);

// ---------------------------------------------------------------------------
// Algebra

NodeId set_union(SetSystem& sys, NodeId a, NodeId b);
NodeId set_intersect(SetSystem& sys, NodeId a, NodeId b);
NodeId set_difference(SetSystem& sys, NodeId a, NodeId b);
bool is_subset(const SetSystem& sys, NodeId a, NodeId b);
/// Set of Kuratowski pairs; a product with the empty set is empty.
NodeId set_product(SetSystem& sys, NodeId a, NodeId b);
/// k-fold union: U^0 S = S, U^(k+1) S = U(U^k S).
NodeId big_union_k(SetSystem& sys, NodeId s, std::size_t k);
/// Nodes reachable from s through one or more membership edges.
NodeId transitive_closure(SetSystem& sys, NodeId s);
bool is_transitive(const SetSystem& sys, NodeId s);

/// Ids reachable from `from` through membership edges and generator
/// references, including `from`.
std::vector<NodeId> reachable(const SetSystem& sys, NodeId from, bool include_generators = true);

// ---------------------------------------------------------------------------
// Canonical form and text

/// Compacts to the nodes reachable from the root and renumbers them in the
/// shortlex order of their canonical text. Idempotent.
SetSystem canonicalize(const SetSystem& sys);

/// Deterministic canonical text: members sorted shortlex by their own text,
/// IGS written in constructor form: inf(G0), semi(G;G0), quasi([G1,..];G0;q).
std::string serialize(const SetSystem& sys, NodeId s);

/// Memoizing serializer for repeated use on one system.
class Serializer {
 public:
  explicit Serializer(const SetSystem& sys) : sys_(sys) {}
  const std::string& operator()(NodeId s);

 private:
  const SetSystem& sys_;
  std::unordered_map<std::uint32_t, std::string> memo_;
};

/// Shortlex: shorter first, then bytewise.
bool shortlex_less(std::string_view a, std::string_view b);

/// Parses canonical text (accepting whitespace) into `sys`. Throws ParseError.
NodeId deserialize(SetSystem& sys, std::string_view text);

}  // namespace hyperset

template <>
struct std::hash<hyperset::NodeId> {
  std::size_t operator()(hyperset::NodeId n) const noexcept { return std::hash<std::uint32_t>{}(n.value); }
};
