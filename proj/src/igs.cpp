#include "hyperset/igs.hpp"

#include <algorithm>

#include "hyperset/equality.hpp"
#include "hyperset/error.hpp"

namespace hyperset {

namespace {

void require_well_founded(const SetSystem& sys, NodeId n, const char* role) {
  if (!sys.valid(n)) throw PreconditionError(std::string(role) + " is not a node of this system");
  if (!sys.well_founded(n)) throw PreconditionError(std::string(role) + " must be well-founded");
}

NodeId wrap(SetSystem& sys, NodeId generator, NodeId inner) {
  std::vector<NodeId> m(sys.members(generator).begin(), sys.members(generator).end());
  m.push_back(inner);
  return sys.make(std::move(m));
}

void validate_cycle(const SetSystem& sys, std::span<const NodeId> cycle) {
  if (cycle.size() < 2) throw PreconditionError("a quasi-infiniton needs at least two principal generators");
  for (NodeId g : cycle) require_well_founded(sys, g, "principal generator");
  if (std::all_of(cycle.begin(), cycle.end(), [&](NodeId g) { return g == cycle.front(); }))
    throw PreconditionError("all principal generators are equal; this reduces to a semi-infiniton");
  std::vector<NodeId> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("principal generators must be pairwise distinct");
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
    if (sys.cardinality(cycle[i]) >= sys.cardinality(cycle[i + 1]))
      throw PreconditionError("principal generator cardinalities must strictly increase");
}

}  // namespace

NodeId fin_generated(SetSystem& sys, std::span<const NodeId> generators, NodeId base) {
  NodeId current = base;
  for (auto it = generators.rbegin(); it != generators.rend(); ++it) current = wrap(sys, *it, current);
  return current;
}

NodeId infiniton(SetSystem& sys, NodeId base) {
  require_well_founded(sys, base, "base generator");
  return sys.make_igs(GenSpec{GenKind::Infiniton, canonical_base(sys, base), {}, 0});
}

NodeId semi_infiniton(SetSystem& sys, NodeId g, NodeId base) {
  require_well_founded(sys, g, "principal generator");
  require_well_founded(sys, base, "base generator");
  if (sys.cardinality(g) == 0) return infiniton(sys, base);
  return sys.make_igs(GenSpec{GenKind::Semi, base, {g}, 0});
}

NodeId quasi_infiniton(SetSystem& sys, std::span<const NodeId> cycle, NodeId base, std::size_t q) {
  validate_cycle(sys, cycle);
  require_well_founded(sys, base, "base generator");
  if (q >= cycle.size())
    throw PreconditionError("phase " + std::to_string(q) + " out of range for cycle length " +
                            std::to_string(cycle.size()));
  return sys.make_igs(
      GenSpec{GenKind::Quasi, base, std::vector<NodeId>(cycle.begin(), cycle.end()), static_cast<std::uint32_t>(q)});
}

std::vector<NodeId> sublimits(SetSystem& sys, std::span<const NodeId> cycle, NodeId base) {
  std::vector<NodeId> out;
  for (std::size_t q = 0; q < cycle.size(); ++q) out.push_back(quasi_infiniton(sys, cycle, base, q));
  return out;
}

NodeId construct(SetSystem& sys, const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::Infiniton:
      if (!spec.cycle.empty()) throw PreconditionError("an infiniton has no principal generators");
      return infiniton(sys, spec.base);
    case GenKind::Semi:
      if (spec.cycle.size() != 1) throw PreconditionError("a semi-infiniton has exactly one principal generator");
      return semi_infiniton(sys, spec.cycle.front(), spec.base);
    case GenKind::Quasi:
      return quasi_infiniton(sys, spec.cycle, spec.base, spec.phase);
  }
  throw PreconditionError("unknown generator kind");
}

NodeId scheduled_generator(const SetSystem& sys, const GenSpec& spec, std::size_t level) {
  switch (spec.kind) {
    case GenKind::Infiniton:
      return sys.empty();
    case GenKind::Semi:
      return spec.cycle.front();
    case GenKind::Quasi:
      return spec.cycle[(level - 1) % spec.cycle.size()];
  }
  return sys.empty();
}

namespace {

NodeId unfold_spec(SetSystem& sys, const GenSpec& spec, std::size_t depth) {
  NodeId current = spec.base;
  for (std::size_t level = 1; level <= depth; ++level) current = wrap(sys, scheduled_generator(sys, spec, level), current);
  return current;
}

}  // namespace

NodeId unfold(SetSystem& sys, NodeId s, std::size_t depth) {
  if (depth > sys.options().max_unfold)
    throw BoundError("unfold depth " + std::to_string(depth) + " exceeds bound " +
                     std::to_string(sys.options().max_unfold));
  if (sys.well_founded(s)) return s;
  if (const GenSpec* spec = sys.tag(s)) {
    const GenSpec copy = *spec;
    return unfold_spec(sys, copy, depth);
  }
  const std::vector<NodeId> members(sys.members(s).begin(), sys.members(s).end());
  std::vector<NodeId> unfolded;
  for (NodeId m : members) unfolded.push_back(unfold(sys, m, depth));
  return sys.make(std::move(unfolded));
}

bool omega_invariant(const SetSystem& sys, NodeId s) { return sys.on_cycle(s); }

bool satisfies_prefix_template(const SetSystem& sys, const GenSpec& spec, std::size_t n, NodeId s) {
  NodeId level_set = s;
  for (std::size_t level = n; level >= 1; --level) {
    const auto required = sys.members(scheduled_generator(sys, spec, level));
    const auto present = sys.members(level_set);
    if (!std::ranges::includes(present, required)) return false;
    std::vector<NodeId> rest;
    std::ranges::set_difference(present, required, std::back_inserter(rest));
    if (rest.size() != 1) return false;
    level_set = rest.front();
  }
  return true;
}

bool homogeneity_prefix_check(SetSystem& sys, const GenSpec& spec_in, std::size_t n, std::size_t k) {
  const GenSpec spec = spec_in;
  if (k > sys.options().max_unfold)
    throw BoundError("prefix length " + std::to_string(k) + " exceeds bound " +
                     std::to_string(sys.options().max_unfold));
  if (n >= k) throw PreconditionError("homogeneity check needs n < k");
  const NodeId approximant = unfold_spec(sys, spec, k);
  return satisfies_prefix_template(sys, spec, n, approximant);
}

}  // namespace hyperset
