#include "hyperset/functors.hpp"

#include <algorithm>

#include "hyperset/error.hpp"
#include "hyperset/igs.hpp"

namespace hyperset {

namespace {

std::vector<NodeId> wf_members(const SetSystem& sys, NodeId s) {
  if (!sys.well_founded(s)) throw PreconditionError("functors take well-founded sets");
  return {sys.members(s).begin(), sys.members(s).end()};
}

// Strictly increasing-cardinality chains of length l drawn from `pool`.
void chains(const SetSystem& sys, const std::vector<NodeId>& pool, std::size_t l, std::vector<NodeId>& prefix,
            std::vector<std::vector<NodeId>>& out) {
  if (prefix.size() == l) {
    out.push_back(prefix);
    return;
  }
  for (NodeId g : pool) {
    if (!prefix.empty() && sys.cardinality(g) <= sys.cardinality(prefix.back())) continue;
    prefix.push_back(g);
    chains(sys, pool, l, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

NodeId functor_inf(SetSystem& sys, NodeId s) {
  std::vector<NodeId> out;
  for (NodeId g : wf_members(sys, s)) out.push_back(infiniton(sys, g));
  return sys.make(std::move(out));
}

NodeId functor_semi(SetSystem& sys, NodeId s) {
  const auto pool = wf_members(sys, s);
  std::vector<NodeId> out;
  for (NodeId g : pool)
    for (NodeId b : pool) out.push_back(semi_infiniton(sys, g, b));
  return sys.make(std::move(out));
}

std::vector<GenSpec> quasi_specs(const SetSystem& sys, NodeId s, FunctorConfig cfg) {
  if (cfg.quasi_max_len < 2 || cfg.quasi_max_len > 4) throw PreconditionError("quasi_max_len must lie in 2..4");
  const auto pool = wf_members(sys, s);
  std::vector<GenSpec> specs;
  for (std::size_t l = 2; l <= cfg.quasi_max_len; ++l) {
    std::vector<std::vector<NodeId>> found;
    std::vector<NodeId> prefix;
    chains(sys, pool, l, prefix, found);
    for (const auto& cycle : found)
      for (NodeId base : pool)
        for (std::size_t q = 0; q < l; ++q)
          specs.push_back(GenSpec{GenKind::Quasi, base, cycle, static_cast<std::uint32_t>(q)});
  }
  return specs;
}

NodeId functor_quasi(SetSystem& sys, NodeId s, FunctorConfig cfg) {
  std::vector<NodeId> out;
  for (const GenSpec& spec : quasi_specs(sys, s, cfg)) out.push_back(construct(sys, spec));
  return sys.make(std::move(out));
}

}  // namespace hyperset
