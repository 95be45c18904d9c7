#pragma once

// The set-of-IGS functors S|_I, S|_S and S|_Q over well-founded S.

#include <cstddef>
#include <vector>

#include "hyperset/set_system.hpp"

namespace hyperset {

struct FunctorConfig {
  /// Largest cycle length l enumerated by functor_quasi; 2..4.
  std::size_t quasi_max_len = 3;
};

/// {infiniton(g) : g in s}.
NodeId functor_inf(SetSystem& sys, NodeId s);
/// {semi_infiniton(g, b) : g, b in s}; g = 0 contributes infinitons.
NodeId functor_semi(SetSystem& sys, NodeId s);
/// Every phase of every quasi-infiniton whose base and principal generators
/// are members of s, with 2 <= l <= cfg.quasi_max_len.
NodeId functor_quasi(SetSystem& sys, NodeId s, FunctorConfig cfg = {});

/// The generator specs functor_quasi instantiates, before deduplication.
std::vector<GenSpec> quasi_specs(const SetSystem& sys, NodeId s, FunctorConfig cfg = {});

}  // namespace hyperset
