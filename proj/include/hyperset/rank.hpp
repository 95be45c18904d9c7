#pragma once

#include <string>

#include "hyperset/ordinal.hpp"
#include "hyperset/set_system.hpp"

namespace hyperset {

enum class Classification { WF, NWF, TNWF };

std::string_view to_string(Classification c);

/// WF: no reachable cycle. TNWF: NWF and no finite path ends at the empty set.
Classification classify(const SetSystem& sys, NodeId s);

/// Rank in the von Neumann universe: least a with s in V_a, so R_V(0) = 1.
/// Throws PreconditionError for non-well-founded input.
Ordinal rank_v(const SetSystem& sys, NodeId s);

/// Rank in the total universe: w for nodes on a cycle, otherwise the least
/// successor above every member's rank.
Ordinal rank_t(const SetSystem& sys, NodeId s);

enum class Universe { V, T };

struct RankResult {
  Ordinal value;
  Universe universe = Universe::V;
};

/// rank_v for well-founded input, rank_t otherwise.
RankResult rank(const SetSystem& sys, NodeId s);

Dimension dimension(const SetSystem& sys, NodeId s);

/// Stratum A_a of the rank partition containing s.
struct PartitionClass {
  Ordinal rank;
  /// Limit stratum (an IGS) rather than a successor difference T_a - T_(a-1).
  bool limit = false;

  std::string describe() const;
};

PartitionClass partition_class(const SetSystem& sys, NodeId s);

}  // namespace hyperset
