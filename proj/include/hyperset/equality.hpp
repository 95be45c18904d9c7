#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperset/set_system.hpp"

namespace hyperset {

enum class EqReason { Extensional, GeneratorMatch, GeneratorMismatch, MemberMismatch };

std::string_view reason_name(EqReason reason);

struct EqReport {
  bool equal = false;
  EqReason reason = EqReason::MemberMismatch;
  /// A member of one side with no equal member on the other. Absent when the
  /// sets are equal, and for generator mismatches between bisimilar sets.
  std::optional<std::vector<NodeId>> witness;
};

/// EZF equality, decided structurally without relying on hash-consing:
/// IGS compare kind, base and principal generators (aligned at the phase);
/// ordinary sets compare extensionally; an IGS never equals an ordinary set.
EqReport ezf_equal(const SetSystem& sys, NodeId a, NodeId b);

/// Greatest bisimulation on the membership graph, ignoring generator tags.
bool bisimilar(const SetSystem& sys, NodeId a, NodeId b);

/// Coarsest stable partition of all nodes of `sys`: block id per node.
std::vector<std::uint32_t> bisimulation_blocks(const SetSystem& sys);

/// Strips singleton layers {x} with x well-founded. Precondition: b is
/// well-founded.
NodeId canonical_base(const SetSystem& sys, NodeId b);

struct Distinction {
  /// Membership path from the side that owns the distinguishing member.
  std::vector<NodeId> path;
  std::string description;
};

/// Why a and b differ, or nullopt if they are EZF-equal.
std::optional<Distinction> eq_distinguish(const SetSystem& sys, NodeId a, NodeId b);

}  // namespace hyperset
