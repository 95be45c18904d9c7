#pragma once

// Finite stages of the cumulative hierarchy and audits of the axioms and
// regularity / Russell claims against them.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperset/set_system.hpp"

namespace hyperset {

inline constexpr std::size_t kMaxSpectrumStage = 5;
inline constexpr std::size_t kMaxClosureAuditStage = 3;
inline constexpr std::size_t kMaxRussellAuditStage = 4;

/// The elements of P^(n)(0), which below w coincides with V_n and T_n.
struct Stage {
  std::size_t index = 0;
  std::vector<NodeId> elements;
};

/// Throws BoundError for n > kMaxSpectrumStage.
Stage spectrum_stage(SetSystem& sys, std::size_t n);

/// Compares spectrum_stage(n) with V_n built independently from Ackermann
/// codes 0 .. |V_n|-1 and a rank filter.
bool check_stage_equal_v(SetSystem& sys, std::size_t n);

struct RegularityReport {
  bool holds = false;
  std::optional<NodeId> witness;
  /// s was empty: holds without a witness.
  bool vacuous = false;
};

/// Some x in s with x and s disjoint.
RegularityReport check_regularity(const SetSystem& sys, NodeId s);

struct AuditCheck {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> violations;
};

struct AuditReport {
  std::vector<AuditCheck> checks;

  std::size_t violation_count() const;
  bool ok() const { return violation_count() == 0; }
  std::string summary() const;
};

/// Pairing, power set, union and separation closure of Stage(n), n <= 3.
AuditReport ezf_closure_audit(SetSystem& sys, std::size_t n);

struct RussellSample {
  NodeId node;
  bool self_membered = false;
  /// On a membership cycle of length > 1.
  bool longer_cycle = false;
  /// Member of the infiniton class (an IGS) rather than the non-infiniton class.
  bool infiniton_class = false;
};

struct RussellReport {
  AuditReport audit;
  std::vector<RussellSample> samples;
};

/// (a) no element of Stage(n) is self-membered or on a cycle; (b) among the
/// samples, self-membership coincides with infiniton/semi tags and longer
/// cycles with quasi tags; (c) Stage(n) as a set is not a member of itself
/// nor of Stage(n). n <= 4.
RussellReport russell_audit(SetSystem& sys, std::size_t n, std::span<const NodeId> samples);

/// Infiniton, semi, quasi, a set of infinitons, a mixed set and a numeral.
std::vector<NodeId> standard_russell_samples(SetSystem& sys);

}  // namespace hyperset
