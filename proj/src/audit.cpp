#include "hyperset/audit.hpp"

#include <algorithm>
#include <unordered_set>

#include "hyperset/error.hpp"
#include "hyperset/functors.hpp"
#include "hyperset/igs.hpp"
#include "hyperset/rank.hpp"

namespace hyperset {

namespace {

void require_stage(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw BoundError(std::string(what) + " stage " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

std::vector<NodeId> subsets(SetSystem& sys, const std::vector<NodeId>& pool) {
  const std::size_t count = std::size_t{1} << pool.size();
  std::vector<NodeId> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<NodeId> members;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (std::size_t{1} << i)) members.push_back(pool[i]);
    out.push_back(sys.make(std::move(members)));
  }
  return out;
}

std::unordered_set<NodeId> as_lookup(const Stage& stage) { return {stage.elements.begin(), stage.elements.end()}; }

}  // namespace

Stage spectrum_stage(SetSystem& sys, std::size_t n) {
  require_stage(n, kMaxSpectrumStage, "spectrum");
  Stage stage{0, {}};
  while (stage.index < n) stage = Stage{stage.index + 1, subsets(sys, stage.elements)};
  return stage;
}

bool check_stage_equal_v(SetSystem& sys, std::size_t n) {
  require_stage(n, kMaxSpectrumStage, "spectrum");
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count = std::size_t{1} << count;

  // Ackermann decoding: code c denotes {decode(i) : bit i of c is set}.
  std::vector<NodeId> decoded;
  decoded.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<NodeId> members;
    for (std::size_t bit = 0; (code >> bit) != 0; ++bit)
      if ((code >> bit) & 1U) members.push_back(decoded[bit]);
    decoded.push_back(sys.make(std::move(members)));
    if (rank_v(sys, decoded.back()).finite_value() > n) return false;
  }

  std::vector<NodeId> spectrum = spectrum_stage(sys, n).elements;
  std::sort(spectrum.begin(), spectrum.end());
  std::sort(decoded.begin(), decoded.end());
  return spectrum == decoded;
}

RegularityReport check_regularity(const SetSystem& sys, NodeId s) {
  if (sys.cardinality(s) == 0) return {true, std::nullopt, true};
  const auto outer = sys.members(s);
  for (NodeId x : outer) {
    const auto inner = sys.members(x);
    if (std::none_of(inner.begin(), inner.end(), [&](NodeId y) { return sys.contains(s, y); }))
      return {true, x, false};
  }
  return {false, std::nullopt, false};
}

std::size_t AuditReport::violation_count() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.violations.size();
  return total;
}

std::string AuditReport::summary() const {
  std::string out;
  for (const auto& c : checks) {
    if (!out.empty()) out += ' ';
    out += c.name + ':' + std::to_string(c.checked - c.violations.size()) + '/' + std::to_string(c.checked);
  }
  out += " violations:" + std::to_string(violation_count());
  return out;
}

AuditReport ezf_closure_audit(SetSystem& sys, std::size_t n) {
  require_stage(n, kMaxClosureAuditStage, "closure audit");
  const Stage here = spectrum_stage(sys, n);
  const Stage next = spectrum_stage(sys, n + 1);
  const Stage after = spectrum_stage(sys, n + 2);
  const auto in_here = as_lookup(here);
  const auto in_next = as_lookup(next);
  const auto in_after = as_lookup(after);
  Serializer text(sys);

  AuditCheck pairing{"pairing", 0, {}};
  for (NodeId a : here.elements)
    for (NodeId b : here.elements) {
      ++pairing.checked;
      const NodeId pair = sys.make({a, b});
      if (!in_next.contains(pair)) pairing.violations.push_back("{" + text(a) + "," + text(b) + "} not in next stage");
    }

  AuditCheck power{"power", 0, {}};
  AuditCheck unions{"union", 0, {}};
  AuditCheck separation{"separation", 0, {}};
  for (NodeId x : here.elements) {
    const std::vector<NodeId> members(sys.members(x).begin(), sys.members(x).end());

    ++power.checked;
    const NodeId powerset = sys.make(subsets(sys, members));
    if (!in_after.contains(powerset)) power.violations.push_back("P(" + text(x) + ") not two stages up");

    ++unions.checked;
    const NodeId flat = big_union_k(sys, x, 1);
    if (!in_here.contains(flat)) unions.violations.push_back("U" + text(x) + " left the stage");

    const auto separate = [&](const char* label, auto predicate) {
      ++separation.checked;
      std::vector<NodeId> kept;
      for (NodeId m : members)
        if (predicate(m)) kept.push_back(m);
      const NodeId subset = sys.make(std::move(kept));
      if (!in_here.contains(subset))
        separation.violations.push_back(std::string(label) + " subset of " + text(x) + " left the stage");
    };
    separate("transitive", [&](NodeId m) { return is_transitive(sys, m); });
    separate("numeral", [&](NodeId m) { return as_numeral(sys, m).has_value(); });
  }
  return AuditReport{{std::move(pairing), std::move(power), std::move(unions), std::move(separation)}};
}

RussellReport russell_audit(SetSystem& sys, std::size_t n, std::span<const NodeId> samples) {
  require_stage(n, kMaxRussellAuditStage, "russell audit");
  const std::vector<NodeId> probe(samples.begin(), samples.end());
  const Stage stage = spectrum_stage(sys, n);
  Serializer text(sys);
  RussellReport report;

  AuditCheck stage_check{"stage-acyclic", 0, {}};
  for (NodeId e : stage.elements) {
    ++stage_check.checked;
    if (sys.contains(e, e) || !sys.well_founded(e))
      stage_check.violations.push_back(text(e) + " is self-membered or on a cycle");
  }

  AuditCheck sample_check{"samples", 0, {}};
  for (NodeId s : probe) {
    ++sample_check.checked;
    RussellSample r;
    r.node = s;
    r.self_membered = sys.contains(s, s);
    r.longer_cycle = sys.on_cycle(s) && !r.self_membered;
    const GenSpec* spec = sys.tag(s);
    r.infiniton_class = spec != nullptr;
    const bool expect_self = spec != nullptr && spec->kind != GenKind::Quasi;
    const bool expect_longer = spec != nullptr && spec->kind == GenKind::Quasi;
    if (r.self_membered != expect_self || r.longer_cycle != expect_longer)
      sample_check.violations.push_back(text(s) + " breaks the self-membership decomposition");
    report.samples.push_back(r);
  }

  AuditCheck stage_set{"stage-not-self-member", 1, {}};
  const NodeId whole = sys.make(std::vector<NodeId>(stage.elements));
  const auto lookup = as_lookup(stage);
  if (sys.contains(whole, whole) || lookup.contains(whole))
    stage_set.violations.push_back("stage " + std::to_string(n) + " contains itself");

  report.audit.checks = {std::move(stage_check), std::move(sample_check), std::move(stage_set)};
  return report;
}

std::vector<NodeId> standard_russell_samples(SetSystem& sys) {
  const NodeId zero = sys.empty();
  const NodeId one = mk_numeral(sys, 1);
  const NodeId two = mk_numeral(sys, 2);
  const NodeId inf = infiniton(sys, zero);
  const NodeId semi = semi_infiniton(sys, one, zero);
  const std::vector<NodeId> cycle{one, two};
  const NodeId quasi = quasi_infiniton(sys, cycle, zero, 0);
  const NodeId infs = functor_inf(sys, sys.make({zero, two}));
  const NodeId mixed = sys.make({inf, one});
  return {inf, semi, quasi, infs, mixed, mk_numeral(sys, 3)};
}

}  // namespace hyperset
