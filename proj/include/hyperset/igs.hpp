#pragma once

// Infinitely generated sets: infinitons, semi-infinitons and
// quasi-infinitons, their finite approximants and prefix checks.
//
// Generators are restricted to well-founded sets. An infiniton is the limit
// of I_n = {I_(n-1)}, a semi-infiniton the limit of Z_n = {*G, Z_(n-1)}, and
// a quasi-infiniton one of the l sublimits of Q_n = {*G_n, Q_(n-1)} whose
// principal generators repeat with period l.

#include <cstddef>
#include <span>
#include <vector>

#include "hyperset/set_system.hpp"

namespace hyperset {

/// Finitely generated set {*G_n, {*G_(n-1), ... {*G_1, G_0}...}}.
/// `generators` lists G_n first (outermost) down to G_1.
NodeId fin_generated(SetSystem& sys, std::span<const NodeId> generators, NodeId base);

/// I = {I}, keyed by the canonical (singleton-stripped) base.
NodeId infiniton(SetSystem& sys, NodeId base);

/// Z = {*g, Z}. An empty principal generator yields infiniton(base).
NodeId semi_infiniton(SetSystem& sys, NodeId g, NodeId base);

/// Q_{w,q}. `cycle` is G_1..G_l, l >= 2, with strictly increasing
/// cardinalities. Throws PreconditionError on any violation.
NodeId quasi_infiniton(SetSystem& sys, std::span<const NodeId> cycle, NodeId base, std::size_t q);

/// [Q_{w,0}, ..., Q_{w,l-1}].
std::vector<NodeId> sublimits(SetSystem& sys, std::span<const NodeId> cycle, NodeId base);

/// Builds the IGS described by a spec after validating it.
NodeId construct(SetSystem& sys, const GenSpec& spec);

/// Generator used at level m >= 1 of the approximating sequence:
/// empty for infinitons, G for semis, G_((m-1) mod l + 1) for quasis.
NodeId scheduled_generator(const SetSystem& sys, const GenSpec& spec, std::size_t level);

/// Finite approximant H_depth of an IGS (H_0 is the base). Well-founded
/// nodes are returned unchanged; other acyclic nodes unfold member-wise.
/// Throws BoundError above options().max_unfold.
NodeId unfold(SetSystem& sys, NodeId s, std::size_t depth);

/// True iff s lies on a membership cycle, i.e. absorbs further wrapping by
/// its continuation generators.
bool omega_invariant(const SetSystem& sys, NodeId s);

/// Evaluates the length-n homogeneity template of `spec` on unfold(spec, k).
/// Requires n < k <= options().max_unfold.
bool homogeneity_prefix_check(SetSystem& sys, const GenSpec& spec, std::size_t n, std::size_t k);

/// The template itself, evaluated on an arbitrary node: there is a unique
/// chain s = Y_n, Y_(n-1), ..., Y_0 where each Y_m holds all members of the
/// level-m scheduled generator plus exactly one further member Y_(m-1).
bool satisfies_prefix_template(const SetSystem& sys, const GenSpec& spec, std::size_t n, NodeId s);

}  // namespace hyperset
