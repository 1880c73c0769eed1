#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sublat/projector.hpp"
#include "sublat/subspace_lattice.hpp"

namespace sublat {

/// Selector for a partial sum of context members: the projectors at
/// member_indices added together. The empty set selects the zero operator,
/// the full index set the identity.
struct SubsetSum {
    std::string context_label;
    std::set<std::size_t> member_indices;
};

/// The projector selected by s. Throws SelectorError when the label does
/// not match ctx or an index is out of range.
Projector subset_sum_projector(const MaximalContext& ctx, const SubsetSum& s);

/// The invariant-subspace lattice of a maximal context: the column spaces
/// of all 2^N partial sums of members. Every element is invariant under
/// every member, and distinct subsets give distinct elements, so the result
/// has exactly 2^N elements.
SubspaceLattice context_lattice(const MaximalContext& ctx);

/// Element-wise intersection of the given lattices. All must share one
/// ambient dimension; the result always retains {0} and the full space.
SubspaceLattice intersect_lattices(std::span<const SubspaceLattice> ls);

/// The projector of every subset of ctx paired with its selector, in subset
/// bitmask order. The column spaces of the projectors are exactly the
/// elements of context_lattice(ctx).
std::vector<std::pair<SubsetSum, Projector>> operator_lattice(const MaximalContext& ctx);

/// Meet on the operator side: the projector of the index intersection of s
/// and t, which equals the product of the two subset-sum projectors.
/// Disjoint selectors give the zero operator.
Projector projector_meet_in_context(const MaximalContext& ctx, const SubsetSum& s,
                                    const SubsetSum& t);

} // namespace sublat
