#include "sublat/context_lattice.hpp"

#include <sstream>

#include "sublat/errors.hpp"

namespace sublat {

namespace {

void require_selector(const MaximalContext& ctx, const SubsetSum& s) {
    if (s.context_label != ctx.label()) {
        std::ostringstream os;
        os << "selector: labeled '" << s.context_label << "' but the context is '" << ctx.label()
           << "'";
        throw SelectorError(os.str());
    }
    for (const std::size_t k : s.member_indices)
        if (k >= ctx.size()) {
            std::ostringstream os;
            os << "selector: index " << k << " out of range for a context of " << ctx.size()
               << " members";
            throw SelectorError(os.str());
        }
}

Projector sum_of_members(const MaximalContext& ctx, const std::set<std::size_t>& indices) {
    if (indices.empty()) return Projector::zero(ctx.ambient_dim());
    ExactMatrix sum(ctx.ambient_dim(), ctx.ambient_dim());
    for (const std::size_t k : indices) sum = sum + ctx[k].matrix();
    return validate_projector(sum);
}

} // namespace

Projector subset_sum_projector(const MaximalContext& ctx, const SubsetSum& s) {
    require_selector(ctx, s);
    return sum_of_members(ctx, s.member_indices);
}

SubspaceLattice context_lattice(const MaximalContext& ctx) {
    const std::size_t n_members = ctx.size();
    std::vector<Subspace> elements;
    elements.reserve(std::size_t{1} << n_members);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n_members); ++mask) {
        std::set<std::size_t> indices;
        for (std::size_t k = 0; k < n_members; ++k)
            if (mask & (std::size_t{1} << k)) indices.insert(k);
        elements.push_back(ran(sum_of_members(ctx, indices)));
    }
    return SubspaceLattice::create(elements);
}

SubspaceLattice intersect_lattices(std::span<const SubspaceLattice> ls) {
    if (ls.empty())
        throw LatticeError(LatticeError::Kind::EmptyFamily,
                           "intersect: need at least one lattice");
    const std::size_t ambient = ls.front().ambient_dim();
    for (const auto& l : ls)
        if (l.ambient_dim() != ambient)
            throw DimensionError("intersect: lattices have mixed ambient dimensions");

    std::vector<Subspace> common;
    for (const auto& s : ls.front().elements()) {
        bool in_all = true;
        for (std::size_t k = 1; k < ls.size() && in_all; ++k)
            if (!ls[k].contains(s)) in_all = false;
        if (in_all) common.push_back(s);
    }
    return SubspaceLattice::create(common);
}

std::vector<std::pair<SubsetSum, Projector>> operator_lattice(const MaximalContext& ctx) {
    const std::size_t n_members = ctx.size();
    std::vector<std::pair<SubsetSum, Projector>> out;
    out.reserve(std::size_t{1} << n_members);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n_members); ++mask) {
        SubsetSum s{ctx.label(), {}};
        for (std::size_t k = 0; k < n_members; ++k)
            if (mask & (std::size_t{1} << k)) s.member_indices.insert(k);
        Projector p = sum_of_members(ctx, s.member_indices);
        out.emplace_back(std::move(s), std::move(p));
    }
    return out;
}

Projector projector_meet_in_context(const MaximalContext& ctx, const SubsetSum& s,
                                    const SubsetSum& t) {
    require_selector(ctx, s);
    require_selector(ctx, t);
    if (s.context_label != t.context_label)
        throw SelectorError("selector: the two selectors name different contexts");
    std::set<std::size_t> common;
    for (const std::size_t k : s.member_indices)
        if (t.member_indices.count(k)) common.insert(k);
    return sum_of_members(ctx, common);
}

} // namespace sublat
