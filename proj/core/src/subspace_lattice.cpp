#include "sublat/subspace_lattice.hpp"

#include <algorithm>

#include "sublat/errors.hpp"

namespace sublat {

SubspaceLattice SubspaceLattice::create(std::span<const Subspace> elements) {
    if (elements.empty())
        throw LatticeError(LatticeError::Kind::EmptyFamily, "lattice: family is empty");
    const std::size_t ambient = elements.front().ambient_dim();
    for (const auto& s : elements)
        if (s.ambient_dim() != ambient)
            throw DimensionError("lattice: elements have mixed ambient dimensions");

    std::vector<Subspace> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const Subspace& a, const Subspace& b) { return compare(a, b) < 0; });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    if (!sorted.front().is_zero() || !sorted.back().is_full())
        throw LatticeError(LatticeError::Kind::MissingBounds,
                           "lattice: family must contain {0} and the full space");

    SubspaceLattice l;
    l.ambient_dim_ = ambient;
    l.elements_ = std::move(sorted);

    // The sort is total, so membership lookups below can binary-search.
    std::vector<std::size_t> comp;
    comp.reserve(l.elements_.size());
    bool closed_under_complement = true;
    for (const auto& s : l.elements_) {
        const auto idx = l.index_of(orthocomplement(s));
        if (!idx) {
            closed_under_complement = false;
            break;
        }
        comp.push_back(*idx);
    }
    if (closed_under_complement) l.complement_map_ = std::move(comp);
    return l;
}

std::optional<std::size_t> SubspaceLattice::index_of(const Subspace& s) const {
    const auto it = std::lower_bound(
        elements_.begin(), elements_.end(), s,
        [](const Subspace& a, const Subspace& b) { return compare(a, b) < 0; });
    if (it == elements_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t SubspaceLattice::complement_index(std::size_t k) const {
    if (complement_map_.empty())
        throw LatticeError(LatticeError::Kind::MissingComplementMap,
                           "lattice: family is not closed under orthocomplement");
    return complement_map_.at(k);
}

} // namespace sublat
