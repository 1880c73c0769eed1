#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sublat/subspace.hpp"

namespace sublat {

/// Finite family of subspaces of one ambient space, deduplicated and held in
/// a canonical order, with the zero subspace and the full space required as
/// bottom and top. The inclusion order is derived on demand via leq; nothing
/// else is precomputed, so the value stays small and cheap to copy.
///
/// When the family is closed under orthocomplement, the complement map is
/// attached automatically (it is always the true orthocomplement, never an
/// abstract complement).
class SubspaceLattice {
public:
    /// Deduplicates, sorts canonically, and validates bounds. Throws
    /// LatticeError(EmptyFamily) for an empty family, DimensionError on
    /// mixed ambient dimensions, LatticeError(MissingBounds) when {0} or
    /// the full space is absent.
    static SubspaceLattice create(std::span<const Subspace> elements);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return elements_.size(); }
    const Subspace& operator[](std::size_t k) const { return elements_[k]; }
    std::span<const Subspace> elements() const { return elements_; }

    /// Position of s in canonical order, or nullopt when absent.
    std::optional<std::size_t> index_of(const Subspace& s) const;
    bool contains(const Subspace& s) const { return index_of(s).has_value(); }

    std::size_t bottom_index() const { return 0; }
    std::size_t top_index() const { return elements_.size() - 1; }

    bool has_complement_map() const { return !complement_map_.empty(); }
    /// Index of the orthocomplement of element k; throws
    /// LatticeError(MissingComplementMap) when the family is not closed
    /// under orthocomplement.
    std::size_t complement_index(std::size_t k) const;

    friend bool operator==(const SubspaceLattice& a, const SubspaceLattice& b) {
        return a.elements_ == b.elements_;
    }
    friend bool operator!=(const SubspaceLattice& a, const SubspaceLattice& b) {
        return !(a == b);
    }

private:
    SubspaceLattice() = default;

    std::size_t ambient_dim_ = 0;
    std::vector<Subspace> elements_;
    std::vector<std::size_t> complement_map_;
};

} // namespace sublat
