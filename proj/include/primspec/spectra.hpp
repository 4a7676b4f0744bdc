#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "primspec/bitset.hpp"
#include "primspec/ideals.hpp"
#include "primspec/topology.hpp"

namespace primspec {

enum class SpectrumKind { prime, primary };

/// A member of the deduplicated closed-set family, with every ideal whose
/// variety it is.
struct ClosedSet {
    BitSet points;
    std::vector<IdealId> generators;
};

/// Spec(R) or Prim(R) as an explicit finite topological space.
///
/// Points are the prime (resp. primary) ideals sorted by ideal id. The closed
/// sets are V(I) = {P : I ⊆ P} (resp. V_rad(I) = {Q : I ⊆ √Q}) over all ideals.
/// Point sets are bit sets over point positions.
class Spectrum {
public:
    SpectrumKind kind() const noexcept { return kind_; }
    const IdealLattice& lattice() const noexcept { return *lattice_; }
    const std::shared_ptr<const IdealLattice>& lattice_ptr() const noexcept { return lattice_; }

    std::size_t point_count() const noexcept { return points_.size(); }
    const std::vector<IdealId>& points() const noexcept { return points_; }
    IdealId point_ideal(std::size_t pt) const { return points_.at(pt); }
    std::optional<std::size_t> point_of(IdealId id) const;

    const std::vector<ClosedSet>& closed_family() const noexcept { return closed_; }
    /// Variety of an ideal: V(I) for Spec, V_rad(I) for Prim.
    const BitSet& variety(IdealId id) const { return closed_.at(variety_index_.at(id)).points; }
    std::size_t variety_index(IdealId id) const { return variety_index_.at(id); }

    /// {pt : S ⊆ √pt}, evaluated directly from the definition.
    BitSet variety_of_elements(std::span<const Element> s) const;
    /// Complement of the variety of {r}.
    BitSet basic_open(Element r) const;
    /// All basic opens, indexed by element.
    std::vector<BitSet> basic_opens() const;

    /// Intersection of the ideals at the given points; the unit ideal for Y = ∅.
    IdealId xi(const BitSet& y) const;
    /// Smallest member of the closed family containing y.
    BitSet closure(const BitSet& y) const;
    /// variety(xi(y)), exposed for comparison with closure().
    BitSet variety_of_xi(const BitSet& y) const { return variety(xi(y)); }

    const FiniteTopology& topology() const noexcept { return topology_; }
    BaseCheck is_base() const { return primspec::is_base(topology_, basic_opens()); }

    BitSet empty_set() const { return BitSet(points_.size()); }
    BitSet all_points() const { return BitSet::full(points_.size()); }

private:
    friend Spectrum build_spectrum(std::shared_ptr<const IdealLattice>, SpectrumKind);
    Spectrum() = default;

    SpectrumKind kind_ = SpectrumKind::primary;
    std::shared_ptr<const IdealLattice> lattice_;
    std::vector<IdealId> points_;
    std::vector<IdealId> radicals_;  // √ of each point (the point itself for Spec)
    std::vector<ClosedSet> closed_;
    std::vector<std::size_t> variety_index_;
    FiniteTopology topology_;
};

/// Throws AxiomViolation when the variety family fails the closed-set axioms.
Spectrum build_spectrum(std::shared_ptr<const IdealLattice> lattice, SpectrumKind kind);

}  // namespace primspec
