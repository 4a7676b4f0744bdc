#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primspec/bitset.hpp"

namespace primspec {

/// A finite topological space given by its closed sets. Opens are derived by
/// complementation on demand.
class FiniteTopology {
public:
    /// Deduplicates and canonically orders `closed`; throws AxiomViolation when
    /// the family misses the empty set or the whole space, or is not closed
    /// under pairwise union and intersection.
    static FiniteTopology from_closed_sets(std::size_t point_count, std::vector<BitSet> closed);

    std::size_t point_count() const noexcept { return points_; }
    const std::vector<BitSet>& closed_sets() const noexcept { return closed_; }
    std::vector<BitSet> open_sets() const;

    bool is_closed(const BitSet& s) const;
    bool is_open(const BitSet& s) const;
    /// Smallest closed superset.
    BitSet closure(const BitSet& s) const;
    BitSet point_closure(std::size_t x) const;
    BitSet empty_set() const { return BitSet(points_); }
    BitSet whole() const { return BitSet::full(points_); }

private:
    std::size_t points_ = 0;
    std::vector<BitSet> closed_;
};

/// Closed-set family axioms for a finite space. Empty string when satisfied,
/// otherwise a description of the first violation.
std::string closed_family_violation(std::size_t point_count, const std::vector<BitSet>& closed);

struct SeparationResult {
    bool t0 = false, t1 = false, t2 = false;
    /// Offending pair for the weakest axiom that fails.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

SeparationResult separation_axioms(const FiniteTopology& t);

struct IrreducibleResult {
    bool irreducible = false;
    /// Two proper relatively-closed subsets whose union is the subspace.
    std::optional<std::pair<BitSet, BitSet>> witness;
};

/// Irreducibility of `subset` (default: the whole space) as a subspace.
/// The empty set is never irreducible.
IrreducibleResult is_irreducible(const FiniteTopology& t, const std::optional<BitSet>& subset = std::nullopt);

/// Second characterization for the whole space: nonempty and any two nonempty
/// open sets meet.
bool is_irreducible_by_opens(const FiniteTopology& t);

struct GenericPoints {
    BitSet closed_set;
    std::vector<std::size_t> generic_points;  // x with Cl({x}) == closed_set
};

std::vector<GenericPoints> irreducible_closed_with_generic_points(const FiniteTopology& t);

bool is_sober(const FiniteTopology& t);

struct SubcoverResult {
    std::vector<std::size_t> subcover;  // indices into the covering family
};

/// Finite subcover of `subset` drawn from `cover` (greedy, then pruned to be
/// irredundant). Throws NotACover when the family does not cover the subset
/// and std::invalid_argument when a member is not open.
SubcoverResult is_quasi_compact(const FiniteTopology& t, const BitSet& subset, const std::vector<BitSet>& cover);

/// Quasi-compact, sober, and the quasi-compact opens are closed under finite
/// intersection and form a base. When `base` is given, that family must also
/// consist of quasi-compact opens closed under pairwise intersection and form
/// a base.
bool is_spectral(const FiniteTopology& t, const std::vector<BitSet>* base = nullptr);

struct BaseCheck {
    bool is_base = true;
    std::optional<BitSet> counterexample;  // an open set that is not a union of members
};

/// Every open set is the union of the family members it contains.
BaseCheck is_base(const FiniteTopology& t, const std::vector<BitSet>& family);

struct SupercompactResult {
    bool supercompact = false;
    std::vector<BitSet> cover;                  // proper opens covering X when not supercompact
    std::optional<std::size_t> uncovered_point;  // point in no proper open when supercompact
};

/// Decided by whether the proper open sets cover the space.
SupercompactResult is_supercompact(const FiniteTopology& t);

}  // namespace primspec
