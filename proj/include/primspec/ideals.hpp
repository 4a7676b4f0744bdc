#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "primspec/bitset.hpp"
#include "primspec/ring.hpp"

namespace primspec {

/// Stable position of an ideal in its lattice (canonical order).
using IdealId = std::uint32_t;

inline constexpr std::size_t kDefaultMaxIdeals = 4096;

/// Smallest ideal containing `gens`: the sum of the principal ideals R*g.
BitSet ideal_generated_by(const FiniteRing& ring, std::span<const Element> gens);

/// {x : some power of x lies in `set`}, by power-cycle iteration.
BitSet radical_of(const FiniteRing& ring, const BitSet& set);

/// True when `set` contains zero and is closed under addition, negation and
/// multiplication by every ring element.
bool is_ideal(const FiniteRing& ring, const BitSet& set);

struct IdealInfo {
    BitSet members;
    std::vector<Element> generators;  // small generating set, used for display
    bool proper = false;
    bool prime = false;
    bool maximal = false;
    bool primary = false;
    IdealId radical = 0;
};

struct IdealStatus {
    bool is_prime = false;
    bool is_maximal = false;
    bool is_primary = false;
};

enum class IdealOp { sum, product, intersection };

/// Every ideal of a finite ring, deduplicated and ordered by cardinality then
/// lexicographic member list. Immutable once built.
class IdealLattice {
public:
    const FiniteRing& ring() const noexcept { return *ring_; }
    const std::shared_ptr<const FiniteRing>& ring_ptr() const noexcept { return ring_; }

    std::size_t size() const noexcept { return ideals_.size(); }
    const IdealInfo& operator[](IdealId id) const { return ideals_.at(id); }
    const std::vector<IdealInfo>& ideals() const noexcept { return ideals_; }

    std::optional<IdealId> find(const BitSet& members) const;
    /// Like find(), but throws std::logic_error when `members` is not an ideal of the lattice.
    IdealId id_of(const BitSet& members) const;

    IdealId zero_ideal() const noexcept { return 0; }
    IdealId unit_ideal() const noexcept { return static_cast<IdealId>(ideals_.size() - 1); }

    IdealId arithmetic(IdealOp op, IdealId a, IdealId b) const;
    IdealId sum(IdealId a, IdealId b) const { return arithmetic(IdealOp::sum, a, b); }
    IdealId product(IdealId a, IdealId b) const { return arithmetic(IdealOp::product, a, b); }
    IdealId intersection(IdealId a, IdealId b) const { return arithmetic(IdealOp::intersection, a, b); }

    IdealId radical(IdealId a) const { return (*this)[a].radical; }
    IdealId nilradical() const { return radical(zero_ideal()); }
    IdealStatus classify(IdealId a) const;

    /// The principal ideal R*r.
    IdealId principal(Element r) const { return principal_.at(r); }
    /// Id of the ideal generated by an arbitrary element set.
    IdealId generated(std::span<const Element> gens) const;

    /// Powers r, r^2, ... of an element up to the first repeat.
    const std::vector<Element>& orbit(Element r) const { return orbits_.at(r); }

    /// Display form, e.g. "(2)", "(x^2)", "(0)", "(1)".
    std::string render(IdealId a) const;

    std::vector<IdealId> maximal_ideals() const;
    std::vector<IdealId> prime_ideals() const;
    std::vector<IdealId> primary_ideals() const;

private:
    friend IdealLattice enumerate_ideals(std::shared_ptr<const FiniteRing>, std::size_t);
    IdealLattice() = default;

    std::shared_ptr<const FiniteRing> ring_;
    std::vector<IdealInfo> ideals_;
    std::unordered_map<BitSet, IdealId, BitSetHash> index_;
    std::vector<IdealId> principal_;
    std::vector<std::vector<Element>> orbits_;
};

/// All ideals as the fixpoint of principal ideals under pairwise sums, with
/// prime/maximal/primary flags and radicals. Throws CapExceeded when more than
/// `max_ideals` ideals appear.
IdealLattice enumerate_ideals(std::shared_ptr<const FiniteRing> ring, std::size_t max_ideals = kDefaultMaxIdeals);

}  // namespace primspec
