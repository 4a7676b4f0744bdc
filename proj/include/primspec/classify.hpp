#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primspec/ideals.hpp"
#include "primspec/spectra.hpp"

namespace primspec {

inline constexpr std::size_t kWRingPrimLimit = 16;

struct WRingResult {
    /// nullopt when |Prim| exceeds the exhaustive-scan limit.
    std::optional<bool> is_w_ring;
    /// Proper ideal with zero or several irredundant primary representations.
    std::optional<IdealId> ambiguous_ideal;
    std::vector<std::vector<IdealId>> representations;  // of the ambiguous ideal
};

/// Unique irredundant representation of every proper ideal as an
/// intersection of primary ideals, by exhaustive scan over subsets of Prim.
WRingResult is_w_ring(const IdealLattice& lattice, std::size_t prim_limit = kWRingPrimLimit);

struct RingClassification {
    bool is_field = false;
    bool is_local = false;
    bool is_zero_dimensional = false;
    bool is_p_ring = false;
    std::optional<bool> is_w_ring;
    std::vector<IdealId> maximal_ideals, prime_ideals, primary_ideals;
    std::size_t krull_dimension = 0;
};

RingClassification classify_ring(const IdealLattice& lattice, std::size_t w_prim_limit = kWRingPrimLimit);

/// Which r the covering condition quantifies over. The nonunit scope skips
/// units r, for which X_r = Prim(R).
enum class StarScope { nonzero_nonunits, all_nonzero };

struct StarResult {
    bool holds = true;
    std::optional<Element> r;          // violating element
    std::vector<Element> family;       // s with X_s not containing X_r, jointly covering X_r
};

/// Covering condition on basic opens: whenever X_r is covered by basic opens
/// X_s (r, s nonzero), a single X_s already contains X_r. Complete check: for
/// each r, the union over all s with X_s ⊉ X_r is tested against X_r.
StarResult star_condition(const Spectrum& prim, StarScope scope = StarScope::nonzero_nonunits);

enum class A2Mode { original, radical_form };

struct AConditionResult {
    bool a1 = false;   // ∩ family = (0)
    bool a2 = false;
    std::size_t subfamilies_checked = 0;  // radical form only
    std::string witness;
};

/// A1 and A2 for a family of ideals. The radical form checks
/// √(∩Γ) = ∩√I over every subfamily Γ of size <= subset_cap plus
/// `random_families` seeded larger ones; families of at most
/// `exhaustive_limit` members are scanned completely.
AConditionResult a_conditions(const IdealLattice& lattice, const std::vector<IdealId>& family, A2Mode mode,
                              std::size_t subset_cap = 4, std::size_t random_families = 200,
                              std::uint64_t seed = 0, std::size_t exhaustive_limit = 12);

}  // namespace primspec
