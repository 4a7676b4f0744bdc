#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primspec/classify.hpp"
#include "primspec/ideals.hpp"
#include "primspec/ring.hpp"
#include "primspec/spectra.hpp"

namespace primspec {

struct AnalysisConfig {
    std::size_t max_elements = kDefaultMaxElements;
    std::size_t max_ideals = kDefaultMaxIdeals;
    std::uint64_t seed = 0;
    /// Random point subsets for the closure identity when Prim is too large
    /// for exhaustive enumeration.
    std::size_t sample = 1000;
    std::size_t closure_exhaustive_limit = 10;
    std::size_t a2_subset_cap = 4;
    std::size_t a2_random_families = 200;
    std::size_t w_prim_limit = kWRingPrimLimit;
};

/// Everything derived from one ring: lattice, both spectra, classification.
struct RingAnalysis {
    std::shared_ptr<const FiniteRing> ring;
    std::shared_ptr<const IdealLattice> lattice;
    std::shared_ptr<const Spectrum> prim;
    std::shared_ptr<const Spectrum> spec;
    RingClassification classification;
};

RingAnalysis analyze_ring(std::shared_ptr<const FiniteRing> ring, const AnalysisConfig& config = {});
RingAnalysis analyze_ring(std::string_view spec, const AnalysisConfig& config = {});

enum class TheoremStatus { pass, fail, not_applicable, skipped };

const char* to_string(TheoremStatus s);

struct TheoremEntry {
    std::string id;
    std::string anchor;  // the statement being checked
    TheoremStatus status = TheoremStatus::pass;
    bool applicable = true;
    /// Both sides of a biconditional; empty for universally quantified laws.
    std::optional<bool> lhs, rhs;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string witness;
    std::string note;
};

struct TheoremReport {
    std::string spec;
    std::uint64_t seed = 0;
    std::vector<TheoremEntry> entries;

    std::size_t count(TheoremStatus s) const;
    bool all_pass() const { return count(TheoremStatus::fail) == 0 && count(TheoremStatus::skipped) == 0; }
    const TheoremEntry* find(std::string_view id) const;
};

/// (id, statement) for every checked result, in the order they are reported.
const std::vector<std::pair<std::string, std::string>>& theorem_catalog();

TheoremReport verify_theorems(const RingAnalysis& analysis, const AnalysisConfig& config = {});
/// Builds the ring first; when a cap is exceeded every entry is reported as skipped.
TheoremReport verify_theorems(std::string_view spec, const AnalysisConfig& config = {});

}  // namespace primspec
