#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "primspec/theorems.hpp"

namespace primspec {

inline constexpr const char* kToolVersion = "1.0.0";

/// One corpus line: a ring spec plus optional per-ring caps.
struct CorpusEntry {
    std::string spec;  // canonical render
    std::optional<std::size_t> max_elements, max_ideals;
};

/// One spec per line; `#` starts a comment; optional "; max_elements=N
/// max_ideals=N" suffix. Throws SpecSyntaxError / ValidationError naming the
/// line, and ValidationError on a duplicate ring.
std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);
/// Built-in corpus of fields, chain rings, Galois rings and products.
const std::vector<CorpusEntry>& default_corpus();

/// Full report document. `timing_ms` is emitted as null unless given.
nlohmann::ordered_json report_json(const RingAnalysis& analysis, const TheoremReport& theorems,
                                   std::optional<double> timing_ms = std::nullopt);

nlohmann::ordered_json ideals_json(const IdealLattice& lattice);
nlohmann::ordered_json spectrum_json(const Spectrum& spectrum);
nlohmann::ordered_json classification_json(const RingClassification& c);
nlohmann::ordered_json theorems_json(const TheoremReport& report);

enum class DotGraph { ideal_lattice, specialization };

/// Hasse diagram of ideal inclusion, or the specialization digraph of
/// Prim(R) with an edge Q -> Q' iff Q ⊆ √Q' (self-loops omitted).
std::string export_dot(const RingAnalysis& analysis, DotGraph graph);

}  // namespace primspec
