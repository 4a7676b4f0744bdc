#include "primspec/report.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "primspec/errors.hpp"

namespace primspec {

using nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_cap(const std::string& key, const std::string& value, std::size_t line) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != value.size() || value.empty() || v == 0)
        throw ValidationError("corpus line " + std::to_string(line) + ": bad value for " + key);
    return static_cast<std::size_t>(v);
}

ordered_json gens_json(const IdealLattice& lat, IdealId id) {
    ordered_json g = ordered_json::array();
    for (auto e : lat[id].generators) g.push_back(lat.ring().name(e));
    return g;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
    std::vector<CorpusEntry> out;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::string body = trim(line);
        if (body.empty()) continue;

        CorpusEntry entry;
        std::string caps;
        if (auto semi = body.find(';'); semi != std::string::npos) {
            caps = body.substr(semi + 1);
            body = trim(body.substr(0, semi));
        }
        std::istringstream kv(caps);
        std::string tok;
        while (kv >> tok) {
            const auto eq = tok.find('=');
            const std::string key = tok.substr(0, eq);
            if (eq == std::string::npos)
                throw ValidationError("corpus line " + std::to_string(line_no) + ": expected key=value, got '" + tok + "'");
            const auto value = parse_cap(key, tok.substr(eq + 1), line_no);
            if (key == "max_elements")
                entry.max_elements = value;
            else if (key == "max_ideals")
                entry.max_ideals = value;
            else
                throw ValidationError("corpus line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        try {
            entry.spec = parse_ring_spec(body, std::numeric_limits<std::size_t>::max()).render();
        } catch (const SpecSyntaxError& ex) {
            throw SpecSyntaxError("corpus line " + std::to_string(line_no) + ": " + ex.what(), ex.position());
        } catch (const ValidationError& ex) {
            throw ValidationError("corpus line " + std::to_string(line_no) + ": " + ex.what());
        }
        if (!seen.insert(entry.spec).second)
            throw ValidationError("corpus line " + std::to_string(line_no) + ": duplicate ring " + entry.spec);
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read corpus file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_corpus(ss.str());
}

const std::vector<CorpusEntry>& default_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        std::string text;
        for (int n = 2; n <= 32; ++n) text += "Zn(" + std::to_string(n) + ")\n";
        text += "Zn(36)\nZn(64)\nZn(72)\n";
        for (const char* q : {"2", "3", "2^2", "5", "7", "2^3", "3^2"}) text += "GF(" + std::string(q) + ")\n";
        text +=
            "Quot(GF(2), x^2)\n"
            "Quot(GF(2), x^3)\n"
            "Quot(GF(3), x^2)\n"
            "Quot(Zn(4), x^2+x+1)\n"
            "Quot(Zn(8), x^2+x+1)\n"
            "Prod(Zn(2), Zn(3))\n"
            "Prod(Zn(4), Zn(9))\n"
            "Prod(GF(2), GF(2))\n";
        return parse_corpus(text);
    }();
    return corpus;
}

ordered_json ideals_json(const IdealLattice& lat) {
    ordered_json arr = ordered_json::array();
    for (IdealId id = 0; id < lat.size(); ++id) {
        const auto& info = lat[id];
        ordered_json j;
        j["id"] = id;
        j["gens"] = gens_json(lat, id);
        j["label"] = lat.render(id);
        j["size"] = info.members.count();
        j["proper"] = info.proper;
        j["prime"] = info.prime;
        j["maximal"] = info.maximal;
        j["primary"] = info.primary;
        j["radical_id"] = info.radical;
        arr.push_back(std::move(j));
    }
    return arr;
}

ordered_json spectrum_json(const Spectrum& sp) {
    const auto& lat = sp.lattice();
    const auto& topo = sp.topology();
    ordered_json j;
    ordered_json points = ordered_json::array();
    for (std::size_t pt = 0; pt < sp.point_count(); ++pt)
        points.push_back({{"point_id", pt}, {"ideal_id", sp.point_ideal(pt)}, {"label", lat.render(sp.point_ideal(pt))}});
    j["points"] = std::move(points);
    ordered_json closed = ordered_json::array();
    for (const auto& c : sp.closed_family()) {
        ordered_json cj;
        cj["ideal_ids"] = c.generators;
        cj["point_ids"] = c.points.members();
        closed.push_back(std::move(cj));
    }
    j["closed_sets"] = std::move(closed);
    const auto sep = separation_axioms(topo);
    ordered_json props;
    props["t0"] = sep.t0;
    props["t1"] = sep.t1;
    props["t2"] = sep.t2;
    props["irreducible"] = is_irreducible(topo).irreducible;
    props["sober"] = is_sober(topo);
    const auto opens = sp.basic_opens();
    props["spectral"] = is_spectral(topo, &opens);
    props["supercompact"] = is_supercompact(topo).supercompact;
    props["open_set_count"] = topo.open_sets().size();
    j["properties"] = std::move(props);
    return j;
}

ordered_json classification_json(const RingClassification& c) {
    ordered_json j;
    j["field"] = c.is_field;
    j["local"] = c.is_local;
    j["zero_dimensional"] = c.is_zero_dimensional;
    j["p_ring"] = c.is_p_ring;
    j["w_ring"] = c.is_w_ring ? ordered_json(*c.is_w_ring) : ordered_json(nullptr);
    j["krull_dimension"] = c.krull_dimension;
    j["maximal_ids"] = c.maximal_ideals;
    j["prime_ids"] = c.prime_ideals;
    j["primary_ids"] = c.primary_ideals;
    return j;
}

ordered_json theorems_json(const TheoremReport& rep) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : rep.entries) {
        ordered_json j;
        j["id"] = e.id;
        j["anchor"] = e.anchor;
        j["applicable"] = e.applicable;
        j["lhs"] = e.lhs ? ordered_json(*e.lhs) : ordered_json(nullptr);
        j["rhs"] = e.rhs ? ordered_json(*e.rhs) : ordered_json(nullptr);
        if (e.status == TheoremStatus::pass)
            j["pass"] = true;
        else if (e.status == TheoremStatus::fail)
            j["pass"] = false;
        else
            j["pass"] = nullptr;
        j["status"] = to_string(e.status);
        j["witness"] = e.witness.empty() ? ordered_json(nullptr) : ordered_json(e.witness);
        j["note"] = e.note.empty() ? ordered_json(nullptr) : ordered_json(e.note);
        j["instances"] = e.instances;
        j["failures"] = e.failures;
        arr.push_back(std::move(j));
    }
    return arr;
}

ordered_json report_json(const RingAnalysis& a, const TheoremReport& theorems, std::optional<double> timing_ms) {
    ordered_json j;
    j["version"] = kToolVersion;
    j["spec"] = a.ring->label();
    j["seed"] = theorems.seed;
    j["elements"] = a.ring->size();
    j["ideals"] = ideals_json(*a.lattice);
    j["prim"] = spectrum_json(*a.prim);
    j["prime_spec"] = spectrum_json(*a.spec);
    j["classification"] = classification_json(a.classification);
    j["theorems"] = theorems_json(theorems);
    j["timing_ms"] = timing_ms ? ordered_json(*timing_ms) : ordered_json(nullptr);
    return j;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string export_dot(const RingAnalysis& a, DotGraph graph) {
    const auto& lat = *a.lattice;
    std::ostringstream out;
    if (graph == DotGraph::ideal_lattice) {
        out << "digraph ideal_lattice {\n  rankdir=BT;\n";
        for (IdealId i = 0; i < lat.size(); ++i) out << "  i" << i << " [label=\"" << dot_escape(lat.render(i)) << "\"];\n";
        // Covering pairs of the inclusion order.
        for (IdealId i = 0; i < lat.size(); ++i) {
            for (IdealId j = 0; j < lat.size(); ++j) {
                const auto& a_m = lat[i].members;
                const auto& b_m = lat[j].members;
                if (i == j || !a_m.is_subset_of(b_m)) continue;
                bool covers = true;
                for (IdealId k = 0; k < lat.size() && covers; ++k) {
                    if (k == i || k == j) continue;
                    if (a_m.is_subset_of(lat[k].members) && lat[k].members.is_subset_of(b_m)) covers = false;
                }
                if (covers) out << "  i" << i << " -> i" << j << ";\n";
            }
        }
    } else {
        const auto& prim = *a.prim;
        out << "digraph specialization {\n";
        for (std::size_t q = 0; q < prim.point_count(); ++q)
            out << "  q" << q << " [label=\"" << dot_escape(lat.render(prim.point_ideal(q))) << "\"];\n";
        for (std::size_t q = 0; q < prim.point_count(); ++q) {
            const auto& qm = lat[prim.point_ideal(q)].members;
            for (std::size_t q2 = 0; q2 < prim.point_count(); ++q2) {
                if (q == q2) continue;
                if (qm.is_subset_of(lat[lat.radical(prim.point_ideal(q2))].members))
                    out << "  q" << q << " -> q" << q2 << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace primspec
