#include "primspec/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "primspec/errors.hpp"
#include "primspec/report.hpp"
#include "primspec/symbolic.hpp"
#include "primspec/theorems.hpp"

namespace primspec {

using nlohmann::ordered_json;

namespace {

struct GlobalOptions {
    bool json = false;
    bool timing = false;
    std::string out_path;
    std::size_t max_elements = kDefaultMaxElements;
    std::size_t max_ideals = kDefaultMaxIdeals;
    std::uint64_t seed = 0;
    std::size_t sample = 1000;
    std::string corpus = "default";

    AnalysisConfig config() const {
        AnalysisConfig c;
        c.max_elements = max_elements;
        c.max_ideals = max_ideals;
        c.seed = seed;
        c.sample = sample;
        return c;
    }
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string point_set(const Spectrum& sp, const BitSet& s) {
    if (s.empty()) return "∅";
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t pt) {
        out += (first ? "" : ", ") + sp.lattice().render(sp.point_ideal(pt));
        first = false;
    });
    return out + "}";
}

// --- ring subcommands ------------------------------------------------------

int cmd_info(const GlobalOptions& g, const std::string& spec, std::ostream& out) {
    const auto t0 = Clock::now();
    const auto a = analyze_ring(spec, g.config());
    const auto& c = a.classification;
    if (g.json) {
        ordered_json j;
        j["version"] = kToolVersion;
        j["spec"] = a.ring->label();
        j["elements"] = a.ring->size();
        j["ideal_count"] = a.lattice->size();
        j["prim_points"] = a.prim->point_count();
        j["spec_points"] = a.spec->point_count();
        j["galois_ring"] = a.ring->is_galois_ring();
        j["classification"] = classification_json(c);
        j["timing_ms"] = g.timing ? ordered_json(elapsed_ms(t0)) : ordered_json(nullptr);
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "ring: " << a.ring->label() << "\n"
        << "elements: " << a.ring->size() << "\n"
        << "ideals: " << a.lattice->size() << "\n"
        << "Prim(R) points: " << a.prim->point_count() << "\n"
        << "Spec(R) points: " << a.spec->point_count() << "\n"
        << "nilradical: " << a.lattice->render(a.lattice->nilradical()) << "\n"
        << "field: " << yes_no(c.is_field) << "\n"
        << "local: " << yes_no(c.is_local) << "\n"
        << "zero-dimensional: " << yes_no(c.is_zero_dimensional) << "\n"
        << "krull dimension: " << c.krull_dimension << "\n"
        << "P-ring: " << yes_no(c.is_p_ring) << "\n"
        << "W-ring: " << (c.is_w_ring ? yes_no(*c.is_w_ring) : "unknown") << "\n"
        << "Galois ring: " << yes_no(a.ring->is_galois_ring()) << "\n";
    if (g.timing) out << "time: " << std::fixed << std::setprecision(2) << elapsed_ms(t0) << " ms\n";
    return kExitOk;
}

int cmd_ideals(const GlobalOptions& g, const std::string& spec, std::ostream& out) {
    const auto a = analyze_ring(spec, g.config());
    const auto& lat = *a.lattice;
    if (g.json) {
        ordered_json j;
        j["spec"] = a.ring->label();
        j["ideals"] = ideals_json(lat);
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    std::size_t w = 5;
    for (IdealId i = 0; i < lat.size(); ++i) w = std::max(w, lat.render(i).size() + 2);
    out << std::left << std::setw(5) << "id" << std::setw(static_cast<int>(w)) << "ideal" << std::setw(6) << "size"
        << std::setw(7) << "prime" << std::setw(9) << "maximal" << std::setw(9) << "primary"
        << "radical\n";
    for (IdealId i = 0; i < lat.size(); ++i) {
        const auto& info = lat[i];
        out << std::setw(5) << i << std::setw(static_cast<int>(w)) << lat.render(i) << std::setw(6)
            << info.members.count() << std::setw(7) << (info.prime ? "yes" : "-") << std::setw(9)
            << (info.maximal ? "yes" : "-") << std::setw(9) << (info.primary ? "yes" : "-")
            << lat.render(info.radical) << "\n";
    }
    return kExitOk;
}

int cmd_space(const GlobalOptions& g, const std::string& spec, SpectrumKind kind, std::ostream& out) {
    const auto a = analyze_ring(spec, g.config());
    const Spectrum& sp = kind == SpectrumKind::primary ? *a.prim : *a.spec;
    if (g.json) {
        ordered_json j;
        j["spec"] = a.ring->label();
        j[kind == SpectrumKind::primary ? "prim" : "prime_spec"] = spectrum_json(sp);
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    const auto& lat = sp.lattice();
    const char* name = kind == SpectrumKind::primary ? "Prim" : "Spec";
    const char* var = kind == SpectrumKind::primary ? "V_rad" : "V";
    out << name << "(" << a.ring->label() << "): " << sp.point_count() << " points\n";
    for (std::size_t pt = 0; pt < sp.point_count(); ++pt) {
        const auto id = sp.point_ideal(pt);
        out << "  " << lat.render(id);
        if (kind == SpectrumKind::primary) out << "  radical " << lat.render(lat.radical(id));
        out << "\n";
    }
    out << "closed sets: " << sp.closed_family().size() << "\n";
    for (const auto& c : sp.closed_family()) {
        out << "  " << point_set(sp, c.points) << " = ";
        for (std::size_t i = 0; i < c.generators.size(); ++i)
            out << (i ? ", " : "") << var << lat.render(c.generators[i]);
        out << "\n";
    }
    const auto sep = separation_axioms(sp.topology());
    out << "T0: " << yes_no(sep.t0) << "  T1: " << yes_no(sep.t1) << "  T2: " << yes_no(sep.t2)
        << "  irreducible: " << yes_no(is_irreducible(sp.topology()).irreducible)
        << "  sober: " << yes_no(is_sober(sp.topology())) << "\n";
    return kExitOk;
}

}  // namespace

CheckOutcome evaluate_property(const std::string& property, const RingAnalysis& a) {
    const auto& prim = *a.prim;
    const auto& topo = prim.topology();
    const auto& c = a.classification;
    CheckOutcome o;
    if (property == "t0" || property == "t1" || property == "t2") {
        const auto sep = separation_axioms(topo);
        o.label = property == "t0" ? "T0" : property == "t1" ? "T1" : "T2";
        o.value = property == "t0" ? sep.t0 : property == "t1" ? sep.t1 : sep.t2;
        if (!*o.value && sep.witness)
            o.witness = "points " + prim.lattice().render(prim.point_ideal(sep.witness->first)) + ", " +
                        prim.lattice().render(prim.point_ideal(sep.witness->second));
    } else if (property == "irreducible") {
        o.label = "irreducible";
        const auto r = is_irreducible(topo);
        o.value = r.irreducible;
        if (r.witness) o.witness = point_set(prim, r.witness->first) + " ∪ " + point_set(prim, r.witness->second);
    } else if (property == "sober") {
        o.label = "sober";
        o.value = is_sober(topo);
    } else if (property == "spectral") {
        o.label = "spectral";
        const auto opens = prim.basic_opens();
        o.value = is_spectral(topo, &opens);
    } else if (property == "supercompact") {
        o.label = "supercompact";
        const auto r = is_supercompact(topo);
        o.value = r.supercompact;
        if (!r.supercompact) {
            for (const auto& u : r.cover) o.witness += (o.witness.empty() ? "cover " : " ∪ ") + point_set(prim, u);
        }
    } else if (property == "local") {
        o.label = "local";
        o.value = c.is_local;
    } else if (property == "field") {
        o.label = "field";
        o.value = c.is_field;
    } else if (property == "p-ring") {
        o.label = "P-ring";
        o.value = c.is_p_ring;
    } else if (property == "w-ring") {
        o.label = "W-ring";
        const auto r = is_w_ring(*a.lattice);
        o.value = r.is_w_ring;
        if (r.ambiguous_ideal) {
            o.witness = a.lattice->render(*r.ambiguous_ideal) + " has " +
                        (r.representations.size() > 1 ? "several" : "no") + " irredundant primary representations";
        }
    } else if (property == "zero-dimensional") {
        o.label = "zero-dimensional";
        o.value = c.is_zero_dimensional;
    } else if (property == "star") {
        o.label = "star";
        const auto r = star_condition(prim);
        o.value = r.holds;
        if (!r.holds) {
            const auto& ring = a.lattice->ring();
            o.witness = "X_" + ring.name(*r.r) + " covered by";
            for (std::size_t i = 0; i < r.family.size(); ++i) o.witness += (i ? " ∪ X_" : " X_") + ring.name(r.family[i]);
        }
    } else if (property == "base") {
        o.label = "base";
        const auto r = prim.is_base();
        o.value = r.is_base;
        if (r.counterexample) o.witness = "open set " + point_set(prim, *r.counterexample);
    } else {
        throw ValidationError("unknown property '" + property + "'");
    }
    return o;
}

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = {"t0",    "t1",     "t2",     "irreducible", "sober",
                                                   "spectral", "supercompact", "local", "field", "p-ring",
                                                   "w-ring", "zero-dimensional", "star", "base"};
    return names;
}

namespace {

int cmd_check(const GlobalOptions& g, const std::string& property, const std::string& spec, std::ostream& out,
              std::ostream& err) {
    const auto a = analyze_ring(spec, g.config());
    const auto o = evaluate_property(property, a);
    if (g.json) {
        ordered_json j;
        j["spec"] = a.ring->label();
        j["property"] = property;
        j["value"] = o.value ? ordered_json(*o.value) : ordered_json(nullptr);
        j["witness"] = o.witness.empty() ? ordered_json(nullptr) : ordered_json(o.witness);
        out << j.dump(2) << "\n";
    } else {
        out << o.label << ": " << (o.value ? yes_no(*o.value) : "unknown") << "\n";
        if (!o.witness.empty()) out << "witness: " << o.witness << "\n";
    }
    if (!o.value) {
        err << "error: " << o.label << " undecided: too many primary ideals for the exhaustive scan\n";
        return kExitCap;
    }
    return *o.value ? kExitOk : kExitFalse;
}

// --- verify-paper ----------------------------------------------------------

struct RingRun {
    std::string spec;
    TheoremReport report;
    std::string error;  // construction failure other than a cap
};

int cmd_verify(const GlobalOptions& g, const std::vector<std::string>& specs, std::ostream& out) {
    const auto t0 = Clock::now();
    std::vector<CorpusEntry> corpus;
    std::string corpus_name;
    if (!specs.empty()) {
        for (const auto& s : specs) {
            std::string text = s + "\n";
            auto parsed = parse_corpus(text);
            corpus.insert(corpus.end(), parsed.begin(), parsed.end());
        }
        corpus_name = "command line";
    } else if (g.corpus == "default") {
        corpus = default_corpus();
        corpus_name = "default";
    } else {
        corpus = load_corpus_file(g.corpus);
        corpus_name = g.corpus;
    }

    // Fan out over corpus entries; results land in fixed slots.
    std::vector<RingRun> runs(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
            AnalysisConfig cfg = g.config();
            if (corpus[i].max_elements) cfg.max_elements = *corpus[i].max_elements;
            if (corpus[i].max_ideals) cfg.max_ideals = *corpus[i].max_ideals;
            runs[i].spec = corpus[i].spec;
            try {
                runs[i].report = verify_theorems(corpus[i].spec, cfg);
            } catch (const std::exception& ex) {
                runs[i].error = ex.what();
            }
        }
    };
    const std::size_t threads =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), corpus.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::size_t pass = 0, fail = 0, na = 0, skipped = 0, errors = 0;
    for (const auto& r : runs) {
        if (!r.error.empty()) {
            ++errors;
            continue;
        }
        pass += r.report.count(TheoremStatus::pass);
        fail += r.report.count(TheoremStatus::fail);
        na += r.report.count(TheoremStatus::not_applicable);
        skipped += r.report.count(TheoremStatus::skipped);
    }
    const bool all_pass = fail == 0 && skipped == 0 && errors == 0;

    if (g.json) {
        ordered_json j;
        j["version"] = kToolVersion;
        j["seed"] = g.seed;
        j["corpus"] = corpus_name;
        ordered_json rings = ordered_json::array();
        for (const auto& r : runs) {
            ordered_json rj;
            rj["spec"] = r.spec;
            rj["error"] = r.error.empty() ? ordered_json(nullptr) : ordered_json(r.error);
            rj["pass"] = r.report.count(TheoremStatus::pass);
            rj["fail"] = r.report.count(TheoremStatus::fail);
            rj["not_applicable"] = r.report.count(TheoremStatus::not_applicable);
            rj["skipped"] = r.report.count(TheoremStatus::skipped);
            rj["theorems"] = theorems_json(r.report);
            rings.push_back(std::move(rj));
        }
        j["rings"] = std::move(rings);
        j["summary"] = {{"rings", runs.size()}, {"pass", pass},     {"fail", fail},
                        {"not_applicable", na}, {"skipped", skipped}, {"errors", errors},
                        {"all_pass", all_pass}};
        j["timing_ms"] = g.timing ? ordered_json(elapsed_ms(t0)) : ordered_json(nullptr);
        out << j.dump(2) << "\n";
        return all_pass ? kExitOk : kExitFalse;
    }

    std::size_t w = 6;
    for (const auto& r : runs) w = std::max(w, r.spec.size() + 2);
    out << std::left << std::setw(static_cast<int>(w)) << "ring" << std::right << std::setw(6) << "pass"
        << std::setw(6) << "fail" << std::setw(6) << "n/a" << std::setw(6) << "skip" << "\n";
    for (const auto& r : runs) {
        out << std::left << std::setw(static_cast<int>(w)) << r.spec << std::right;
        if (!r.error.empty()) {
            out << "  error: " << r.error << "\n";
            continue;
        }
        out << std::setw(6) << r.report.count(TheoremStatus::pass) << std::setw(6)
            << r.report.count(TheoremStatus::fail) << std::setw(6) << r.report.count(TheoremStatus::not_applicable)
            << std::setw(6) << r.report.count(TheoremStatus::skipped) << "\n";
    }
    for (const auto& r : runs)
        for (const auto& e : r.report.entries)
            if (e.status == TheoremStatus::fail)
                out << "FAIL " << r.spec << " " << e.id << (e.witness.empty() ? "" : ": " + e.witness) << "\n";
    out << "rings: " << runs.size() << ", pass: " << pass << ", fail: " << fail << ", not applicable: " << na
        << ", skipped: " << skipped << ", errors: " << errors << "\n";
    out << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    if (g.timing) out << "time: " << std::fixed << std::setprecision(1) << elapsed_ms(t0) << " ms\n";
    return all_pass ? kExitOk : kExitFalse;
}

int cmd_export(const GlobalOptions& g, const std::string& spec, const std::string& dot, std::ostream& out) {
    const auto t0 = Clock::now();
    const auto cfg = g.config();
    const auto a = analyze_ring(spec, cfg);
    if (!dot.empty()) {
        out << export_dot(a, dot == "lattice" ? DotGraph::ideal_lattice : DotGraph::specialization);
        return kExitOk;
    }
    const auto rep = verify_theorems(a, cfg);
    std::optional<double> timing;
    if (g.timing) timing = elapsed_ms(t0);
    out << report_json(a, rep, timing).dump(2) << "\n";
    return rep.count(TheoremStatus::fail) == 0 ? kExitOk : kExitFalse;
}

// --- symbolic Z ------------------------------------------------------------

std::int64_t parse_i64(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw ValidationError("expected an integer, got '" + s + "'");
    return v;
}

int emit_bool(const GlobalOptions& g, const std::string& key, bool v, ordered_json extra, std::ostream& out) {
    if (g.json) {
        extra[key] = v;
        out << extra.dump(2) << "\n";
    } else {
        out << yes_no(v) << "\n";
    }
    return v ? kExitOk : kExitFalse;
}

void emit_text_or_json(const GlobalOptions& g, const std::string& text, const ordered_json& j, std::ostream& out) {
    if (g.json)
        out << j.dump(2) << "\n";
    else
        out << text << "\n";
}

ordered_json variety_json(const z::ZVariety& v) {
    ordered_json j;
    j["all"] = v.all;
    j["families"] = std::vector<std::uint64_t>(v.families.begin(), v.families.end());
    j["includes_zero"] = v.includes_zero;
    j["render"] = v.render();
    return j;
}

struct ZArgs {
    std::string a, b;
    std::vector<std::string> list;
    bool no_zero = false;
};

int cmd_z(const GlobalOptions& g, const std::string& sub, const ZArgs& args, std::ostream& out) {
    if (sub == "vrad") {
        const auto n = parse_i64(args.a);
        const auto v = z::v_rad_z(n);
        auto j = variety_json(v);
        j["n"] = n;
        emit_text_or_json(g, v.render(), j, out);
    } else if (sub == "v") {
        const auto n = parse_i64(args.a);
        ordered_json j;
        j["n"] = n;
        j["render"] = z::render_v_z(n);
        if (n != 0) j["primes"] = z::v_z(n);
        emit_text_or_json(g, z::render_v_z(n), j, out);
    } else if (sub == "factor") {
        const auto n = parse_i64(args.a);
        const auto f = z::factorize(n);
        std::string text;
        ordered_json arr = ordered_json::array();
        for (const auto& [p, e] : f) {
            text += (text.empty() ? "" : " * ") + std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : "");
            arr.push_back({p, e});
        }
        emit_text_or_json(g, text.empty() ? "1" : text, ordered_json{{"n", n}, {"factors", arr}}, out);
    } else if (sub == "closure") {
        const auto q = z::parse_z_primary(args.a);
        const auto v = z::closure_z(q);
        auto j = variety_json(v);
        j["ideal"] = q.render();
        emit_text_or_json(g, v.render(), j, out);
    } else if (sub == "closure-equal") {
        const auto q1 = z::parse_z_primary(args.a), q2 = z::parse_z_primary(args.b);
        return emit_bool(g, "closure_equal", z::closure_equal_z(q1, q2),
                         {{"a", q1.render()}, {"b", q2.render()}, {"ideals_equal", q1 == q2}}, out);
    } else if (sub == "subcover") {
        const auto r = parse_i64(args.a);
        std::vector<std::int64_t> s;
        for (const auto& x : args.list) s.push_back(parse_i64(x));
        const auto cert = z::extract_finite_subcover_z(r, s);
        if (g.json) {
            ordered_json j;
            j["r"] = r;
            j["delta"] = cert.delta;
            j["exponent"] = cert.exponent;
            j["coefficients"] = cert.coefficients;
            j["power"] = cert.power;
            j["verified"] = cert.verified;
            out << j.dump(2) << "\n";
        } else {
            out << "delta: [";
            for (std::size_t i = 0; i < cert.delta.size(); ++i) out << (i ? ", " : "") << cert.delta[i];
            out << "]\n" << (r < 0 ? "(" + std::to_string(r) + ")" : std::to_string(r)) << "^" << cert.exponent << " = " << cert.power << " =";
            for (std::size_t i = 0; i < cert.delta.size(); ++i)
                out << (i ? " + " : " ") << "(" << cert.coefficients[i] << ")*" << cert.delta[i];
            out << "\nverified: " << yes_no(cert.verified) << "\n";
        }
    } else if (sub == "a2-witness") {
        const auto p = parse_i64(args.a);
        if (p < 2) throw ValidationError(args.a + " is not prime");
        const auto w = z::a2_failure_witness_z(static_cast<std::uint64_t>(p));
        ordered_json j{{"p", w.p},
                       {"family", w.family},
                       {"radical_of_intersection", w.radical_of_intersection},
                       {"intersection_of_radicals", w.intersection_of_radicals},
                       {"differ", w.differ}};
        emit_text_or_json(g,
                          "family " + w.family + ": √(∩) = " + w.radical_of_intersection + " ≠ " +
                              w.intersection_of_radicals + " = ∩√",
                          j, out);
    } else if (sub == "zxz-closure") {
        const auto q = z::parse_zxz_primary(args.a);
        const auto c = z::prim_zxz_closure(q, !args.no_zero);
        emit_text_or_json(g, c.render(), ordered_json{{"ideal", q.render()}, {"closure", c.render()}}, out);
    } else if (sub == "zxz-equal") {
        const auto q1 = z::parse_zxz_primary(args.a), q2 = z::parse_zxz_primary(args.b);
        return emit_bool(g, "closure_equal", z::closure_equal_zxz(q1, q2, !args.no_zero),
                         {{"a", q1.render()}, {"b", q2.render()}, {"ideals_equal", q1 == q2}}, out);
    }
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Primary and prime spectra of finite commutative rings", "primspec"};
    app.require_subcommand(1);
    GlobalOptions g;
    auto add_globals = [&](CLI::App* a) {
        a->add_flag("--json", g.json, "JSON output");
        a->add_flag("--timing", g.timing, "Record wall-clock time in the output");
        a->add_option("--out", g.out_path, "Write output to a file");
        a->add_option("--max-elements", g.max_elements, "Element cap")->check(CLI::PositiveNumber);
        a->add_option("--max-ideals", g.max_ideals, "Ideal cap")->check(CLI::PositiveNumber);
        a->add_option("--seed", g.seed, "Seed for sampled checks");
        a->add_option("--sample", g.sample, "Random subsets for large closure checks")->check(CLI::PositiveNumber);
        a->add_option("--corpus", g.corpus, "Corpus for verify-paper: 'default' or a file path");
    };
    add_globals(&app);

    std::string spec, property, dot;
    std::vector<std::string> specs;
    std::function<int(std::ostream&)> action;

    auto with_spec = [&](const char* name, const char* desc) {
        auto* sc = app.add_subcommand(name, desc);
        sc->fallthrough();
        sc->add_option("spec", spec, "Ring spec, e.g. Zn(12)")->required();
        return sc;
    };
    with_spec("info", "Ring summary and classification")->callback([&] {
        action = [&](std::ostream& o) { return cmd_info(g, spec, o); };
    });
    with_spec("ideals", "List all ideals with their flags")->callback([&] {
        action = [&](std::ostream& o) { return cmd_ideals(g, spec, o); };
    });
    with_spec("prim", "Primary spectrum and its closed sets")->callback([&] {
        action = [&](std::ostream& o) { return cmd_space(g, spec, SpectrumKind::primary, o); };
    });
    with_spec("spec", "Prime spectrum and its closed sets")->callback([&] {
        action = [&](std::ostream& o) { return cmd_space(g, spec, SpectrumKind::prime, o); };
    });

    auto* check = app.add_subcommand("check", "Decide one property; exit 1 when false");
    check->fallthrough();
    check->add_option("property", property, "Property name")->required()->check(CLI::IsMember(property_names()));
    check->add_option("spec", spec, "Ring spec")->required();
    check->callback([&] { action = [&](std::ostream& o) { return cmd_check(g, property, spec, o, err); }; });

    auto* verify = app.add_subcommand("verify-paper", "Run every theorem check over a corpus");
    verify->fallthrough();
    verify->add_option("specs", specs, "Ring specs to check instead of the corpus");
    verify->callback([&] { action = [&](std::ostream& o) { return cmd_verify(g, specs, o); }; });

    auto* exp = with_spec("export", "Full JSON report, or DOT with --dot");
    exp->add_option("--dot", dot, "Graph to emit")->check(CLI::IsMember({"lattice", "specialization"}));
    exp->callback([&] { action = [&](std::ostream& o) { return cmd_export(g, spec, dot, o); }; });

    auto* zc = app.add_subcommand("z", "Symbolic computations in Z and Z×Z");
    zc->fallthrough();
    zc->require_subcommand(1);
    ZArgs zargs;
    std::string zsub;
    auto zsubcommand = [&](const char* name, const char* desc, int positional) {
        auto* sc = zc->add_subcommand(name, desc);
        sc->fallthrough();
        if (positional >= 1) sc->add_option("a", zargs.a)->required();
        if (positional >= 2) sc->add_option("b", zargs.b)->required();
        sc->callback([&, name] {
            zsub = name;
            action = [&](std::ostream& o) { return cmd_z(g, zsub, zargs, o); };
        });
        return sc;
    };
    zsubcommand("vrad", "V_rad(n) in Prim(Z)", 1);
    zsubcommand("v", "V(n) in Spec(Z)", 1);
    zsubcommand("factor", "Prime factorization of n", 1);
    zsubcommand("closure", "Closure of a point of Prim(Z), e.g. 2^3", 1);
    zsubcommand("closure-equal", "Whether two points of Prim(Z) have equal closures", 2);
    zsubcommand("subcover", "Finite subcover of X_r by X_s with a certificate", 1)
        ->add_option("s", zargs.list, "Covering elements")
        ->required();
    zsubcommand("a2-witness", "Radical-intersection failure for {(p^k)}", 1);
    zsubcommand("zxz-closure", "Closure of a point of Prim(Z×Z), e.g. (2^3)xZ", 1)
        ->add_flag("--no-zero", zargs.no_zero, "Exclude (0)×Z and Z×(0) from Prim(Z×Z)");
    zsubcommand("zxz-equal", "Whether two points of Prim(Z×Z) have equal closures", 2)
        ->add_flag("--no-zero", zargs.no_zero, "Exclude (0)×Z and Z×(0) from Prim(Z×Z)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ostringstream buf;
    int status = kExitOk;
    try {
        status = action(buf);
    } catch (const CapExceeded& e) {
        err << "error: cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const SpecSyntaxError& e) {
        err << "error: syntax: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotACover& e) {
        err << "error: not a cover: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!g.out_path.empty()) {
        std::ofstream f(g.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << g.out_path << "\n";
            return kExitUsage;
        }
        f << buf.str();
    } else {
        out << buf.str();
    }
    return status;
}

}  // namespace primspec
