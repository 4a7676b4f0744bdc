#include "primspec/theorems.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "primspec/errors.hpp"

namespace primspec {

RingAnalysis analyze_ring(std::shared_ptr<const FiniteRing> ring, const AnalysisConfig& config) {
    RingAnalysis a;
    a.ring = std::move(ring);
    a.lattice = std::make_shared<const IdealLattice>(enumerate_ideals(a.ring, config.max_ideals));
    a.prim = std::make_shared<const Spectrum>(build_spectrum(a.lattice, SpectrumKind::primary));
    a.spec = std::make_shared<const Spectrum>(build_spectrum(a.lattice, SpectrumKind::prime));
    a.classification = classify_ring(*a.lattice, config.w_prim_limit);
    return a;
}

RingAnalysis analyze_ring(std::string_view spec, const AnalysisConfig& config) {
    return analyze_ring(make_ring(spec, config.max_elements), config);
}

const char* to_string(TheoremStatus s) {
    switch (s) {
        case TheoremStatus::pass:
            return "pass";
        case TheoremStatus::fail:
            return "fail";
        case TheoremStatus::not_applicable:
            return "not_applicable";
        case TheoremStatus::skipped:
            return "skipped";
    }
    return "?";
}

std::size_t TheoremReport::count(TheoremStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const TheoremEntry& e) { return e.status == s; }));
}

const TheoremEntry* TheoremReport::find(std::string_view id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

const std::vector<std::pair<std::string, std::string>>& theorem_catalog() {
    static const std::vector<std::pair<std::string, std::string>> catalog = {
        {"vrad_generated_ideal", "V_rad(S) = V_rad((S)) for element sets S"},
        {"vrad_antitone", "I ⊆ J implies V_rad(J) ⊆ V_rad(I)"},
        {"vrad_radical_invariant", "V_rad(I) = V_rad(√I)"},
        {"vrad_of_zero_and_unit", "V_rad(0) = Prim(R) and V_rad(1) = ∅"},
        {"vrad_intersection_product_union", "V_rad(I ∩ J) = V_rad(IJ) = V_rad(I) ∪ V_rad(J)"},
        {"vrad_sum_intersection", "V_rad(I + J) = V_rad(I) ∩ V_rad(J), V_rad(S ∪ T) = V_rad(S) ∩ V_rad(T)"},
        {"closed_set_axioms", "{V_rad(I)} satisfies the closed-set axioms on Prim(R)"},
        {"basic_opens_form_base", "{X_r} is a base; X_0 = ∅ and X_u = Prim(R) for units u"},
        {"basic_open_radical_equality", "X_r = X_s iff √(rR) = √(sR)"},
        {"basic_open_product", "X_rs = X_r ∩ X_s"},
        {"basic_open_empty_iff_nilpotent", "X_r = ∅ iff r is nilpotent"},
        {"basic_open_quasi_compact", "covers of X_r by basic opens have finite subcovers with r^n ∈ (s_j)"},
        {"prim_quasi_compact", "Prim(R) is quasi-compact"},
        {"star_condition_two_primes", "covering condition (*) iff at most two nonzero primes"},
        {"a2_radical_form_agree", "A2 iff √(∩Γ) = ∩√I over subfamilies Γ"},
        {"zero_dimensional_iff_a2", "R zero-dimensional iff A2 holds for all ideals iff for all primary ideals"},
        {"closure_equals_vrad_xi", "Cl(Y) = V_rad(ξ(Y)) for zero-dimensional R"},
        {"point_closure_is_vrad", "Cl({Q}) = V_rad(Q); Q' ∈ Cl({Q}) iff Q ⊆ √Q'"},
        {"t0_iff_vrad_injective", "Prim(R) is T0 iff V_rad(Q) = V_rad(Q') forces Q = Q'"},
        {"p_ring_iff_t0", "R is a P-ring iff Prim(R) is T0"},
        {"p_ring_iff_t2", "R is a P-ring iff Prim(R) is T2"},
        {"separation_axioms_equivalent", "P-ring iff T2 iff T1 iff T0"},
        {"point_varieties_irreducible", "V_rad(Q) is an irreducible closed set for Q ∈ Prim(R)"},
        {"irreducible_iff_nilradical_primary", "Prim(R) irreducible iff N(R) is primary"},
        {"w_ring_t0_iff_sober", "for W-rings: Prim(R) T0 iff sober"},
        {"w_ring_irreducible_closed_are_point_varieties", "for W-rings: irreducible closed sets are V_rad(Q)"},
        {"w_ring_spectral_iff_t0", "for W-rings: Prim(R) spectral iff T0"},
        {"local_iff_supercompact", "R local iff Prim(R) supercompact"},
    };
    return catalog;
}

namespace {

class Verifier {
public:
    Verifier(const RingAnalysis& a, const AnalysisConfig& cfg)
        : a_(a), cfg_(cfg), ring_(*a.ring), lat_(*a.lattice), prim_(*a.prim), topo_(a.prim->topology()) {
        opens_ = prim_.basic_opens();
        sep_ = separation_axioms(topo_);
        nilpotent_.resize(ring_.size());
        for (Element r = 0; r < ring_.size(); ++r) {
            const auto& orbit = lat_.orbit(r);
            nilpotent_[r] = std::find(orbit.begin(), orbit.end(), ring_.zero()) != orbit.end();
        }
    }

    TheoremReport run() {
        TheoremReport rep;
        rep.spec = ring_.label();
        rep.seed = cfg_.seed;
        for (const auto& [id, anchor] : theorem_catalog()) {
            TheoremEntry e;
            e.id = id;
            e.anchor = anchor;
            dispatch(e);
            finish(e);
            rep.entries.push_back(std::move(e));
        }
        return rep;
    }

private:
    // --- helpers -----------------------------------------------------------

    static void fail(TheoremEntry& e, const std::string& w) {
        ++e.failures;
        if (e.witness.empty()) e.witness = w;
    }

    static void check(TheoremEntry& e, bool ok, const std::string& w = {}) {
        ++e.instances;
        if (!ok) fail(e, w);
    }

    template <class F>
    static void check_lazy(TheoremEntry& e, bool ok, F&& witness) {
        ++e.instances;
        if (!ok) fail(e, witness());
    }

    static void finish(TheoremEntry& e) {
        if (e.status == TheoremStatus::skipped || e.status == TheoremStatus::not_applicable) return;
        if (!e.applicable) {
            e.status = TheoremStatus::not_applicable;
            return;
        }
        bool ok = e.failures == 0;
        if (e.lhs && e.rhs) ok = ok && *e.lhs == *e.rhs;
        e.status = ok ? TheoremStatus::pass : TheoremStatus::fail;
    }

    std::string ideal(IdealId id) const { return lat_.render(id); }
    std::string point(std::size_t pt) const { return lat_.render(prim_.point_ideal(pt)); }
    std::string points(const BitSet& s) const {
        std::string out = "{";
        bool first = true;
        s.for_each([&](std::size_t pt) {
            out += (first ? "" : ", ") + point(pt);
            first = false;
        });
        return out + "}";
    }
    std::string elem(Element r) const { return ring_.name(r); }

    const BitSet& V(IdealId id) const { return prim_.variety(id); }

    bool is_unit(Element r) const { return lat_.principal(r) == lat_.unit_ideal(); }

    // Element pairs: all when the ring is small, seeded sample otherwise.
    static constexpr std::size_t kExhaustivePairLimit = 256;

    template <class F>
    void element_pairs(F&& f) const {
        const auto n = static_cast<Element>(ring_.size());
        if (n <= kExhaustivePairLimit) {
            for (Element r = 0; r < n; ++r)
                for (Element s = 0; s < n; ++s) f(r, s);
            return;
        }
        std::mt19937_64 rng(cfg_.seed);
        for (std::size_t i = 0; i < 4096; ++i) f(static_cast<Element>(rng() % n), static_cast<Element>(rng() % n));
    }

    // --- entries -------------------------------------------------------------

    void dispatch(TheoremEntry& e) {
        const std::string& id = e.id;
        if (id == "vrad_generated_ideal") return generated_ideal(e);
        if (id == "vrad_antitone") return antitone(e);
        if (id == "vrad_radical_invariant") return radical_invariant(e);
        if (id == "vrad_of_zero_and_unit") return zero_and_unit(e);
        if (id == "vrad_intersection_product_union") return intersection_product(e);
        if (id == "vrad_sum_intersection") return sum_intersection(e);
        if (id == "closed_set_axioms") return closed_axioms(e);
        if (id == "basic_opens_form_base") return base(e);
        if (id == "basic_open_radical_equality") return radical_equality(e);
        if (id == "basic_open_product") return open_product(e);
        if (id == "basic_open_empty_iff_nilpotent") return empty_iff_nilpotent(e);
        if (id == "basic_open_quasi_compact") return open_quasi_compact(e);
        if (id == "prim_quasi_compact") return prim_quasi_compact(e);
        if (id == "star_condition_two_primes") return star(e);
        if (id == "a2_radical_form_agree") return a2_agree(e);
        if (id == "zero_dimensional_iff_a2") return zero_dim_a2(e);
        if (id == "closure_equals_vrad_xi") return closure_xi(e);
        if (id == "point_closure_is_vrad") return point_closure(e);
        if (id == "t0_iff_vrad_injective") return t0_injective(e);
        if (id == "p_ring_iff_t0") return p_ring_t0(e);
        if (id == "p_ring_iff_t2") return p_ring_t2(e);
        if (id == "separation_axioms_equivalent") return separation_equivalent(e);
        if (id == "point_varieties_irreducible") return point_varieties(e);
        if (id == "irreducible_iff_nilradical_primary") return irreducible_nil(e);
        if (id == "w_ring_t0_iff_sober") return w_sober(e);
        if (id == "w_ring_irreducible_closed_are_point_varieties") return w_irreducible_closed(e);
        if (id == "w_ring_spectral_iff_t0") return w_spectral(e);
        if (id == "local_iff_supercompact") return local_supercompact(e);
        throw std::logic_error("unknown theorem id " + id);
    }

    void generated_ideal(TheoremEntry& e) {
        for (Element r = 0; r < ring_.size(); ++r) {
            const Element s[] = {r};
            check_lazy(e, prim_.variety_of_elements(s) == V(lat_.principal(r)),
                       [&] { return "V_rad({" + elem(r) + "}) differs from V_rad of its ideal"; });
        }
        element_pairs([&](Element r, Element s) {
            const Element pair[] = {r, s};
            check_lazy(e, prim_.variety_of_elements(pair) == V(lat_.generated(pair)),
                       [&] { return "V_rad({" + elem(r) + ", " + elem(s) + "}) differs from V_rad of its ideal"; });
        });
    }

    void antitone(TheoremEntry& e) {
        for (IdealId i = 0; i < lat_.size(); ++i)
            for (IdealId j = 0; j < lat_.size(); ++j) {
                if (!lat_[i].members.is_subset_of(lat_[j].members)) continue;
                check_lazy(e, V(j).is_subset_of(V(i)), [&] { return ideal(i) + " ⊆ " + ideal(j) + " but varieties not reversed"; });
            }
    }

    void radical_invariant(TheoremEntry& e) {
        for (IdealId i = 0; i < lat_.size(); ++i)
            check_lazy(e, V(i) == V(lat_.radical(i)), [&] { return "V_rad" + ideal(i) + " != V_rad of its radical"; });
    }

    void zero_and_unit(TheoremEntry& e) {
        check(e, V(lat_.zero_ideal()) == prim_.all_points(), "V_rad(0) is not all of Prim(R)");
        check(e, V(lat_.unit_ideal()).empty(), "V_rad(1) is not empty");
    }

    void intersection_product(TheoremEntry& e) {
        for (IdealId i = 0; i < lat_.size(); ++i)
            for (IdealId j = 0; j < lat_.size(); ++j) {
                const BitSet un = V(i) | V(j);
                check_lazy(e, V(lat_.intersection(i, j)) == un && V(lat_.product(i, j)) == un,
                           [&] { return "I=" + ideal(i) + ", J=" + ideal(j); });
            }
    }

    void sum_intersection(TheoremEntry& e) {
        for (IdealId i = 0; i < lat_.size(); ++i)
            for (IdealId j = 0; j < lat_.size(); ++j)
                check_lazy(e, V(lat_.sum(i, j)) == (V(i) & V(j)), [&] { return "I=" + ideal(i) + ", J=" + ideal(j); });
        element_pairs([&](Element r, Element s) {
            const Element a[] = {r}, b[] = {s}, ab[] = {r, s};
            check_lazy(e, prim_.variety_of_elements(ab) == (prim_.variety_of_elements(a) & prim_.variety_of_elements(b)),
                       [&] { return "S={" + elem(r) + "}, T={" + elem(s) + "}"; });
        });
    }

    void closed_axioms(TheoremEntry& e) {
        std::vector<BitSet> fam;
        for (const auto& c : prim_.closed_family()) fam.push_back(c.points);
        const auto v = closed_family_violation(prim_.point_count(), fam);
        check(e, v.empty(), v);
    }

    void base(TheoremEntry& e) {
        const auto b = prim_.is_base();
        check_lazy(e, b.is_base, [&] { return "open set " + points(*b.counterexample) + " is not a union of basic opens"; });
        check(e, opens_[ring_.zero()].empty(), "X_0 is not empty");
        check(e, opens_[ring_.one()] == prim_.all_points(), "X_1 is not Prim(R)");
        for (Element u = 0; u < ring_.size(); ++u)
            if (is_unit(u)) check_lazy(e, opens_[u] == prim_.all_points(), [&] { return "X_" + elem(u) + " for a unit"; });
    }

    void radical_equality(TheoremEntry& e) {
        const auto n = static_cast<Element>(ring_.size());
        std::vector<IdealId> rad(n);
        for (Element r = 0; r < n; ++r) rad[r] = lat_.radical(lat_.principal(r));
        for (Element r = 0; r < n; ++r)
            for (Element s = 0; s < n; ++s)
                check_lazy(e, (opens_[r] == opens_[s]) == (rad[r] == rad[s]),
                           [&] { return "r=" + elem(r) + ", s=" + elem(s); });
    }

    void open_product(TheoremEntry& e) {
        const auto n = static_cast<Element>(ring_.size());
        for (Element r = 0; r < n; ++r)
            for (Element s = 0; s < n; ++s)
                check_lazy(e, opens_[ring_.mul(r, s)] == (opens_[r] & opens_[s]),
                           [&] { return "r=" + elem(r) + ", s=" + elem(s); });
    }

    void empty_iff_nilpotent(TheoremEntry& e) {
        for (Element r = 0; r < ring_.size(); ++r)
            check_lazy(e, opens_[r].empty() == nilpotent_[r], [&] { return "r=" + elem(r); });
    }

    void open_quasi_compact(TheoremEntry& e) {
        for (Element r = 0; r < ring_.size(); ++r) {
            const BitSet& xr = opens_[r];
            if (xr.empty()) continue;
            // Prefer a cover that avoids X_r itself, so the extraction is not trivial.
            std::vector<Element> members;
            BitSet un = prim_.empty_set();
            for (Element s = 0; s < ring_.size(); ++s) {
                if (opens_[s].is_subset_of(xr) && opens_[s] != xr) {
                    members.push_back(s);
                    un |= opens_[s];
                }
            }
            if (un != xr) members.push_back(r);
            std::vector<BitSet> cover;
            for (auto s : members) cover.push_back(opens_[s]);

            auto sc = is_quasi_compact(topo_, xr, cover);
            BitSet got = prim_.empty_set();
            std::vector<Element> delta;
            for (auto i : sc.subcover) {
                got |= cover[i];
                delta.push_back(members[i]);
            }
            check_lazy(e, xr.is_subset_of(got), [&] { return "subcover misses part of X_" + elem(r); });
            // Some power of r lies in the ideal generated by the chosen s_j.
            const IdealId j = lat_.generated(delta);
            const auto& orbit = lat_.orbit(r);
            const bool reaches = std::any_of(orbit.begin(), orbit.end(),
                                             [&](Element p) { return lat_[j].members.test(p); });
            check_lazy(e, reaches, [&] { return "no power of " + elem(r) + " lies in " + ideal(j); });
        }
    }

    void prim_quasi_compact(TheoremEntry& e) {
        std::vector<BitSet> nonempty;
        for (const auto& u : topo_.open_sets())
            if (!u.empty()) nonempty.push_back(u);
        for (const auto* fam : {&nonempty, &opens_}) {
            auto sc = is_quasi_compact(topo_, prim_.all_points(), *fam);
            BitSet got = prim_.empty_set();
            for (auto i : sc.subcover) got |= (*fam)[i];
            check(e, got == prim_.all_points(), "extracted subcover does not cover Prim(R)");
        }
    }

    void star(TheoremEntry& e) {
        std::size_t nonzero_primes = 0;
        bool hypothesis = true;
        for (auto p : lat_.prime_ideals()) {
            if (p == lat_.zero_ideal()) continue;
            ++nonzero_primes;
            if (!lat_[p].maximal) hypothesis = false;
        }
        e.applicable = hypothesis;
        const auto res = star_condition(prim_);
        e.lhs = res.holds;
        e.rhs = nonzero_primes <= 2;
        ++e.instances;
        auto describe = [&](const StarResult& s) {
            std::string w = "X_" + elem(*s.r) + " covered by";
            for (std::size_t i = 0; i < s.family.size(); ++i) w += (i ? " ∪ X_" : " X_") + elem(s.family[i]);
            return w;
        };
        if (!res.holds) e.witness = describe(res);
        const auto literal = star_condition(prim_, StarScope::all_nonzero);
        if (literal.holds != res.holds)
            e.note = "including units r: " + describe(literal) + "; nonzero primes: " + std::to_string(nonzero_primes);
        else
            e.note = "nonzero primes: " + std::to_string(nonzero_primes);
    }

    std::vector<std::vector<IdealId>> a2_families() const {
        std::vector<std::vector<IdealId>> fams;
        std::vector<IdealId> all(lat_.size());
        for (IdealId i = 0; i < lat_.size(); ++i) all[i] = i;
        fams.push_back(all);
        fams.push_back(lat_.primary_ideals());
        std::mt19937_64 rng(cfg_.seed ^ 0xa2a2a2a2ULL);
        for (int t = 0; t < 20; ++t) {
            std::vector<IdealId> f;
            for (auto id : all)
                if (rng() & 1) f.push_back(id);
            if (f.empty()) f.push_back(all[rng() % all.size()]);
            fams.push_back(std::move(f));
        }
        return fams;
    }

    std::pair<bool, bool> a2_both(const std::vector<IdealId>& fam) const {
        const auto o = a_conditions(lat_, fam, A2Mode::original, cfg_.a2_subset_cap, cfg_.a2_random_families, cfg_.seed);
        const auto r =
            a_conditions(lat_, fam, A2Mode::radical_form, cfg_.a2_subset_cap, cfg_.a2_random_families, cfg_.seed);
        return {o.a2, r.a2};
    }

    void a2_agree(TheoremEntry& e) {
        const auto fams = a2_families();
        for (std::size_t i = 0; i < fams.size(); ++i) {
            const auto [o, r] = a2_both(fams[i]);
            if (i == 0) {
                e.lhs = o;
                e.rhs = r;
            }
            check_lazy(e, o == r, [&] { return "family #" + std::to_string(i) + ": original and radical forms differ"; });
        }
    }

    void zero_dim_a2(TheoremEntry& e) {
        std::vector<IdealId> all(lat_.size());
        for (IdealId i = 0; i < lat_.size(); ++i) all[i] = i;
        const auto [ao, ar] = a2_both(all);
        const auto [po, pr] = a2_both(lat_.primary_ideals());
        check(e, ao == ar, "A2 modes disagree on the family of all ideals");
        check(e, po == pr, "A2 modes disagree on the family of primary ideals");
        e.lhs = a_.classification.is_zero_dimensional;
        e.rhs = ao && ar && po && pr;
        check(e, (ao && ar) == (po && pr), "A2 for all ideals and for primary ideals differ");
    }

    void closure_xi(TheoremEntry& e) {
        e.applicable = a_.classification.is_zero_dimensional;
        if (!e.applicable) return;
        const std::size_t np = prim_.point_count();
        auto test = [&](const BitSet& y) {
            check_lazy(e, prim_.closure(y) == prim_.variety_of_xi(y), [&] { return "Y=" + points(y); });
        };
        if (np <= cfg_.closure_exhaustive_limit) {
            for (std::size_t mask = 0; mask < (std::size_t{1} << np); ++mask) {
                BitSet y(np);
                for (std::size_t b = 0; b < np; ++b)
                    if (mask >> b & 1) y.set(b);
                test(y);
            }
        } else {
            std::mt19937_64 rng(cfg_.seed);
            for (std::size_t t = 0; t < cfg_.sample; ++t) {
                BitSet y(np);
                for (std::size_t b = 0; b < np; ++b)
                    if (rng() & 1) y.set(b);
                test(y);
            }
        }
    }

    void point_closure(TheoremEntry& e) {
        const std::size_t np = prim_.point_count();
        for (std::size_t q = 0; q < np; ++q) {
            const BitSet cl = topo_.point_closure(q);
            check_lazy(e, cl == V(prim_.point_ideal(q)), [&] { return "Cl({" + point(q) + "}) != V_rad" + point(q); });
            const auto& qm = lat_[prim_.point_ideal(q)].members;
            for (std::size_t q2 = 0; q2 < np; ++q2) {
                const auto& rad2 = lat_[lat_.radical(prim_.point_ideal(q2))].members;
                check_lazy(e, cl.test(q2) == qm.is_subset_of(rad2),
                           [&] { return "Q=" + point(q) + ", Q'=" + point(q2); });
            }
        }
    }

    void t0_injective(TheoremEntry& e) {
        bool injective = true;
        for (std::size_t a = 0; a < prim_.point_count() && injective; ++a)
            for (std::size_t b = a + 1; b < prim_.point_count(); ++b)
                if (V(prim_.point_ideal(a)) == V(prim_.point_ideal(b))) {
                    injective = false;
                    e.witness = "V_rad" + point(a) + " = V_rad" + point(b);
                    break;
                }
        e.lhs = sep_.t0;
        e.rhs = injective;
        ++e.instances;
    }

    void p_ring_t0(TheoremEntry& e) {
        e.lhs = a_.classification.is_p_ring;
        e.rhs = sep_.t0;
        ++e.instances;
    }

    void p_ring_t2(TheoremEntry& e) {
        e.lhs = a_.classification.is_p_ring;
        e.rhs = sep_.t2;
        ++e.instances;
    }

    void separation_equivalent(TheoremEntry& e) {
        const bool p = a_.classification.is_p_ring;
        e.lhs = p;
        e.rhs = sep_.t1;
        std::ostringstream w;
        w << "P-ring=" << p << " T0=" << sep_.t0 << " T1=" << sep_.t1 << " T2=" << sep_.t2;
        check(e, p == sep_.t0 && p == sep_.t1 && p == sep_.t2, w.str());
        if (sep_.witness) e.note = "separation witness: " + point(sep_.witness->first) + ", " + point(sep_.witness->second);
    }

    void point_varieties(TheoremEntry& e) {
        for (std::size_t q = 0; q < prim_.point_count(); ++q) {
            const BitSet& v = V(prim_.point_ideal(q));
            check_lazy(e, topo_.is_closed(v) && is_irreducible(topo_, v).irreducible,
                       [&] { return "V_rad" + point(q) + " = " + points(v); });
        }
    }

    void irreducible_nil(TheoremEntry& e) {
        const auto irr = is_irreducible(topo_);
        e.lhs = irr.irreducible;
        e.rhs = lat_[lat_.nilradical()].primary;
        check(e, irr.irreducible == is_irreducible_by_opens(topo_), "closed-set and open-set irreducibility disagree");
        if (irr.witness) e.note = "Prim(R) = " + points(irr.witness->first) + " ∪ " + points(irr.witness->second);
    }

    bool w_applicable(TheoremEntry& e) {
        const auto& w = a_.classification.is_w_ring;
        if (!w) {
            e.status = TheoremStatus::skipped;
            e.applicable = false;
            e.note = "W-ring scan skipped: |Prim(R)| above the exhaustive limit";
            return false;
        }
        e.applicable = *w;
        return *w;
    }

    void w_sober(TheoremEntry& e) {
        if (!w_applicable(e)) return;
        e.lhs = sep_.t0;
        e.rhs = is_sober(topo_);
        ++e.instances;
    }

    void w_irreducible_closed(TheoremEntry& e) {
        if (!w_applicable(e)) return;
        for (const auto& g : irreducible_closed_with_generic_points(topo_)) {
            bool found = false;
            for (auto q : prim_.points())
                if (V(q) == g.closed_set) found = true;
            check_lazy(e, found, [&] { return "irreducible closed " + points(g.closed_set) + " is no V_rad(Q)"; });
        }
    }

    void w_spectral(TheoremEntry& e) {
        if (!w_applicable(e)) return;
        e.lhs = is_spectral(topo_, &opens_);
        e.rhs = sep_.t0;
        ++e.instances;
    }

    void local_supercompact(TheoremEntry& e) {
        const auto sc = is_supercompact(topo_);
        e.lhs = a_.classification.is_local;
        e.rhs = sc.supercompact;
        ++e.instances;
        if (!sc.supercompact) {
            std::string w = "proper open cover:";
            for (const auto& u : sc.cover) w += " " + points(u);
            e.note = w;
        }
    }

    const RingAnalysis& a_;
    const AnalysisConfig& cfg_;
    const FiniteRing& ring_;
    const IdealLattice& lat_;
    const Spectrum& prim_;
    const FiniteTopology& topo_;
    std::vector<BitSet> opens_;
    SeparationResult sep_;
    std::vector<bool> nilpotent_;
};

}  // namespace

TheoremReport verify_theorems(const RingAnalysis& analysis, const AnalysisConfig& config) {
    return Verifier(analysis, config).run();
}

TheoremReport verify_theorems(std::string_view spec, const AnalysisConfig& config) {
    try {
        return verify_theorems(analyze_ring(spec, config), config);
    } catch (const CapExceeded& ex) {
        TheoremReport rep;
        rep.spec = std::string(spec);
        rep.seed = config.seed;
        for (const auto& [id, anchor] : theorem_catalog()) {
            TheoremEntry e;
            e.id = id;
            e.anchor = anchor;
            e.status = TheoremStatus::skipped;
            e.applicable = false;
            e.note = ex.what();
            rep.entries.push_back(std::move(e));
        }
        return rep;
    }
}

}  // namespace primspec
