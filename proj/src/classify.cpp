#include "primspec/classify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace primspec {

WRingResult is_w_ring(const IdealLattice& lattice, std::size_t prim_limit) {
    const auto prim = lattice.primary_ideals();
    const std::size_t k = prim.size();
    WRingResult res;
    if (k > prim_limit) return res;

    const std::size_t masks = std::size_t{1} << k;
    std::vector<IdealId> inter(masks);
    inter[0] = lattice.unit_ideal();
    for (std::size_t m = 1; m < masks; ++m) {
        const auto low = static_cast<std::size_t>(__builtin_ctzll(m));
        inter[m] = lattice.intersection(inter[m & (m - 1)], prim[low]);
    }

    std::vector<std::size_t> count(lattice.size(), 0);
    std::vector<std::vector<std::size_t>> reps(lattice.size());
    for (std::size_t m = 1; m < masks; ++m) {
        bool irredundant = true;
        for (std::size_t b = 0; b < k && irredundant; ++b)
            if ((m >> b & 1) && inter[m ^ (std::size_t{1} << b)] == inter[m]) irredundant = false;
        if (!irredundant) continue;
        ++count[inter[m]];
        if (reps[inter[m]].size() < 2) reps[inter[m]].push_back(m);
    }

    res.is_w_ring = true;
    for (IdealId id = 0; id < lattice.size(); ++id) {
        if (!lattice[id].proper || count[id] == 1) continue;
        res.is_w_ring = false;
        res.ambiguous_ideal = id;
        for (auto m : reps[id]) {
            std::vector<IdealId> r;
            for (std::size_t b = 0; b < k; ++b)
                if (m >> b & 1) r.push_back(prim[b]);
            res.representations.push_back(std::move(r));
        }
        break;
    }
    return res;
}

RingClassification classify_ring(const IdealLattice& lattice, std::size_t w_prim_limit) {
    RingClassification c;
    c.maximal_ideals = lattice.maximal_ideals();
    c.prime_ideals = lattice.prime_ideals();
    c.primary_ideals = lattice.primary_ideals();
    c.is_field = lattice.size() == 2;
    c.is_local = c.maximal_ideals.size() == 1;
    c.is_zero_dimensional = std::all_of(c.prime_ideals.begin(), c.prime_ideals.end(),
                                        [&](IdealId p) { return lattice[p].maximal; });
    c.is_p_ring = std::all_of(c.primary_ideals.begin(), c.primary_ideals.end(),
                              [&](IdealId q) { return lattice[q].maximal; });

    // Longest strict chain of primes; ids are ordered by cardinality.
    std::vector<std::size_t> chain(c.prime_ideals.size(), 0);
    for (std::size_t i = 0; i < c.prime_ideals.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const auto& a = lattice[c.prime_ideals[j]].members;
            const auto& b = lattice[c.prime_ideals[i]].members;
            if (a != b && a.is_subset_of(b)) chain[i] = std::max(chain[i], chain[j] + 1);
        }
        c.krull_dimension = std::max(c.krull_dimension, chain[i]);
    }
    c.is_w_ring = is_w_ring(lattice, w_prim_limit).is_w_ring;
    return c;
}

StarResult star_condition(const Spectrum& prim, StarScope scope) {
    const auto& lat = prim.lattice();
    const auto& ring = lat.ring();
    const auto opens = prim.basic_opens();
    StarResult res;
    for (Element r = 0; r < ring.size(); ++r) {
        if (r == ring.zero()) continue;
        if (scope == StarScope::nonzero_nonunits && lat.principal(r) == lat.unit_ideal()) continue;
        const BitSet& xr = opens[r];
        if (xr.empty()) continue;
        std::vector<Element> family;
        std::vector<BitSet> sets;
        BitSet un = prim.empty_set();
        for (Element s = 0; s < ring.size(); ++s) {
            if (s == ring.zero() || xr.is_subset_of(opens[s])) continue;
            family.push_back(s);
            sets.push_back(opens[s]);
            un |= opens[s];
        }
        if (!xr.is_subset_of(un)) continue;
        res.holds = false;
        res.r = r;
        for (auto i : is_quasi_compact(prim.topology(), xr, sets).subcover) res.family.push_back(family[i]);
        return res;
    }
    return res;
}

namespace {

IdealId intersect_all(const IdealLattice& lat, const std::vector<IdealId>& fam) {
    IdealId acc = lat.unit_ideal();
    for (auto id : fam) acc = lat.intersection(acc, id);
    return acc;
}

}  // namespace

AConditionResult a_conditions(const IdealLattice& lat, const std::vector<IdealId>& family, A2Mode mode,
                              std::size_t subset_cap, std::size_t random_families, std::uint64_t seed,
                              std::size_t exhaustive_limit) {
    if (family.empty()) throw std::invalid_argument("a_conditions: family must be nonempty");
    const auto& ring = lat.ring();
    AConditionResult res;
    res.a1 = intersect_all(lat, family) == lat.zero_ideal();
    res.a2 = true;

    if (mode == A2Mode::original) {
        for (Element a = 0; a < ring.size() && res.a2; ++a) {
            const auto& orbit = lat.orbit(a);
            // Least uniform exponent over the members whose radical holds a.
            std::uint64_t n = 1;
            for (auto id : family) {
                const auto& I = lat[id];
                if (!lat[I.radical].members.test(a)) continue;
                std::uint64_t least = 0;
                for (std::size_t i = 0; i < orbit.size(); ++i) {
                    if (I.members.test(orbit[i])) {
                        least = i + 1;
                        break;
                    }
                }
                if (least == 0) {
                    res.a2 = false;
                    res.witness = "element " + ring.name(a) + " lies in the radical of " + lat.render(id) +
                                  " but no power reaches it";
                    break;
                }
                n = std::max(n, least);
            }
            if (!res.a2) break;
            const Element an = ring.pow(a, n);
            for (auto id : family) {
                if (lat[lat[id].radical].members.test(a) && !lat[id].members.test(an)) {
                    res.a2 = false;
                    res.witness = "no uniform exponent for " + ring.name(a);
                    break;
                }
            }
        }
        return res;
    }

    const std::size_t m = family.size();
    auto check = [&](const std::vector<IdealId>& sub) {
        ++res.subfamilies_checked;
        IdealId rad_of_inter = lat.radical(intersect_all(lat, sub));
        IdealId inter_of_rads = lat.unit_ideal();
        for (auto id : sub) inter_of_rads = lat.intersection(inter_of_rads, lat.radical(id));
        if (rad_of_inter != inter_of_rads) {
            res.a2 = false;
            std::ostringstream w;
            w << "subfamily {";
            for (std::size_t i = 0; i < sub.size(); ++i) w << (i ? ", " : "") << lat.render(sub[i]);
            w << "}: radical of intersection " << lat.render(rad_of_inter) << " != intersection of radicals "
              << lat.render(inter_of_rads);
            res.witness = w.str();
        }
        return res.a2;
    };

    if (m <= exhaustive_limit) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            std::vector<IdealId> sub;
            for (std::size_t b = 0; b < m; ++b)
                if (mask >> b & 1) sub.push_back(family[b]);
            if (!check(sub)) return res;
        }
        return res;
    }

    // Subfamilies of size <= subset_cap, in lexicographic index order.
    std::vector<std::size_t> idx;
    bool stop = false;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (stop) return;
        if (!idx.empty()) {
            std::vector<IdealId> sub;
            for (auto i : idx) sub.push_back(family[i]);
            if (!check(sub)) {
                stop = true;
                return;
            }
        }
        if (idx.size() == subset_cap) return;
        for (std::size_t i = start; i < m && !stop; ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    recurse(recurse, 0);
    if (stop) return res;

    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < random_families && subset_cap < m; ++t) {
        const std::size_t size = subset_cap + 1 + static_cast<std::size_t>(rng() % (m - subset_cap));
        std::vector<std::size_t> pool(m);
        for (std::size_t i = 0; i < m; ++i) pool[i] = i;
        std::vector<IdealId> sub;
        for (std::size_t i = 0; i < size; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng() % (m - i));
            std::swap(pool[i], pool[j]);
            sub.push_back(family[pool[i]]);
        }
        if (!check(sub)) return res;
    }
    return res;
}

}  // namespace primspec
