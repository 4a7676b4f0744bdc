#include "primspec/ideals.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "primspec/errors.hpp"

namespace primspec {

namespace {

BitSet principal_set(const FiniteRing& ring, Element g) {
    BitSet s(ring.size());
    for (Element r = 0; r < ring.size(); ++r) s.set(ring.mul(r, g));
    return s;
}

// {a + b : a in A, b in B}; an ideal when A and B are.
BitSet sum_set(const FiniteRing& ring, const BitSet& a, const BitSet& b) {
    if (a.is_subset_of(b)) return b;
    if (b.is_subset_of(a)) return a;
    BitSet s(ring.size());
    const auto bm = b.members();
    a.for_each([&](std::size_t x) {
        for (auto y : bm) s.set(ring.add(static_cast<Element>(x), static_cast<Element>(y)));
    });
    return s;
}

}  // namespace

BitSet ideal_generated_by(const FiniteRing& ring, std::span<const Element> gens) {
    BitSet ideal(ring.size());
    ideal.set(ring.zero());
    for (auto g : gens) {
        if (!ring.contains(g)) throw std::out_of_range("generator out of range");
        if (ideal.test(g)) continue;
        ideal = sum_set(ring, ideal, principal_set(ring, g));
    }
    return ideal;
}

BitSet radical_of(const FiniteRing& ring, const BitSet& set) {
    BitSet rad(ring.size());
    for (Element x = 0; x < ring.size(); ++x) {
        for (auto p : power_orbit(ring, x)) {
            if (set.test(p)) {
                rad.set(x);
                break;
            }
        }
    }
    return rad;
}

bool is_ideal(const FiniteRing& ring, const BitSet& set) {
    if (set.width() != ring.size() || !set.test(ring.zero())) return false;
    const auto m = set.members();
    for (auto a : m) {
        if (!set.test(ring.neg(static_cast<Element>(a)))) return false;
        for (auto b : m)
            if (!set.test(ring.add(static_cast<Element>(a), static_cast<Element>(b)))) return false;
        for (Element r = 0; r < ring.size(); ++r)
            if (!set.test(ring.mul(r, static_cast<Element>(a)))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

std::optional<IdealId> IdealLattice::find(const BitSet& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

IdealId IdealLattice::id_of(const BitSet& members) const {
    if (auto id = find(members)) return *id;
    throw std::logic_error("set is not an ideal of " + ring_->label());
}

namespace {

// Smallest ideal of the lattice containing `set`. Ideals are ordered by
// cardinality, so the first superset found is contained in every other one.
IdealId smallest_containing(const std::vector<IdealInfo>& ideals, const BitSet& set) {
    for (std::size_t i = 0; i < ideals.size(); ++i)
        if (set.is_subset_of(ideals[i].members)) return static_cast<IdealId>(i);
    throw std::logic_error("no ideal contains the set");
}

}  // namespace

IdealId IdealLattice::arithmetic(IdealOp op, IdealId a, IdealId b) const {
    const auto& A = (*this)[a].members;
    const auto& B = (*this)[b].members;
    switch (op) {
        case IdealOp::sum:
            return smallest_containing(ideals_, A | B);
        case IdealOp::intersection:
            return id_of(A & B);
        case IdealOp::product: {
            BitSet prods(ring_->size());
            const auto bm = B.members();
            A.for_each([&](std::size_t x) {
                for (auto y : bm) prods.set(ring_->mul(static_cast<Element>(x), static_cast<Element>(y)));
            });
            return smallest_containing(ideals_, prods);
        }
    }
    throw std::logic_error("unknown ideal operation");
}

IdealId IdealLattice::generated(std::span<const Element> gens) const {
    BitSet s(ring_->size());
    s.set(ring_->zero());
    for (auto g : gens) {
        if (!ring_->contains(g)) throw std::out_of_range("generator out of range");
        s.set(g);
    }
    return smallest_containing(ideals_, s);
}

IdealStatus IdealLattice::classify(IdealId a) const {
    const auto& info = (*this)[a];
    return {info.prime, info.maximal, info.primary};
}

std::string IdealLattice::render(IdealId a) const {
    if (a == zero_ideal()) return "(0)";
    if (a == unit_ideal()) return "(1)";
    std::string out = "(";
    const auto& gens = (*this)[a].generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += ring_->name(gens[i]);
    }
    return out + ")";
}

std::vector<IdealId> IdealLattice::maximal_ideals() const {
    std::vector<IdealId> out;
    for (IdealId i = 0; i < ideals_.size(); ++i)
        if (ideals_[i].maximal) out.push_back(i);
    return out;
}

std::vector<IdealId> IdealLattice::prime_ideals() const {
    std::vector<IdealId> out;
    for (IdealId i = 0; i < ideals_.size(); ++i)
        if (ideals_[i].prime) out.push_back(i);
    return out;
}

std::vector<IdealId> IdealLattice::primary_ideals() const {
    std::vector<IdealId> out;
    for (IdealId i = 0; i < ideals_.size(); ++i)
        if (ideals_[i].primary) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------

IdealLattice enumerate_ideals(std::shared_ptr<const FiniteRing> ring_ptr, std::size_t max_ideals) {
    const FiniteRing& ring = *ring_ptr;
    const std::size_t n = ring.size();

    std::vector<BitSet> found;
    std::unordered_map<BitSet, std::size_t, BitSetHash> seen;
    std::deque<std::size_t> pending;
    auto admit = [&](BitSet s) {
        if (seen.count(s)) return;
        if (found.size() >= max_ideals)
            throw CapExceeded(ring.label() + " has more than " + std::to_string(max_ideals) + " ideals");
        seen.emplace(s, found.size());
        pending.push_back(found.size());
        found.push_back(std::move(s));
    };

    std::vector<BitSet> principal_sets;
    principal_sets.reserve(n);
    for (Element r = 0; r < n; ++r) {
        principal_sets.push_back(principal_set(ring, r));
        admit(principal_sets.back());
    }
    // Every ideal of a finite ring is a finite sum of principal ideals.
    while (!pending.empty()) {
        const std::size_t x = pending.front();
        pending.pop_front();
        for (std::size_t y = 0; y < found.size(); ++y) {
            if (x == y) continue;
            admit(sum_set(ring, found[x], found[y]));
        }
    }

    std::sort(found.begin(), found.end(), [](const BitSet& a, const BitSet& b) { return canonical_less(a, b); });

    IdealLattice lat;
    lat.ring_ = std::move(ring_ptr);
    lat.ideals_.resize(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        lat.index_.emplace(found[i], static_cast<IdealId>(i));
        lat.ideals_[i].members = std::move(found[i]);
    }
    lat.principal_.resize(n);
    for (Element r = 0; r < n; ++r) lat.principal_[r] = lat.index_.at(principal_sets[r]);
    lat.orbits_.resize(n);
    for (Element r = 0; r < n; ++r) lat.orbits_[r] = power_orbit(ring, r);

    const Element one = ring.one();
    for (auto& info : lat.ideals_) {
        info.proper = !info.members.test(one);
        BitSet rad(n);
        for (Element x = 0; x < n; ++x) {
            for (auto p : lat.orbits_[x]) {
                if (info.members.test(p)) {
                    rad.set(x);
                    break;
                }
            }
        }
        info.radical = lat.index_.at(rad);
    }

    for (auto& info : lat.ideals_) {
        if (!info.proper) continue;
        const BitSet& I = info.members;
        const BitSet& rad = lat.ideals_[info.radical].members;
        bool prime = true, primary = true;
        for (Element r = 0; r < n && (prime || primary); ++r) {
            if (I.test(r)) continue;
            for (Element s = 0; s < n; ++s) {
                if (!I.test(ring.mul(r, s))) continue;
                // rs in I, r not in I
                if (!I.test(s)) prime = false;
                if (!rad.test(s)) {
                    primary = false;
                    break;
                }
            }
        }
        info.prime = prime;
        info.primary = primary;
    }

    for (std::size_t i = 0; i < lat.ideals_.size(); ++i) {
        auto& info = lat.ideals_[i];
        if (!info.proper) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < lat.ideals_.size() && maximal; ++j) {
            const auto& other = lat.ideals_[j];
            if (j != i && other.proper && info.members.is_subset_of(other.members)) maximal = false;
        }
        info.maximal = maximal;
    }

    // Display generators: one element if principal, else two, else greedy.
    for (std::size_t i = 0; i < lat.ideals_.size(); ++i) {
        auto& info = lat.ideals_[i];
        const auto id = static_cast<IdealId>(i);
        const auto mem = info.members.members();
        std::vector<Element> gens;
        for (auto g : mem) {
            if (lat.principal_[g] == id) {
                gens = {static_cast<Element>(g)};
                break;
            }
        }
        if (gens.empty()) {
            // Distinct principal sub-ideals, each with its smallest generator.
            std::vector<std::pair<IdealId, Element>> subs;
            for (auto g : mem) {
                const auto pid = lat.principal_[g];
                if (std::none_of(subs.begin(), subs.end(), [&](auto& s) { return s.first == pid; }))
                    subs.emplace_back(pid, static_cast<Element>(g));
            }
            for (std::size_t a = 0; a < subs.size() && gens.empty(); ++a)
                for (std::size_t b = a + 1; b < subs.size() && gens.empty(); ++b)
                    if (lat.sum(subs[a].first, subs[b].first) == id) gens = {subs[a].second, subs[b].second};
        }
        if (gens.empty()) {
            BitSet cur(n);
            cur.set(ring.zero());
            for (auto g : mem) {
                if (cur.test(g)) continue;
                gens.push_back(static_cast<Element>(g));
                cur = lat.ideals_[lat.generated(gens)].members;
                if (cur == info.members) break;
            }
        }
        info.generators = std::move(gens);
    }
    return lat;
}

}  // namespace primspec
