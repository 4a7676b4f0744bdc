#include "primspec/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "primspec/errors.hpp"

namespace primspec {

std::string closed_family_violation(std::size_t point_count, const std::vector<BitSet>& closed) {
    std::unordered_set<BitSet, BitSetHash> fam(closed.begin(), closed.end());
    for (const auto& c : closed)
        if (c.width() != point_count) return "closed set has the wrong width";
    if (!fam.count(BitSet(point_count))) return "empty set is not closed";
    if (!fam.count(BitSet::full(point_count))) return "whole space is not closed";
    for (const auto& a : closed) {
        for (const auto& b : closed) {
            if (!fam.count(a | b)) return "family not closed under union";
            if (!fam.count(a & b)) return "family not closed under intersection";
        }
    }
    return {};
}

FiniteTopology FiniteTopology::from_closed_sets(std::size_t point_count, std::vector<BitSet> closed) {
    std::sort(closed.begin(), closed.end(), [](const BitSet& a, const BitSet& b) { return canonical_less(a, b); });
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    if (auto v = closed_family_violation(point_count, closed); !v.empty()) throw AxiomViolation(v);
    FiniteTopology t;
    t.points_ = point_count;
    t.closed_ = std::move(closed);
    return t;
}

std::vector<BitSet> FiniteTopology::open_sets() const {
    std::vector<BitSet> out;
    out.reserve(closed_.size());
    for (const auto& c : closed_) out.push_back(c.complement());
    std::sort(out.begin(), out.end(), [](const BitSet& a, const BitSet& b) { return canonical_less(a, b); });
    return out;
}

bool FiniteTopology::is_closed(const BitSet& s) const {
    return std::find(closed_.begin(), closed_.end(), s) != closed_.end();
}

bool FiniteTopology::is_open(const BitSet& s) const { return is_closed(s.complement()); }

BitSet FiniteTopology::closure(const BitSet& s) const {
    BitSet c = whole();
    for (const auto& cl : closed_)
        if (s.is_subset_of(cl)) c &= cl;
    return c;
}

BitSet FiniteTopology::point_closure(std::size_t x) const {
    BitSet s(points_);
    s.set(x);
    return closure(s);
}

// ---------------------------------------------------------------------------

SeparationResult separation_axioms(const FiniteTopology& t) {
    const std::size_t n = t.point_count();
    SeparationResult r{true, true, true, std::nullopt};
    std::optional<std::pair<std::size_t, std::size_t>> w0, w1, w2;

    std::vector<BitSet> closures;
    for (std::size_t x = 0; x < n; ++x) closures.push_back(t.point_closure(x));
    const auto opens = t.open_sets();

    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            if (x < y && closures[x] == closures[y]) {
                r.t0 = false;
                if (!w0) w0 = {x, y};
            }
            if (closures[x].test(y)) {
                r.t1 = false;
                if (!w1) w1 = {x, y};
            }
            if (x < y) {
                bool separated = false;
                for (const auto& u : opens) {
                    if (!u.test(x) || u.test(y)) continue;
                    for (const auto& v : opens) {
                        if (v.test(y) && !u.intersects(v)) {
                            separated = true;
                            break;
                        }
                    }
                    if (separated) break;
                }
                if (!separated) {
                    r.t2 = false;
                    if (!w2) w2 = {x, y};
                }
            }
        }
    }
    r.witness = !r.t0 ? w0 : !r.t1 ? w1 : w2;
    return r;
}

IrreducibleResult is_irreducible(const FiniteTopology& t, const std::optional<BitSet>& subset) {
    const BitSet space = subset ? *subset : t.whole();
    if (space.empty()) return {false, std::nullopt};
    // Relatively closed proper subsets of the subspace.
    std::vector<BitSet> rel;
    for (const auto& c : t.closed_sets()) {
        BitSet r = c & space;
        if (r != space && std::find(rel.begin(), rel.end(), r) == rel.end()) rel.push_back(r);
    }
    for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = i; j < rel.size(); ++j)
            if ((rel[i] | rel[j]) == space) return {false, std::make_pair(rel[i], rel[j])};
    return {true, std::nullopt};
}

bool is_irreducible_by_opens(const FiniteTopology& t) {
    if (t.point_count() == 0) return false;
    const auto opens = t.open_sets();
    for (const auto& u : opens) {
        if (u.empty()) continue;
        for (const auto& v : opens)
            if (!v.empty() && !u.intersects(v)) return false;
    }
    return true;
}

std::vector<GenericPoints> irreducible_closed_with_generic_points(const FiniteTopology& t) {
    std::vector<BitSet> closures;
    for (std::size_t x = 0; x < t.point_count(); ++x) closures.push_back(t.point_closure(x));
    std::vector<GenericPoints> out;
    for (const auto& c : t.closed_sets()) {
        if (!is_irreducible(t, c).irreducible) continue;
        GenericPoints g{c, {}};
        for (std::size_t x = 0; x < closures.size(); ++x)
            if (closures[x] == c) g.generic_points.push_back(x);
        out.push_back(std::move(g));
    }
    return out;
}

bool is_sober(const FiniteTopology& t) {
    for (const auto& g : irreducible_closed_with_generic_points(t))
        if (g.generic_points.size() != 1) return false;
    return true;
}

SubcoverResult is_quasi_compact(const FiniteTopology& t, const BitSet& subset, const std::vector<BitSet>& cover) {
    BitSet all(t.point_count());
    for (const auto& u : cover) {
        if (!t.is_open(u)) throw std::invalid_argument("covering family contains a set that is not open");
        all |= u;
    }
    if (!subset.is_subset_of(all)) throw NotACover("family does not cover the subset");

    std::vector<std::size_t> chosen;
    BitSet remaining = subset;
    while (!remaining.empty()) {
        std::size_t best = cover.size(), best_gain = 0;
        for (std::size_t i = 0; i < cover.size(); ++i) {
            const auto gain = (cover[i] & remaining).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        chosen.push_back(best);
        remaining -= cover[best];
    }
    // Drop members that the others already cover.
    for (std::size_t i = chosen.size(); i-- > 0;) {
        BitSet rest(t.point_count());
        for (std::size_t j = 0; j < chosen.size(); ++j)
            if (j != i) rest |= cover[chosen[j]];
        if (subset.is_subset_of(rest)) chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
    }
    std::sort(chosen.begin(), chosen.end());
    return {chosen};
}

BaseCheck is_base(const FiniteTopology& t, const std::vector<BitSet>& family) {
    for (const auto& u : t.open_sets()) {
        BitSet un(t.point_count());
        for (const auto& b : family)
            if (b.is_subset_of(u)) un |= b;
        if (un != u) return {false, u};
    }
    return {true, std::nullopt};
}

namespace {

bool quasi_compact_open(const FiniteTopology& t, const BitSet& u, const std::vector<BitSet>& opens) {
    // Cover u by the opens inside it; a finite subcover must come back.
    std::vector<BitSet> inside;
    for (const auto& v : opens)
        if (v.is_subset_of(u)) inside.push_back(v);
    try {
        auto sc = is_quasi_compact(t, u, inside);
        BitSet un(t.point_count());
        for (auto i : sc.subcover) un |= inside[i];
        return u.is_subset_of(un);
    } catch (const NotACover&) {
        return false;
    }
}

bool closed_under_intersection(const std::vector<BitSet>& fam) {
    for (const auto& a : fam)
        for (const auto& b : fam)
            if (std::find(fam.begin(), fam.end(), a & b) == fam.end()) return false;
    return true;
}

}  // namespace

bool is_spectral(const FiniteTopology& t, const std::vector<BitSet>* base) {
    const auto opens = t.open_sets();
    if (!quasi_compact_open(t, t.whole(), opens)) return false;
    if (!is_sober(t)) return false;

    std::vector<BitSet> compact_opens;
    for (const auto& u : opens)
        if (quasi_compact_open(t, u, opens)) compact_opens.push_back(u);
    if (!closed_under_intersection(compact_opens)) return false;
    if (!is_base(t, compact_opens).is_base) return false;

    if (base) {
        for (const auto& b : *base)
            if (!t.is_open(b) || !quasi_compact_open(t, b, opens)) return false;
        // Pairwise intersections must stay in the family.
        for (const auto& a : *base)
            for (const auto& b : *base)
                if (std::find(base->begin(), base->end(), a & b) == base->end()) return false;
        if (!is_base(t, *base).is_base) return false;
    }
    return true;
}

SupercompactResult is_supercompact(const FiniteTopology& t) {
    SupercompactResult r;
    const BitSet whole = t.whole();
    BitSet un(t.point_count());
    std::vector<BitSet> proper;
    for (const auto& u : t.open_sets()) {
        if (u == whole || u.empty()) continue;
        proper.push_back(u);
        un |= u;
    }
    if (un == whole) {
        r.supercompact = false;
        // Keep an irredundant sub-family as the witness.
        auto sc = is_quasi_compact(t, whole, proper);
        for (auto i : sc.subcover) r.cover.push_back(proper[i]);
    } else {
        r.supercompact = true;
        r.uncovered_point = (whole - un).first();
    }
    return r;
}

}  // namespace primspec
