#include "primspec/spectra.hpp"

#include <algorithm>
#include <unordered_map>

namespace primspec {

std::optional<std::size_t> Spectrum::point_of(IdealId id) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), id);
    if (it == points_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
}

BitSet Spectrum::variety_of_elements(std::span<const Element> s) const {
    const auto& lat = *lattice_;
    BitSet out(points_.size());
    for (std::size_t pt = 0; pt < points_.size(); ++pt) {
        const auto& rad = lat[radicals_[pt]].members;
        if (std::all_of(s.begin(), s.end(), [&](Element e) { return rad.test(e); })) out.set(pt);
    }
    return out;
}

BitSet Spectrum::basic_open(Element r) const {
    const Element one[] = {r};
    return variety_of_elements(one).complement();
}

std::vector<BitSet> Spectrum::basic_opens() const {
    std::vector<BitSet> out;
    const auto n = lattice_->ring().size();
    out.reserve(n);
    for (Element r = 0; r < n; ++r) out.push_back(basic_open(r));
    return out;
}

IdealId Spectrum::xi(const BitSet& y) const {
    const auto& lat = *lattice_;
    BitSet acc = lat[lat.unit_ideal()].members;
    y.for_each([&](std::size_t pt) { acc &= lat[points_.at(pt)].members; });
    return lat.id_of(acc);
}

BitSet Spectrum::closure(const BitSet& y) const { return topology_.closure(y); }

Spectrum build_spectrum(std::shared_ptr<const IdealLattice> lattice, SpectrumKind kind) {
    const auto& lat = *lattice;
    Spectrum s;
    s.kind_ = kind;
    for (IdealId id = 0; id < lat.size(); ++id) {
        const auto& info = lat[id];
        if (kind == SpectrumKind::prime ? info.prime : info.primary) {
            s.points_.push_back(id);
            s.radicals_.push_back(kind == SpectrumKind::prime ? id : info.radical);
        }
    }
    const std::size_t np = s.points_.size();

    std::unordered_map<BitSet, std::size_t, BitSetHash> seen;
    s.variety_index_.resize(lat.size());
    for (IdealId id = 0; id < lat.size(); ++id) {
        const auto& members = lat[id].members;
        BitSet v(np);
        for (std::size_t pt = 0; pt < np; ++pt)
            if (members.is_subset_of(lat[s.radicals_[pt]].members)) v.set(pt);
        auto [it, inserted] = seen.emplace(v, s.closed_.size());
        if (inserted) s.closed_.push_back({v, {}});
        s.closed_[it->second].generators.push_back(id);
        s.variety_index_[id] = it->second;
    }

    // Canonical family order, remapping the per-ideal indices.
    std::vector<std::size_t> order(s.closed_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return canonical_less(s.closed_[a].points, s.closed_[b].points); });
    std::vector<std::size_t> where(order.size());
    std::vector<ClosedSet> sorted;
    for (std::size_t i = 0; i < order.size(); ++i) {
        where[order[i]] = i;
        sorted.push_back(std::move(s.closed_[order[i]]));
    }
    s.closed_ = std::move(sorted);
    for (auto& idx : s.variety_index_) idx = where[idx];

    std::vector<BitSet> family;
    for (const auto& c : s.closed_) family.push_back(c.points);
    s.topology_ = FiniteTopology::from_closed_sets(np, std::move(family));
    s.lattice_ = std::move(lattice);
    return s;
}

}  // namespace primspec
