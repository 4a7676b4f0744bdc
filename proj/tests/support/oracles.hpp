#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's algorithms beyond reading ring tables and names.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "primspec/ring.hpp"
#include "primspec/bitset.hpp"

namespace oracle {

using primspec::Element;
using primspec::FiniteRing;

/// Every ideal of a ring with at most 16 elements, by scanning all subsets.
inline std::set<std::vector<Element>> all_ideals_by_subsets(const FiniteRing& r) {
    const auto n = static_cast<Element>(r.size());
    std::set<std::vector<Element>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << r.zero()))) continue;
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a) {
            if (!(mask >> a & 1)) continue;
            for (Element b = 0; b < n && ok; ++b) {
                if ((mask >> b & 1) && !(mask >> r.add(a, b) & 1)) ok = false;
                if (!(mask >> r.mul(a, b) & 1)) ok = false;
            }
        }
        if (!ok) continue;
        std::vector<Element> members;
        for (Element a = 0; a < n; ++a)
            if (mask >> a & 1) members.push_back(a);
        out.insert(members);
    }
    return out;
}

/// Whether some bijection fixing 0 and 1 preserves + and *.
inline bool isomorphic(const FiniteRing& a, const FiniteRing& b) {
    if (a.size() != b.size()) return false;
    const auto n = static_cast<Element>(a.size());
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[a.zero()] != b.zero() || perm[a.one()] != b.one()) continue;
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x)
            for (Element y = 0; y < n && ok; ++y)
                ok = perm[a.add(x, y)] == b.add(perm[x], perm[y]) && perm[a.mul(x, y)] == b.mul(perm[x], perm[y]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Coefficients (low degree first) of a name such as "2x^2+x+3".
inline std::vector<std::int64_t> parse_poly_name(const std::string& s) {
    std::vector<std::int64_t> c;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find('+', i);
        if (j == std::string::npos) j = s.size();
        const std::string term = s.substr(i, j - i);
        i = j + 1;
        const auto xpos = term.find('x');
        std::int64_t coef = 1;
        std::size_t deg = 0;
        if (xpos == std::string::npos) {
            coef = std::stoll(term);
        } else {
            if (xpos > 0) coef = std::stoll(term.substr(0, xpos));
            deg = 1;
            if (xpos + 1 < term.size() && term[xpos + 1] == '^') deg = std::stoul(term.substr(xpos + 2));
        }
        if (c.size() <= deg) c.resize(deg + 1, 0);
        c[deg] += coef;
    }
    return c;
}

/// Product of two residues in Z_m[x]/(h) for monic h (low degree first).
inline std::vector<std::int64_t> residue_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                             const std::vector<std::int64_t>& h, std::int64_t m) {
    const std::size_t d = h.size() - 1;
    std::vector<std::int64_t> p(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) p[i + j] = (p[i + j] + a[i] * b[j]) % m;
    for (std::size_t k = p.size(); k-- > d;) {
        const std::int64_t lead = p[k];
        if (lead == 0) continue;
        for (std::size_t t = 0; t <= d; ++t) p[k - d + t] = ((p[k - d + t] - lead * h[t]) % m + m) % m;
    }
    p.resize(d, 0);
    for (auto& v : p) v = ((v % m) + m) % m;
    return p;
}

inline std::vector<std::int64_t> padded(std::vector<std::int64_t> v, std::size_t d, std::int64_t m) {
    v.resize(d, 0);
    for (auto& x : v) x = ((x % m) + m) % m;
    return v;
}

/// Sorted factorization by plain trial division.
inline std::vector<std::pair<std::uint64_t, std::uint32_t>> trial_division(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

/// Supercompactness by enumerating every family of opens: each family whose
/// union is the whole space must contain the whole space.
inline bool supercompact_by_covers(const std::vector<primspec::BitSet>& opens, std::size_t points) {
    const auto whole = primspec::BitSet::full(points);
    const std::size_t m = opens.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        primspec::BitSet un(points);
        bool has_whole = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            un |= opens[i];
            if (opens[i] == whole) has_whole = true;
        }
        if (un == whole && !has_whole) return false;
    }
    return true;
}

}  // namespace oracle
