#include "primspec/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "primspec/errors.hpp"
#include "primspec/numtheory.hpp"

namespace primspec::z {

using boost::multiprecision::cpp_int;

namespace {

std::uint64_t magnitude(std::int64_t n) {
    return n < 0 ? ~static_cast<std::uint64_t>(n) + 1 : static_cast<std::uint64_t>(n);
}

std::string family(std::uint64_t p) { return "{(" + std::to_string(p) + "^k): k≥1}"; }

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& [p, e] : factorize_u64(n)) out.push_back(p);
    return out;
}

// Part of g not built from primes of r; 1 exactly when g | r^n for some n.
std::uint64_t foreign_part(std::uint64_t g, std::uint64_t r) {
    if (g == 0) return 0;
    std::uint64_t d;
    while ((d = std::gcd(g, r)) > 1)
        while (g % d == 0) g /= d;
    return g;
}

}  // namespace

ZPrimaryIdeal ZPrimaryIdeal::prime_power(std::uint64_t p, std::uint32_t k) {
    if (!is_prime_u64(p)) throw ValidationError(std::to_string(p) + " is not prime");
    if (k < 1) throw ValidationError("prime-power exponent must be at least 1");
    return {p, k};
}

std::string ZPrimaryIdeal::render() const {
    if (is_zero()) return "(0)";
    if (k == 1) return "(" + std::to_string(p) + ")";
    return "(" + std::to_string(p) + "^" + std::to_string(k) + ")";
}

bool ZVariety::contains(const ZPrimaryIdeal& q) const {
    if (all) return true;
    return q.is_zero() ? includes_zero : families.count(q.p) > 0;
}

std::string ZVariety::render() const {
    if (all) return "Prim(Z)";
    if (empty()) return "∅";
    std::string out;
    for (auto p : families) out += (out.empty() ? "" : " ∪ ") + family(p);
    if (includes_zero) out += (out.empty() ? "" : " ∪ ") + std::string("{(0)}");
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::int64_t n) {
    if (n == 0) throw ValidationError("cannot factorize 0");
    return factorize_u64(magnitude(n));
}

ZVariety v_rad_z(std::int64_t n) {
    if (n == 0) return ZVariety::all_of_prim();
    ZVariety v;
    for (auto p : prime_divisors(magnitude(n))) v.families.insert(p);
    return v;
}

std::vector<std::uint64_t> v_z(std::int64_t n) {
    if (n == 0) throw ValidationError("V(0) is all of Spec(Z)");
    return prime_divisors(magnitude(n));
}

std::string render_v_z(std::int64_t n) {
    if (n == 0) return "Spec(Z)";
    const auto ps = v_z(n);
    if (ps.empty()) return "∅";
    std::string out = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", (" : "(") + std::to_string(ps[i]) + ")";
    return out + "}";
}

ZVariety closure_z(const ZPrimaryIdeal& q) {
    if (q.is_zero()) return ZVariety::all_of_prim();
    ZVariety v;
    v.families.insert(q.p);
    return v;
}

bool closure_equal_z(const ZPrimaryIdeal& a, const ZPrimaryIdeal& b) { return closure_z(a) == closure_z(b); }

SubcoverCertificate extract_finite_subcover_z(std::int64_t r, const std::vector<std::int64_t>& s) {
    if (r == 0) throw ValidationError("r must be nonzero");
    const std::uint64_t ur = magnitude(r);

    std::uint64_t g_all = 0;
    for (auto v : s) g_all = std::gcd(g_all, magnitude(v));
    const std::uint64_t bad = foreign_part(g_all, ur);
    if (bad != 1) {
        if (bad == 0) throw NotACover("X_" + std::to_string(r) + " is not covered: (0) and every power family of a prime not dividing r are missed");
        std::string missed;
        for (auto p : prime_divisors(bad)) missed += (missed.empty() ? "" : " ∪ ") + family(p);
        throw NotACover("X_" + std::to_string(r) + " is not covered: " + missed + " uncovered");
    }

    // Greedy on the foreign part of the running gcd, then prune.
    std::vector<std::size_t> chosen;
    std::uint64_t g = 0;
    while (foreign_part(g, ur) != 1) {
        std::size_t best = s.size();
        std::uint64_t best_part = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 0 || std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
            const auto part = foreign_part(std::gcd(g, magnitude(s[i])), ur);
            if (best == s.size() || part < best_part) {
                best = i;
                best_part = part;
            }
        }
        chosen.push_back(best);
        g = std::gcd(g, magnitude(s[best]));
    }
    std::sort(chosen.begin(), chosen.end());
    for (std::size_t i = 0; i < chosen.size() && chosen.size() > 1;) {
        std::uint64_t h = 0;
        for (std::size_t j = 0; j < chosen.size(); ++j)
            if (j != i) h = std::gcd(h, magnitude(s[chosen[j]]));
        if (foreign_part(h, ur) == 1) {
            chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
            g = h;
        } else {
            ++i;
        }
    }

    SubcoverCertificate cert;
    for (auto i : chosen) cert.delta.push_back(s[i]);

    // Extended Euclid across Δ: Σ u_j s_j = g.
    std::vector<cpp_int> u(cert.delta.size(), 0);
    cpp_int acc = 0;
    for (std::size_t j = 0; j < cert.delta.size(); ++j) {
        cpp_int a = acc, b = cert.delta[j];
        cpp_int x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (b != 0) {
            cpp_int q = a / b, t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
            t = y0 - q * y1;
            y0 = y1;
            y1 = t;
        }
        if (a < 0) {
            a = -a;
            x0 = -x0;
            y0 = -y0;
        }
        for (std::size_t i = 0; i < j; ++i) u[i] *= x0;
        u[j] = y0;
        acc = a;
    }

    // Least n with g | r^n, from the prime exponents.
    std::uint32_t n = 1;
    const auto rf = factorize_u64(ur);
    for (const auto& [p, e] : factorize_u64(g)) {
        auto it = std::find_if(rf.begin(), rf.end(), [&](const auto& pr) { return pr.first == p; });
        n = std::max<std::uint32_t>(n, (e + it->second - 1) / it->second);
    }
    cert.exponent = n;
    cpp_int power = boost::multiprecision::pow(cpp_int(r), n);
    const cpp_int scale = power / acc;
    for (auto& t : u) cert.coefficients.push_back(cpp_int(t * scale).str());
    cert.power = power.str();
    cert.verified = verify_certificate(r, cert);
    if (!cert.verified) throw std::logic_error("subcover certificate failed re-verification");
    return cert;
}

bool verify_certificate(std::int64_t r, const SubcoverCertificate& cert) {
    if (cert.delta.size() != cert.coefficients.size() || cert.delta.empty()) return false;
    cpp_int sum = 0;
    for (std::size_t j = 0; j < cert.delta.size(); ++j) sum += cpp_int(cert.coefficients[j]) * cert.delta[j];
    const cpp_int power = boost::multiprecision::pow(cpp_int(r), cert.exponent);
    return sum == power && cpp_int(cert.power) == power;
}

A2Witness a2_failure_witness_z(std::uint64_t p) {
    if (!is_prime_u64(p)) throw ValidationError(std::to_string(p) + " is not prime");
    A2Witness w;
    w.p = p;
    w.family = family(p);
    // A nonzero integer has bounded p-adic valuation, so ∩(p^k) = (0) and
    // √(0) = (0); each √(p^k) = (p).
    w.radical_of_intersection = "(0)";
    w.intersection_of_radicals = "(" + std::to_string(p) + ")";
    w.differ = w.radical_of_intersection != w.intersection_of_radicals;
    return w;
}

std::string ZxZPrimaryIdeal::render() const {
    return side == Side::left ? inner.render() + "×Z" : "Z×" + inner.render();
}

std::string ZxZClosure::render() const {
    auto wrap = [&](const std::string& i) { return side == Side::left ? i + "×Z" : "Z×" + i; };
    if (inner.all) return "{" + wrap("I") + " : I ∈ Prim(Z)}";
    std::string out;
    for (auto p : inner.families)
        out += (out.empty() ? "" : " ∪ ") + ("{" + wrap("(" + std::to_string(p) + "^n)") + " : n≥1}");
    if (out.empty()) return "∅";
    return out;
}

ZxZClosure prim_zxz_closure(const ZxZPrimaryIdeal& q, bool include_zero) {
    if (q.inner.is_zero() && !include_zero)
        throw ValidationError(q.render() + " is excluded from Prim(Z×Z) without the zero-inner points");
    return {q.side, closure_z(q.inner)};
}

bool closure_equal_zxz(const ZxZPrimaryIdeal& a, const ZxZPrimaryIdeal& b, bool include_zero) {
    return prim_zxz_closure(a, include_zero) == prim_zxz_closure(b, include_zero);
}

namespace {

std::string strip(std::string_view t) {
    std::string out;
    for (char c : t)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& whole) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ValidationError("malformed integer in '" + whole + "'");
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw ValidationError("integer out of range in '" + whole + "'");
    }
}

}  // namespace

ZPrimaryIdeal parse_z_primary(std::string_view text) {
    std::string s = strip(text);
    const std::string whole = s;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    const auto caret = s.find('^');
    if (caret != std::string::npos) {
        const auto p = parse_u64(s.substr(0, caret), whole);
        const auto k = parse_u64(s.substr(caret + 1), whole);
        if (k > 64) throw ValidationError("exponent too large in '" + whole + "'");
        return ZPrimaryIdeal::prime_power(p, static_cast<std::uint32_t>(k));
    }
    const auto v = parse_u64(s, whole);
    if (v == 0) return ZPrimaryIdeal::zero();
    const auto pp = prime_power(v);
    if (!pp) throw ValidationError("'" + whole + "' is not (0) or a prime power");
    return ZPrimaryIdeal::prime_power(pp->first, static_cast<std::uint32_t>(pp->second));
}

ZxZPrimaryIdeal parse_zxz_primary(std::string_view text) {
    std::string s = strip(text);
    const std::string whole = s;
    for (const std::string sep : {"×", "x", "X", "*"}) {
        const auto pos = s.find(sep);
        if (pos == std::string::npos) continue;
        const std::string a = s.substr(0, pos), b = s.substr(pos + sep.size());
        if (b == "Z" && a != "Z") return {Side::left, parse_z_primary(a)};
        if (a == "Z" && b != "Z") return {Side::right, parse_z_primary(b)};
        break;
    }
    throw ValidationError("expected I×Z or Z×I in '" + whole + "'");
}

}  // namespace primspec::z
