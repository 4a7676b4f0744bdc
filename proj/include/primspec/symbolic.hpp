#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace primspec::z {

/// A primary ideal of Z: (0) or (p^k) with p prime, k >= 1.
struct ZPrimaryIdeal {
    std::uint64_t p = 0;  // 0 for the zero ideal
    std::uint32_t k = 0;

    static ZPrimaryIdeal zero() { return {}; }
    /// Throws ValidationError unless p is prime and k >= 1.
    static ZPrimaryIdeal prime_power(std::uint64_t p, std::uint32_t k);

    bool is_zero() const noexcept { return p == 0; }
    std::string render() const;  // "(0)", "(2^3)", "(5)"
    friend bool operator==(const ZPrimaryIdeal&, const ZPrimaryIdeal&) = default;
};

/// A closed subset of Prim(Z): everything, or finitely many power families
/// {(p^k) : k >= 1} plus optionally (0).
struct ZVariety {
    bool all = false;
    std::set<std::uint64_t> families;
    bool includes_zero = false;

    static ZVariety all_of_prim() { return {true, {}, true}; }
    bool empty() const noexcept { return !all && families.empty() && !includes_zero; }
    bool contains(const ZPrimaryIdeal& q) const;
    /// "Prim(Z)", "∅", or "{(2^k): k≥1} ∪ {(3^k): k≥1}".
    std::string render() const;
    friend bool operator==(const ZVariety&, const ZVariety&) = default;
};

/// Sorted factorization of |n|. Throws ValidationError for n = 0.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::int64_t n);

/// V_rad(nZ).
ZVariety v_rad_z(std::int64_t n);
/// V(nZ) for n != 0: the sorted prime divisors. Throws ValidationError for n = 0.
std::vector<std::uint64_t> v_z(std::int64_t n);
/// "{(2), (3)}", "∅", or "Spec(Z)" for n = 0.
std::string render_v_z(std::int64_t n);

ZVariety closure_z(const ZPrimaryIdeal& q);
bool closure_equal_z(const ZPrimaryIdeal& a, const ZPrimaryIdeal& b);

/// r^n = Σ t_j s_j for the chosen s_j, all as decimal strings since the
/// power can exceed 64 bits.
struct SubcoverCertificate {
    std::vector<std::int64_t> delta;
    std::uint32_t exponent = 1;
    std::vector<std::string> coefficients;  // t_j, aligned with delta
    std::string power;                      // r^n
    bool verified = false;
};

/// Finite subfamily Δ ⊆ S with X_r ⊆ ∪_{s∈Δ} X_s, and a Bézout-style
/// certificate that some power of r lies in (Δ). Throws NotACover when a
/// prime dividing every member of S does not divide r; the message names the
/// uncovered power family. Throws ValidationError for r = 0.
SubcoverCertificate extract_finite_subcover_z(std::int64_t r, const std::vector<std::int64_t>& s);
/// Exact re-check of a certificate by big-integer arithmetic.
bool verify_certificate(std::int64_t r, const SubcoverCertificate& cert);

/// Failure of the radical-intersection form of A2 for the family
/// {(p^k) : k >= 1}: √(∩(p^k)) = (0) while ∩√(p^k) = (p).
struct A2Witness {
    std::uint64_t p = 0;
    std::string family;                // "{(2^k): k≥1}"
    std::string radical_of_intersection;  // "(0)"
    std::string intersection_of_radicals;  // "(2)"
    bool differ = true;
};

/// Throws ValidationError when p is not prime.
A2Witness a2_failure_witness_z(std::uint64_t p);

/// Z×Z ideals with one coordinate the whole ring.
enum class Side { left, right };

struct ZxZPrimaryIdeal {
    Side side = Side::left;
    ZPrimaryIdeal inner;
    std::string render() const;  // "(2^3)×Z", "Z×(3)", "(0)×Z"
    friend bool operator==(const ZxZPrimaryIdeal&, const ZxZPrimaryIdeal&) = default;
};

/// Closure of a point of Prim(Z×Z). For an inner (p^i) this is
/// {(p^n)×Z : n ≥ 1} on the same side; for an inner (0) it is the whole side,
/// which exists only when `include_zero` admits (0)×Z and Z×(0) as points.
struct ZxZClosure {
    Side side = Side::left;
    ZVariety inner;
    std::string render() const;
    friend bool operator==(const ZxZClosure&, const ZxZClosure&) = default;
};

/// Throws ValidationError for an inner (0) when include_zero is false.
ZxZClosure prim_zxz_closure(const ZxZPrimaryIdeal& q, bool include_zero = true);
bool closure_equal_zxz(const ZxZPrimaryIdeal& a, const ZxZPrimaryIdeal& b, bool include_zero = true);

/// Parses "0", "(0)", "8", "2^3", "(2^3)"; the value must be 0 or a prime power.
ZPrimaryIdeal parse_z_primary(std::string_view text);
/// Parses "(2^3)xZ", "(2^3)×Z", "Zx(3)", "(0)xZ".
ZxZPrimaryIdeal parse_zxz_primary(std::string_view text);

}  // namespace primspec::z
