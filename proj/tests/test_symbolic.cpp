#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "primspec/errors.hpp"
#include "primspec/symbolic.hpp"
#include "support/oracles.hpp"

using namespace primspec;
using namespace primspec::z;
using boost::multiprecision::cpp_int;

namespace {

std::set<std::uint64_t> primes_of(std::int64_t n) {
    std::set<std::uint64_t> out;
    for (auto [p, k] : oracle::trial_division(static_cast<std::uint64_t>(n < 0 ? -n : n))) out.insert(p);
    return out;
}

// X_r ⊆ ∪ X_s in Prim(Z): (0) lies in every X_s with s != 0, and (p^k) lies in
// X_s iff p does not divide s, so only primes dividing every s matter.
bool covers(std::int64_t r, const std::vector<std::int64_t>& delta) {
    std::set<std::uint64_t> common;
    bool first = true;
    for (auto s : delta) {
        if (s == 0) continue;
        auto ps = primes_of(s);
        if (first) common = ps, first = false;
        else {
            std::set<std::uint64_t> keep;
            for (auto p : common)
                if (ps.count(p)) keep.insert(p);
            common = keep;
        }
    }
    if (first) return false;  // no nonzero member: (0) is missed
    const auto pr = primes_of(r);
    for (auto p : common)
        if (!pr.count(p)) return false;
    return true;
}

// Recomputes r^n and Σ t_j s_j from scratch.
bool certificate_holds(std::int64_t r, const SubcoverCertificate& c) {
    cpp_int pw = 1;
    for (std::uint32_t i = 0; i < c.exponent; ++i) pw *= r;
    if (pw.str() != c.power) return false;
    cpp_int sum = 0;
    for (std::size_t j = 0; j < c.delta.size(); ++j) sum += cpp_int(c.coefficients[j]) * c.delta[j];
    return sum == pw;
}

}  // namespace

TEST_SUITE("symbolic") {
    TEST_CASE("factorization examples") {
        using F = std::vector<std::pair<std::uint64_t, std::uint32_t>>;
        CHECK(factorize(12) == F{{2, 2}, {3, 1}});
        CHECK(factorize(-12) == F{{2, 2}, {3, 1}});
        CHECK(factorize(1).empty());
        CHECK(factorize(97) == F{{97, 1}});
        CHECK_THROWS_AS(factorize(0), ValidationError);
    }

    TEST_CASE("factorization agrees with trial division") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 2000; ++i) {
            const std::uint64_t n = 1 + rng() % 1000000;
            CAPTURE(n);
            CHECK(factorize(static_cast<std::int64_t>(n)) == oracle::trial_division(n));
        }
        const std::int64_t big = 999999937LL * 1000003LL;
        CHECK(factorize(big) == std::vector<std::pair<std::uint64_t, std::uint32_t>>{{1000003, 1}, {999999937, 1}});
    }

    TEST_CASE("V_rad(nZ) examples") {
        CHECK(v_rad_z(12).render() == "{(2^k): k≥1} ∪ {(3^k): k≥1}");
        CHECK(v_rad_z(1).empty());
        CHECK(v_rad_z(1).render() == "∅");
        CHECK(v_rad_z(-1).empty());
        CHECK(v_rad_z(0) == ZVariety::all_of_prim());
        CHECK(v_rad_z(0).render() == "Prim(Z)");
        CHECK(v_rad_z(7).contains(ZPrimaryIdeal::prime_power(7, 4)));
        CHECK_FALSE(v_rad_z(7).contains(ZPrimaryIdeal::zero()));
        CHECK(v_rad_z(0).contains(ZPrimaryIdeal::zero()));
    }

    TEST_CASE("V_rad laws on integers") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 500; ++i) {
            const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 5000);
            const std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 5000);
            CAPTURE(a);
            CAPTURE(b);
            const auto va = v_rad_z(a), vb = v_rad_z(b), vab = v_rad_z(a * b);
            std::set<std::uint64_t> un = va.families;
            un.insert(vb.families.begin(), vb.families.end());
            CHECK(vab.families == un);
            CHECK(v_rad_z(a * a * a).families == va.families);
            CHECK(va.families == primes_of(a));
        }
    }

    TEST_CASE("V(nZ) examples") {
        CHECK(v_z(12) == std::vector<std::uint64_t>{2, 3});
        CHECK(v_z(1).empty());
        CHECK(render_v_z(12) == "{(2), (3)}");
        CHECK(render_v_z(1) == "∅");
        CHECK(render_v_z(0) == "Spec(Z)");
        CHECK_THROWS_AS(v_z(0), ValidationError);
    }

    TEST_CASE("closures of points of Prim(Z)") {
        CHECK(closure_z(ZPrimaryIdeal::zero()) == ZVariety::all_of_prim());
        CHECK(closure_z(ZPrimaryIdeal::prime_power(2, 3)).render() == "{(2^k): k≥1}");
        CHECK(closure_equal_z(ZPrimaryIdeal::prime_power(2, 1), ZPrimaryIdeal::prime_power(2, 5)));
        CHECK_FALSE(closure_equal_z(ZPrimaryIdeal::prime_power(2, 1), ZPrimaryIdeal::prime_power(3, 1)));
        CHECK_FALSE(closure_equal_z(ZPrimaryIdeal::zero(), ZPrimaryIdeal::prime_power(3, 1)));
        CHECK_THROWS_AS(ZPrimaryIdeal::prime_power(6, 1), ValidationError);
        CHECK_THROWS_AS(ZPrimaryIdeal::prime_power(2, 0), ValidationError);
        CHECK(ZPrimaryIdeal::prime_power(2, 3).render() == "(2^3)");
        CHECK(ZPrimaryIdeal::prime_power(5, 1).render() == "(5)");
        CHECK(ZPrimaryIdeal::zero().render() == "(0)");
    }

    TEST_CASE("finite subcover examples") {
        const auto c = extract_finite_subcover_z(6, {4, 9, 25});
        CHECK(c.delta == std::vector<std::int64_t>{4});
        CHECK(c.exponent == 2);
        CHECK(c.power == "36");
        CHECK(c.coefficients == std::vector<std::string>{"9"});
        CHECK(c.verified);
        CHECK(certificate_holds(6, c));

        const auto d = extract_finite_subcover_z(1, {6, 10, 15});
        CHECK(d.delta.size() == 3);
        CHECK(certificate_holds(1, d));
        CHECK(covers(1, d.delta));

        try {
            extract_finite_subcover_z(2, {9});
            FAIL("expected NotACover");
        } catch (const NotACover& e) {
            const std::string msg = e.what();
            CHECK(msg.find("{(3^k): k≥1}") != std::string::npos);
            CHECK(msg.find("(2^k)") == std::string::npos);
        }
        CHECK_THROWS_AS(extract_finite_subcover_z(5, {0}), NotACover);
        CHECK_THROWS_AS(extract_finite_subcover_z(0, {1}), ValidationError);
    }

    TEST_CASE("subcover certificates on random covering families") {
        std::mt19937_64 rng(17);
        std::size_t covering = 0;
        for (int i = 0; i < 400; ++i) {
            const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 2000);
            std::vector<std::int64_t> s(2 + rng() % 5);
            for (auto& x : s) x = 1 + static_cast<std::int64_t>(rng() % 3000);
            CAPTURE(r);
            if (!covers(r, s)) {
                CHECK_THROWS_AS(extract_finite_subcover_z(r, s), NotACover);
                continue;
            }
            ++covering;
            const auto c = extract_finite_subcover_z(r, s);
            CHECK(certificate_holds(r, c));
            CHECK(verify_certificate(r, c));
            CHECK(covers(r, c.delta));
            for (auto x : c.delta) CHECK(std::find(s.begin(), s.end(), x) != s.end());
            // Minimal: dropping any member of Δ breaks the cover.
            for (std::size_t j = 0; j < c.delta.size(); ++j) {
                auto smaller = c.delta;
                smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(j));
                CHECK_FALSE(covers(r, smaller));
            }
        }
        CHECK(covering > 100);
    }

    TEST_CASE("tampered certificates are rejected") {
        auto c = extract_finite_subcover_z(6, {4, 9, 25});
        c.coefficients[0] = "8";
        CHECK_FALSE(verify_certificate(6, c));
    }

    TEST_CASE("radical form of A2 fails on prime power families") {
        const auto w = a2_failure_witness_z(2);
        CHECK(w.family == "{(2^k): k≥1}");
        CHECK(w.radical_of_intersection == "(0)");
        CHECK(w.intersection_of_radicals == "(2)");
        CHECK(w.differ);
        CHECK(a2_failure_witness_z(7).intersection_of_radicals == "(7)");
        CHECK_THROWS_AS(a2_failure_witness_z(9), ValidationError);
    }

    TEST_CASE("Prim(Z×Z) closures") {
        const auto a = parse_zxz_primary("(2^3)xZ");
        CHECK(a.side == Side::left);
        CHECK(a.render() == "(2^3)×Z");
        CHECK(prim_zxz_closure(a).render() == "{(2^n)×Z : n≥1}");
        CHECK(closure_equal_zxz(a, parse_zxz_primary("(2)×Z")));
        CHECK_FALSE(closure_equal_zxz(a, parse_zxz_primary("Zx(2)")));
        CHECK_FALSE(closure_equal_zxz(a, parse_zxz_primary("(3)xZ")));
        const auto z = parse_zxz_primary("(0)xZ");
        CHECK(prim_zxz_closure(z).render() == "{I×Z : I ∈ Prim(Z)}");
        CHECK_THROWS_AS(prim_zxz_closure(z, false), ValidationError);
        CHECK(parse_zxz_primary("Z*(3)").render() == "Z×(3)");
        CHECK_THROWS_AS(parse_zxz_primary("(6)xZ"), ValidationError);
        CHECK_THROWS_AS(parse_zxz_primary("(2)x(3)"), ValidationError);
    }

    TEST_CASE("primary ideal parsing") {
        CHECK(parse_z_primary("0") == ZPrimaryIdeal::zero());
        CHECK(parse_z_primary("(0)") == ZPrimaryIdeal::zero());
        CHECK(parse_z_primary("8") == ZPrimaryIdeal::prime_power(2, 3));
        CHECK(parse_z_primary("2^3") == ZPrimaryIdeal::prime_power(2, 3));
        CHECK(parse_z_primary("(2^3)") == ZPrimaryIdeal::prime_power(2, 3));
        CHECK(parse_z_primary("(5)") == ZPrimaryIdeal::prime_power(5, 1));
        CHECK_THROWS_AS(parse_z_primary("12"), ValidationError);
        CHECK_THROWS_AS(parse_z_primary("1"), ValidationError);
        CHECK_THROWS_AS(parse_z_primary("abc"), ValidationError);
    }
}
