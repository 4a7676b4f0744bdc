#include <doctest.h>

#include "primspec/classify.hpp"
#include "primspec/report.hpp"

using namespace primspec;

namespace {

struct Built {
    std::shared_ptr<const IdealLattice> lat;
    Spectrum prim;
};

Built built(const std::string& s) {
    auto lat = std::make_shared<const IdealLattice>(enumerate_ideals(make_ring(s)));
    return {lat, build_spectrum(lat, SpectrumKind::primary)};
}

IdealId by_label(const IdealLattice& lat, const std::string& label) {
    for (IdealId i = 0; i < lat.size(); ++i)
        if (lat.render(i) == label) return i;
    FAIL("no ideal labelled " << label);
    return 0;
}

std::size_t nonzero_primes(const IdealLattice& lat) {
    std::size_t c = 0;
    for (auto p : lat.prime_ideals()) c += p != lat.zero_ideal();
    return c;
}

}  // namespace

TEST_SUITE("classify") {
    TEST_CASE("ring classification examples") {
        auto c = classify_ring(*built("Zn(8)").lat);
        CHECK(c.is_local);
        CHECK_FALSE(c.is_p_ring);
        CHECK_FALSE(c.is_field);
        c = classify_ring(*built("Zn(6)").lat);
        CHECK_FALSE(c.is_local);
        CHECK(c.is_p_ring);
        c = classify_ring(*built("GF(7)").lat);
        CHECK(c.is_field);
        CHECK(c.is_local);
        CHECK(c.is_p_ring);
    }

    TEST_CASE("classification invariants over the corpus") {
        for (const auto& e : default_corpus()) {
            CAPTURE(e.spec);
            const auto c = classify_ring(*built(e.spec).lat);
            if (c.is_field) CHECK(c.is_local);
            CHECK(c.is_zero_dimensional);
            CHECK(c.krull_dimension == 0);
            for (auto m : c.maximal_ideals)
                CHECK(std::find(c.prime_ideals.begin(), c.prime_ideals.end(), m) != c.prime_ideals.end());
            for (auto p : c.prime_ideals)
                CHECK(std::find(c.primary_ideals.begin(), c.primary_ideals.end(), p) != c.primary_ideals.end());
        }
    }

    TEST_CASE("W-rings") {
        CHECK(is_w_ring(*built("Zn(12)").lat).is_w_ring == std::optional<bool>(true));
        CHECK(is_w_ring(*built("Zn(8)").lat).is_w_ring == std::optional<bool>(true));
        CHECK(is_w_ring(*built("Zn(36)").lat).is_w_ring == std::optional<bool>(true));
        // Local, every proper ideal primary, but some ideal has two irredundant representations.
        const auto r = is_w_ring(*built("Quot(Zn(4), x^2)").lat);
        CHECK(r.is_w_ring == std::optional<bool>(false));
        REQUIRE(r.ambiguous_ideal.has_value());
        CHECK(r.representations.size() >= 2);
        // Over the exhaustive limit: unknown rather than a guess.
        CHECK_FALSE(is_w_ring(*built("Zn(64)").lat, 3).is_w_ring.has_value());
    }

    TEST_CASE("W-ring scan agrees with a direct representation count") {
        for (const char* s : {"Zn(12)", "Zn(30)", "Quot(Zn(4), x^2)", "Prod(Zn(4), Zn(9))", "Quot(GF(2), x^3)"}) {
            CAPTURE(s);
            const auto b = built(s);
            const auto& lat = *b.lat;
            const auto prim = lat.primary_ideals();
            const std::size_t k = prim.size();
            std::vector<std::size_t> count(lat.size(), 0);
            for (std::size_t m = 1; m < (std::size_t{1} << k); ++m) {
                auto inter = [&](std::size_t mask) {
                    BitSet acc = lat[lat.unit_ideal()].members;
                    for (std::size_t i = 0; i < k; ++i)
                        if (mask >> i & 1) acc &= lat[prim[i]].members;
                    return acc;
                };
                const auto full = inter(m);
                bool irredundant = true;
                for (std::size_t i = 0; i < k; ++i)
                    if ((m >> i & 1) && inter(m & ~(std::size_t{1} << i)) == full) irredundant = false;
                if (irredundant) ++count[lat.id_of(full)];
            }
            bool w = true;
            for (IdealId i = 0; i < lat.size(); ++i)
                if (lat[i].proper && count[i] != 1) w = false;
            CHECK(is_w_ring(lat).is_w_ring == std::optional<bool>(w));
        }
    }

    TEST_CASE("star condition examples") {
        auto z30 = built("Zn(30)");
        const auto r30 = star_condition(z30.prim);
        CHECK_FALSE(r30.holds);
        REQUIRE(r30.r.has_value());
        BitSet un = z30.prim.empty_set();
        for (auto s : r30.family) {
            CHECK_FALSE(z30.prim.basic_open(*r30.r).is_subset_of(z30.prim.basic_open(s)));
            un |= z30.prim.basic_open(s);
        }
        CHECK(z30.prim.basic_open(*r30.r).is_subset_of(un));
        CHECK(star_condition(built("Zn(12)").prim).holds);
        CHECK(star_condition(built("GF(7)").prim).holds);
    }

    TEST_CASE("star condition including units fails once there are two maximal ideals") {
        // X_1 = Prim is then covered by basic opens of non-units.
        auto z12 = built("Zn(12)");
        const auto lit = star_condition(z12.prim, StarScope::all_nonzero);
        CHECK_FALSE(lit.holds);
        CHECK(z12.prim.basic_open(*lit.r) == z12.prim.all_points());
        CHECK(star_condition(built("Zn(8)").prim, StarScope::all_nonzero).holds);
    }

    TEST_CASE("star condition agrees with counting nonzero primes") {
        for (const auto& e : default_corpus()) {
            CAPTURE(e.spec);
            auto b = built(e.spec);
            CHECK(star_condition(b.prim).holds == (nonzero_primes(*b.lat) <= 2));
        }
    }

    TEST_CASE("A conditions examples") {
        auto z8 = built("Zn(8)");
        std::vector<IdealId> all(z8.lat->size());
        for (IdealId i = 0; i < all.size(); ++i) all[i] = i;
        CHECK(a_conditions(*z8.lat, all, A2Mode::original).a2);
        CHECK(a_conditions(*z8.lat, all, A2Mode::radical_form).a2);

        auto z6 = built("Zn(6)");
        const std::vector<IdealId> fam = {by_label(*z6.lat, "(2)"), by_label(*z6.lat, "(3)")};
        for (auto mode : {A2Mode::original, A2Mode::radical_form}) {
            const auto r = a_conditions(*z6.lat, fam, mode);
            CHECK(r.a1);
            CHECK(r.a2);
        }
        const auto zero = a_conditions(*z6.lat, {z6.lat->zero_ideal()}, A2Mode::radical_form);
        CHECK(zero.a2);
        CHECK(zero.a1);
        CHECK_FALSE(a_conditions(*z6.lat, {by_label(*z6.lat, "(2)")}, A2Mode::original).a1);
        CHECK_THROWS_AS(a_conditions(*z6.lat, {}, A2Mode::original), std::invalid_argument);
    }

    TEST_CASE("A2 modes agree with an explicit uniform exponent search") {
        for (const char* s : {"Zn(72)", "Zn(64)", "Prod(Zn(4), Zn(9))", "Quot(Zn(8), x^2+x+1)"}) {
            CAPTURE(s);
            auto b = built(s);
            const auto& lat = *b.lat;
            const auto& r = lat.ring();
            std::vector<IdealId> all(lat.size());
            for (IdealId i = 0; i < all.size(); ++i) all[i] = i;
            // In a finite ring the exponent |R| works for every element.
            bool uniform = true;
            for (Element a = 0; a < r.size(); ++a) {
                const Element an = r.pow(a, r.size());
                for (auto id : all)
                    if (lat[lat.radical(id)].members.test(a) && !lat[id].members.test(an)) uniform = false;
            }
            CHECK(uniform);
            CHECK(a_conditions(lat, all, A2Mode::original).a2 == uniform);
            CHECK(a_conditions(lat, all, A2Mode::radical_form).a2 == uniform);
        }
    }

    TEST_CASE("radical form samples large families deterministically") {
        auto b = built("Zn(72)");
        std::vector<IdealId> all(b.lat->size());
        for (IdealId i = 0; i < all.size(); ++i) all[i] = i;
        const auto r1 = a_conditions(*b.lat, all, A2Mode::radical_form, 3, 50, 9, 4);
        const auto r2 = a_conditions(*b.lat, all, A2Mode::radical_form, 3, 50, 9, 4);
        CHECK(r1.a2);
        CHECK(r1.subfamilies_checked == r2.subfamilies_checked);
        // C(12,1) + C(12,2) + C(12,3) + 50 random larger subfamilies.
        CHECK(r1.subfamilies_checked == 12 + 66 + 220 + 50);
    }
}
