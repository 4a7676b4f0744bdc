#include <doctest.h>

#include <set>

#include "primspec/theorems.hpp"

using namespace primspec;

namespace {

void check_all_pass(const TheoremReport& r) {
    for (const auto& e : r.entries) {
        CAPTURE(e.id);
        CAPTURE(e.witness);
        CHECK(e.status != TheoremStatus::fail);
        CHECK(e.status != TheoremStatus::skipped);
    }
}

}  // namespace

TEST_SUITE("theorems") {
    TEST_CASE("catalog ids are unique and reported in order") {
        const auto& cat = theorem_catalog();
        std::set<std::string> ids;
        for (const auto& [id, anchor] : cat) {
            CHECK_FALSE(anchor.empty());
            ids.insert(id);
        }
        CHECK(ids.size() == cat.size());
        const auto r = verify_theorems("Zn(6)");
        REQUIRE(r.entries.size() == cat.size());
        for (std::size_t i = 0; i < cat.size(); ++i) CHECK(r.entries[i].id == cat[i].first);
    }

    TEST_CASE("small rings pass every applicable check") {
        for (const char* s : {"Zn(8)", "Zn(6)", "Quot(GF(2), x^3)", "GF(7)", "Zn(12)", "Quot(Zn(4), x^2+x+1)"}) {
            CAPTURE(s);
            const auto r = verify_theorems(s);
            CHECK(r.spec == s);
            check_all_pass(r);
            CHECK(r.all_pass());
        }
    }

    TEST_CASE("biconditionals record both sides") {
        const auto r = verify_theorems("Zn(8)");
        const auto* t0 = r.find("p_ring_iff_t0");
        REQUIRE(t0);
        CHECK(t0->lhs == std::optional<bool>(false));
        CHECK(t0->rhs == std::optional<bool>(false));
        const auto* loc = r.find("local_iff_supercompact");
        REQUIRE(loc);
        CHECK(loc->lhs == std::optional<bool>(true));
        CHECK(loc->rhs == std::optional<bool>(true));
        CHECK(r.find("no_such_result") == nullptr);
    }

    TEST_CASE("W-ring results are not applicable outside W-rings") {
        const auto r = verify_theorems("Quot(Zn(4), x^2)");
        for (const char* id : {"w_ring_t0_iff_sober", "w_ring_irreducible_closed_are_point_varieties",
                               "w_ring_spectral_iff_t0"}) {
            const auto* e = r.find(id);
            REQUIRE(e);
            CHECK(e->status == TheoremStatus::not_applicable);
            CHECK_FALSE(e->applicable);
        }
        check_all_pass(r);
    }

    TEST_CASE("covering condition applies to every finite ring") {
        // Every finite ring is zero-dimensional, so the condition always applies.
        for (const char* s : {"Zn(30)", "Zn(12)", "Zn(7)"}) {
            const auto r = verify_theorems(s);
            const auto* e = r.find("star_condition_two_primes");
            REQUIRE(e);
            CHECK(e->applicable);
            CHECK(e->status == TheoremStatus::pass);
        }
        const auto z30 = verify_theorems("Zn(30)");
        CHECK(z30.find("star_condition_two_primes")->lhs == std::optional<bool>(false));
        const auto z12 = verify_theorems("Zn(12)");
        CHECK(z12.find("star_condition_two_primes")->lhs == std::optional<bool>(true));
    }

    TEST_CASE("cap overflow marks every entry skipped") {
        AnalysisConfig cfg;
        cfg.max_ideals = 3;
        const auto r = verify_theorems("Zn(72)", cfg);
        REQUIRE(r.entries.size() == theorem_catalog().size());
        CHECK(r.count(TheoremStatus::skipped) == r.entries.size());
        CHECK_FALSE(r.all_pass());
        CHECK_FALSE(r.entries[0].note.empty());
    }

    TEST_CASE("runs are reproducible for a fixed seed") {
        AnalysisConfig cfg;
        cfg.seed = 11;
        const auto a = verify_theorems("Zn(64)", cfg), b = verify_theorems("Zn(64)", cfg);
        REQUIRE(a.entries.size() == b.entries.size());
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            CHECK(a.entries[i].instances == b.entries[i].instances);
            CHECK(a.entries[i].status == b.entries[i].status);
        }
    }

    TEST_CASE("status names") {
        CHECK(std::string(to_string(TheoremStatus::pass)) == "pass");
        CHECK(std::string(to_string(TheoremStatus::fail)) == "fail");
        CHECK(std::string(to_string(TheoremStatus::not_applicable)) == "not_applicable");
        CHECK(std::string(to_string(TheoremStatus::skipped)) == "skipped");
    }
}
