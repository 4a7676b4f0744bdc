#include <doctest.h>

#include "primspec/errors.hpp"
#include "primspec/ideals.hpp"
#include "primspec/report.hpp"
#include "support/oracles.hpp"

using namespace primspec;

namespace {

IdealLattice lattice(const char* spec) { return enumerate_ideals(make_ring(spec)); }

IdealId by_label(const IdealLattice& lat, const std::string& label) {
    for (IdealId i = 0; i < lat.size(); ++i)
        if (lat.render(i) == label) return i;
    FAIL("no ideal labelled " << label);
    return 0;
}

std::vector<std::string> labels(const IdealLattice& lat) {
    std::vector<std::string> out;
    for (IdealId i = 0; i < lat.size(); ++i) out.push_back(lat.render(i));
    return out;
}

std::size_t divisor_count(std::uint64_t n) {
    std::size_t c = 0;
    for (std::uint64_t d = 1; d <= n; ++d) c += n % d == 0;
    return c;
}

}  // namespace

TEST_SUITE("ideals") {
    TEST_CASE("generated ideals") {
        const auto z12 = make_ring("Zn(12)");
        const Element four[] = {4};
        CHECK(ideal_generated_by(*z12, four).members() == std::vector<std::size_t>{0, 4, 8});
        CHECK(ideal_generated_by(*z12, std::span<const Element>{}).members() == std::vector<std::size_t>{0});
        const auto q = make_ring("Quot(GF(2), x^3)");
        const Element x2[] = {*q->find_element("x^2")};
        const auto ideal = ideal_generated_by(*q, x2);
        CHECK(ideal.count() == 2);
        CHECK(ideal.test(q->zero()));
        CHECK(ideal.test(x2[0]));
    }

    TEST_CASE("enumeration examples") {
        CHECK(labels(lattice("Zn(12)")) == std::vector<std::string>{"(0)", "(6)", "(4)", "(3)", "(2)", "(1)"});
        CHECK(labels(lattice("Quot(Zn(4), x^2+x+1)")) == std::vector<std::string>{"(0)", "(2)", "(1)"});
        CHECK(labels(lattice("GF(7)")) == std::vector<std::string>{"(0)", "(1)"});
        CHECK(labels(lattice("Quot(GF(2), x^3)")) == std::vector<std::string>{"(0)", "(x^2)", "(x)", "(1)"});
    }

    TEST_CASE("Zn(n) has one ideal per divisor") {
        for (std::uint64_t n = 2; n <= 72; ++n) {
            CAPTURE(n);
            CHECK(lattice(("Zn(" + std::to_string(n) + ")").c_str()).size() == divisor_count(n));
        }
    }

    TEST_CASE("enumeration agrees with brute-force subset scan") {
        for (const char* spec : {"Zn(2)", "Zn(6)", "Zn(8)", "Zn(12)", "Zn(16)", "GF(4)", "GF(8)", "GF(9)",
                                 "Quot(GF(2), x^2)", "Quot(GF(2), x^3)", "Quot(GF(3), x^2)", "Quot(Zn(4), x^2)",
                                 "Quot(Zn(4), x^2+x+1)", "Prod(GF(2), GF(2))", "Prod(Zn(2), Zn(3))",
                                 "Prod(Zn(2), Zn(4))", "Prod(Zn(2), Quot(GF(2), x^2))", "Quot(GF(2), x^4)",
                                 "Quot(Zn(4), x^2+1)", "Quot(GF(2), x^4+x^2)"}) {
            CAPTURE(spec);
            const auto ring = make_ring(spec);
            const auto lat = enumerate_ideals(ring);
            std::set<std::vector<Element>> got;
            for (const auto& info : lat.ideals()) {
                std::vector<Element> m;
                for (auto i : info.members.members()) m.push_back(static_cast<Element>(i));
                got.insert(m);
            }
            CHECK(got == oracle::all_ideals_by_subsets(*ring));
            CHECK(got.size() == lat.size());
            for (const auto& info : lat.ideals()) CHECK(is_ideal(*ring, info.members));
        }
    }

    TEST_CASE("arithmetic examples") {
        const auto z12 = lattice("Zn(12)");
        const auto i4 = by_label(z12, "(4)"), i3 = by_label(z12, "(3)");
        CHECK(z12.product(i4, i3) == z12.zero_ideal());
        CHECK(z12.intersection(i4, i3) == z12.zero_ideal());
        CHECK(z12.sum(i4, i3) == z12.unit_ideal());
        CHECK(z12.render(z12.intersection(by_label(z12, "(2)"), i3)) == "(6)");
        CHECK(z12.render(z12.product(by_label(z12, "(2)"), by_label(z12, "(6)"))) == "(0)");
        CHECK(z12.render(z12.product(by_label(z12, "(2)"), by_label(z12, "(2)"))) == "(4)");
        const auto z6 = lattice("Zn(6)");
        CHECK(z6.intersection(by_label(z6, "(2)"), by_label(z6, "(3)")) == z6.zero_ideal());
    }

    TEST_CASE("radical examples") {
        const auto z8 = lattice("Zn(8)");
        CHECK(z8.render(z8.radical(by_label(z8, "(4)"))) == "(2)");
        CHECK(z8.render(z8.nilradical()) == "(2)");
        const auto z12 = lattice("Zn(12)");
        CHECK(z12.render(z12.radical(by_label(z12, "(6)"))) == "(6)");
        CHECK(z12.radical(z12.unit_ideal()) == z12.unit_ideal());
        CHECK(lattice("Zn(6)").nilradical() == 0);
        const auto q = lattice("Quot(GF(2), x^3)");
        CHECK(q.render(q.nilradical()) == "(x)");
    }

    TEST_CASE("classification examples") {
        const auto z8 = lattice("Zn(8)");
        auto s = z8.classify(z8.zero_ideal());
        CHECK_FALSE(s.is_prime);
        CHECK_FALSE(s.is_maximal);
        CHECK(s.is_primary);
        const auto z6 = lattice("Zn(6)");
        s = z6.classify(z6.zero_ideal());
        CHECK_FALSE(s.is_prime);
        CHECK_FALSE(s.is_maximal);
        CHECK_FALSE(s.is_primary);
        const auto z12 = lattice("Zn(12)");
        s = z12.classify(by_label(z12, "(2)"));
        CHECK(s.is_prime);
        CHECK(s.is_maximal);
        CHECK(s.is_primary);
        s = z12.classify(z12.unit_ideal());
        CHECK_FALSE(s.is_primary);
    }

    TEST_CASE("flags agree with a direct pair scan") {
        for (const auto& e : default_corpus()) {
            CAPTURE(e.spec);
            const auto lat = enumerate_ideals(make_ring(e.spec));
            const auto& r = lat.ring();
            const auto n = static_cast<Element>(r.size());
            for (IdealId id = 0; id < lat.size(); ++id) {
                const auto& I = lat[id];
                const auto& rad = lat[I.radical].members;
                for (Element x = 0; x < n; ++x) {
                    bool some_power = false;
                    Element p = x;
                    for (std::size_t k = 0; k <= n; ++k, p = r.mul(p, x))
                        if (I.members.test(p)) some_power = true;
                    REQUIRE(rad.test(x) == some_power);
                }
                bool prime = I.proper, primary = I.proper;
                for (Element a = 0; a < n; ++a)
                    for (Element b = 0; b < n; ++b) {
                        if (!I.members.test(r.mul(a, b))) continue;
                        if (!I.members.test(a) && !I.members.test(b)) prime = false;
                        if (!I.members.test(a) && !rad.test(b)) primary = false;
                    }
                CHECK(I.prime == prime);
                CHECK(I.primary == primary);
                bool maximal = I.proper;
                for (IdealId j = 0; j < lat.size(); ++j)
                    if (j != id && lat[j].proper && I.members.is_subset_of(lat[j].members)) maximal = false;
                CHECK(I.maximal == maximal);
            }
        }
    }

    TEST_CASE("lattice invariants over the corpus") {
        for (const auto& e : default_corpus()) {
            CAPTURE(e.spec);
            const auto lat = enumerate_ideals(make_ring(e.spec));
            for (IdealId i = 0; i < lat.size(); ++i) {
                const auto& I = lat[i];
                if (I.maximal) CHECK(I.prime);
                if (I.prime) CHECK(I.primary);
                if (I.primary) CHECK(lat[I.radical].prime);
                CHECK(lat.radical(I.radical) == I.radical);
                for (IdealId j = 0; j < lat.size(); ++j) {
                    const auto ri = lat.radical(i), rj = lat.radical(j);
                    CHECK(lat.radical(lat.intersection(i, j)) == lat.intersection(ri, rj));
                    CHECK(lat.radical(lat.product(i, j)) == lat.intersection(ri, rj));
                    if (I.members.is_subset_of(lat[j].members))
                        CHECK(lat[ri].members.is_subset_of(lat[rj].members));
                }
            }
        }
    }

    TEST_CASE("nilpotent elements are exactly the nilradical") {
        for (const auto& e : default_corpus()) {
            const auto lat = enumerate_ideals(make_ring(e.spec));
            const auto& nil = lat[lat.nilradical()].members;
            for (Element x = 0; x < lat.ring().size(); ++x)
                CHECK(unit_and_nilpotent_flags(lat.ring(), x).is_nilpotent == nil.test(x));
        }
    }

    TEST_CASE("ideal cap") {
        CHECK_THROWS_AS(enumerate_ideals(make_ring("Zn(72)"), 5), CapExceeded);
        CHECK_NOTHROW(enumerate_ideals(make_ring("Zn(72)"), 12));
    }
}
