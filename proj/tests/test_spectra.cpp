#include <doctest.h>

#include "primspec/report.hpp"
#include "primspec/spectra.hpp"

using namespace primspec;

namespace {

struct Spaces {
    std::shared_ptr<const IdealLattice> lat;
    Spectrum prim, spec;
};

Spaces spaces(const std::string& s) {
    auto lat = std::make_shared<const IdealLattice>(enumerate_ideals(make_ring(s)));
    return {lat, build_spectrum(lat, SpectrumKind::primary), build_spectrum(lat, SpectrumKind::prime)};
}

std::vector<std::string> point_labels(const Spectrum& sp, const BitSet& s) {
    std::vector<std::string> out;
    s.for_each([&](std::size_t pt) { out.push_back(sp.lattice().render(sp.point_ideal(pt))); });
    return out;
}

std::vector<std::string> all_labels(const Spectrum& sp) { return point_labels(sp, sp.all_points()); }

IdealId by_label(const IdealLattice& lat, const std::string& label) {
    for (IdealId i = 0; i < lat.size(); ++i)
        if (lat.render(i) == label) return i;
    FAIL("no ideal labelled " << label);
    return 0;
}

BitSet points_named(const Spectrum& sp, std::initializer_list<const char*> names) {
    BitSet out = sp.empty_set();
    for (auto n : names) out.set(*sp.point_of(by_label(sp.lattice(), n)));
    return out;
}

}  // namespace

TEST_SUITE("spectra") {
    TEST_CASE("point sets") {
        auto z8 = spaces("Zn(8)");
        CHECK(all_labels(z8.prim) == std::vector<std::string>{"(0)", "(4)", "(2)"});
        CHECK(all_labels(z8.spec) == std::vector<std::string>{"(2)"});
        auto z6 = spaces("Zn(6)");
        CHECK(all_labels(z6.prim) == std::vector<std::string>{"(3)", "(2)"});
        auto gr = spaces("Quot(Zn(4), x^2+x+1)");
        CHECK(all_labels(gr.spec) == std::vector<std::string>{"(2)"});
        CHECK(all_labels(gr.prim) == std::vector<std::string>{"(0)", "(2)"});
    }

    TEST_CASE("primary varieties") {
        auto z8 = spaces("Zn(8)");
        CHECK(z8.prim.variety(by_label(*z8.lat, "(4)")) == z8.prim.all_points());
        CHECK(z8.prim.variety(z8.lat->unit_ideal()).empty());
        CHECK(z8.prim.closed_family().size() == 2);
        auto z6 = spaces("Zn(6)");
        CHECK(point_labels(z6.prim, z6.prim.variety(by_label(*z6.lat, "(2)"))) == std::vector<std::string>{"(2)"});
        CHECK(z6.prim.closed_family().size() == 4);
        const Element s[] = {2};
        CHECK(z6.prim.variety_of_elements(s) == z6.prim.variety(by_label(*z6.lat, "(2)")));
    }

    TEST_CASE("prime varieties") {
        auto z8 = spaces("Zn(8)");
        CHECK(point_labels(z8.spec, z8.spec.variety(by_label(*z8.lat, "(4)"))) == std::vector<std::string>{"(2)"});
        auto z6 = spaces("Zn(6)");
        CHECK(z6.spec.variety(z6.lat->zero_ideal()) == z6.spec.all_points());
        CHECK(z6.spec.variety(z6.lat->unit_ideal()).empty());
    }

    TEST_CASE("closed families keep every generating ideal") {
        auto z8 = spaces("Zn(8)");
        const auto& fam = z8.prim.closed_family();
        REQUIRE(fam.size() == 2);
        CHECK(fam[0].points.empty());
        CHECK(fam[0].generators == std::vector<IdealId>{z8.lat->unit_ideal()});
        CHECK(fam[1].generators.size() == 3);
        for (IdealId i = 0; i < z8.lat->size(); ++i)
            CHECK(z8.prim.closed_family()[z8.prim.variety_index(i)].points == z8.prim.variety(i));
    }

    TEST_CASE("basic opens") {
        for (const char* s : {"Zn(8)", "Zn(6)", "Zn(12)", "GF(7)"}) {
            auto sp = spaces(s);
            CHECK(sp.prim.basic_open(sp.lat->ring().one()) == sp.prim.all_points());
            CHECK(sp.prim.basic_open(sp.lat->ring().zero()).empty());
        }
        auto z8 = spaces("Zn(8)");
        CHECK(z8.prim.basic_open(2).empty());
        auto z6 = spaces("Zn(6)");
        CHECK(point_labels(z6.prim, z6.prim.basic_open(2)) == std::vector<std::string>{"(3)"});
    }

    TEST_CASE("xi") {
        auto z8 = spaces("Zn(8)");
        CHECK(z8.lat->render(z8.prim.xi(points_named(z8.prim, {"(2)", "(4)"}))) == "(4)");
        CHECK(z8.lat->render(z8.prim.xi(points_named(z8.prim, {"(2)"}))) == "(2)");
        CHECK(z8.prim.xi(z8.prim.empty_set()) == z8.lat->unit_ideal());
        auto z6 = spaces("Zn(6)");
        CHECK(z6.prim.xi(z6.prim.all_points()) == z6.lat->zero_ideal());
    }

    TEST_CASE("closure") {
        auto z8 = spaces("Zn(8)");
        CHECK(z8.prim.closure(points_named(z8.prim, {"(4)"})) == z8.prim.all_points());
        auto z6 = spaces("Zn(6)");
        const auto y = points_named(z6.prim, {"(2)"});
        CHECK(z6.prim.closure(y) == y);
        CHECK(z6.prim.closure(z6.prim.empty_set()).empty());
    }

    TEST_CASE("basic opens form a base") {
        CHECK(spaces("Zn(8)").prim.is_base().is_base);
        CHECK(spaces("Zn(6)").prim.is_base().is_base);
        CHECK(spaces("Zn(30)").spec.is_base().is_base);
        const auto t = FiniteTopology::from_closed_sets(2, {BitSet(2), BitSet(2, {0}), BitSet(2, {1}), BitSet::full(2)});
        const auto r = is_base(t, {BitSet::full(2)});
        CHECK_FALSE(r.is_base);
        CHECK(r.counterexample.has_value());
    }

    TEST_CASE("variety laws over the corpus") {
        for (const auto& e : default_corpus()) {
            CAPTURE(e.spec);
            auto sp = spaces(e.spec);
            const auto& lat = *sp.lat;
            CHECK(sp.prim.variety(lat.zero_ideal()) == sp.prim.all_points());
            CHECK(sp.prim.variety(lat.unit_ideal()).empty());
            for (IdealId i = 0; i < lat.size(); ++i) {
                CHECK(sp.prim.variety(i) == sp.prim.variety(lat.radical(i)));
                for (IdealId j = 0; j < lat.size(); ++j) {
                    const auto un = sp.prim.variety(i) | sp.prim.variety(j);
                    CHECK(sp.prim.variety(lat.intersection(i, j)) == un);
                    CHECK(sp.prim.variety(lat.product(i, j)) == un);
                    CHECK(sp.prim.variety(lat.sum(i, j)) == (sp.prim.variety(i) & sp.prim.variety(j)));
                    CHECK(sp.spec.variety(lat.intersection(i, j)) == (sp.spec.variety(i) | sp.spec.variety(j)));
                }
            }
            for (std::size_t q = 0; q < sp.prim.point_count(); ++q)
                CHECK(sp.prim.closure(BitSet(sp.prim.point_count(), {q})) == sp.prim.variety(sp.prim.point_ideal(q)));
        }
    }
}
