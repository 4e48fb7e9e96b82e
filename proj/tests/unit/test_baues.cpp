#include <doctest.h>

#include <algorithm>

#include "hstlab/baues.hpp"
#include "hstlab/topology.hpp"
#include "oracles.hpp"

using namespace hstlab;

TEST_CASE("polytopal subdivisions")
{
    const PolytopalSubdivision cut(5, 2, {LabelSet{1, 3, 4, 5}, LabelSet{1, 2, 3}});
    CHECK(cut.cells() == std::vector<LabelSet>{LabelSet{1, 2, 3}, LabelSet{1, 3, 4, 5}});
    CHECK(cut.is_proper());
    CHECK_FALSE(cut.is_triangulation());
    CHECK(validate_subdivision(cut).empty());
    CHECK(PolytopalSubdivision::from_json(cut.to_json()) == cut);
    CHECK(cut.to_json() == R"({"n":5,"d":2,"cells":[[1,2,3],[1,3,4,5]]})");

    CHECK_FALSE(PolytopalSubdivision(5, 2, {LabelSet::range(1, 5)}).is_proper());
    CHECK_FALSE(validate_subdivision(PolytopalSubdivision(4, 2, {LabelSet{1, 2, 4}, LabelSet{1, 3, 4}})).empty());
    CHECK_FALSE(validate_subdivision(PolytopalSubdivision(5, 2, {LabelSet{1, 2, 3}, LabelSet{2, 3, 4, 5}})).empty());
    CHECK_THROWS(PolytopalSubdivision(5, 2, {LabelSet{1, 2, 3}, LabelSet{1, 2, 3}}));
}

TEST_CASE("phi sends a subdivision to the interval of its refinements")
{
    const auto t = bottom(6, 2);
    const PolytopalSubdivision as_cells(6, 2, t.simplices());
    const auto pair = phi(as_cells);
    CHECK(pair.lower == t);
    CHECK(pair.upper == t);

    const PolytopalSubdivision cut(5, 2, {LabelSet{1, 2, 3}, LabelSet{1, 3, 4, 5}});
    const auto iv = phi(cut);
    CHECK(iv.lower.simplices() == std::vector<Simplex>{LabelSet{1, 2, 3}, LabelSet{1, 3, 4}, LabelSet{1, 4, 5}});
    CHECK(iv.upper.simplices() == std::vector<Simplex>{LabelSet{1, 2, 3}, LabelSet{1, 3, 5}, LabelSet{3, 4, 5}});
    CHECK(interval_to_subdivision(iv.lower, iv.upper) == cut);
    CHECK(interval_to_subdivision(t, t) == as_cells);

    const auto e = enumerate_triangulations(5, 2);
    const auto s2 = build_s2(e);
    const Interval in_s2{*e.index_of(iv.lower), *e.index_of(iv.upper)};
    int members = 0;
    for (int x = 0; x < s2.size(); ++x)
        if (s2.leq(in_s2.lower, x) && s2.leq(x, in_s2.upper)) ++members;
    CHECK(members == 2);
    CHECK(interval_to_subdivision(e, s2, in_s2) == cut);
    CHECK_THROWS_AS(phi(PolytopalSubdivision(5, 2, {LabelSet::range(1, 5)})), std::invalid_argument);
}

TEST_CASE("non-coatomic intervals have no subdivision")
{
    const auto e = enumerate_triangulations(6, 2);
    const auto s2 = build_s2(e);
    bool found = false;
    for (int x = 0; x < s2.size() && !found; ++x)
        for (int y = 0; y < s2.size() && !found; ++y)
            if (s2.leq(x, y) && !is_coatomic(s2, {x, y})) {
                CHECK_THROWS_AS(interval_to_subdivision(e, s2, {x, y}), std::invalid_argument);
                found = true;
            }
    CHECK(found);
}

TEST_CASE("refinement")
{
    const PolytopalSubdivision cut(5, 2, {LabelSet{1, 2, 3}, LabelSet{1, 3, 4, 5}});
    const PolytopalSubdivision fine(5, 2, bottom(5, 2).simplices());
    CHECK(refines(fine, cut));
    CHECK_FALSE(refines(cut, fine));
    CHECK(refines(cut, cut));
}

TEST_CASE("dissection oracle counts")
{
    CHECK(dissection_oracle_d2(4).size() == 2);
    CHECK(dissection_oracle_d2(5).size() == 10);
    for (int n = 4; n <= 7; ++n) {
        CHECK(dissection_oracle_d2(n).size() == oracle::polygon_dissections(n) - 1);
        for (const auto& dis : dissection_oracle_d2(n)) CHECK(validate_subdivision(dis.subdivision).empty());
    }
}

TEST_CASE("Baues poset of the pentagon is a 10-cycle")
{
    const auto b = baues_poset(5, 2);
    CHECK(b.order_matches_intervals);
    REQUIRE(b.poset.size() == 10);
    CHECK(b.poset.cover_pairs().size() == 10);
    for (int x = 0; x < 10; ++x)
        CHECK(b.poset.upper_covers(x).size() + b.poset.lower_covers(x).size() == 2);
    CHECK(sphere_certificate(b.poset, 1).passed);
}

TEST_CASE("Baues poset agrees with the dissection poset")
{
    for (int n = 4; n <= 7; ++n) {
        const auto b = baues_poset(n, 2);
        const auto dis = dissection_poset(n);
        INFO("n=" << n);
        CHECK(b.order_matches_intervals);
        CHECK_FALSE(compare_relations(b.poset, dis).has_value());
    }
}

TEST_CASE("Baues posets of C(n, 1) are sphere-like")
{
    for (int n = 3; n <= 6; ++n) {
        const auto b = baues_poset(n, 1);
        CHECK(b.order_matches_intervals);
        CHECK(sphere_certificate(b.poset, n - 3).passed);
    }
}
