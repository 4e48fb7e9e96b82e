#include <doctest.h>

#include "hstlab/combinatorics.hpp"
#include "oracles.hpp"

using namespace hstlab;

TEST_CASE("label sets order lexicographically on their labels")
{
    CHECK(LabelSet{1, 2, 3} < LabelSet{1, 2, 4});
    CHECK(LabelSet{1, 2} < LabelSet{1, 2, 3});
    CHECK(LabelSet{1, 5} < LabelSet{2, 3});
    CHECK(LabelSet{2, 4}.to_string() == "{2,4}");
    CHECK_THROWS(LabelSet{0});
    CHECK_THROWS(LabelSet{3, 3});
    CHECK(subsets_of_size(5, 2).size() == 10);
}

TEST_CASE("gap parity counts labels above the gap")
{
    CHECK(gap_parity(LabelSet{1, 2, 3}, 4) == GapParity::Even);
    CHECK(gap_parity(LabelSet{2, 3, 4}, 1) == GapParity::Odd);
    CHECK_THROWS(gap_parity(LabelSet{1, 2}, 2));
}

TEST_CASE("classify_facet on small cyclic polytopes")
{
    const LabelSet five = LabelSet::range(1, 5);
    CHECK(classify_facet(LabelSet{1, 2}, five, 2) == FacetClass::Lower);
    CHECK(classify_facet(LabelSet{1, 5}, five, 2) == FacetClass::Upper);
    CHECK(classify_facet(LabelSet{1, 3}, five, 2) == FacetClass::NotAFacet);
    CHECK(classify_facet(LabelSet{1, 2, 4}, LabelSet::range(1, 4), 3) == FacetClass::Upper);
    CHECK_THROWS(classify_facet(LabelSet{1, 2, 3}, five, 2));
}

TEST_CASE("Gale evenness agrees with the exact hull on every facet candidate")
{
    for (int d = 1; d <= 4; ++d) {
        for (int n = d + 1; n <= 7; ++n) {
            const LabelSet v = LabelSet::range(1, n);
            for (LabelSet f : subsets_of_size(n, d)) {
                INFO("n=" << n << " d=" << d << " F=" << f.to_string());
                CHECK(classify_facet(f, v, d) == oracle::hull_facet_class(f, v, d));
            }
        }
    }
}

TEST_CASE("zig-zag admissibility examples")
{
    CHECK(zig_zag_admissible(LabelSet{1, 2, 3}, LabelSet{1, 2, 3}, 2));
    CHECK_FALSE(zig_zag_admissible(LabelSet{1, 3}, LabelSet{2, 4}, 1));
    CHECK(longest_zig_zag(LabelSet{1, 3}, LabelSet{2, 4}) == 4);
    // Crossing diagonals of a quadrilateral are not admissible in the plane either.
    CHECK_FALSE(zig_zag_admissible(LabelSet{1, 3}, LabelSet{2, 4}, 2));
    CHECK(zig_zag_admissible(LabelSet{1, 3}, LabelSet{2, 4}, 3));
}

TEST_CASE("zig-zag admissibility agrees with exact convex-hull intersection")
{
    for (int d = 1; d <= 3; ++d) {
        const int n = d == 3 ? 6 : 7;
        for (int k = 1; k <= d + 1; ++k) {
            const auto a_sets = subsets_of_size(n, k);
            const auto b_sets = subsets_of_size(n, d + 1);
            for (LabelSet a : a_sets) {
                for (LabelSet b : b_sets) {
                    INFO("d=" << d << " a=" << a.to_string() << " b=" << b.to_string());
                    CHECK(zig_zag_admissible(a, b, d) == oracle::geometrically_admissible(a, b, d));
                }
            }
        }
    }
}

TEST_CASE("facet split of a simplex")
{
    auto split = simplex_facet_split(LabelSet{1, 2, 3, 4});
    CHECK(split.lower == std::vector<Simplex>{LabelSet{1, 2, 3}, LabelSet{1, 3, 4}});
    CHECK(split.upper == std::vector<Simplex>{LabelSet{1, 2, 4}, LabelSet{2, 3, 4}});

    split = simplex_facet_split(LabelSet{1, 2});
    CHECK(split.lower == std::vector<Simplex>{LabelSet{1}});
    CHECK(split.upper == std::vector<Simplex>{LabelSet{2}});

    split = simplex_facet_split(LabelSet{1, 2, 3, 4, 5});
    CHECK(split.lower == std::vector<Simplex>{LabelSet{1, 2, 3, 4}, LabelSet{1, 2, 4, 5}, LabelSet{2, 3, 4, 5}});
    CHECK(split.upper == std::vector<Simplex>{LabelSet{1, 2, 3, 5}, LabelSet{1, 3, 4, 5}});
}

TEST_CASE("facet split matches the hull of the simplex one dimension up")
{
    for (int k = 2; k <= 6; ++k) {
        for (LabelSet s : subsets_of_size(7, k)) {
            const auto split = simplex_facet_split(s);
            for (LabelSet f : split.lower) CHECK(oracle::hull_facet_class(f, s, k - 1) == FacetClass::Lower);
            for (LabelSet f : split.upper) CHECK(oracle::hull_facet_class(f, s, k - 1) == FacetClass::Upper);
            CHECK(static_cast<int>(split.lower.size() + split.upper.size()) == k);
        }
    }
}

TEST_CASE("facets of C(n, d)")
{
    const auto pentagon = gale_facets(5, 2);
    CHECK(pentagon.size() == 5);
    for (const auto& f : pentagon) {
        const bool upper = f.facet == LabelSet{1, 5};
        CHECK(f.cls == (upper ? FacetClass::Upper : FacetClass::Lower));
    }
    CHECK(gale_facets(4, 3).size() == 4);
    CHECK(gale_facets_of(LabelSet::range(1, 6), 3, FacetClass::Lower) ==
          std::vector<Simplex>{LabelSet{1, 2, 3}, LabelSet{1, 3, 4}, LabelSet{1, 4, 5}, LabelSet{1, 5, 6}});
}

TEST_CASE("precedence of adjacent simplices")
{
    CHECK(precedes(LabelSet{1, 2, 3}, LabelSet{1, 3, 4}));
    CHECK_FALSE(precedes(LabelSet{1, 2, 3}, LabelSet{2, 3, 4}));
    CHECK_FALSE(precedes(LabelSet{1, 2, 3}, LabelSet{1, 2, 3}));
}
