#include <doctest.h>

#include <algorithm>
#include <set>

#include "hstlab/geometry.hpp"
#include "hstlab/stasheff_tamari.hpp"
#include "hstlab/triangulation.hpp"

using namespace hstlab;

namespace {

bool has_violation(const ValidationReport& r, Violation v)
{
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const ViolationEntry& e) { return e.kind == v; });
}

} // namespace

TEST_CASE("validate accepts triangulations and rejects non-triangulations")
{
    CHECK(validate({LabelSet{1, 2, 3}, LabelSet{1, 3, 4}}, 4, 2).ok());
    CHECK(validate({LabelSet{1, 2, 4}, LabelSet{2, 3, 4}}, 4, 2).ok());

    const auto gap = validate({LabelSet{1, 2, 3}, LabelSet{2, 3, 4}}, 4, 2);
    CHECK_FALSE(gap.ok());
    CHECK((has_violation(gap, Violation::FaceCoverage) || has_violation(gap, Violation::Volume)));

    const auto crossing = validate({LabelSet{1, 2, 4}, LabelSet{1, 3, 4}}, 4, 2);
    CHECK_FALSE(crossing.ok());

    CHECK(has_violation(validate({LabelSet{1, 2}}, 4, 2), Violation::Shape));
    CHECK_THROWS(Triangulation(4, 2, {LabelSet{1, 2}}));
}

TEST_CASE("bottom and top are the lower and upper facets one dimension up")
{
    CHECK(bottom(4, 2).simplices() == std::vector<Simplex>{LabelSet{1, 2, 3}, LabelSet{1, 3, 4}});
    CHECK(top(4, 2).simplices() == std::vector<Simplex>{LabelSet{1, 2, 4}, LabelSet{2, 3, 4}});
    for (int d = 1; d <= 4; ++d)
        for (int n = d + 1; n <= 9; ++n) {
            CHECK(validate(bottom(n, d)).ok());
            CHECK(validate(top(n, d)).ok());
        }
}

TEST_CASE("flips between bottom and top of C(d+2, d)")
{
    for (int d = 1; d <= 5; ++d) {
        const auto b = bottom(d + 2, d);
        const auto flips = increasing_flips(b);
        REQUIRE(flips.size() == 1);
        CHECK(flips[0] == LabelSet::range(1, d + 2));
        CHECK(apply_flip(b, flips[0]) == top(d + 2, d));
        CHECK(increasing_flips(top(d + 2, d)).empty());
        CHECK(apply_decreasing_flip(top(d + 2, d), flips[0]) == b);
    }
    CHECK_THROWS(apply_flip(top(4, 2), LabelSet{1, 2, 3, 4}));
}

TEST_CASE("JSON round trip")
{
    const auto t = bottom(6, 3);
    CHECK(Triangulation::from_json(t.to_json()) == t);
    CHECK(bottom(4, 2).to_json() == R"({"n":4,"d":2,"simplices":[[1,2,3],[1,3,4]]})");
}

TEST_CASE("maps between C(n, d) and C(n-1, d)")
{
    for (int d = 1; d <= 3; ++d) {
        for (int n = d + 3; n <= 7; ++n) {
            const auto p = enumerate_triangulations(n, d);
            const auto q = enumerate_triangulations(n - 1, d);
            for (const auto& t : q.triangulations) {
                CHECK(validate(insert_i(t)).ok());
                CHECK(validate(insert_j(t)).ok());
                CHECK(contract_last(insert_i(t)) == t);
                CHECK(contract_last(insert_j(t)) == t);
            }
            for (const auto& t : p.triangulations) CHECK(validate(contract_last(t)).ok());
            CHECK(contract_last(bottom(n, d)) == bottom(n - 1, d));
            CHECK(contract_last(top(n, d)) == top(n - 1, d));
            CHECK(insert_i(bottom(n - 1, d)) == bottom(n, d));
            CHECK(insert_j(top(n - 1, d)) == top(n, d));
        }
    }
}

TEST_CASE("maximal faces")
{
    CHECK(maximal_faces({LabelSet{1, 2}, LabelSet{1, 2, 3}, LabelSet{4}, LabelSet{3, 4}}) ==
          std::vector<LabelSet>{LabelSet{1, 2, 3}, LabelSet{3, 4}});
}

TEST_CASE("colors")
{
    CHECK(special_simplex(6, 2) == LabelSet{4, 5, 6});
    // d even: green iff S0 is absent.
    CHECK(color(bottom(4, 2)) == Color::Green);
    CHECK(color(top(4, 2)) == Color::Red);
    // d odd: green iff S0 is present.
    CHECK(color(Triangulation(3, 1, {LabelSet{1, 2}, LabelSet{2, 3}})) == Color::Green);
    CHECK(color(Triangulation(3, 1, {LabelSet{1, 3}})) == Color::Red);
}

TEST_CASE("submersion sets")
{
    const auto b = bottom(4, 2);
    auto sub = submersion_set(b, 1);
    std::vector<Simplex> all_edges = subsets_of_size(4, 2);
    all_edges.erase(std::find(all_edges.begin(), all_edges.end(), LabelSet{2, 4}));
    CHECK(sub == all_edges);
    CHECK(submersion_set(top(4, 2), 1) == subsets_of_size(4, 2));
    CHECK(has_combinatorial_submersion(2, 1));
    CHECK(has_combinatorial_submersion(3, 2));
    CHECK_FALSE(has_combinatorial_submersion(4, 2));
}

TEST_CASE("combinatorial submersion criterion agrees with the exact LP")
{
    for (int d = 2; d <= 3; ++d) {
        const int i = d == 2 ? 1 : 2;
        for (int n = d + 2; n <= 7; ++n) {
            const auto e = enumerate_triangulations(n, d);
            for (const auto& t : e.triangulations) {
                INFO(t.to_json());
                CHECK(submersion_set_combinatorial(t, i) == submersion_set_geometric(t, i));
            }
        }
    }
}

TEST_CASE("geometric submersion uses the lift comparison directly")
{
    const auto t = bottom(6, 4);
    for (Simplex s : submersion_set_geometric(t, 2)) CHECK(submerged(s, t.simplices(), 4));
    for (Simplex s : t.simplices()) CHECK(submerged(s, t.simplices(), 4));
}
