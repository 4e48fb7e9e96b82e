#include <doctest.h>

#include <algorithm>

#include "hstlab/verification.hpp"

using namespace hstlab;

TEST_CASE("suspension hypotheses on small instances")
{
    for (auto [n, d, o] : {std::tuple{5, 2, Order::S1}, std::tuple{6, 2, Order::S2}, std::tuple{6, 3, Order::S1},
                           std::tuple{6, 3, Order::S2}, std::tuple{5, 1, Order::S1}}) {
        const auto r = verify_suspension(n, d, o);
        INFO(r.to_json());
        CHECK(r.ok());
        CHECK(r.checks.size() == 8);
        CHECK(r.checks.front().name == "green_ideal");
        CHECK(r.checks.back().name == "maps_monotone");
    }
    CHECK(verify_suspension(6, 2, Order::S1).to_json().find("\"order\":\"s1\"") != std::string::npos);
}

TEST_CASE("connecting sets from flip paths")
{
    const auto e = enumerate_triangulations(4, 2);
    const int b = *e.index_of(bottom(4, 2));
    const int t = *e.index_of(top(4, 2));
    const auto c = find_connecting_set(e, b, t);
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<Simplex>{LabelSet{1, 2, 3, 4}});
    CHECK(find_connecting_set(e, b, b)->empty());
    CHECK_FALSE(find_connecting_set(e, t, b).has_value());
}

TEST_CASE("connecting set conditions")
{
    CHECK(verify_connecting_set(bottom(4, 2), top(4, 2), {LabelSet{1, 2, 3, 4}}).passed);
    CHECK(verify_connecting_set(bottom(5, 2), bottom(5, 2), {}).passed);

    const auto wrong = verify_connecting_set(top(4, 2), bottom(4, 2), {LabelSet{1, 2, 3, 4}});
    CHECK_FALSE(wrong.passed);
    CHECK(wrong.failed_condition >= 1);
    CHECK(wrong.failed_condition <= 6);

    // Every flip path between comparable triangulations yields a connecting set.
    const auto e = enumerate_triangulations(6, 2);
    const auto s1 = build_s1(e);
    for (int x = 0; x < s1.size(); ++x)
        for (int y = 0; y < s1.size(); ++y) {
            if (!s1.leq(x, y)) continue;
            const auto c = find_connecting_set(e, x, y);
            REQUIRE(c.has_value());
            CHECK(verify_connecting_set(e.triangulations[static_cast<std::size_t>(x)],
                                        e.triangulations[static_cast<std::size_t>(y)], *c)
                      .passed);
        }
}

TEST_CASE("sweep sets connect the images of the suspension maps")
{
    for (auto [n, d] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{6, 3}}) {
        for (const auto& t : enumerate_triangulations(n, d).triangulations) {
            const auto base = contract_last(t);
            INFO(t.to_json());
            CHECK(verify_connecting_set(insert_i(base), t, sweep_set_a(t)).passed);
            CHECK(verify_connecting_set(t, insert_j(base), sweep_set_b(t)).passed);
        }
    }
    const auto a = sweep_set_a(bottom(5, 2));
    CHECK(std::all_of(a.begin(), a.end(), [](Simplex s) { return s.contains(4) && s.contains(5) && s.size() == 4; }));
}

TEST_CASE("S0 membership is monotone")
{
    for (auto [n, d, o] : {std::tuple{6, 2, Order::S1}, std::tuple{6, 3, Order::S2}, std::tuple{7, 2, Order::S2}}) {
        const auto e = enumerate_triangulations(n, d);
        CHECK(verify_s0_monotone(e, build_order(e, o)).passed);
    }
}

TEST_CASE("brute force enumeration")
{
    CHECK(brute_force_triangulations(4, 2).size() == 2);
    CHECK(brute_force_triangulations(5, 2).size() == 5);
    CHECK(brute_force_triangulations(5, 3).size() == 2);
    CHECK(brute_force_triangulations(6, 1).size() == 16);
    CHECK_THROWS(brute_force_triangulations(9, 3));
}
