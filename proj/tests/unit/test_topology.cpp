#include <doctest.h>

#include "hstlab/stasheff_tamari.hpp"
#include "hstlab/topology.hpp"

using namespace hstlab;

namespace {

FinitePoset antichain(int k)
{
    std::vector<std::string> keys;
    for (int x = 0; x < k; ++x) keys.push_back(std::to_string(x));
    return FinitePoset::from_steps(keys, {});
}

FinitePoset s2(int n, int d)
{
    return build_s2(enumerate_triangulations(n, d));
}

} // namespace

TEST_CASE("order complexes of small posets")
{
    auto k = OrderComplex::of(antichain(2));
    CHECK(k.face_count(0) == 2);
    CHECK(k.face_count(1) == 0);
    CHECK(k.face_count(-1) == 1);

    k = OrderComplex::of(chain(2));
    CHECK(k.face_counts() == std::vector<std::size_t>{2, 1});
    CHECK(k.face(1, 0) == std::vector<int>{0, 1});
    CHECK(k.find({0, 1}) == 0);
    CHECK_FALSE(k.find({1, 0}).has_value());

    k = OrderComplex::of(boolean_lattice(3).proper_part());
    CHECK(k.face_counts() == std::vector<std::size_t>{6, 6});
    CHECK(k.reduced_euler_characteristic() == -1);
    CHECK(k.total_faces() == 12);

    CHECK_THROWS_AS(OrderComplex::of(chain(12), 100), ResourceLimitExceeded);
}

TEST_CASE("reduced homology")
{
    auto h = homology(OrderComplex::of(boolean_lattice(3).proper_part()));
    CHECK(h.at(0).trivial());
    CHECK(h.at(1).betti == 1);
    CHECK(h.sphere_dimension() == 1);
    CHECK(h.describe() == "S^1");

    h = homology(OrderComplex::of(boolean_lattice(4).proper_part()));
    CHECK(h.sphere_dimension() == 2);

    h = homology(OrderComplex::of(antichain(2)));
    CHECK(h.sphere_dimension() == 0);

    h = homology(OrderComplex::of(antichain(3)));
    CHECK(h.at(0).betti == 2);
    CHECK_FALSE(h.sphere_dimension().has_value());

    h = homology(OrderComplex::of(chain(3)));
    CHECK(h.acyclic());
    CHECK(h.describe() == "acyclic");

    h = homology(OrderComplex::of(antichain(0)));
    CHECK(h.sphere_dimension() == -1);
}

TEST_CASE("Smith invariants detect torsion")
{
    // [[2, 0], [0, 3]] has invariant factors 1, 6.
    auto r = smith_invariants({{{0, 2}}, {{1, 3}}}, 2);
    CHECK(r.rank == 2);
    REQUIRE(r.torsion.size() == 1);
    CHECK(r.torsion[0] == 6);

    // Boundary map of the real projective plane's 2-cell onto its 1-cycle: multiplication by 2.
    r = smith_invariants({{{0, 2}}}, 1);
    CHECK(r.rank == 1);
    REQUIRE(r.torsion.size() == 1);
    CHECK(r.torsion[0] == 2);

    r = smith_invariants({{{0, 1}, {1, -1}}, {{0, -1}, {1, 1}}}, 2);
    CHECK(r.rank == 1);
    CHECK(r.torsion.empty());
}

TEST_CASE("homology results compare across shifts")
{
    const auto circle = homology(OrderComplex::of(boolean_lattice(3).proper_part()));
    const auto two_points = homology(OrderComplex::of(antichain(2)));
    CHECK(two_points.shifted_equals(circle, 1));
    CHECK_FALSE(two_points.same_as(circle));
    CHECK(circle.to_json(0).find("\"mobius_crosscheck\":0") != std::string::npos);
}

TEST_CASE("sphere certificates")
{
    CHECK(sphere_certificate(s2(6, 2).proper_part(), 1).passed);
    CHECK(sphere_certificate(build_s1(enumerate_triangulations(6, 3)).proper_part(), 0).passed);
    const auto pentagon = sphere_certificate(s2(5, 2).proper_part(), 0);
    CHECK(pentagon.passed);
    CHECK(pentagon.mobius == 1);
    CHECK_FALSE(sphere_certificate(s2(6, 2).proper_part(), 2).passed);
    CHECK_FALSE(sphere_certificate(antichain(3), 0).passed);
}

TEST_CASE("proper interval posets suspend the proper part")
{
    CHECK(suspension_compare(boolean_lattice(2)).passed);
    CHECK(suspension_compare(chain(2)).passed);
    CHECK(suspension_compare(s2(5, 2)).passed);
    CHECK(suspension_compare(boolean_lattice(3)).passed);

    const auto circle = homology(OrderComplex::of(interval_poset(boolean_lattice(2), IntervalVariant::Proper).poset));
    CHECK(circle.sphere_dimension() == 1);
    const auto two = homology(OrderComplex::of(interval_poset(chain(2), IntervalVariant::Proper).poset));
    CHECK(two.sphere_dimension() == 0);
}

TEST_CASE("reduction to coatomic intervals")
{
    CHECK(webb_reduction_check(boolean_lattice(3)).passed);
    const auto pentagon = webb_reduction_check(s2(5, 2));
    CHECK(pentagon.passed);
    CHECK(pentagon.survivors_are_coatomic);
    CHECK(pentagon.survivors == pentagon.coatomic);
    CHECK(webb_reduction_check(s2(6, 2)).passed);
}
