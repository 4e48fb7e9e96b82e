import pytest

import hstlab


def test_counts():
    assert len(hstlab.enumerate(6, 2)) == 14
    assert len(hstlab.enumerate(5, 1)) == 8
    assert len(hstlab.enumerate(6, 4)) == 2


def test_bottom_and_top():
    assert hstlab.bottom(4, 2) == [[1, 2, 3], [1, 3, 4]]
    assert hstlab.top(4, 2) == [[1, 2, 4], [2, 3, 4]]
    assert hstlab.validate(hstlab.bottom(4, 2), 4, 2) == []
    assert hstlab.validate([[1, 2, 3], [2, 3, 4]], 4, 2) != []
    assert hstlab.increasing_flips(4, 2, hstlab.bottom(4, 2)) == [[1, 2, 3, 4]]


def test_combinatorics():
    assert hstlab.classify_facet([1, 2], [1, 2, 3, 4, 5], 2) == "lower"
    assert hstlab.classify_facet([1, 5], [1, 2, 3, 4, 5], 2) == "upper"
    assert not hstlab.zig_zag_admissible([1, 3], [2, 4], 1)
    assert hstlab.facet_split([1, 2, 3, 4]) == ([[1, 2, 3], [1, 3, 4]], [[1, 2, 4], [2, 3, 4]])
    edges = hstlab.submersion_set(4, 2, hstlab.bottom(4, 2), 1)
    assert [2, 4] not in edges and len(edges) == 5


def test_orders():
    p = hstlab.poset(5, 2)
    assert len(p["elements"]) == 5
    assert len(p["covers"]) == 5
    assert hstlab.compare_orders(6, 2) is None
    assert hstlab.is_lattice(6, 2)
    assert hstlab.mobius(6, 2) == -1


def test_sphere_and_baues():
    cert = hstlab.sphere_certificate(6, 2)
    assert cert["passed"]
    assert cert["homology"] == "S^1"
    b = hstlab.baues_poset(5, 2)
    assert len(b["subdivisions"]) == 10
    assert len(b["covers"]) == 10
    assert b["order_matches_intervals"]


def test_suspension_report():
    report = hstlab.verify_suspension(5, 2, "s1")
    assert report["n"] == 5
    assert all(c["passed"] for c in report["checks"])


def test_errors():
    with pytest.raises(ValueError):
        hstlab.poset(5, 2, "s3")
    with pytest.raises(hstlab.ResourceLimitExceeded):
        hstlab.enumerate(9, 2, cap=10)
