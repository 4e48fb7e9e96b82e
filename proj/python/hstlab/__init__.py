"""Triangulations of cyclic polytopes and the higher Stasheff-Tamari orders."""

import json

from ._hstlab import (
    ResourceLimitExceeded,
    baues_poset,
    bottom,
    classify_facet,
    compare_orders,
    enumerate,
    facet_split,
    increasing_flips,
    lattice_witness,
    mobius,
    sphere_certificate,
    submersion_set,
    top,
    validate,
    zig_zag_admissible,
)
from ._hstlab import poset_json as _poset_json
from ._hstlab import verify_suspension as _verify_suspension


def poset(n, d, order="s2"):
    """The order on triangulations of C(n, d) as {"elements": [...], "covers": [[i, j], ...]}."""
    return json.loads(_poset_json(n, d, order))


def verify_suspension(n, d, order="s1"):
    """Report on the suspension hypotheses for C(n, d) over C(n-1, d)."""
    return json.loads(_verify_suspension(n, d, order))


def is_lattice(n, d, order="s2"):
    return lattice_witness(n, d, order) is None


__all__ = [
    "ResourceLimitExceeded",
    "baues_poset",
    "bottom",
    "classify_facet",
    "compare_orders",
    "enumerate",
    "facet_split",
    "increasing_flips",
    "is_lattice",
    "lattice_witness",
    "mobius",
    "poset",
    "sphere_certificate",
    "submersion_set",
    "top",
    "validate",
    "verify_suspension",
    "zig_zag_admissible",
]
