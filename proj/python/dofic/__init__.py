"""Exact DoF regions and interference-alignment verification for the
2-user MIMO interference channel.

All rational quantities come back as exact "p/q" strings; use
fractions.Fraction to compute with them.
"""

import json as _json

from dofic._core import (
    CornerUndefinedForCase,
    InfeasibleParameters,
    NonPositiveAntennaCount,
    PartitionInfeasible,
    __version__,
    classify_json,
    region_json,
    simulate_json,
    sweep_json,
    verify_json,
)

__all__ = [
    "CornerUndefinedForCase",
    "InfeasibleParameters",
    "NonPositiveAntennaCount",
    "PartitionInfeasible",
    "__version__",
    "region",
    "classify",
    "simulate",
    "verify",
    "sweep",
]


def region(m1, m2, n1, n2, csi="delayed"):
    """Bounds, active bounds and the vertex cycle of one DoF region."""
    return _json.loads(region_json(m1, m2, n1, n2, csi))


def classify(m1, m2, n1, n2):
    """Case label, corner points and the three-regime comparison."""
    return _json.loads(classify_json(m1, m2, n1, n2))


def simulate(m1, m2, n1, n2, corner="all", trials=20, seed=1, inflate_d1=0):
    """Run the corner scheme(s) on seeded random channels."""
    return _json.loads(simulate_json(m1, m2, n1, n2, corner, trials, seed, inflate_d1))


def verify(m1, m2, n1, n2, trials=5, seed=1):
    """Check that the simulated corners span exactly the outer region."""
    return _json.loads(verify_json(m1, m2, n1, n2, trials, seed))


def sweep(max_antennas=4, check="taxonomy", trials=5, seed=1, threads=0):
    """Exhaustive check over every canonical config in {1..max}^4."""
    return _json.loads(sweep_json(max_antennas, check, trials, seed, threads))
