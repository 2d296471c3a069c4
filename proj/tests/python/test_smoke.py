"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import dofic


def frac(s):
    return Fraction(s)


def test_region_vertices_exact():
    rep = dofic.region(3, 1, 4, 2, "delayed")
    assert rep["case"] == "B.I"
    assert rep["vertices"] == [["0", "0"], ["3", "0"], ["3/2", "1"], ["0", "1"]]
    assert rep["active_bounds"] == ["L1"]


def test_classify_condition_one_config():
    rep = dofic.classify(7, 3, 5, 4)
    assert rep["case"] == "B.III.1"
    assert rep["condition1"] is True
    assert rep["corners"]["P34"] == ["7/3", "8/3"]
    assert rep["corners"]["Po24"] == ["3/2", "3"]
    assert rep["taxonomy_match"] is True


def test_simulate_decodes():
    rep = dofic.simulate(3, 1, 4, 2, corner="Po21", trials=5, seed=7)
    assert rep["all_passed"] is True
    assert rep["runs"][0]["passed"] == 5


def test_negative_control_fails():
    rep = dofic.simulate(3, 1, 4, 2, corner="Po21", trials=5, seed=7, inflate_d1=1)
    assert rep["all_passed"] is False
    assert rep["runs"][0]["passed"] == 0


def test_undefined_corner_raises():
    with pytest.raises(ValueError):
        dofic.simulate(3, 1, 4, 2, corner="P34", trials=1)


def test_verify_and_regime_identity():
    rep = dofic.verify(7, 3, 5, 4, trials=3, seed=1)
    assert rep["passed"] is True
    names = {c["corner"] for c in rep["corners"]}
    assert names == {"Po24", "P34"}

    delayed = dofic.region(3, 1, 4, 2, "delayed")
    for variant in ("delayed-tx", "delayed-cross"):
        rep = dofic.region(3, 1, 4, 2, variant)
        assert rep["vertices"] == delayed["vertices"]
        assert rep["bounds"] == delayed["bounds"]


def test_membership_roundtrip_against_fractions():
    # Re-evaluate the serialized bounds independently with Fraction and
    # compare region membership on a grid of rational points.
    rep = dofic.region(5, 2, 4, 3, "delayed")
    bounds = [
        (frac(b["a"]), frac(b["b"]), frac(b["c"]))
        for b in rep["bounds"]
    ]
    vertices = [(frac(v[0]), frac(v[1])) for v in rep["vertices"]]

    def inside(p):
        return all(a * p[0] + b * p[1] <= c for a, b, c in bounds)

    # every reported vertex satisfies every reported bound
    assert all(inside(v) for v in vertices)

    # membership of grid points agrees with the convex hull of the vertices
    def in_hull(p):
        n = len(vertices)
        for i in range(n):
            ax, ay = vertices[i]
            bx, by = vertices[(i + 1) % n]
            if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) < 0:
                return False
        return True

    for num1 in range(0, 11):
        for num2 in range(0, 10):
            p = (Fraction(num1, 2), Fraction(num2, 2))
            assert inside(p) == in_hull(p)


def test_swapped_ordering_is_translated():
    rep = dofic.region(1, 3, 2, 4, "delayed")
    assert rep["canonical"]["swapped"] is True
    assert ["1", "3/2"] in rep["vertices"]
