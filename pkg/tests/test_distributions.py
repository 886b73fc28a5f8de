"""Rank-axis distributions: parity, propagation, D0, classification."""

import pytest

from ringlab.catalog import special_puzzle, transform_config
from ringlab.distributions import (
    EVEN,
    ODD,
    DistContradiction,
    Distribution,
    all_faces_odd,
    build_D0,
    classify_distribution,
    dist_propagate,
    face_parity,
    half_strip_report,
    hex_window,
    induced_distribution,
    interior_faces,
    make_distribution,
    verify_lemma_L3,
)
from ringlab.engine import enumerate_completions, make_config
from ringlab.lattice import LABEL_POINT_GROUP, ball, up


def test_hex_window_sizes():
    for r in (1, 2, 3, 6, 8):
        assert len(hex_window(r)) == 1 + 3 * r * (r + 1)


def test_interior_faces_of_a_hexagon():
    faces = interior_faces(hex_window(1))
    assert len(faces) == 6


def test_distribution_rejects_axes_outside_window():
    with pytest.raises(ValueError):
        Distribution(frozenset({(0, 0)}), {(1, 1): 0})


def test_face_parity_needs_all_corners():
    d = make_distribution({(0, 0): 0})
    with pytest.raises(ValueError):
        face_parity(d, up(0, 0))


def test_induced_distribution_is_all_odd():
    seed = make_config({up(0, 0): 0}, window=ball(up(0, 0), 1))
    for c in enumerate_completions(seed):
        dist = induced_distribution(c)
        assert all_faces_odd(dist)
        for f in interior_faces(dist.window):
            assert face_parity(dist, f) in (ODD, EVEN)


def test_induced_distribution_is_equivariant():
    cfg = special_puzzle(4, 2)
    dist = induced_distribution(cfg)
    for g in LABEL_POINT_GROUP[:3]:
        moved = induced_distribution(transform_config(cfg, g))
        for v, a in dist.axis.items():
            gv = g.apply_vertex(v)
            if gv in moved.axis:
                assert moved.axis[gv] == g.apply_axis(a)


def test_build_d0_small_window():
    d = build_D0(hex_window(3))
    assert len(d.axis) == 37
    assert d.total()
    assert all_faces_odd(d)


def test_build_d0_idempotent_under_growth():
    d3 = build_D0(hex_window(3))
    d5 = build_D0(hex_window(5))
    assert {v: d5.axis[v] for v in d3.axis} == dict(d3.axis)


def test_d0_classifies_as_special():
    assert classify_distribution(build_D0(hex_window(4))) == "SpecialD0"


def test_special_puzzles_induce_d0():
    for index in (2, 9):
        dist = induced_distribution(special_puzzle(index, 4))
        assert classify_distribution(dist) == "SpecialD0"


def test_dist_propagate_restores_cleared_axes():
    d = build_D0(hex_window(3))
    partial = {v: a for v, a in d.axis.items() if abs(v[0]) + abs(v[1]) <= 2}
    filled = dist_propagate(
        make_distribution(partial, window=d.window), refute=True
    )
    assert dict(filled.axis) == dict(d.axis)


def test_dist_propagate_raises_on_contradiction():
    # a horizontal ring of horizontal axes leaves no odd choice at the center
    window = hex_window(1)
    axis = {v: 0 for v in window if v != (0, 0)}
    with pytest.raises(DistContradiction):
        dist_propagate(make_distribution(axis, window=window), refute=True)


def test_half_strip_alternation():
    assert half_strip_report() == {
        "rows": ["a", "b", "a", "b", "a"],
        "alternates": True,
    }


def test_lemma_l3_exhaustive_four_by_four():
    rep = verify_lemma_L3(4)
    assert rep["assignments"] == 342
    assert rep["with_segment"] == 294
    assert rep["forced_on_enlargement"] == 22
    assert rep["unextendable"] == 26
    assert rep["counterexamples"] == []
    total = rep["with_segment"] + rep["forced_on_enlargement"] + rep["unextendable"]
    assert total == rep["assignments"]


def test_classify_rejects_partial_and_non_odd_input():
    with pytest.raises(ValueError):
        classify_distribution(make_distribution({(0, 0): 0}, window=hex_window(1)))
    constant = make_distribution({v: 0 for v in hex_window(3)})
    assert not all_faces_odd(constant)
    with pytest.raises(ValueError):
        classify_distribution(constant)
