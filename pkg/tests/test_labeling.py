"""Canonical edge labeling: closed form, derivation, symmetries."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ringlab.labeling import (
    ANCHOR_LABELS,
    LabelContradiction,
    derive_edge_labels,
    edge_label,
    link_edge_label,
    square_window,
    vertex_s,
)
from ringlab.lattice import (
    AXES,
    Edge,
    Isometry,
    incident_edges,
    up,
)

edges = st.builds(
    Edge, x=st.integers(-9, 9), y=st.integers(-9, 9), axis=st.sampled_from(AXES)
)
isometries = st.builds(
    Isometry,
    rot=st.integers(0, 5),
    ref=st.booleans(),
    tx=st.integers(-4, 4),
    ty=st.integers(-4, 4),
)


def test_anchor_labels():
    for e, l in ANCHOR_LABELS.items():
        assert edge_label(e) == l


def test_derivation_matches_closed_form():
    derived = derive_edge_labels(square_window(6))
    assert derived
    for e, l in derived.items():
        assert edge_label(e) == l


def test_derivation_covers_every_window_edge():
    window = square_window(4)
    derived = derive_edge_labels(window)
    from ringlab.lattice import face_edges

    want = {e for f in window for e in face_edges(f)}
    assert set(derived) == want


@given(edges)
def test_three_periodicity(e):
    assert edge_label(e) == edge_label(Edge(e.x + 3, e.y, e.axis))
    assert edge_label(e) == edge_label(Edge(e.x, e.y + 3, e.axis))


@given(st.integers(-9, 9))
def test_bottom_row_cycles(x):
    assert (edge_label(Edge(x + 1, 0, 0)) - edge_label(Edge(x, 0, 0))) % 3 == 1


@given(st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_link_edge_labels_alternate_two_values(v):
    labels = [edge_label(e) for e in incident_edges(v)]
    assert labels[0::2] == [labels[0]] * 3
    assert labels[1::2] == [labels[1]] * 3
    assert labels[0] != labels[1]
    for k in range(6):
        assert link_edge_label(v, k) == labels[k]


@given(st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_vertex_s_is_a_diagonal_residue(v):
    assert vertex_s(v) == (v[0] - v[1] - 1) % 3
    assert vertex_s((v[0] + 1, v[1])) == (vertex_s(v) + 1) % 3


@given(isometries)
def test_label_preserving_predicate_matches_action_on_labels(g):
    sample = [Edge(x, y, a) for x in (-2, 0, 1) for y in (-1, 0, 2) for a in AXES]
    preserved = all(edge_label(g.apply_edge(e)) == edge_label(e) for e in sample)
    assert preserved == g.label_preserving()


def test_window_must_contain_the_anchor():
    with pytest.raises(ValueError):
        derive_edge_labels([up(5, 5)])


def test_label_contradiction_message_names_the_edge():
    exc = LabelContradiction(Edge(1, 2, 0), 0, 1, "test")
    assert "1" in str(exc) and "0 vs 1" in str(exc)
