"""Constraint engine: checking, propagation, enumeration, dead ends."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab.configio import data_text, parse_config
from ringlab.engine import (
    CONTRADICTION,
    INCOMPLETE,
    VALID,
    check,
    dead_end_report,
    enumerate_completions,
    has_completion,
    link_word,
    make_config,
    propagate,
)
from ringlab.lattice import ball, down, up

INITIAL_WINDOW = frozenset({up(0, 0), down(0, -1), down(-1, 0), down(0, 0)})


def test_make_config_defaults_window_to_marked_faces():
    cfg = make_config({up(0, 0): 0, down(0, 0): 1})
    assert cfg.window == frozenset({up(0, 0), down(0, 0)})
    assert cfg.marks[up(0, 0)] == 0


def test_marks_extend_the_window():
    cfg = make_config({up(0, 0): 0}, window=frozenset({down(0, 0)}))
    assert cfg.window == frozenset({up(0, 0), down(0, 0)})


def test_check_statuses():
    seed = make_config({up(0, 0): 0}, window=INITIAL_WINDOW)
    v = check(seed)
    assert v.status == INCOMPLETE
    assert len(v.unmarked) == 3

    comps = enumerate_completions(seed)
    assert check(comps[0]).status == VALID

    # all three downs equal to the up label violates every ring
    bad = make_config(
        {up(0, 0): 0, down(0, -1): 0, down(-1, 0): 0, down(0, 0): 0}
    )
    vb = check(bad)
    assert vb.status == CONTRADICTION
    assert vb.witnesses
    for vertex, reason in vb.witnesses:
        assert isinstance(reason, str) and reason


def test_link_word_reads_sectors():
    cfg = make_config({up(0, 0): 0}, window=INITIAL_WINDOW)
    word = link_word(cfg.marks, (0, 0))
    assert len(word) == 6
    assert 0 in word and None in word


def test_eight_initial_configurations():
    seed = make_config({up(0, 0): 0}, window=INITIAL_WINDOW)
    comps = enumerate_completions(seed)
    assert len(comps) == 8
    assert comps == sorted(comps, key=lambda c: sorted(c.marks.items()))
    for c in comps:
        assert check(c).status == VALID


def test_unit_neighbors_have_two_extensions():
    cfg = make_config(
        {up(0, 0): 0, down(0, -1): 1, down(-1, 0): 1, down(0, 0): 1},
        window=ball(up(0, 0), 1),
    )
    assert len(enumerate_completions(cfg)) == 2


def test_quad_window_has_four_extensions_with_fixed_trio():
    quad = parse_config(data_text("window_quad.txt"))
    comps = enumerate_completions(quad)
    assert len(comps) == 4
    for c in comps:
        assert c.marks[up(1, 1)] == 0
        assert c.marks[down(0, 1)] == 2
        assert c.marks[down(1, 0)] == 2


def test_quad_ball2_extension_counts():
    quad = parse_config(data_text("window_quad.txt"))
    counts = []
    for c in enumerate_completions(quad):
        ext = make_config(dict(c.marks), window=ball(up(0, 0), 2) | c.window)
        counts.append(len(enumerate_completions(ext)))
    assert counts == [4, 1, 4, 0]


def test_second_drawing_is_a_dead_end():
    d2 = parse_config(data_text("deadend_quad2.txt"))
    assert check(d2).status == VALID
    rep = dead_end_report(d2, 2, 3)
    assert rep == {
        "radius": 2,
        "probe": 3,
        "completions": 0,
        "survivors": {"3": 0},
        "dead_ends": {"3": 0},
        "is_dead_end": True,
    }


def test_has_completion_agrees_with_enumeration():
    seed = make_config({up(0, 0): 0}, window=INITIAL_WINDOW)
    target = ball(up(0, 0), 1)
    assert has_completion(seed, target) == bool(
        enumerate_completions(seed, target_window=target)
    )


def test_propagation_is_sound():
    quad = parse_config(data_text("window_quad.txt"))
    forced = propagate(quad)
    comps = enumerate_completions(quad)
    for f, l in forced.marks.items():
        assert all(c.marks[f] == l for c in comps)


def test_threads_do_not_change_results():
    seed = make_config({up(0, 0): 0}, window=ball(up(0, 0), 1))
    a = enumerate_completions(seed, threads=1)
    b = enumerate_completions(seed, threads=3)
    assert [c.marks for c in a] == [c.marks for c in b]


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2), st.integers(0, 7))
def test_completions_of_one_mark_are_valid(label, pick):
    seed = make_config({up(0, 0): label}, window=INITIAL_WINDOW)
    comps = enumerate_completions(seed)
    assert comps
    c = comps[pick % len(comps)]
    assert check(c).status == VALID
    assert c.marks[up(0, 0)] == label
