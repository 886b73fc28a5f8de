"""Strip catalog, special puzzles, isomorphism, catalog embedding."""

import pytest

from ringlab.catalog import (
    INTERFACE_DELTAS,
    assemble,
    compatible_words,
    derive_interface_table,
    embeds_in_catalog,
    get_strip,
    isomorphic,
    mirror_strip_rows,
    special_puzzle,
    special_seed,
    strip_dedup_classes,
    strip_readings,
    strip_table,
    strip_tick,
    strip_variants,
    transform_config,
)
from ringlab.engine import VALID, check, enumerate_completions, make_config, propagate
from ringlab.lattice import A1, A2, Isometry, ball, up
from ringlab.distributions import classify_distribution, induced_distribution


def test_strip_variants_and_table():
    h1 = strip_variants(1)
    assert [s.key for s in h1] == ["a", "b", "c", "d", "e", "f"]
    assert all(s.period == 6 for s in h1)
    h2 = strip_variants(2)
    assert [s.key for s in h2] == ["1", "2", "3"]
    table = strip_table()
    assert [(s.height, s.index) for s in table] == [
        (1, 1),
        (1, 2),
        (1, 3),
        (1, 6),
        (2, 1),
        (2, 2),
        (2, 3),
    ]
    assert [s.key for s in table if s.height == 1] == ["a", "b", "c", "f"]


def test_get_strip_rejects_unknown_index():
    with pytest.raises(ValueError):
        get_strip(1, 4)


def test_interface_table_matches_frozen_data():
    for height in (1, 2):
        assert derive_interface_table(height) == INTERFACE_DELTAS[height]


def test_no_strip_stacks_on_itself():
    for height in (1, 2):
        for w in compatible_words(height, 2):
            assert w[0][0] != w[1][0]


def test_assembled_strips_are_valid():
    for w in compatible_words(1, 2)[:6] + compatible_words(2, 2)[:3]:
        assert check(assemble(w)).status == VALID


def test_assemble_rejects_incompatible_shifts():
    w = compatible_words(1, 2)[0]
    bad = [w[0], (w[1][0], w[1][1] + 1)]
    with pytest.raises(ValueError):
        assemble(bad)


def test_mirror_glide_squares_to_a_shift():
    for spec in strip_variants(1):
        by_rows = {s.rows: s for s in strip_variants(1)}
        once = by_rows[mirror_strip_rows(spec)]
        twice = by_rows[mirror_strip_rows(once)]
        (u, d) = spec.rows[0]
        (u2, d2) = twice.rows[0]
        assert u2 == tuple(u[(x - 3) % 6] for x in range(6))
        assert d2 == tuple(d[(x - 3) % 6] for x in range(6))


def test_dedup_classes():
    assert strip_dedup_classes() == [["a", "d"], ["b"], ["c", "e"], ["f"]]


def test_readings_cover_all_six_variants():
    readings = strip_readings()
    assert len(readings) == 8
    assert {r[2] for r in readings} == set("abcdef")
    assert {r[0] for r in readings} == {"a", "b", "c", "f"}
    fixed = {r[0] for r in readings if r[1] == -1 and r[0] == r[2]}
    assert fixed == {"b", "f"}


def test_strip_ticks_alternate():
    assert [strip_tick(x) for x in range(4)] == [A1, A2, A1, A2]


def test_twenty_four_boundary_germs_are_distinct():
    germs = set()
    for spec in strip_variants(1):
        ups, downs = spec.rows[0]
        for x0, side in ((1, "bottom"), (4, "bottom"), (2, "top"), (5, "top")):
            if side == "bottom":
                faces = (ups[x0 % 6], downs[(x0 - 1) % 6], ups[(x0 - 1) % 6])
            else:
                faces = (downs[(x0 - 1) % 6], ups[x0 % 6], downs[x0 % 6])
            germs.add((side, strip_tick(x0), faces))
    assert len(germs) == 24


def test_special_seed_propagates_uniquely():
    for index in (1, 7, 12):
        seed = special_seed(index)
        assert check(seed).status in (VALID, "Incomplete")
        cfg = make_config(dict(seed.marks), window=ball(up(0, 0), 2) | seed.window)
        filled = propagate(cfg)
        assert len(filled.marks) == len(filled.window)
        assert len(enumerate_completions(cfg)) == 1


def test_special_puzzle_is_valid_and_cached():
    a = special_puzzle(3, 2)
    assert check(a).status == VALID
    assert special_puzzle(3, 2) is a


def test_special_puzzle_rejects_bad_arguments():
    with pytest.raises(ValueError):
        special_puzzle(0, 2)
    with pytest.raises(ValueError):
        special_puzzle(1, 0)


def test_isomorphic_finds_label_preserving_transforms():
    cfg = special_puzzle(5, 2)
    g = Isometry(2, False, 3, 0)
    assert g.label_preserving()
    moved = transform_config(cfg, g)
    found = isomorphic(cfg, moved)
    assert found is not None
    assert transform_config(cfg, found).marks == moved.marks


def test_isomorphic_rejects_different_specials():
    a = special_puzzle(1, 2)
    b = special_puzzle(2, 2)
    assert isomorphic(a, b) is None


def test_isomorphic_raises_on_incongruent_windows():
    a = special_puzzle(1, 1)
    b = special_puzzle(1, 2)
    with pytest.raises(ValueError):
        isomorphic(a, b)


def test_strip_band_readings_match_dedup_classes():
    # reading c backwards realizes d, the partner of a; a backwards realizes e
    readings = dict(((r[0], r[1]), r[2]) for r in strip_readings())
    assert readings[("a", -1)] == "e"
    assert readings[("c", -1)] == "d"


def test_assembly_families():
    h1 = assemble(compatible_words(1, 4)[0], width_periods=2)
    assert classify_distribution(induced_distribution(h1)) == "Family2Periodic"
    h2 = assemble(compatible_words(2, 3)[0], width_periods=2)
    assert classify_distribution(induced_distribution(h2)) == "Family1Periodic"


def test_catalog_embedding_kinds():
    seed = make_config({up(0, 0): 0}, window=ball(up(0, 0), 2))
    comps = enumerate_completions(seed)
    kinds = set()
    for c in comps[:40]:
        found = embeds_in_catalog(c)
        if found is not None:
            kinds.add(found["kind"])
            assert set(found) <= {"kind", "word", "index"}
    assert kinds <= {"strip-h1", "strip-h2", "special"}
    assert kinds
