"""Machine-readable reports for the acceptance checks.

Each report function returns a plain dict of counts and verdicts, stable
across runs and thread counts, suitable for JSON serialization.
"""

from __future__ import annotations

from typing import Dict, List

from .catalog import (
    assemble,
    compatible_words,
    embeds_in_catalog,
    isomorphic,
    special_puzzle,
    special_seed,
    strip_dedup_classes,
    strip_readings,
    strip_table,
    strip_tick,
    strip_variants,
)
from .configio import data_text, parse_config
from .distributions import (
    all_faces_odd,
    build_D0,
    classify_distribution,
    half_strip_report,
    hex_window,
    induced_distribution,
    verify_lemma_L3,
)
from .engine import (
    VALID,
    check,
    dead_end_report,
    enumerate_completions,
    has_completion,
    make_config,
)
from .labeling import derive_edge_labels, edge_label, square_window
from .lattice import AXIS_NAMES, ball, down, up
from .rings import (
    all_embeddings,
    check_extension_property,
    legal_words,
    multiplicity_table,
    rank_axis,
    ring_table,
    root_rank,
)


def criterion1_report() -> dict:
    """Edge labeling on a 12x12 window: closed form, periodicity, base row."""
    window = square_window(12)
    derived = derive_edge_labels(window)
    matches = all(edge_label(e) == l for e, l in derived.items())
    periodic = all(
        edge_label(e) == edge_label(e._replace(x=e.x + 3))
        and edge_label(e) == edge_label(e._replace(y=e.y + 3))
        for e in derived
    )
    bottom = [edge_label(e) for e in sorted(derived) if e.y == 0 and e.axis == 0]
    cycles = all((b - a) % 3 == 1 for a, b in zip(bottom, bottom[1:]))
    return {
        "edges": len(derived),
        "matches_closed_form": matches,
        "three_periodic": periodic,
        "bottom_row_cycles": cycles,
    }


def criterion2_report() -> dict:
    """Ring table sizes, multiplicities, diameter rule, rank axis uniqueness."""
    mt = multiplicity_table()
    diameter_rule = all(
        (mt[e.domain] == 1) == (e.start % 3 == 0) for e in all_embeddings()
    )
    ranks = sorted({str(root_rank(d).rank) for d in mt})
    axes = [rank_axis(word, s) for s, word in legal_words()]
    return {
        "rings": len(ring_table()),
        "embeddings": len(all_embeddings()),
        "domains": len(mt),
        "multiplicities": sorted(set(mt.values())),
        "diameter_rule": diameter_rule,
        "ranks": ranks,
        "legal_words": len(legal_words()),
        "rank_axes": len(axes),
    }


def criterion3_report() -> dict:
    """Unique embedding position for every marked segment longer than pi."""
    rep = check_extension_property()
    lengths = {
        str(arcs): dict(stats) for arcs, stats in sorted(rep["lengths"].items())
    }
    return {
        "lengths": lengths,
        "max_ambiguous_arcs": rep["max_ambiguous_arcs"],
        "unique_beyond_pi": rep["max_ambiguous_arcs"] <= 3,
    }


def criterion4_report(threads: int = 1) -> dict:
    """Initial-window counts and the dead end in the second drawing."""
    initial = make_config(
        {up(0, 0): 0},
        window=frozenset({up(0, 0), down(0, -1), down(-1, 0), down(0, 0)}),
    )
    n_initial = len(enumerate_completions(initial, threads=threads))
    uvw = make_config(
        {up(0, 0): 0, down(-1, 0): 1, down(0, -1): 1, down(0, 0): 1},
        window=ball(up(0, 0), 1),
    )
    n_uvw = len(enumerate_completions(uvw, threads=threads))
    quad = parse_config(data_text("window_quad.txt"))
    quad_comps = enumerate_completions(quad, threads=threads)
    ball2_counts = []
    for c in quad_comps:
        ext = make_config(dict(c.marks), window=ball(up(0, 0), 2) | c.window)
        ball2_counts.append(len(enumerate_completions(ext, threads=threads)))
    drawing2 = parse_config(data_text("deadend_quad2.txt"))
    return {
        "completions": {
            "initial": n_initial,
            "one_one_one": n_uvw,
            "quad_window": len(quad_comps),
        },
        "ball2_counts": ball2_counts,
        "drawing2_in_quad": any(c.marks == drawing2.marks for c in quad_comps),
        "dead_end": dead_end_report(drawing2, 2, 3, threads=threads),
    }


def criterion5_report() -> dict:
    """Strip assembly validity and the six-to-four deduplication."""
    words: Dict[str, int] = {}
    all_valid = True
    for height in (1, 2):
        ws = compatible_words(height, 4)
        words[f"h{height}"] = len(ws)
        for w in ws:
            cfg = assemble(w, width_periods=2)
            if check(cfg).status != VALID:
                all_valid = False
    germs = []
    for spec in strip_variants(1):
        ups, downs = spec.rows[0]
        for x0, side in ((1, "bottom"), (4, "bottom"), (2, "top"), (5, "top")):
            if side == "bottom":
                faces = (ups[x0 % 6], downs[(x0 - 1) % 6], ups[(x0 - 1) % 6])
            else:
                faces = (downs[(x0 - 1) % 6], ups[x0 % 6], downs[x0 % 6])
            germs.append((side, AXIS_NAMES[strip_tick(x0)], faces))
    h1_words = compatible_words(1, 4)
    fam_h1 = classify_distribution(
        induced_distribution(assemble(h1_words[0], width_periods=2))
    )
    h2_words = compatible_words(2, 3)
    fam_h2 = classify_distribution(
        induced_distribution(assemble(h2_words[0], width_periods=2))
    )
    return {
        "strips": len(strip_table()),
        "words": words,
        "all_valid": all_valid,
        "classes": strip_dedup_classes(),
        "readings": len(strip_readings()),
        "initial_configurations": len(set(germs)),
        "families": {"h1": fam_h1, "h2": fam_h2},
    }


def criterion6_report() -> dict:
    """Twelve special seeds: propagation, uniqueness, isomorphism, family."""
    balls = []
    families: List[str] = []
    n_unique = 0
    for index in range(1, 13):
        cfg = special_puzzle(index, 3)
        if check(cfg).status == VALID:
            n_unique += 1
        seed = special_seed(index)
        target = ball(up(0, 0), 3)
        comps = enumerate_completions(
            make_config(dict(seed.marks), window=target | seed.window)
        )
        balls.append(len(comps))
        dist = induced_distribution(special_puzzle(index, 4))
        families.append(classify_distribution(dist))
    pairs_distinct = True
    radius2 = [special_puzzle(i, 2) for i in range(1, 13)]
    for i in range(12):
        for j in range(i + 1, 12):
            if isomorphic(radius2[i], radius2[j]) is not None:
                pairs_distinct = False
    return {
        "propagated": n_unique,
        "completions": balls,
        "pairwise_non_isomorphic": pairs_distinct,
        "families": families,
    }


def criterion7_report() -> dict:
    """Distribution lemmas: parity, half strip, center construction, segments."""
    seed = make_config({up(0, 0): 0}, window=ball(up(0, 0), 2))
    comps = enumerate_completions(seed)
    odd_all = all(all_faces_odd(induced_distribution(c)) for c in comps)
    half = half_strip_report()
    d6 = build_D0(hex_window(6))
    d8 = build_D0(hex_window(8))
    restricted = {v: d8.axis[v] for v in d6.axis}
    idem = restricted == dict(d6.axis)
    l3 = verify_lemma_L3()
    return {
        "valid_configurations": len(comps),
        "all_odd": odd_all,
        "half_strip": half,
        "d0": {
            "r6_vertices": len(d6.axis),
            "r8_vertices": len(d8.axis),
            "all_odd": all_faces_odd(d6),
            "idempotent": idem,
        },
        "lemma_l3": {
            "assignments": l3["assignments"],
            "with_segment": l3["with_segment"],
            "forced_on_enlargement": l3["forced_on_enlargement"],
            "unextendable": l3["unextendable"],
            "counterexamples": len(l3["counterexamples"]),
        },
    }


def criterion8_report(threads: int = 1) -> dict:
    """Every radius-2 completion embeds in the catalog or dies by probe 4."""
    seed = make_config({up(0, 0): 0}, window=ball(up(0, 0), 2))
    comps = enumerate_completions(seed, threads=threads)
    probe = ball(up(0, 0), 4)
    embedded: Dict[str, int] = {}
    survivors = dead = exceptions = 0
    for c in comps:
        if has_completion(c, probe):
            survivors += 1
            found = embeds_in_catalog(c)
            if found is None:
                exceptions += 1
            else:
                embedded[found["kind"]] = embedded.get(found["kind"], 0) + 1
        else:
            dead += 1
    return {
        "completions": len(comps),
        "survivors": survivors,
        "dead_ends": dead,
        "embedded": dict(sorted(embedded.items())),
        "exceptions": exceptions,
    }


REPORTS = {
    1: criterion1_report,
    2: criterion2_report,
    3: criterion3_report,
    4: criterion4_report,
    5: criterion5_report,
    6: criterion6_report,
    7: criterion7_report,
    8: criterion8_report,
}


def criterion_report(number: int, threads: int = 1) -> dict:
    fn = REPORTS[number]
    if number in (4, 8):
        return fn(threads=threads)
    return fn()
