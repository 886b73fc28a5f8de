"""Command line interface for table queries, checking, enumeration, rendering.

Exit codes: 0 success (Valid / true), 1 Contradiction or negative answer,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter
from typing import Optional

from . import reports
from .catalog import (
    assemble,
    compatible_words,
    get_strip,
    isomorphic,
    special_puzzle,
)
from .configio import (
    CONFIG_HEADER,
    DIST_HEADER,
    parse_config,
    parse_distribution,
    render_svg,
    serialize_config,
    serialize_distribution,
    to_json,
    validate_report,
)
from .distributions import (
    DistContradiction,
    all_faces_odd,
    build_D0,
    classify_distribution,
    dist_propagate,
    hex_window,
    interior_faces,
)
from .engine import (
    CONTRADICTION,
    VALID,
    check,
    dead_end_report,
    enumerate_completions,
    make_config,
)
from .labeling import derive_edge_labels, square_window
from .lattice import AXIS_NAMES, ball, up
from .rings import (
    DEFAULT_MODE,
    MODE_ROT,
    MODE_ROT_REF,
    legal_words,
    multiplicity_table,
    ring_table,
    root_rank,
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit(args, op: str, obj: dict, text: str) -> None:
    if args.json:
        validate_report(op, obj)
        print(to_json(obj), end="")
    elif text:
        print(text)


def cmd_rings(args) -> int:
    table = ring_table()
    mt = multiplicity_table()
    ranks = Counter(str(root_rank(d).rank) for d in mt)
    obj = {
        "rings": [
            {
                "s": r.s,
                "index": r.index,
                "faces": list(r.faces),
                "edges": list(r.edges),
            }
            for r in table
        ],
        "embeddings": 12 * len(table),
        "domains": len(mt),
        "multiplicities": sorted(set(mt.values())),
        "rank_axes": dict(sorted(ranks.items())),
        "legal_words": len(legal_words(args.symmetry)),
    }
    lines = [
        "s=%d index=%d faces=%s edges=%s"
        % (r.s, r.index, "".join(map(str, r.faces)), "".join(map(str, r.edges)))
        for r in table
    ]
    lines.append(
        "rings=%d domains=%d ranks=%s"
        % (len(table), len(mt), dict(sorted(ranks.items())))
    )
    _emit(args, "rings", obj, "\n".join(lines))
    return 0


def cmd_edge_labels(args) -> int:
    derived = derive_edge_labels(square_window(args.window))
    labels = [
        {"x": e.x, "y": e.y, "axis": AXIS_NAMES[e.axis], "label": l}
        for e, l in sorted(derived.items())
    ]
    obj = {"window": args.window, "count": len(labels), "labels": labels}
    text = "\n".join(
        "%d %d %s %d" % (r["x"], r["y"], r["axis"], r["label"]) for r in labels
    )
    _emit(args, "edge-labels", obj, text)
    return 0


def cmd_check(args) -> int:
    cfg = parse_config(_read(args.file))
    verdict = check(cfg, mode=args.symmetry)
    obj = {
        "status": verdict.status,
        "witnesses": [
            {"vertex": list(v), "reason": reason} for v, reason in verdict.witnesses
        ],
        "unmarked": [{"x": f.x, "y": f.y, "up": f.up} for f in verdict.unmarked],
    }
    lines = [verdict.status]
    for v, reason in verdict.witnesses:
        lines.append("at %s: %s" % (v, reason))
    _emit(args, "check", obj, "\n".join(lines))
    return 1 if verdict.status == CONTRADICTION else 0


def cmd_enumerate(args) -> int:
    cfg = parse_config(_read(args.file))
    target = cfg.window
    if args.radius is not None:
        target = target | ball(up(0, 0), args.radius)
    comps = enumerate_completions(
        cfg, target_window=target, mode=args.symmetry, threads=args.threads
    )
    obj = {
        "completions": len(comps),
        "configurations": [serialize_config(c) for c in comps],
    }
    text = "\n".join([str(len(comps))] + [serialize_config(c) for c in comps])
    _emit(args, "enumerate", obj, text)
    return 0 if comps else 1


def cmd_deadends(args) -> int:
    cfg = parse_config(_read(args.file))
    rep = dead_end_report(
        cfg, args.radius, args.probe, mode=args.symmetry, threads=args.threads
    )
    text = "\n".join(
        [
            "completions at radius %d: %d" % (rep["radius"], rep["completions"]),
            "survivors at probe %d: %s" % (rep["probe"], rep["survivors"]),
            "dead ends: %s" % rep["dead_ends"],
            "dead end" if rep["is_dead_end"] else "extendable",
        ]
    )
    _emit(args, "deadends", rep, text)
    return 1 if rep["is_dead_end"] else 0


def cmd_strip(args) -> int:
    spec = get_strip(args.height, args.index)
    tokens = None
    if args.word:
        tokens = []
        for t in args.word.split(","):
            if ":" in t:
                k, s = t.split(":", 1)
                tokens.append((k, int(s)))
            else:
                tokens.append((None, int(t)))
        if len(tokens) != args.rows:
            raise ValueError("word must list one entry per row")
    word = None
    for w in compatible_words(args.height, args.rows):
        if w[0][0] != spec.key:
            continue
        if tokens is not None and not all(
            (k is None or k == wk) and s % 6 == ws % 6
            for (k, s), (wk, ws) in zip(tokens, w)
        ):
            continue
        word = w
        break
    if word is None:
        print("no compatible stacking word", file=sys.stderr)
        return 1
    cfg = assemble(word, width_periods=args.width // 6)
    verdict = check(cfg, mode=args.symmetry)
    obj = {
        "height": args.height,
        "index": args.index,
        "rows": args.rows,
        "width": args.width,
        "word": [s for _, s in word],
        "keys": [k for k, _ in word],
        "status": verdict.status,
        "faces": len(cfg.window),
    }
    if args.output:
        _write(args.output, serialize_config(cfg))
        _emit(args, "strip", obj, "%s: %d faces" % (verdict.status, len(cfg.window)))
    else:
        _emit(args, "strip", obj, serialize_config(cfg).rstrip("\n"))
    return 0 if verdict.status == VALID else 1


def cmd_special(args) -> int:
    cfg = special_puzzle(args.index, args.radius)
    verdict = check(cfg, mode=args.symmetry)
    obj = {
        "index": args.index,
        "radius": args.radius,
        "status": verdict.status,
        "faces": len(cfg.window),
    }
    if args.output:
        _write(args.output, serialize_config(cfg))
        _emit(args, "special", obj, "%s: %d faces" % (verdict.status, len(cfg.window)))
    else:
        _emit(args, "special", obj, serialize_config(cfg).rstrip("\n"))
    return 0 if verdict.status == VALID else 1


def cmd_iso(args) -> int:
    a = parse_config(_read(args.file1))
    b = parse_config(_read(args.file2))
    try:
        g = isomorphic(a, b)
    except ValueError as exc:
        if "incongruent" not in str(exc):
            raise
        _emit(args, "iso", {"isomorphic": False, "isometry": None}, "not isomorphic")
        return 1
    obj = {
        "isomorphic": g is not None,
        "isometry": None
        if g is None
        else {"rot": g.rot, "ref": g.ref, "tx": g.tx, "ty": g.ty},
    }
    text = (
        "not isomorphic"
        if g is None
        else "isomorphic: rot=%d ref=%s t=(%d,%d)" % (g.rot, g.ref, g.tx, g.ty)
    )
    _emit(args, "iso", obj, text)
    return 0 if g is not None else 1


def cmd_dist(args) -> int:
    if args.dist_cmd == "d0":
        dist = build_D0(hex_window(args.radius))
        obj = {
            "radius": args.radius,
            "vertices": len(dist.axis),
            "all_odd": all_faces_odd(dist),
            "distribution": serialize_distribution(dist),
        }
        if args.output:
            _write(args.output, serialize_distribution(dist))
            _emit(args, "dist-d0", obj, "%d vertices" % len(dist.axis))
        else:
            _emit(args, "dist-d0", obj, serialize_distribution(dist).rstrip("\n"))
        return 0
    dist = parse_distribution(_read(args.file))
    if args.dist_cmd == "check":
        ok = all_faces_odd(dist)
        obj = {
            "vertices": len(dist.window),
            "faces": len(interior_faces(dist.window)),
            "all_odd": ok,
        }
        _emit(args, "dist-check", obj, "all odd" if ok else "not all odd")
        return 0 if ok else 1
    if args.dist_cmd == "propagate":
        try:
            out = dist_propagate(dist, refute=args.refute)
        except DistContradiction as exc:
            print("Contradiction: %s" % exc, file=sys.stderr)
            return 1
        obj = {
            "vertices": len(out.window),
            "assigned": len(out.axis),
            "distribution": serialize_distribution(out),
        }
        _emit(args, "dist-propagate", obj, serialize_distribution(out).rstrip("\n"))
        return 0
    family = classify_distribution(dist)
    _emit(args, "dist-classify", {"family": family}, family)
    return 0


def cmd_render(args) -> int:
    text = _read(args.file)
    head = text.lstrip().splitlines()[0].strip() if text.strip() else ""
    config = dist = None
    if head == CONFIG_HEADER:
        config = parse_config(text)
    elif head == DIST_HEADER:
        dist = parse_distribution(text)
    else:
        raise ValueError("unrecognized header %r" % head)
    svg = render_svg(
        config=config,
        dist=dist,
        scale=args.scale,
        show_face_labels=not args.no_face_labels,
        show_edge_labels=args.edge_labels,
        show_axes=not args.no_axes,
        annotate_d0=args.annotate_d0,
    )
    if args.json:
        _emit(args, "render", {"svg": svg}, "")
    else:
        _write(args.output, svg)
    return 0


def cmd_report(args) -> int:
    obj = reports.criterion_report(args.number, threads=args.threads)
    op = "criterion%d" % args.number
    validate_report(op, obj)
    print(to_json(obj), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab", description="Odd ring puzzle tables, search, and reports"
    )
    parser.add_argument(
        "--symmetry",
        choices=[MODE_ROT, MODE_ROT_REF],
        default=DEFAULT_MODE,
        help="ring matching symmetry group (default %(default)s)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker threads for enumeration (default: all cores)",
    )
    parser.add_argument(
        "--json", action="store_true", help="machine-readable output"
    )
    # the same flags are accepted after the subcommand; SUPPRESS keeps a
    # subcommand parse from clobbering a value given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--symmetry", choices=[MODE_ROT, MODE_ROT_REF], default=argparse.SUPPRESS
    )
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("rings", parents=[common], help="ring and rank tables")
    p.set_defaults(fn=cmd_rings)

    p = sub.add_parser(
        "edge-labels", parents=[common], help="canonical edge labels on a square window"
    )
    p.add_argument("--window", type=int, default=12, help="window side (vertices)")
    p.set_defaults(fn=cmd_edge_labels)

    p = sub.add_parser("check", parents=[common], help="check a configuration file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser(
        "enumerate", parents=[common], help="enumerate completions of a configuration"
    )
    p.add_argument("file")
    p.add_argument(
        "--radius", type=int, help="extend the target window to this ball radius"
    )
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser(
        "deadends", parents=[common], help="probe completions for dead ends"
    )
    p.add_argument("file")
    p.add_argument("--radius", type=int, required=True, help="completion radius")
    p.add_argument("--probe", type=int, required=True, help="survival probe radius")
    p.set_defaults(fn=cmd_deadends)

    p = sub.add_parser("strip", parents=[common], help="assemble a strip stack")
    p.add_argument("--height", type=int, choices=[1, 2], required=True)
    p.add_argument("--index", type=int, required=True, help="strip table index")
    p.add_argument("--rows", type=int, default=4, help="rows to stack")
    p.add_argument("--width", type=int, default=12, help="width in faces per row")
    p.add_argument(
        "--word",
        help="comma-separated per-row shifts; a token key:shift pins that row's strip",
    )
    p.add_argument("-o", "--output", help="write the configuration to a file")
    p.set_defaults(fn=cmd_strip)

    p = sub.add_parser(
        "special", parents=[common], help="one of the twelve special puzzles"
    )
    p.add_argument("--index", type=int, required=True, help="1..12")
    p.add_argument("--radius", type=int, default=3, help="ball radius")
    p.add_argument("-o", "--output", help="write the configuration to a file")
    p.set_defaults(fn=cmd_special)

    p = sub.add_parser(
        "iso", parents=[common], help="test two configurations for isomorphism"
    )
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("dist", parents=[common], help="root distribution tools")
    dsub = p.add_subparsers(dest="dist_cmd", required=True)
    d = dsub.add_parser("check", parents=[common], help="all faces odd?")
    d.add_argument("file")
    d = dsub.add_parser("propagate", parents=[common], help="fill forced axes")
    d.add_argument("file")
    d.add_argument("--refute", action="store_true", help="rule out contradictory axes")
    d = dsub.add_parser("classify", parents=[common], help="name the distribution family")
    d.add_argument("file")
    d = dsub.add_parser("d0", parents=[common], help="build the exceptional distribution")
    d.add_argument("--radius", type=int, default=6, help="hexagonal window radius")
    d.add_argument("-o", "--output", help="write the distribution to a file")
    p.set_defaults(fn=cmd_dist)

    p = sub.add_parser(
        "render", parents=[common], help="render a configuration or distribution as SVG"
    )
    p.add_argument("file")
    p.add_argument("-o", "--output", help="output SVG path (default stdout)")
    p.add_argument("--scale", type=float, default=40.0)
    p.add_argument("--edge-labels", action="store_true", help="draw edge labels")
    p.add_argument("--no-face-labels", action="store_true")
    p.add_argument("--no-axes", action="store_true", help="suppress axis ticks")
    p.add_argument("--annotate-d0", action="store_true", help="dashed half-geodesic")
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser(
        "report", parents=[common], help="acceptance criterion report as JSON"
    )
    p.add_argument("number", type=int, choices=range(1, 9), metavar="1..8")
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
