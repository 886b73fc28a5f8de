"""Flat-strip catalog: strip data, stacking rules, special seeds, isomorphism.

The periodic strips and the twelve exceptional seed patches ship as data
files; this module loads them, stacks strips into finite windows, rebuilds
the special puzzles by propagation, and decides label-preserving
isomorphism and sub-window embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .configio import parse_config
from .engine import (
    Configuration,
    VALID,
    check,
    enumerate_completions,
    make_config,
    propagate,
)
from .lattice import (
    A1,
    A2,
    Face,
    Isometry,
    LABEL_POINT_GROUP,
    POINT_GROUP,
    Vertex,
    ball,
    compose,
    up,
)

RowChoice = Tuple[str, int]
StackingWord = Sequence[RowChoice]


@dataclass(frozen=True)
class StripSpec:
    """One periodic strip: per-row up/down label cycles plus interface letters."""

    height: int
    index: int
    key: str
    period: int
    rows: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]
    top_letter: str
    bottom_letter: str


_H1_LETTERS = {
    "a": ("A", "B"),
    "b": ("A", "A"),
    "c": ("A", "B"),
    "d": ("B", "A"),
    "e": ("B", "A"),
    "f": ("B", "B"),
}
_H2_LETTERS = {"1": ("A", "B"), "2": ("A", "B"), "3": ("A", "B")}

# Allowed horizontal offsets (upper shift minus lower shift, mod 6) at each
# strip interface.  Derived once by exhaustive two-row validity checks and
# frozen here; a catalog test re-derives the table and compares.  The letter
# annotations explain every entry (facing letters must agree) except that the
# two self-faced strips b and f cannot stack on themselves at any offset.
H1_DELTAS: Dict[Tuple[str, str], Tuple[int, ...]] = {
    ("a", "d"): (1,),
    ("a", "e"): (4,),
    ("a", "f"): (1, 4),
    ("b", "a"): (1, 4),
    ("b", "c"): (1, 4),
    ("c", "d"): (4,),
    ("c", "e"): (1,),
    ("c", "f"): (1, 4),
    ("d", "a"): (4,),
    ("d", "b"): (1, 4),
    ("d", "c"): (1,),
    ("e", "a"): (1,),
    ("e", "b"): (1, 4),
    ("e", "c"): (4,),
    ("f", "d"): (1, 4),
    ("f", "e"): (1, 4),
}
H2_DELTAS: Dict[Tuple[str, str], Tuple[int, ...]] = {
    (a, b): (2,) for a in "123" for b in "123" if a != b
}
INTERFACE_DELTAS: Dict[int, Dict[Tuple[str, str], Tuple[int, ...]]] = {
    1: H1_DELTAS,
    2: H2_DELTAS,
}


def _data_text(name: str) -> str:
    return (resources.files("ringlab") / "data" / name).read_text()


def _load_rows(name: str, height: int):
    cfg = parse_config(_data_text(name))
    rows = []
    for j in range(height):
        y = -j
        ups = tuple(cfg.marks[Face(x, y, True)] for x in range(6))
        downs = tuple(cfg.marks[Face(x, y, False)] for x in range(6))
        rows.append((ups, downs))
    return tuple(rows)


@lru_cache(maxsize=None)
def strip_variants(height: int) -> Tuple[StripSpec, ...]:
    """Every row type occurring in stacks: six for height 1, three for height 2."""
    out = []
    if height == 1:
        for i, key in enumerate("abcdef", start=1):
            top, bottom = _H1_LETTERS[key]
            out.append(
                StripSpec(1, i, key, 6, _load_rows(f"strip_h1_{key}.txt", 1), top, bottom)
            )
    elif height == 2:
        for i, key in enumerate("123", start=1):
            top, bottom = _H2_LETTERS[key]
            out.append(
                StripSpec(2, i, key, 6, _load_rows(f"strip_h2_{key}.txt", 2), top, bottom)
            )
    else:
        raise ValueError("height must be 1 or 2")
    return tuple(out)


@lru_cache(maxsize=None)
def _variant_by_key(height: int) -> Dict[str, StripSpec]:
    return {s.key: s for s in strip_variants(height)}


def strip_table() -> List[StripSpec]:
    """The four distinct height-1 strips and the three height-2 strips."""
    h1 = _variant_by_key(1)
    return [h1[k] for k in "abcf"] + list(strip_variants(2))


def get_strip(height: int, index: int) -> StripSpec:
    table = [s for s in strip_table() if s.height == height]
    for s in table:
        if s.index == index:
            return s
    raise ValueError(f"no height-{height} strip with index {index}")


def _place_row(
    marks: Dict[Face, int], spec: StripSpec, shift: int, y_top: int, width: int
) -> None:
    for j, (ups, downs) in enumerate(spec.rows):
        y = y_top - j
        for x in range(width):
            marks[Face(x, y, True)] = ups[(x - shift) % 6]
            marks[Face(x, y, False)] = downs[(x - shift) % 6]


def assemble(word: StackingWord, width_periods: int = 2) -> Configuration:
    """Stack strip rows (top to bottom) into one finite window.

    Each row choice is (variant key, horizontal shift).  Shifts must keep
    each row consistent with the canonical edge labeling and consecutive
    rows must meet at an allowed offset.
    """
    if not word:
        raise ValueError("empty stacking word")
    if width_periods < 2:
        raise ValueError("width must cover at least two periods")
    keys = [k for k, _ in word]
    heights = {1 if k in "abcdef" else 2 for k in keys}
    if len(heights) != 1:
        raise ValueError("interface mismatch: rows of different strip heights")
    height = heights.pop()
    variants = _variant_by_key(height)
    width = 6 * width_periods
    marks: Dict[Face, int] = {}
    prev: Optional[RowChoice] = None
    for r, (key, shift) in enumerate(word):
        if key not in variants:
            raise ValueError(f"unknown strip key {key!r}")
        y_top = -r * height
        if (shift - y_top) % 3 != 0:
            raise ValueError(
                f"interface mismatch: row {r} shift {shift} breaks the edge "
                f"labeling (needs shift congruent to {y_top % 3} mod 3)"
            )
        if prev is not None:
            delta = (prev[1] - shift) % 6
            allowed = INTERFACE_DELTAS[height].get((prev[0], key), ())
            if delta not in allowed:
                raise ValueError(
                    f"interface mismatch: row {r - 1} ({prev[0]}) over row {r} "
                    f"({key}) at offset {delta}"
                )
        _place_row(marks, variants[key], shift, y_top, width)
        prev = (key, shift)
    return make_config(marks, period=6)


def derive_interface_table(height: int) -> Dict[Tuple[str, str], Tuple[int, ...]]:
    """Recompute the allowed-offset table by brute two-row validity checks."""
    variants = strip_variants(height)
    width = 18
    deltas = (1, 4) if height == 1 else (2, 5)
    out: Dict[Tuple[str, str], Tuple[int, ...]] = {}
    for a in variants:
        for b in variants:
            good = []
            for delta in deltas:
                shift = (0 - delta) % 6
                marks: Dict[Face, int] = {}
                _place_row(marks, a, 0, 0, width)
                _place_row(marks, b, shift, -height, width)
                if check(make_config(marks)).status == VALID:
                    good.append(delta)
            if good:
                out[(a.key, b.key)] = tuple(good)
    return out


def compatible_words(height: int, rows: int) -> List[StackingWord]:
    """All stacking words of the given length with top-row shift in {0, 3}."""
    variants = [s.key for s in strip_variants(height)]
    table = INTERFACE_DELTAS[height]

    def rec(word: List[RowChoice]) -> Iterator[StackingWord]:
        if len(word) == rows:
            yield tuple(word)
            return
        r = len(word)
        y_top = -r * height
        for key in variants:
            if word and (word[-1][0], key) not in table:
                continue
            if word:
                for delta in table[(word[-1][0], key)]:
                    shift = (word[-1][1] - delta) % 6
                    if (shift - y_top) % 3 == 0:
                        word.append((key, shift))
                        yield from rec(word)
                        word.pop()
            else:
                for shift in (0, 3):
                    word.append((key, shift))
                    yield from rec(word)
                    word.pop()

    return list(rec([]))


def special_seed(index: int) -> Configuration:
    if not 1 <= index <= 12:
        raise ValueError("seed index must be in 1..12")
    return parse_config(_data_text("seed_%02d.txt" % index))


@lru_cache(maxsize=None)
def special_puzzle(index: int, radius: int) -> Configuration:
    """The unique puzzle through seed patch `index`, filled to the given ball."""
    if radius < 1:
        raise ValueError("radius must be at least 1")
    seed = special_seed(index)
    cfg = make_config(dict(seed.marks), window=ball(up(0, 0), radius))
    out = propagate(cfg)
    if len(out.marks) != len(out.window):
        # plain propagation is expected to finish; fall back to search
        comps = enumerate_completions(out, stop_at=2)
        if len(comps) != 1:
            raise ValueError(
                f"seed {index} does not determine the radius-{radius} ball"
            )
        out = comps[0]
    return out


def transform_config(config: Configuration, g: Isometry) -> Configuration:
    marks = {g.apply_face(f): l for f, l in config.marks.items()}
    window = {g.apply_face(f) for f in config.window}
    return make_config(marks, window=window, period=config.period)


def isomorphic(a: Configuration, b: Configuration) -> Optional[Isometry]:
    """A label-preserving isometry carrying a onto b, or None.

    Raises when the two windows are not even congruent as shapes.
    """
    if len(a.marks) != len(a.window) or len(b.marks) != len(b.window):
        raise ValueError("isomorphism needs configurations total on their windows")
    congruent = False
    wa = sorted(a.window)
    wb = set(b.window)
    mb = min(b.window)
    witness: Optional[Isometry] = None
    for g0 in POINT_GROUP:
        image = [g0.apply_face(f) for f in wa]
        m0 = min(image)
        if m0.up != mb.up:
            continue
        tx, ty = mb.x - m0.x, mb.y - m0.y
        if {Face(f.x + tx, f.y + ty, f.up) for f in image} != wb:
            continue
        congruent = True
        g = Isometry(g0.rot, g0.ref, tx, ty)
        if not g.label_preserving():
            continue
        if all(
            b.marks[g.apply_face(f)] == a.marks[f] for f in wa
        ):
            witness = g
            break
    if witness is not None:
        return witness
    if not congruent:
        raise ValueError("incongruent windows")
    return None


def embeds_as_subwindow(small: Configuration, big: Configuration) -> Optional[Isometry]:
    """A label-preserving isometry mapping small into big's marked window."""
    faces = sorted(small.marks)
    for g0 in LABEL_POINT_GROUP:
        image = [(g0.apply_face(f), small.marks[f]) for f in faces]
        m0 = min(p for p, _ in image)
        for h in big.marks:
            if h.up != m0.up:
                continue
            tx, ty = h.x - m0.x, h.y - m0.y
            if (tx - ty) % 3 != 0:
                continue
            if all(
                big.marks.get(Face(p.x + tx, p.y + ty, p.up)) == l
                for p, l in image
            ):
                return Isometry(g0.rot, g0.ref, tx, ty)
    return None


def _band_label(spec: StripSpec, f: Face) -> Optional[int]:
    j = -f.y
    if not 0 <= j < spec.height:
        return None
    ups, downs = spec.rows[j]
    return ups[f.x % 6] if f.up else downs[f.x % 6]


def strips_isomorphic(a: StripSpec, b: StripSpec) -> bool:
    """Whether the bi-infinite strips agree under a label-preserving isometry."""
    if a.height != b.height:
        return False
    sample = [
        Face(x, -j, orient)
        for x in range(6)
        for j in range(a.height)
        for orient in (True, False)
    ]
    for ref in (False, True):
        for ty in range(-2, 3):
            for tx in range(6):
                if (tx - ty) % 3 != 0:
                    continue
                g = Isometry(0, ref, tx, ty)
                if all(
                    _band_label(b, g.apply_face(f)) == _band_label(a, f)
                    for f in sample
                ):
                    return True
    return False


def mirror_strip_rows(spec: StripSpec):
    """Row data of the strip's mirror image under the canonical glide.

    The glide reflects across the strip's horizontal midline and shifts one
    step; it reverses the transversal axis decoration, pairing each band
    with its oppositely decorated reading.
    """
    if spec.height == 1:
        ups, downs = spec.rows[0]
        new_ups = tuple(downs[(x - 2) % 6] for x in range(6))
        new_downs = tuple(ups[(x - 1) % 6] for x in range(6))
        return ((new_ups, new_downs),)
    # height 2: the band reflection fixing the center vertex line swaps the
    # two face rows; face images are Up(x,0)->Down(x,-1), Down(x,0)->Up(x+1,-1),
    # Up(x,-1)->Down(x-1,0), Down(x,-1)->Up(x,0)
    (u0, d0), (u1, d1) = spec.rows
    new_u0 = tuple(d1[x % 6] for x in range(6))
    new_d0 = tuple(u1[(x + 1) % 6] for x in range(6))
    new_u1 = tuple(d0[(x - 1) % 6] for x in range(6))
    new_d1 = tuple(u0[x % 6] for x in range(6))
    return ((new_u0, new_d0), (new_u1, new_d1))


def _rows_shift(rows, t: int):
    return tuple(
        (
            tuple(ups[(x - t) % 6] for x in range(6)),
            tuple(downs[(x - t) % 6] for x in range(6)),
        )
        for ups, downs in rows
    )


def strip_dedup_classes(height: int = 1) -> List[List[str]]:
    """Group strip variants with their glide-reversal images.

    A later variant joins the class of the variant its mirror equals, so each
    pair shares one band pattern read in the two transversal orientations.
    """
    variants = strip_variants(height)
    classes: List[List[StripSpec]] = []
    for s in variants:
        mirrored = mirror_strip_rows(s)
        placed = False
        for cl in classes:
            if any(t.rows in (s.rows, mirrored) for t in cl):
                cl.append(s)
                placed = True
                break
        if not placed:
            classes.append([s])
    return [[s.key for s in cl] for cl in classes]


def strip_tick(x: int) -> int:
    """Transversal axis marked at vertex x on a height-1 strip boundary line.

    All six period-6 variants carry the same 2-periodic decoration.
    """
    return A1 if x % 2 == 0 else A2


def strip_readings() -> List[Tuple[str, int, str]]:
    """The eight (strip, orientation, realized variant) readings of the four
    height-1 table strips; orientation -1 is the mirror glide."""
    by_rows = {s.rows: s.key for s in strip_variants(1)}
    out: List[Tuple[str, int, str]] = []
    for s in strip_table():
        if s.height != 1:
            continue
        out.append((s.key, 1, s.key))
        out.append((s.key, -1, by_rows[mirror_strip_rows(s)]))
    return out


def _row_faces(config: Configuration, y: int) -> List[Face]:
    return [f for f in config.marks if f.y == y]


def _slot_candidates(
    config: Configuration, spec_list, height: int, y_top: int
) -> List[RowChoice]:
    """Variant/shift pairs whose strip rows agree with every marked face
    of the slot at rows y_top .. y_top-height+1."""
    present = [
        f for f in config.marks if y_top - height < f.y <= y_top
    ]
    out = []
    for spec in spec_list:
        for shift in range(6):
            if (shift - y_top) % 3 != 0:
                continue
            ok = True
            for f in present:
                ups, downs = spec.rows[y_top - f.y]
                want = ups[(f.x - shift) % 6] if f.up else downs[(f.x - shift) % 6]
                if config.marks[f] != want:
                    ok = False
                    break
            if ok:
                out.append((spec.key, shift))
    return out


def _match_stack(config: Configuration, height: int) -> Optional[StackingWord]:
    """A compatible stacking word agreeing with the (normalized) config."""
    ys = {f.y for f in config.marks}
    if not -height < max(ys) <= 0:
        raise ValueError("config must be normalized with top face row in the first slot")
    slots = (-min(ys)) // height + 1
    spec_list = strip_variants(height)
    table = INTERFACE_DELTAS[height]
    options = [
        _slot_candidates(config, spec_list, height, -r * height)
        for r in range(slots)
    ]
    if any(not opts for opts in options):
        return None

    word: List[RowChoice] = []

    def rec(r: int) -> bool:
        if r == slots:
            return True
        for key, shift in options[r]:
            if word:
                pk, ps = word[-1]
                if (pk, key) not in table:
                    continue
                if (ps - shift) % 6 not in table[(pk, key)]:
                    continue
            word.append((key, shift))
            if rec(r + 1):
                return True
            word.pop()
        return False

    return tuple(word) if rec(0) else None


def _normalizations(config: Configuration, height: int) -> Iterator[Configuration]:
    """Label-preserving translates putting the top face row at 0 or, for
    height 2, also at -1 (strip slots have two vertical phases)."""
    y_max = max(f.y for f in config.marks)
    x_min = min(f.x for f in config.marks)
    for y_target in range(0, -height, -1):
        ty = y_target - y_max
        tx = 3 - x_min
        tx += (ty - tx) % 3
        yield transform_config(config, Isometry(0, False, tx, ty))


def embeds_in_strips(config: Configuration, height: int) -> Optional[dict]:
    """Evidence that config occurs inside a strip-stack puzzle: the matched
    stacking word is assembled wide enough and the inclusion re-verified."""
    for g in LABEL_POINT_GROUP:
        img0 = transform_config(config, g)
        for img in _normalizations(img0, height):
            word = _match_stack(img, height)
            if word is None:
                continue
            x_max = max(f.x for f in img.marks)
            big = assemble(word, width_periods=max(2, (x_max + 6) // 6 + 1))
            if all(big.marks.get(f) == l for f, l in img.marks.items()):
                return {"kind": f"strip-h{height}", "word": list(word)}
    return None


_SPECIAL_PATCH_RADIUS = 7


@lru_cache(maxsize=None)
def _special_signature_index(index: int) -> Dict[tuple, Tuple[Face, ...]]:
    patch = special_puzzle(index, _SPECIAL_PATCH_RADIUS)
    out: Dict[tuple, List[Face]] = {}
    for h in patch.marks:
        ring1 = ball(h, 1)
        if not all(f in patch.marks for f in ring1):
            continue
        sig = tuple(patch.marks[f] for f in sorted(ring1))
        out.setdefault(sig, []).append(h)
    return {sig: tuple(faces) for sig, faces in out.items()}


def embeds_in_special(config: Configuration, center: Face = up(0, 0)) -> Optional[dict]:
    """Evidence that config occurs inside one of the twelve special puzzles."""
    for g in LABEL_POINT_GROUP:
        img = transform_config(config, g)
        c_img = g.apply_face(center)
        ring1 = sorted(ball(c_img, 1))
        if not all(f in img.marks for f in ring1):
            raise ValueError("config must cover the radius-1 ball of the center")
        sig = tuple(img.marks[f] for f in ring1)
        for index in range(1, 13):
            patch = special_puzzle(index, _SPECIAL_PATCH_RADIUS)
            for h in _special_signature_index(index).get(sig, ()):
                if h.up != c_img.up:
                    continue
                tx, ty = h.x - c_img.x, h.y - c_img.y
                if (tx - ty) % 3 != 0:
                    continue
                if all(
                    patch.marks.get(Face(f.x + tx, f.y + ty, f.up)) == l
                    for f, l in img.marks.items()
                ):
                    return {"kind": "special", "index": index}
    return None


def embeds_in_catalog(config: Configuration, center: Face = up(0, 0)) -> Optional[dict]:
    """Strip-stack or special-puzzle embedding evidence, or None."""
    for height in (1, 2):
        found = embeds_in_strips(config, height)
        if found is not None:
            return found
    return embeds_in_special(config, center)
