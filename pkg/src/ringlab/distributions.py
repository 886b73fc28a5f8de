"""Axis distributions on lattice vertices: parity, propagation, classification.

A distribution assigns one of the three simplicial axes to each vertex.
A face is Odd when an odd number of its three vertices carry an axis
different from their opposite-side axis (those vertices count as rank 2;
the others as rank 3/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .lattice import (
    A0,
    A1,
    A2,
    AXES,
    AXIS_STEPS,
    Face,
    Isometry,
    POINT_GROUP,
    Vertex,
    face_vertices,
    hex_distance,
    link_faces,
    opposite_axis_at_vertex,
    vertices_within,
)
from .labeling import vertex_s
from .rings import DEFAULT_MODE, rank_axis

ODD = "Odd"
EVEN = "Even"

SPECIAL_D0 = "SpecialD0"
FAMILY_1 = "Family1Periodic"
FAMILY_2 = "Family2Periodic"
UNKNOWN = "Unknown"

# Trapezoid seed: two aligned horizontal-axis vertices, the 120-degree root
# to their right, and the 60-degree root above; written with the middle
# horizontal vertex at the origin.
T0_SEED: Dict[Vertex, int] = {(-1, 0): A0, (0, 0): A0, (1, 0): A2, (0, 1): A1}


@dataclass
class Distribution:
    """A finite vertex window with a (possibly partial) axis assignment."""

    window: frozenset
    axis: Dict[Vertex, int]

    def __post_init__(self) -> None:
        self.window = frozenset(self.window)
        bad = set(self.axis) - self.window
        if bad:
            raise ValueError(f"axes outside window: {sorted(bad)[:3]}")

    def total(self) -> bool:
        return set(self.axis) == set(self.window)


def make_distribution(
    axis: Dict[Vertex, int], window: Optional[Iterable[Vertex]] = None
) -> Distribution:
    w = frozenset(window) if window is not None else frozenset(axis)
    return Distribution(w | frozenset(axis), dict(axis))


class DistContradiction(Exception):
    def __init__(self, vertex: Vertex, why: str, face: Optional[Face] = None):
        self.vertex = vertex
        self.face = face
        super().__init__(why)


def hex_window(radius: int, center: Vertex = (0, 0)) -> frozenset:
    """All vertices within hex distance radius of the center."""
    return frozenset(vertices_within([center], radius))


def interior_faces(vertices: Iterable[Vertex]) -> List[Face]:
    """Faces all three of whose corners lie in the vertex set."""
    vs = set(vertices)
    out: Set[Face] = set()
    for v in vs:
        for f in link_faces(v):
            if all(u in vs for u in face_vertices(f)):
                out.add(f)
    return sorted(out)


def face_parity(dist: Distribution, f: Face) -> str:
    """Odd or Even count of rank-2 corners of f; needs all three assigned."""
    count = 0
    for v in face_vertices(f):
        a = dist.axis.get(v)
        if v not in dist.window or a is None:
            raise ValueError(f"insufficient data at {v} for face {f}")
        if a != opposite_axis_at_vertex(f, v):
            count += 1
    return ODD if count % 2 == 1 else EVEN


def induced_distribution(config, mode: str = DEFAULT_MODE) -> Distribution:
    """Axis of the unique multiplicity-1 half-link pair at each interior vertex."""
    axis: Dict[Vertex, int] = {}
    marked = set(config.marks)
    for v in sorted({u for f in marked for u in face_vertices(f)}):
        faces = link_faces(v)
        if all(f in marked for f in faces):
            word = tuple(config.marks[f] for f in faces)
            axis[v] = rank_axis(word, vertex_s(v))
    return make_distribution(axis)


def _allowed_axes(
    axis: Dict[Vertex, int], v: Vertex, faces_at: Dict[Vertex, List[Face]]
) -> Tuple[Set[int], Optional[Face]]:
    """Admissible axes at v plus the face that emptied the set, if any."""
    allowed = set(AXES)
    for f in faces_at[v]:
        others = [u for u in face_vertices(f) if u != v]
        if any(u not in axis for u in others):
            continue
        count = sum(
            1 for u in others if axis[u] != opposite_axis_at_vertex(f, u)
        )
        opp = opposite_axis_at_vertex(f, v)
        if count % 2 == 1:
            allowed &= {opp}
        else:
            allowed -= {opp}
        if not allowed:
            return allowed, f
    return allowed, None


def dist_propagate(
    dist: Distribution, refute: bool = False
) -> Distribution:
    """Assign every vertex whose axis is forced by keeping all faces Odd.

    With refute=True, a stalled propagation additionally rules out candidate
    axes whose one-step consequences contradict, which is enough to rebuild
    the special distribution from its seed.
    """
    window = dist.window
    faces = interior_faces(window)
    faces_at: Dict[Vertex, List[Face]] = {v: [] for v in window}
    for f in faces:
        for v in face_vertices(f):
            faces_at[v].append(f)
    axis = dict(dist.axis)

    def sweep(ax: Dict[Vertex, int]) -> bool:
        changed = False
        for v in sorted(window):
            if v in ax:
                continue
            allowed, witness = _allowed_axes(ax, v, faces_at)
            if not allowed:
                raise DistContradiction(
                    v, f"no admissible axis at {v} (face {witness})", witness
                )
            if len(allowed) == 1:
                ax[v] = allowed.pop()
                changed = True
        return changed

    while sweep(axis):
        pass
    if refute:
        progress = True
        while progress:
            progress = False
            for v in sorted(window):
                if v in axis:
                    continue
                survivors = []
                for a in sorted(_allowed_axes(axis, v, faces_at)[0]):
                    trial = dict(axis)
                    trial[v] = a
                    try:
                        while sweep(trial):
                            pass
                    except DistContradiction:
                        continue
                    survivors.append(a)
                if not survivors:
                    raise DistContradiction(v, f"no admissible axis at {v}")
                if len(survivors) == 1:
                    axis[v] = survivors[0]
                    while sweep(axis):
                        pass
                    progress = True
    return Distribution(window, axis)


def build_D0(window: Iterable[Vertex]) -> Distribution:
    """The unique all-odd distribution through the trapezoid seed."""
    w = frozenset(window)
    if not set(T0_SEED) <= w:
        raise ValueError("window must contain the seed trapezoid")
    out = dist_propagate(Distribution(w, dict(T0_SEED)), refute=True)
    if not out.total():
        raise ValueError("window too irregular")
    return out


def all_faces_odd(dist: Distribution) -> bool:
    return all(face_parity(dist, f) == ODD for f in interior_faces(dist.window))


def _lines(dist: Distribution, direction: int) -> List[List[int]]:
    """Axis values along each maximal window line in the given direction."""
    step = AXIS_STEPS[direction]
    keyed: Dict[Tuple[int, int], List[Tuple[int, Vertex]]] = {}
    for v in dist.window:
        # project out the step direction: the key identifies the line
        if direction == A0:
            key, t = (0, v[1]), v[0]
        elif direction == A1:
            key, t = (v[0], 0), v[1]
        else:
            key, t = (v[0] + v[1], 0), v[1]
        keyed.setdefault(key, []).append((t, v))
    lines = []
    for key in sorted(keyed):
        run = sorted(keyed[key])
        lines.append([dist.axis[v] for _, v in run])
    return lines


def _line_keys(dist: Distribution, direction: int) -> List[int]:
    ks: Set[int] = set()
    for v in dist.window:
        if direction == A0:
            ks.add(v[1])
        elif direction == A1:
            ks.add(v[0])
        else:
            ks.add(v[0] + v[1])
    return sorted(ks)


def _is_family1(dist: Distribution) -> bool:
    """Some direction: constant lines, alternating line-parallel and not."""
    for d in AXES:
        keys = _line_keys(dist, d)
        if len(keys) < 3 or keys != list(range(keys[0], keys[0] + len(keys))):
            continue
        lines = _lines(dist, d)
        if any(len(set(line)) != 1 for line in lines):
            continue
        values = [line[0] for line in lines]
        par = [i % 2 for i, val in enumerate(values) if val == d]
        if not par:
            continue
        if len(set(par)) == 1 and all(
            (values[i] == d) == (i % 2 == par[0]) for i in range(len(values))
        ):
            return True
    return False


def _is_family2(dist: Distribution) -> bool:
    """Some direction: every line 2-periodic along its run."""
    for d in AXES:
        keys = _line_keys(dist, d)
        if len(keys) < 2 or keys != list(range(keys[0], keys[0] + len(keys))):
            continue
        lines = _lines(dist, d)
        if all(
            len(line) >= 3 and all(line[i] == line[i + 2] for i in range(len(line) - 2))
            for line in lines
        ):
            return True
    return False


_D0_REF_RADIUS = 9


@lru_cache(maxsize=None)
def _d0_reference() -> Distribution:
    return build_D0(hex_window(_D0_REF_RADIUS))


def matches_d0(dist: Distribution) -> bool:
    """Whether some lattice isometry carries dist into the reference D0 patch."""
    ref = _d0_reference()
    items = sorted(dist.axis.items())
    if not items:
        return False
    for g in POINT_GROUP:
        moved = [(g.apply_vertex(v), g.apply_axis(a)) for v, a in items]
        anchor = min(m[0] for m in moved)
        for w in ref.window:
            tx, ty = w[0] - anchor[0], w[1] - anchor[1]
            ok = True
            for (vx, vy), a in moved:
                u = (vx + tx, vy + ty)
                if u not in ref.window or ref.axis.get(u) != a:
                    ok = False
                    break
            if ok:
                return True
    return False


def classify_distribution(dist: Distribution) -> str:
    """SpecialD0, Family1Periodic, Family2Periodic, or Unknown."""
    if not dist.total():
        raise ValueError("classification needs a total distribution")
    if not all_faces_odd(dist):
        raise ValueError("not an odd distribution")
    if matches_d0(dist):
        return SPECIAL_D0
    if _is_family1(dist):
        return FAMILY_1
    if _is_family2(dist):
        return FAMILY_2
    return UNKNOWN


def half_strip_report(height: int = 4, width: int = 5) -> dict:
    """Propagate the aligned-horizontal seed downward and read row profiles.

    Seeded on the top row with two horizontal axes and one 120-degree axis,
    the rows below are forced one by one; profile "a" is (A0, A0, A2) and
    profile "b" is (A2, A2, A0) at the three middle columns.
    """
    # two rows of slack below the reported strip so its bottom row is interior
    window = frozenset((x, -k) for x in range(width) for k in range(height + 3))
    seed = {(1, 0): A0, (2, 0): A0, (3, 0): A2}
    out = dist_propagate(Distribution(window, seed))
    rows = []
    for k in range(height + 1):
        trio = tuple(out.axis.get((x, -k)) for x in (1, 2, 3))
        if trio == (A0, A0, A2):
            rows.append("a")
        elif trio == (A2, A2, A0):
            rows.append("b")
        elif None in trio:
            rows.append("stalled")
        else:
            rows.append(str(trio))
    return {
        "rows": rows,
        "alternates": all(
            rows[k] == ("a" if k % 2 == 0 else "b") for k in range(height + 1)
        ),
    }


def _grid_lines(vs: Set[Vertex]) -> List[Tuple[int, List[Vertex]]]:
    """Maximal runs of consecutive vertices in each direction, with the direction."""
    out = []
    for d in AXES:
        step = AXIS_STEPS[d]
        starts = [
            v
            for v in vs
            if (v[0] - step[0], v[1] - step[1]) not in vs
        ]
        for v in starts:
            run = []
            u = v
            while u in vs:
                run.append(u)
                u = (u[0] + step[0], u[1] + step[1])
            if len(run) >= 4:
                out.append((d, run))
    return out


def _has_rank32_segment(axis: Dict[Vertex, int], vs: Set[Vertex]) -> bool:
    """A length-3 segment whose two interior vertices both align with it."""
    assigned = {v for v in vs if v in axis}
    for d, run in _grid_lines(assigned):
        for i in range(len(run) - 3):
            if axis[run[i + 1]] == d and axis[run[i + 2]] == d:
                return True
    return False


def verify_lemma_L3(n: int = 4) -> dict:
    """Exhaustive check: every all-odd n-by-n assignment has a rank-3/2
    length-3 segment, either inside the window or forced on a one-ring
    enlargement."""
    grid = {(x, y) for x in range(n) for y in range(n)}
    faces = interior_faces(grid)
    order = sorted(grid)
    faces_done_at: List[List[Face]] = [[] for _ in order]
    idx = {v: i for i, v in enumerate(order)}
    for f in faces:
        last = max(idx[v] for v in face_vertices(f))
        faces_done_at[last].append(f)

    results = {
        "assignments": 0,
        "with_segment": 0,
        "forced_on_enlargement": 0,
        "unextendable": 0,
        "counterexamples": [],
    }
    enlarged = frozenset(vertices_within(grid, 1))

    def handle(axis: Dict[Vertex, int]) -> None:
        results["assignments"] += 1
        if _has_rank32_segment(axis, grid):
            results["with_segment"] += 1
            return
        try:
            bigger = dist_propagate(Distribution(enlarged, dict(axis)))
        except DistContradiction:
            results["unextendable"] += 1
            return
        if _has_rank32_segment(bigger.axis, set(enlarged)):
            results["forced_on_enlargement"] += 1
        else:
            results["counterexamples"].append(sorted(axis.items()))

    def rec(i: int, axis: Dict[Vertex, int]) -> None:
        if i == len(order):
            handle(dict(axis))
            return
        v = order[i]
        for a in AXES:
            axis[v] = a
            ok = True
            for f in faces_done_at[i]:
                cnt = sum(
                    1
                    for u in face_vertices(f)
                    if axis[u] != opposite_axis_at_vertex(f, u)
                )
                if cnt % 2 == 0:
                    ok = False
                    break
            if ok:
                rec(i + 1, axis)
        del axis[v]

    rec(0, {})
    return results
