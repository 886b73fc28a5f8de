"""Triangular-lattice geometry: faces, edges, links, balls, and isometries.

Vertices use axial integer coordinates (a, b) for a*e1 + b*e2 with
e1 = (1, 0) and e2 = (1/2, sqrt(3)/2).  No floats appear anywhere in the
core; squared lengths use the quadratic form a^2 + a*b + b^2.
"""

from __future__ import annotations

from typing import Iterable, List, NamedTuple, Set, Tuple

Vertex = Tuple[int, int]

A0 = 0  # horizontal axis (0 / 180 degrees)
A1 = 1  # 60 / 240 degrees
A2 = 2  # 120 / 300 degrees
AXES = (A0, A1, A2)

AXIS_NAMES = {A0: "A0", A1: "A1", A2: "A2"}
AXIS_BY_NAME = {v: k for k, v in AXIS_NAMES.items()}

# Unit steps along each axis in axial coordinates.
AXIS_STEPS = {A0: (1, 0), A1: (0, 1), A2: (-1, 1)}

NEIGHBOR_OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


class Face(NamedTuple):
    """One lattice triangle; up=True points upward from its (x, y) corner."""

    x: int
    y: int
    up: bool

    def __repr__(self) -> str:
        return f"{'Up' if self.up else 'Down'}({self.x},{self.y})"


class Edge(NamedTuple):
    """One lattice edge, identified by base vertex and axis direction."""

    x: int
    y: int
    axis: int


def up(x: int, y: int) -> Face:
    return Face(x, y, True)


def down(x: int, y: int) -> Face:
    return Face(x, y, False)


def face_vertices(f: Face) -> Tuple[Vertex, Vertex, Vertex]:
    x, y = f.x, f.y
    if f.up:
        return ((x, y), (x + 1, y), (x, y + 1))
    return ((x + 1, y), (x, y + 1), (x + 1, y + 1))


def face_from_vertices(vs: Iterable[Vertex]) -> Face:
    """Inverse of face_vertices for an unordered vertex triple."""
    s = frozenset(vs)
    if len(s) != 3:
        raise ValueError(f"not a face vertex set: {sorted(s)}")
    x = min(v[0] for v in s)
    y = min(v[1] for v in s)
    for f in (Face(x, y, True), Face(x, y, False)):
        if frozenset(face_vertices(f)) == s:
            return f
    raise ValueError(f"not a face vertex set: {sorted(s)}")


def face_edges(f: Face) -> Tuple[Edge, Edge, Edge]:
    x, y = f.x, f.y
    if f.up:
        return (Edge(x, y, A0), Edge(x, y, A1), Edge(x, y, A2))
    return (Edge(x, y, A2), Edge(x + 1, y, A1), Edge(x, y + 1, A0))


def edge_vertices(e: Edge) -> Tuple[Vertex, Vertex]:
    x, y = e.x, e.y
    if e.axis == A0:
        return ((x, y), (x + 1, y))
    if e.axis == A1:
        return ((x, y), (x, y + 1))
    return ((x + 1, y), (x, y + 1))


def edge_from_vertices(p: Vertex, q: Vertex) -> Edge:
    """Inverse of edge_vertices for an unordered endpoint pair."""
    (ax, ay), (bx, by) = sorted((p, q))
    dx, dy = bx - ax, by - ay
    if (dx, dy) == (1, 0):
        return Edge(ax, ay, A0)
    if (dx, dy) == (0, 1):
        return Edge(ax, ay, A1)
    if (dx, dy) == (1, -1):
        # sorted order puts (x, y+1) first for an R edge, so its base is (ax, by)
        return Edge(ax, by, A2)
    raise ValueError(f"not an edge: {p}, {q}")


def face_neighbors(f: Face) -> Tuple[Face, Face, Face]:
    """The three edge-adjacent faces."""
    x, y = f.x, f.y
    if f.up:
        return (Face(x, y - 1, False), Face(x - 1, y, False), Face(x, y, False))
    return (Face(x, y, True), Face(x + 1, y, True), Face(x, y + 1, True))


def link_faces(v: Vertex) -> Tuple[Face, ...]:
    """The six faces around v, counterclockwise from the (0, 60)-degree sector."""
    x, y = v
    return (
        Face(x, y, True),
        Face(x - 1, y, False),
        Face(x - 1, y, True),
        Face(x - 1, y - 1, False),
        Face(x, y - 1, True),
        Face(x, y - 1, False),
    )


def link_sector(v: Vertex, f: Face) -> int:
    """Index of f in link_faces(v); raises if f is not incident to v."""
    try:
        return link_faces(v).index(f)
    except ValueError:
        raise ValueError(f"face {f} not incident to vertex {v}") from None


def incident_edges(v: Vertex) -> Tuple[Edge, ...]:
    """The six edges at v, counterclockwise from the east edge (0 degrees)."""
    x, y = v
    return (
        Edge(x, y, A0),
        Edge(x, y, A1),
        Edge(x - 1, y, A2),
        Edge(x - 1, y, A0),
        Edge(x, y - 1, A1),
        Edge(x, y - 1, A2),
    )


def opposite_axis_at_vertex(f: Face, v: Vertex) -> int:
    """Axis of the side of f's large triangle that passes through v.

    The large triangle of f is spanned by f and its three edge-neighbors;
    each corner vertex of f lies on exactly one of its sides, and that
    side's direction is the axis of the edge of f opposite to v.
    """
    vs = face_vertices(f)
    if v not in vs:
        raise ValueError(f"vertex {v} not incident to face {f}")
    for e in face_edges(f):
        if v not in edge_vertices(e):
            return e.axis
    raise AssertionError("unreachable")


def hex_distance(u: Vertex, v: Vertex) -> int:
    dx, dy = v[0] - u[0], v[1] - u[1]
    return (abs(dx) + abs(dy) + abs(dx + dy)) // 2


def face_distance(f: Face, g: Face) -> int:
    """Minimum hex distance between the vertex sets of two faces."""
    return min(
        hex_distance(u, v) for u in face_vertices(f) for v in face_vertices(g)
    )


def vertices_within(seeds: Iterable[Vertex], d: int) -> Set[Vertex]:
    """All vertices at hex distance <= d from some seed vertex."""
    frontier = set(seeds)
    seen = set(frontier)
    for _ in range(d):
        frontier = {
            (v[0] + ox, v[1] + oy)
            for v in frontier
            for ox, oy in NEIGHBOR_OFFSETS
        } - seen
        seen |= frontier
    return seen


def ball(center: Face, r: int) -> frozenset:
    """Faces whose vertex set comes within hex distance r-1 of center's."""
    if r < 1:
        raise ValueError("radius must be >= 1")
    vs = vertices_within(face_vertices(center), r - 1)
    return frozenset(f for v in vs for f in link_faces(v))


def window_vertices(faces: Iterable[Face]) -> Set[Vertex]:
    return {v for f in faces for v in face_vertices(f)}


def centroid3(f: Face) -> Tuple[int, int]:
    """Three times the centroid of f, in axial coordinates (exact)."""
    vs = face_vertices(f)
    return (sum(v[0] for v in vs), sum(v[1] for v in vs))


def norm2(a: int, b: int) -> int:
    """Squared Euclidean length of a*e1 + b*e2 (times 1; exact integer)."""
    return a * a + a * b + b * b


class Isometry(NamedTuple):
    """Lattice isometry: optional base reflection, then rot*60 degrees CCW, then translation.

    The base reflection fixes the horizontal axis through the origin:
    (a, b) -> (a+b, -b).  A 60-degree rotation is (a, b) -> (-b, a+b).
    """

    rot: int
    ref: bool
    tx: int
    ty: int

    def apply_vertex(self, v: Vertex) -> Vertex:
        a, b = v
        if self.ref:
            a, b = a + b, -b
        for _ in range(self.rot % 6):
            a, b = -b, a + b
        return (a + self.tx, b + self.ty)

    def apply_face(self, f: Face) -> Face:
        return face_from_vertices(self.apply_vertex(v) for v in face_vertices(f))

    def apply_edge(self, e: Edge) -> Edge:
        p, q = edge_vertices(e)
        return edge_from_vertices(self.apply_vertex(p), self.apply_vertex(q))

    def apply_axis(self, axis: int) -> int:
        a = (-axis) % 3 if self.ref else axis
        return (a + self.rot) % 3

    def label_preserving(self) -> bool:
        """True iff the map preserves the canonical edge marking."""
        return self.rot % 2 == 0 and (self.tx - self.ty) % 3 == 0


def compose(g: Isometry, h: Isometry) -> Isometry:
    """The isometry applying h first, then g."""
    # Determine the point part by action on basis vertices, then fix translation.
    o = g.apply_vertex(h.apply_vertex((0, 0)))
    e1 = g.apply_vertex(h.apply_vertex((1, 0)))
    d = (e1[0] - o[0], e1[1] - o[1])
    ref = g.ref != h.ref
    rot = _ROT_OF_E1[(d, ref)]
    return Isometry(rot, ref, o[0], o[1])


def _e1_image(rot: int, ref: bool) -> Vertex:
    return Isometry(rot, ref, 0, 0).apply_vertex((1, 0))


_ROT_OF_E1 = {
    (_e1_image(rot, ref), ref): rot for rot in range(6) for ref in (False, True)
}


def inverse(g: Isometry) -> Isometry:
    """Inverse isometry."""
    if g.ref:
        # reflections composed with rotations are involutions up to translation
        point = Isometry(g.rot, True, 0, 0)
        t = point.apply_vertex((g.tx, g.ty))
        return Isometry(g.rot, True, -t[0], -t[1])
    point = Isometry((-g.rot) % 6, False, 0, 0)
    t = point.apply_vertex((g.tx, g.ty))
    return Isometry((-g.rot) % 6, False, -t[0], -t[1])


POINT_GROUP = tuple(
    Isometry(rot, ref, 0, 0) for ref in (False, True) for rot in range(6)
)

LABEL_POINT_GROUP = tuple(g for g in POINT_GROUP if g.rot % 2 == 0)
