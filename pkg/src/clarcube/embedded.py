"""Graphs cellularly embedded in closed surfaces.

An embedding is encoded by a rotation system (cyclic order of incident
edge ids around every vertex) together with an edge signature in
``{+1, -1}``. All-positive signatures give orientable surfaces; a
negative edge reverses local orientation when crossed, which is enough
to encode embeddings in non-orientable surfaces as well.

Faces are traced as orbits of a walk on (dart, side) states. A dart is
a directed edge; ``side`` flips whenever a negative edge is crossed.
Every geometric face is covered by exactly two orbits (the two
traversal directions); orbits are paired off by an explicit mirror
involution so each face is reported once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DisconnectedGraphError,
    LoopEdgeError,
    NotEvenFaceError,
    ParallelEdgeError,
    RotationMismatchError,
    UnknownFaceIdError,
)


@dataclass(frozen=True)
class Face:
    """A face of an embedded graph.

    ``boundary`` is the closed boundary walk as a cyclic sequence of
    (vertex, edge id) pairs, stored in canonical form: the
    lexicographically least rotation over both traversal directions.
    """

    face_id: int
    boundary: tuple[tuple[int, int], ...]
    edge_set: frozenset[int]
    is_cycle: bool
    is_even: bool

    def __len__(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.boundary)


@dataclass(frozen=True)
class EvenFaceSet:
    """A validated set of even faces of some embedded graph."""

    face_ids: frozenset[int]
    is_proper_subset: bool

    def __contains__(self, face_id: int) -> bool:
        return face_id in self.face_ids

    def __iter__(self):
        return iter(sorted(self.face_ids))

    def __len__(self) -> int:
        return len(self.face_ids)


class EmbeddedGraph:
    """A simple graph with a rotation system and edge signature.

    Immutable after construction; use :func:`build` to validate raw
    input data. Faces are traced lazily and cached.
    """

    __slots__ = ("n_vertices", "edges", "rotations", "_rotation_pos", "_faces")

    def __init__(self, n_vertices: int,
                 edges: tuple[tuple[int, int, int], ...],
                 rotations: tuple[tuple[int, ...], ...]):
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "rotations", rotations)
        # position of each edge id within the rotation of each endpoint
        pos: list[dict[int, int]] = [dict() for _ in range(n_vertices)]
        for v in range(n_vertices):
            for i, e in enumerate(rotations[v]):
                pos[v][e] = i
        object.__setattr__(self, "_rotation_pos", tuple(pos))
        object.__setattr__(self, "_faces", None)

    def __setattr__(self, name, value):
        raise AttributeError("EmbeddedGraph is immutable")

    def __eq__(self, other) -> bool:
        return (isinstance(other, EmbeddedGraph)
                and self.n_vertices == other.n_vertices
                and self.edges == other.edges
                and self.rotations == other.rotations)

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.edges, self.rotations))

    def __repr__(self) -> str:
        return (f"EmbeddedGraph(n_vertices={self.n_vertices}, "
                f"n_edges={self.n_edges})")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        u, v, _ = self.edges[e]
        return u, v

    def sign(self, e: int) -> int:
        return self.edges[e][2]

    def other_end(self, e: int, v: int) -> int:
        u, w, _ = self.edges[e]
        return w if v == u else u

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def neighbors(self, v: int) -> list[int]:
        return [self.other_end(e, v) for e in self.rotations[v]]

    def is_connected(self) -> bool:
        if self.n_vertices <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices

    def faces(self) -> tuple[Face, ...]:
        if self._faces is None:
            object.__setattr__(self, "_faces", trace_faces(self))
        return self._faces

    def face(self, face_id: int) -> Face:
        faces = self.faces()
        if not 0 <= face_id < len(faces):
            raise UnknownFaceIdError(f"no face with id {face_id}")
        return faces[face_id]


def build(n_vertices: int,
          edges: Iterable[tuple],
          rotations: Iterable[Sequence[int]]) -> EmbeddedGraph:
    """Validate raw embedding data and return an :class:`EmbeddedGraph`.

    ``edges`` is a sequence of ``(edge_id, u, v)`` or
    ``(edge_id, u, v, sign)`` tuples; edge ids must be dense ``0..m-1``.
    ``rotations`` gives, for every vertex ``0..n-1``, the cyclic order
    of its incident edge ids.
    """
    edge_list = sorted(edges)
    m = len(edge_list)
    stored: list[tuple[int, int, int]] = []
    seen_pairs: dict[tuple[int, int], int] = {}
    for idx, item in enumerate(edge_list):
        if len(item) == 3:
            eid, u, v = item
            sign = 1
        else:
            eid, u, v, sign = item
        if eid != idx:
            raise RotationMismatchError(
                f"edge ids must be dense 0..{m - 1}, got {eid}")
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise RotationMismatchError(
                f"edge {eid} endpoint out of range")
        if u == v:
            raise LoopEdgeError(f"edge {eid} is a loop at vertex {u}")
        if sign not in (1, -1):
            raise RotationMismatchError(
                f"edge {eid} has invalid sign {sign!r}")
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            raise ParallelEdgeError(
                f"edges {seen_pairs[key]} and {eid} are parallel")
        seen_pairs[key] = eid
        stored.append((u, v, sign))

    rot_list = [tuple(r) for r in rotations]
    if len(rot_list) != n_vertices:
        raise RotationMismatchError(
            f"expected {n_vertices} rotations, got {len(rot_list)}")
    incident: list[set[int]] = [set() for _ in range(n_vertices)]
    for eid, (u, v, _) in enumerate(stored):
        incident[u].add(eid)
        incident[v].add(eid)
    for v, rot in enumerate(rot_list):
        if len(set(rot)) != len(rot):
            raise RotationMismatchError(
                f"rotation at vertex {v} repeats an edge id")
        if set(rot) != incident[v]:
            raise RotationMismatchError(
                f"rotation at vertex {v} does not list exactly its "
                f"incident edges")
    return EmbeddedGraph(n_vertices, tuple(stored), tuple(rot_list))


# --- face tracing -----------------------------------------------------
#
# A state is (dart, side). Dart 2e points from the stored tail of edge e
# to its head; dart 2e+1 is its reverse. The walk rule: crossing edge e
# multiplies side by sign(e); at the new vertex the next edge is the
# rotation successor (side +1) or predecessor (side -1) of e.
#
# The mirror involution  (d, s) -> (reverse(d), -s*sign(e))  conjugates
# the walk to its inverse and has no fixed points, so orbits pair off
# and each pair is one geometric face.


def _dart_tail(g: EmbeddedGraph, d: int) -> int:
    u, v, _ = g.edges[d >> 1]
    return u if d & 1 == 0 else v


def _dart_head(g: EmbeddedGraph, d: int) -> int:
    u, v, _ = g.edges[d >> 1]
    return v if d & 1 == 0 else u


def _step(g: EmbeddedGraph, d: int, side: int) -> tuple[int, int]:
    e = d >> 1
    w = _dart_head(g, d)
    side2 = side * g.sign(e)
    rot = g.rotations[w]
    i = g._rotation_pos[w][e]
    e2 = rot[(i + 1) % len(rot)] if side2 == 1 else rot[(i - 1) % len(rot)]
    u2, v2, _ = g.edges[e2]
    d2 = 2 * e2 if u2 == w else 2 * e2 + 1
    return d2, side2


def _canonical_cyclic(pairs: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Least rotation of a cyclic (vertex, edge) walk over both directions."""
    k = len(pairs)
    reverse = [(pairs[-i % k][0], pairs[(-i - 1) % k][1]) for i in range(k)]
    best = None
    for seq in (pairs, reverse):
        for r in range(k):
            cand = tuple(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    return best


def trace_faces(g: EmbeddedGraph) -> tuple[Face, ...]:
    """Trace all faces of the embedding, one per geometric face.

    Faces are returned in canonical order (sorted by canonical boundary
    walk), so ids are stable for equal inputs.
    """
    m = g.n_edges
    # state id: 2*dart + (0 if side == +1 else 1)
    visited = [False] * (4 * m)
    raw: list[tuple[tuple[tuple[int, int], ...], int]] = []
    for start in range(4 * m):
        if visited[start]:
            continue
        d, side = start >> 1, (1 if start & 1 == 0 else -1)
        orbit: list[tuple[int, int]] = []
        while True:
            sid = 2 * d + (0 if side == 1 else 1)
            if visited[sid]:
                break
            visited[sid] = True
            orbit.append((d, side))
            d, side = _step(g, d, side)
        # mark the mirror orbit as visited too; it is the same face
        min_state = min(2 * d + (0 if s == 1 else 1) for d, s in orbit)
        for d, s in orbit:
            md = d ^ 1
            ms = -s * g.sign(d >> 1)
            msid = 2 * md + (0 if ms == 1 else 1)
            visited[msid] = True
            min_state = min(min_state, msid)
        walk = [(_dart_tail(g, d), d >> 1) for d, _ in orbit]
        raw.append((_canonical_cyclic(walk), min_state))

    raw.sort()
    faces = []
    for face_id, (walk, _) in enumerate(raw):
        verts = [v for v, _ in walk]
        eids = [e for _, e in walk]
        edge_set = frozenset(eids)
        is_cycle = (len(set(verts)) == len(verts)
                    and len(edge_set) == len(eids))
        is_even = is_cycle and len(eids) % 2 == 0
        faces.append(Face(face_id, walk, edge_set, is_cycle, is_even))
    return tuple(faces)


def euler_genus(g: EmbeddedGraph) -> int:
    """Euler genus 2 - (V - E + F) of the embedding surface.

    Requires a connected graph; raises :class:`DisconnectedGraphError`
    otherwise.
    """
    if not g.is_connected():
        raise DisconnectedGraphError(
            "euler_genus requires a connected graph")
    if g.n_edges == 0:
        return 0
    return 2 - (g.n_vertices - g.n_edges + len(g.faces()))


def even_faces(g: EmbeddedGraph) -> frozenset[int]:
    """Ids of all faces bounded by an even cycle."""
    return frozenset(f.face_id for f in g.faces() if f.is_even)


def validate_even_face_set(g: EmbeddedGraph,
                           ids: Iterable[int]) -> EvenFaceSet:
    """Check that ``ids`` names even faces and build an :class:`EvenFaceSet`.

    ``is_proper_subset`` records whether the set differs from the set of
    *all* faces of the embedding (the hypothesis of the structure
    theorems), not merely from the set of even faces.
    """
    faces = g.faces()
    id_set = frozenset(ids)
    for fid in sorted(id_set):
        if not 0 <= fid < len(faces):
            raise UnknownFaceIdError(f"no face with id {fid}")
        if not faces[fid].is_even:
            raise NotEvenFaceError(
                f"face {fid} is not bounded by an even cycle")
    return EvenFaceSet(id_set, id_set != frozenset(range(len(faces))))
