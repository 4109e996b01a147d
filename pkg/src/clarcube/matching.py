"""Perfect matchings of embedded graphs and face rotations."""

from __future__ import annotations

from dataclasses import dataclass

from .embedded import EmbeddedGraph, Face
from .errors import NotACycleBoundaryError, NotAlternatingError


@dataclass(frozen=True, order=True)
class Matching:
    """A perfect matching, stored as a sorted tuple of edge ids."""

    edge_ids: tuple[int, ...]

    @staticmethod
    def of(edge_ids) -> "Matching":
        return Matching(tuple(sorted(edge_ids)))

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)

    def __contains__(self, edge_id: int) -> bool:
        return edge_id in self.edge_ids

    def __iter__(self):
        return iter(self.edge_ids)

    def __len__(self) -> int:
        return len(self.edge_ids)


def enumerate_perfect_matchings(
        g: EmbeddedGraph,
        removed_vertices: frozenset[int] = frozenset()) -> tuple[Matching, ...]:
    """All perfect matchings, in lexicographic order of sorted edge ids.

    With ``removed_vertices``, matchings of the residual graph obtained
    by deleting those vertices (used for Clar-cover enumeration). An
    odd vertex count trivially gives the empty sequence. The search
    branches on the lowest-indexed uncovered vertex; the result is
    sorted afterwards so the order is independent of search order.
    """
    n = g.n_vertices
    if (n - len(removed_vertices)) % 2 == 1:
        return ()
    covered = [v in removed_vertices for v in range(n)]
    chosen: list[int] = []
    out: list[tuple[int, ...]] = []

    def extend(lowest: int) -> None:
        v = lowest
        while v < n and covered[v]:
            v += 1
        if v == n:
            out.append(tuple(sorted(chosen)))
            return
        covered[v] = True
        for e in g.rotations[v]:
            w = g.other_end(e, v)
            if covered[w]:
                continue
            covered[w] = True
            chosen.append(e)
            extend(v + 1)
            chosen.pop()
            covered[w] = False
        covered[v] = False

    extend(0)
    out.sort()
    return tuple(Matching(m) for m in out)


def count_perfect_matchings(g: EmbeddedGraph,
                            removed_vertices: frozenset[int] = frozenset(),
                            limit: int | None = None) -> int:
    """Number of perfect matchings of ``g`` minus ``removed_vertices``.

    Counting stops early once ``limit`` is exceeded (the returned value
    is then ``limit + 1``); used to enforce instance size bounds.
    """
    n = g.n_vertices
    alive = n - len(removed_vertices)
    if alive % 2 == 1:
        return 0
    covered = [v in removed_vertices for v in range(n)]
    count = 0

    def extend(lowest: int) -> None:
        nonlocal count
        if limit is not None and count > limit:
            return
        v = lowest
        while v < n and covered[v]:
            v += 1
        if v == n:
            count += 1
            return
        covered[v] = True
        for e in g.rotations[v]:
            w = g.other_end(e, v)
            if not covered[w]:
                covered[w] = True
                extend(v + 1)
                covered[w] = False
        covered[v] = False

    extend(0)
    return count


def is_alternating_face(g: EmbeddedGraph, m: Matching, f: Face) -> bool:
    """True iff the boundary cycle of ``f`` alternates in and out of ``m``."""
    if not f.is_cycle:
        raise NotACycleBoundaryError(
            f"face {f.face_id} boundary is not a cycle")
    edge_set = m.edge_set
    flags = [e in edge_set for _, e in f.boundary]
    k = len(flags)
    return all(flags[i] != flags[(i + 1) % k] for i in range(k))


def rotate_face(g: EmbeddedGraph, m: Matching, f: Face) -> Matching:
    """Replace the matching edges on ``f`` by the complementary ones.

    The result is the symmetric difference ``m xor E(f)``; applying the
    rotation twice returns ``m``.
    """
    if not is_alternating_face(g, m, f):
        raise NotAlternatingError(
            f"face {f.face_id} is not alternating for this matching")
    return Matching.of(m.edge_set ^ f.edge_set)
