"""Clar covering polynomial, cube polynomial and their equivalence.

Two independent enumerations: Clar covers are counted directly on the
embedded graph, induced hypercubes are counted on the resonance graph.
``check_equivalence`` compares the polynomials coefficient-wise and in
addition verifies, degree by degree, that mapping every Clar cover to
its matching set is a bijection onto the induced hypercubes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .embedded import EmbeddedGraph, EvenFaceSet, Face
from .errors import HypothesisViolatedError
from .matching import (
    Matching,
    count_perfect_matchings,
    enumerate_perfect_matchings,
)
from .resonance import ResonanceGraph, build_resonance_graph


@dataclass(frozen=True)
class IntegerPolynomial:
    """Polynomial with nonnegative integer coefficients, lowest degree first."""

    coefficients: tuple[int, ...]

    @staticmethod
    def of(coeffs) -> "IntegerPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return IntegerPolynomial(tuple(cs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                x = "x" if k == 1 else f"x^{k}"
                terms.append(x if c == 1 else f"{c}{x}")
        return " + ".join(terms)


@dataclass(frozen=True)
class ClarCover:
    """Pairwise disjoint even faces plus a matching of the leftover vertices."""

    face_ids: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.face_ids)


@dataclass(frozen=True)
class CubeSubgraph:
    """Vertex set of an induced hypercube of a resonance graph.

    ``labels`` assigns each vertex (aligned with ``vertex_ids``) its
    coordinate word in one fixed isomorphism with the hypercube.
    """

    vertex_ids: tuple[int, ...]
    dimension: int
    labels: tuple[int, ...] = field(compare=False)

    def label_of(self, v: int) -> int:
        return self.labels[self.vertex_ids.index(v)]


# --- Clar covers -------------------------------------------------------


def _independent_face_subsets(faces: list[Face]):
    """Yield (indices tuple) of pairwise vertex-disjoint face subsets."""
    n = len(faces)
    vsets = [f.vertices for f in faces]
    conflict = [[bool(vsets[i] & vsets[j]) for j in range(n)]
                for i in range(n)]

    def extend(start: int, chosen: list[int]):
        yield tuple(chosen)
        for i in range(start, n):
            if all(not conflict[i][j] for j in chosen):
                chosen.append(i)
                yield from extend(i + 1, chosen)
                chosen.pop()

    yield from extend(0, [])


def zz_polynomial(g: EmbeddedGraph, face_set: EvenFaceSet) -> IntegerPolynomial:
    """Clar covering polynomial with respect to ``face_set``.

    Coefficient k counts the Clar covers using exactly k faces of the
    set: independent face subsets are enumerated over a conflict check
    and the residual graph's perfect matchings are counted, memoized by
    the deleted vertex set.
    """
    faces = [g.faces()[fid] for fid in sorted(face_set.face_ids)]
    counts: dict[int, int] = {}
    memo: dict[frozenset[int], int] = {}
    for subset in _independent_face_subsets(faces):
        removed = frozenset(itertools.chain.from_iterable(
            faces[i].vertices for i in subset))
        if removed not in memo:
            memo[removed] = count_perfect_matchings(g, removed)
        c = memo[removed]
        if c:
            counts[len(subset)] = counts.get(len(subset), 0) + c
    if not counts:
        return IntegerPolynomial.of([])
    return IntegerPolynomial.of(
        [counts.get(k, 0) for k in range(max(counts) + 1)])


def enumerate_clar_covers(g: EmbeddedGraph, face_set: EvenFaceSet,
                          k: int) -> tuple[ClarCover, ...]:
    """All Clar covers with exactly ``k`` faces, canonically ordered."""
    faces = [g.faces()[fid] for fid in sorted(face_set.face_ids)]
    out: list[ClarCover] = []
    for subset in _independent_face_subsets(faces):
        if len(subset) != k:
            continue
        fids = tuple(faces[i].face_id for i in subset)
        removed = frozenset(itertools.chain.from_iterable(
            faces[i].vertices for i in subset))
        for m in enumerate_perfect_matchings(g, removed):
            out.append(ClarCover(fids, m.edge_ids))
    out.sort(key=lambda s: (s.face_ids, s.edge_ids))
    return tuple(out)


# --- induced hypercubes ------------------------------------------------


def _grow_hypercubes(r: ResonanceGraph,
                     level: list[CubeSubgraph]) -> list[CubeSubgraph]:
    """All induced hypercubes one dimension above ``level``.

    Each candidate is grown by pairing a known cube with a parallel
    copy through a perfect pairing of resonance edges, then explicitly
    re-verified against its coordinate labels, which rules out chords.
    """
    if not level:
        return []
    k = level[0].dimension
    adjacency = {v: {w for w, _ in r.adjacency[v]}
                 for v in range(r.n_vertices)}
    sorted_adj = {v: [w for w, _ in r.adjacency[v]]
                  for v in range(r.n_vertices)}
    seen: set[tuple[int, ...]] = set()
    found: list[CubeSubgraph] = []

    for cube in level:
        verts = cube.vertex_ids
        vset = set(verts)
        base = verts[0]
        for w0 in sorted_adj[base]:
            if w0 in vset:
                continue
            for phi in _pairings(cube, adjacency, sorted_adj, base, w0):
                new_verts = tuple(sorted(vset | set(phi.values())))
                if new_verts in seen:
                    continue
                labels = {v: cube.label_of(v) for v in verts}
                for v, img in phi.items():
                    labels[img] = labels[v] | (1 << k)
                if _is_labeled_cube(new_verts, labels, k + 1, adjacency):
                    seen.add(new_verts)
                    found.append(CubeSubgraph(
                        new_verts, k + 1,
                        tuple(labels[v] for v in new_verts)))
    found.sort(key=lambda c: c.vertex_ids)
    return found


def _pairings(cube: CubeSubgraph, adjacency, sorted_adj, base: int, w0: int):
    """Pairings of the cube's vertices with fresh parallel neighbors."""
    verts = cube.vertex_ids
    vset = set(verts)
    label = {v: cube.label_of(v) for v in verts}
    order = sorted(verts, key=lambda v: bin(label[v] ^ label[base]).count("1"))
    # cube-neighbors of each vertex among the already-processed prefix
    prior = [[u for u in order[:i]
              if bin(label[u] ^ label[order[i]]).count("1") == 1]
             for i in range(len(order))]

    def extend(i: int, phi: dict[int, int], used: set[int]):
        if i == len(order):
            yield dict(phi)
            return
        v = order[i]
        anchors = [phi[u] for u in prior[i]]
        for cand in sorted_adj[v]:
            if cand in vset or cand in used:
                continue
            if all(cand in adjacency[a] for a in anchors):
                phi[v] = cand
                used.add(cand)
                yield from extend(i + 1, phi, used)
                used.discard(cand)
                del phi[v]

    yield from extend(1, {base: w0}, {w0})


def _is_labeled_cube(verts: tuple[int, ...], labels: dict[int, int],
                     dim: int, adjacency) -> bool:
    if len(verts) != 1 << dim:
        return False
    if len({labels[v] for v in verts}) != len(verts):
        return False
    for a, b in itertools.combinations(verts, 2):
        x = labels[a] ^ labels[b]
        one_bit = x != 0 and (x & (x - 1)) == 0
        if one_bit != (b in adjacency[a]):
            return False
    return True


def _hypercube_levels(r: ResonanceGraph,
                      max_k: int | None = None) -> list[list[CubeSubgraph]]:
    levels = [[CubeSubgraph((v,), 0, (0,)) for v in range(r.n_vertices)]]
    while levels[-1] and (max_k is None or len(levels) <= max_k):
        levels.append(_grow_hypercubes(r, levels[-1]))
    return levels


def enumerate_induced_hypercubes(r: ResonanceGraph,
                                 k: int) -> tuple[CubeSubgraph, ...]:
    """All dimension-``k`` induced hypercubes, one per vertex set."""
    if k < 0:
        return ()
    levels = _hypercube_levels(r, max_k=k)
    if k >= len(levels):
        return ()
    return tuple(levels[k])


def cube_polynomial(r: ResonanceGraph) -> IntegerPolynomial:
    """Cube polynomial: coefficient i counts induced i-cubes."""
    levels = _hypercube_levels(r)
    return IntegerPolynomial.of([len(level) for level in levels])


# --- the correspondence ------------------------------------------------


def face_alternating_sets(f: Face) -> tuple[frozenset[int], frozenset[int]]:
    """The two perfect matchings of an even facial cycle.

    The set containing the least edge id of the boundary comes first,
    fixing the 0/1 labeling of the face.
    """
    eids = [e for _, e in f.boundary]
    a = frozenset(eids[0::2])
    b = frozenset(eids[1::2])
    return (a, b) if min(eids) in a else (b, a)


def mk_map(r: ResonanceGraph, s: ClarCover) -> CubeSubgraph:
    """Image of a Clar cover: the matchings extending it, as a cube.

    A matching works for the cover iff it contains all isolated edges
    and one of the two alternating sets of each face, so the image has
    one vertex per bit choice over the cover's faces.
    """
    faces = r.graph.faces()
    choices = [face_alternating_sets(faces[fid]) for fid in s.face_ids]
    index = r.index
    vert_label: list[tuple[int, int]] = []
    for bits in itertools.product((0, 1), repeat=len(choices)):
        edges = set(s.edge_ids)
        for b, pair in zip(bits, choices):
            edges.update(pair[b])
        m = Matching.of(edges)
        word = sum(1 << i for i, b in enumerate(bits) if b)
        vert_label.append((index[m], word))
    vert_label.sort()
    return CubeSubgraph(tuple(v for v, _ in vert_label), len(choices),
                        tuple(w for _, w in vert_label))


@dataclass(frozen=True)
class DegreeCheck:
    """Bijection evidence between k-face covers and k-cubes."""

    k: int
    n_covers: int
    n_cubes: int
    injective: bool
    surjective: bool

    @property
    def ok(self) -> bool:
        return (self.n_covers == self.n_cubes and self.injective
                and self.surjective)


@dataclass(frozen=True)
class EquivalenceReport:
    hypothesis_ok: bool
    zz: IntegerPolynomial
    cube: IntegerPolynomial
    equal: bool
    degrees: tuple[DegreeCheck, ...]

    @property
    def ok(self) -> bool:
        return self.equal and all(d.ok for d in self.degrees)


def _invert_cube(r: ResonanceGraph, q: CubeSubgraph) -> ClarCover | None:
    """Recover the Clar cover of an induced cube through its face labels.

    Reads the faces off the edges at the all-zero vertex and checks they
    are pairwise vertex-disjoint; returns None when inversion fails.
    """
    faces = r.graph.faces()
    by_label = {q.labels[i]: q.vertex_ids[i]
                for i in range(len(q.vertex_ids))}
    m0 = by_label[0]
    fids = []
    for i in range(q.dimension):
        mi = by_label[1 << i]
        fids.append(r.edge_face(m0, mi))
    fids.sort()
    vsets = [faces[fid].vertices for fid in fids]
    for a, b in itertools.combinations(range(len(fids)), 2):
        if vsets[a] & vsets[b]:
            return None
    face_edges = set().union(*(faces[fid].edge_set for fid in fids)) \
        if fids else set()
    isolated = tuple(sorted(set(r.matchings[m0].edge_ids) - face_edges))
    return ClarCover(tuple(fids), isolated)


def check_equivalence(g: EmbeddedGraph, face_set: EvenFaceSet,
                      r: ResonanceGraph | None = None,
                      allow_full_face_set: bool = False) -> EquivalenceReport:
    """Compare the Clar covering and cube polynomials, with bijection proof.

    With a full face set the theorem hypothesis fails; pass
    ``allow_full_face_set`` to run in violation-reporting mode instead
    of raising.
    """
    hypothesis_ok = face_set.is_proper_subset
    if not hypothesis_ok and not allow_full_face_set:
        raise HypothesisViolatedError(
            "face set equals the full face set of the graph")
    if r is None:
        r = build_resonance_graph(g, face_set)
    zz = zz_polynomial(g, face_set)
    levels = _hypercube_levels(r)
    cube = IntegerPolynomial.of([len(level) for level in levels])
    degrees = []
    for k in range(max(zz.degree, cube.degree) + 1):
        covers = enumerate_clar_covers(g, face_set, k)
        images = [mk_map(r, s) for s in covers]
        image_sets = {c.vertex_ids for c in images}
        injective = len(image_sets) == len(covers)
        cube_sets = ({c.vertex_ids for c in levels[k]}
                     if k < len(levels) else set())
        surjective = image_sets == cube_sets
        if surjective and k < len(levels):
            cover_set = set(covers)
            for q in levels[k]:
                s = _invert_cube(r, q)
                if s is None or s not in cover_set or \
                        mk_map(r, s).vertex_ids != q.vertex_ids:
                    surjective = False
                    break
        degrees.append(DegreeCheck(k, len(covers),
                                   len(levels[k]) if k < len(levels) else 0,
                                   injective, surjective))
    return EquivalenceReport(hypothesis_ok, zz, cube, zz == cube,
                             tuple(degrees))


# --- the 4-cycle structure ---------------------------------------------


@dataclass(frozen=True)
class FourCycleReport:
    """Opposite-label and disjointness check over all 4-cycles."""

    n_cycles: int
    ok: bool
    violations: tuple[tuple[int, int, int, int], ...]


def _four_cycles(r: ResonanceGraph):
    """All 4-cycles as (a, b, c, d) walks, each cycle once.

    Wedge counting: group the midpoints of every 2-path by its endpoint
    pair; each midpoint pair over a common endpoint pair closes one
    4-cycle (found once per diagonal, so deduplicated by edge set).
    """
    wedges: dict[tuple[int, int], list[int]] = {}
    for b in range(r.n_vertices):
        nbrs = [w for w, _ in r.adjacency[b]]
        for i, a in enumerate(nbrs):
            for c in nbrs[i + 1:]:
                wedges.setdefault((a, c), []).append(b)
    seen: set[frozenset[tuple[int, int]]] = set()
    out = []
    for (a, c), mids in sorted(wedges.items()):
        if len(mids) < 2:
            continue
        for b, d in itertools.combinations(sorted(mids), 2):
            key = frozenset({(min(a, b), max(a, b)),
                             (min(b, c), max(b, c)),
                             (min(c, d), max(c, d)),
                             (min(d, a), max(d, a))})
            if key not in seen:
                seen.add(key)
                out.append((a, b, c, d))
    return out


def check_4cycle_lemma(g: EmbeddedGraph, face_set: EvenFaceSet,
                       r: ResonanceGraph | None = None) -> FourCycleReport:
    """Verify that every resonance 4-cycle uses two disjoint faces.

    Opposite edges must carry the same face label and the two labels
    must be vertex-disjoint faces; violating cycles are reported (all
    of them), which is the expected outcome for a full face set.
    """
    if r is None:
        r = build_resonance_graph(g, face_set)
    faces = g.faces()
    violations = []
    cycles = _four_cycles(r)
    for a, b, c, d in cycles:
        fab, fbc = r.edge_face(a, b), r.edge_face(b, c)
        fcd, fda = r.edge_face(c, d), r.edge_face(d, a)
        if fab != fcd or fbc != fda:
            violations.append((a, b, c, d))
            continue
        if faces[fab].vertices & faces[fbc].vertices:
            violations.append((a, b, c, d))
    return FourCycleReport(len(cycles), not violations, tuple(violations))
