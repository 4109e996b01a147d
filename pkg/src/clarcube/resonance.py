"""Resonance graphs, their components, edge classes and quotients.

The resonance graph of an embedded graph with respect to an even-face
set has the perfect matchings as vertices; two matchings are adjacent
when their symmetric difference is the boundary of a face in the set,
and the edge is labeled by that face.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field

from .embedded import EmbeddedGraph, EvenFaceSet
from .errors import (
    NonBipartiteQuotientError,
    NotACycleError,
    UnknownFaceClassError,
)
from .matching import Matching, enumerate_perfect_matchings, is_alternating_face


@dataclass(frozen=True)
class ResonanceGraph:
    """Labeled resonance graph over the canonical matching enumeration.

    Vertices are matching ids (indices into ``matchings``); ``edges``
    holds ``(m1, m2, face_id)`` triples with ``m1 < m2``, sorted.
    """

    graph: EmbeddedGraph
    face_set: EvenFaceSet
    matchings: tuple[Matching, ...]
    edges: tuple[tuple[int, int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...]
    index: dict[Matching, int] = field(repr=False, compare=False,
                                       default_factory=dict)

    @property
    def n_vertices(self) -> int:
        return len(self.matchings)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """(neighbor, face id) pairs of vertex ``v``, sorted."""
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return any(w == v for w, _ in self.adjacency[u])

    def edge_face(self, u: int, v: int) -> int:
        for w, fid in self.adjacency[u]:
            if w == v:
                return fid
        raise KeyError(f"no resonance edge {u}-{v}")


@dataclass(frozen=True)
class Component:
    """A connected component of a resonance graph.

    ``face_classes`` maps each face id occurring on component edges to
    its edge class E_i; ``face_list`` is the sorted list of those face
    ids, fixing the coordinate order of the cube labeling.
    """

    component_id: int
    resonance: ResonanceGraph
    vertex_ids: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    face_classes: dict[int, tuple[tuple[int, int], ...]] = field(repr=False)
    face_list: tuple[int, ...] = ()

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_ids)

    @property
    def dimension(self) -> int:
        return len(self.face_list)

    def adjacency(self, skip_face: int | None = None) -> dict[int, list[int]]:
        """Adjacency restricted to the component, optionally without E_i."""
        adj: dict[int, list[int]] = {v: [] for v in self.vertex_ids}
        for u, v, fid in self.edges:
            if skip_face is not None and fid == skip_face:
                continue
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class QuotientGraph:
    """Quotient of a component by contracting everything outside one class.

    Nodes are the connected components of ``H`` minus the class edges,
    each a sorted tuple of matching ids; parallel edges are merged.
    ``side_a``/``side_b`` partition the node indices; the node holding
    the least matching id of the component is on side A.
    """

    face_id: int
    nodes: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    side_a: frozenset[int]
    side_b: frozenset[int]
    node_of: dict[int, int] = field(repr=False)


def build_resonance_graph(g: EmbeddedGraph,
                          face_set: EvenFaceSet) -> ResonanceGraph:
    """Construct the resonance graph of ``g`` with respect to ``face_set``.

    Edges are found by rotating every matching at every face of the set
    and hashing the result, so the cost is O(#matchings * #faces) walks
    rather than quadratic in the number of matchings.
    """
    matchings = enumerate_perfect_matchings(g)
    index = {m: i for i, m in enumerate(matchings)}
    faces = g.faces()
    edges: dict[tuple[int, int], int] = {}
    for i, m in enumerate(matchings):
        edge_set = m.edge_set
        for fid in sorted(face_set.face_ids):
            f = faces[fid]
            if not is_alternating_face(g, m, f):
                continue
            other = Matching.of(edge_set ^ f.edge_set)
            j = index[other]
            key = (min(i, j), max(i, j))
            # two faces with identical boundary edge sets (a lone cycle
            # component with both sides in the set) would collide here;
            # keep the smallest face id
            if key not in edges or fid < edges[key]:
                edges[key] = fid
    edge_tuples = tuple(sorted((u, v, fid) for (u, v), fid in edges.items()))
    adjacency: list[list[tuple[int, int]]] = [[] for _ in matchings]
    for u, v, fid in edge_tuples:
        adjacency[u].append((v, fid))
        adjacency[v].append((u, fid))
    adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
    return ResonanceGraph(g, face_set, matchings, edge_tuples, adj, index)


def components(r: ResonanceGraph) -> tuple[Component, ...]:
    """Connected components, ordered by least matching id."""
    seen = [False] * r.n_vertices
    comps: list[Component] = []
    for start in range(r.n_vertices):
        if seen[start]:
            continue
        seen[start] = True
        verts = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, _ in r.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    verts.append(w)
                    queue.append(w)
        vset = set(verts)
        comp_edges = tuple(e for e in r.edges if e[0] in vset)
        classes: dict[int, list[tuple[int, int]]] = {}
        for u, v, fid in comp_edges:
            classes.setdefault(fid, []).append((u, v))
        face_classes = {fid: tuple(sorted(es)) for fid, es in classes.items()}
        comps.append(Component(
            component_id=len(comps),
            resonance=r,
            vertex_ids=tuple(sorted(verts)),
            edges=comp_edges,
            face_classes=face_classes,
            face_list=tuple(sorted(face_classes)),
        ))
    return tuple(comps)


def check_cycle_face_parity(r: ResonanceGraph,
                            cycle: list[int]) -> dict[int, int]:
    """Count face labels along a cycle of the resonance graph.

    Returns the number of appearances of every face occurring on the
    cycle's edges. With a proper even-face set all counts are even;
    odd counts witness a hypothesis violation.
    """
    t = len(cycle)
    if t < 3:
        raise NotACycleError("a cycle needs at least 3 vertices")
    if len(set(cycle)) != t:
        raise NotACycleError("vertex sequence repeats a vertex")
    counts: Counter[int] = Counter()
    for i in range(t):
        u, v = cycle[i], cycle[(i + 1) % t]
        if not r.has_edge(u, v):
            raise NotACycleError(f"{u}-{v} is not a resonance edge")
        counts[r.edge_face(u, v)] += 1
    return dict(counts)


def delete_class_components(h: Component,
                            face_id: int) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of the components of ``H`` minus the class ``E_i``.

    Parts are sorted internally and ordered by least matching id.
    """
    if face_id not in h.face_classes:
        raise UnknownFaceClassError(
            f"face {face_id} has no edge class in component "
            f"{h.component_id}")
    adj = h.adjacency(skip_face=face_id)
    seen: set[int] = set()
    parts: list[tuple[int, ...]] = []
    for start in h.vertex_ids:
        if start in seen:
            continue
        seen.add(start)
        part = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    part.append(w)
                    queue.append(w)
        parts.append(tuple(sorted(part)))
    parts.sort()
    return tuple(parts)


def quotient_graph(h: Component, face_id: int) -> QuotientGraph:
    """Contract all non-class edges of the component and 2-color the result.

    Nodes are the parts of :func:`delete_class_components`; an edge
    joins two nodes when some class edge runs between the parts. A
    failed 2-coloring raises :class:`NonBipartiteQuotientError`, which
    is possible only when the face set is the full face set.
    """
    parts = delete_class_components(h, face_id)
    node_of: dict[int, int] = {}
    for idx, part in enumerate(parts):
        for v in part:
            node_of[v] = idx
    qedges: set[tuple[int, int]] = set()
    for u, v in h.face_classes[face_id]:
        a, b = node_of[u], node_of[v]
        if a != b:
            qedges.add((min(a, b), max(a, b)))
    qadj: dict[int, list[int]] = {i: [] for i in range(len(parts))}
    for a, b in qedges:
        qadj[a].append(b)
        qadj[b].append(a)
    color: dict[int, int] = {}
    for start in range(len(parts)):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in qadj[a]:
                if b not in color:
                    color[b] = 1 - color[a]
                    queue.append(b)
                elif color[b] == color[a]:
                    raise NonBipartiteQuotientError(
                        f"quotient by face {face_id} has an odd cycle")
    # side A holds the node containing the least matching id
    anchor = node_of[h.vertex_ids[0]]
    flip = color[anchor]
    side_a = frozenset(i for i, c in color.items() if c == flip)
    side_b = frozenset(i for i, c in color.items() if c != flip)
    return QuotientGraph(
        face_id=face_id,
        nodes=parts,
        edges=tuple(sorted(qedges)),
        side_a=side_a,
        side_b=side_b,
        node_of=node_of,
    )


def is_bipartite(r: ResonanceGraph) -> tuple[bool, list[int] | None]:
    """2-color the resonance graph; on failure return an odd cycle.

    The returned witness is a cycle (vertex list) of odd length.
    """
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for start in range(r.n_vertices):
        if start in color:
            continue
        color[start] = 0
        parent[start] = None
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, _ in r.adjacency[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return False, _odd_cycle(parent, v, w)
    return True, None


def _odd_cycle(parent: dict[int, int | None], v: int, w: int) -> list[int]:
    pv = _root_path(parent, v)
    pw = _root_path(parent, w)
    i = 0
    while i < len(pv) and i < len(pw) and pv[i] == pw[i]:
        i += 1
    lca_idx = i - 1
    cycle = pv[lca_idx:] + pw[:lca_idx:-1]
    return cycle


def _root_path(parent: dict[int, int | None], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def to_dot(r: ResonanceGraph, name: str = "resonance") -> str:
    """DOT text of the resonance graph, edges labeled by face id."""
    lines = [f"graph {json.dumps(name)} {{"]
    for v in range(r.n_vertices):
        edge_ids = ",".join(str(e) for e in r.matchings[v].edge_ids)
        lines.append(f'  {v} [tooltip="{{{edge_ids}}}"];')
    for u, v, fid in r.edges:
        lines.append(f'  {u} -- {v} [label="f{fid}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def fundamental_cycles(h: Component) -> list[list[int]]:
    """Cycle basis from a BFS spanning tree of the component.

    One cycle per non-tree edge: the tree path between the endpoints
    closed by the edge itself.
    """
    if not h.vertex_ids:
        return []
    root = h.vertex_ids[0]
    parent: dict[int, int | None] = {root: None}
    order = [root]
    queue = deque([root])
    adj = h.adjacency()
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
                queue.append(w)
    tree_edges = {(min(v, parent[v]), max(v, parent[v]))
                  for v in order if parent[v] is not None}
    cycles: list[list[int]] = []
    for u, v, _ in h.edges:
        if (min(u, v), max(u, v)) in tree_edges:
            continue
        pu = _root_path(parent, u)
        pv = _root_path(parent, v)
        i = 0
        while i < len(pu) and i < len(pv) and pu[i] == pv[i]:
            i += 1
        cycles.append(pu[i - 1:] + pv[:i - 1:-1])
    return cycles
