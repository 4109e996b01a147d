"""Binary labelings of resonance components and hypercube embeddings.

Every component of a resonance graph (with respect to a proper
even-face set) carries a binary labeling: one coordinate per face
class, the bit given by the side of the bipartition of the quotient by
that class. The labeling embeds the component into a hypercube as an
induced subgraph; this module computes it, verifies the embedding, and
tests the stronger isometric / partial-cube / median properties.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .embedded import EmbeddedGraph
from .resonance import Component, quotient_graph


@dataclass(frozen=True)
class CubeLabeling:
    """Coordinates of a component's matchings in a hypercube.

    ``labels`` maps matching ids to bit strings; bit ``i`` corresponds
    to ``face_list[i]`` and is 0 on the A side of that quotient.
    """

    component_id: int
    face_list: tuple[int, ...]
    labels: dict[int, str] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.face_list)

    def packed(self) -> dict[int, int]:
        """Labels as integers, bit i of face_list[i] at weight 2**i."""
        out = {}
        for mid, bits in self.labels.items():
            out[mid] = sum(1 << i for i, b in enumerate(bits) if b == "1")
        return out


@dataclass(frozen=True)
class EmbeddingReport:
    """Outcome of the three induced-embedding checks for one component."""

    component_id: int
    dimension: int
    injective: bool
    edges_one_bit: bool
    induced: bool
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.injective and self.edges_one_bit and self.induced


@dataclass(frozen=True)
class IsometryReport:
    """Distance-vs-Hamming comparison over all vertex pairs.

    ``witness`` is the least failing pair; ``extreme_witness`` is the
    failing pair of maximum graph distance (least-lexicographic among
    those), which pins down regression fixtures.
    """

    is_isometric: bool
    witness: tuple[int, int] | None = None
    witness_distance: int | None = None
    witness_hamming: int | None = None
    extreme_witness: tuple[int, int] | None = None
    extreme_distance: int | None = None
    extreme_hamming: int | None = None


def compute_labeling(h: Component) -> CubeLabeling:
    """Label every matching of the component by its quotient sides."""
    bits: dict[int, list[str]] = {v: [] for v in h.vertex_ids}
    for fid in h.face_list:
        q = quotient_graph(h, fid)
        for v in h.vertex_ids:
            bits[v].append("0" if q.node_of[v] in q.side_a else "1")
    labels = {v: "".join(b) for v, b in bits.items()}
    return CubeLabeling(h.component_id, h.face_list, labels)


def verify_induced_embedding(h: Component,
                             lab: CubeLabeling) -> EmbeddingReport:
    """Check injectivity, one-bit edges and inducedness of the labeling."""
    packed = lab.packed()
    verts = h.vertex_ids
    values = [packed[v] for v in verts]

    injective = len(set(values)) == len(values)
    detail = "" if injective else "duplicate labels"

    face_index = {fid: i for i, fid in enumerate(lab.face_list)}
    edges_one_bit = True
    for u, v, fid in h.edges:
        diff = packed[u] ^ packed[v]
        if diff != 1 << face_index[fid]:
            edges_one_bit = False
            detail = f"edge {u}-{v} does not flip exactly bit of face {fid}"
            break

    edge_pairs = {(min(u, v), max(u, v)) for u, v, _ in h.edges}
    induced = True
    n = len(verts)
    k = lab.dimension
    if k <= 63:
        arr = np.asarray(values, dtype=np.uint64)
        for i in range(n):
            x = arr[i + 1:] ^ arr[i]
            ham1 = np.nonzero((x & (x - np.uint64(1))) == 0)[0]
            for off in ham1:
                j = i + 1 + int(off)
                if x[off] == 0:
                    continue
                if (verts[i], verts[j]) not in edge_pairs:
                    induced = False
                    detail = (f"{verts[i]} and {verts[j]} differ in one "
                              f"bit but are not adjacent")
                    break
            if not induced:
                break
    else:
        for i in range(n):
            for j in range(i + 1, n):
                x = values[i] ^ values[j]
                if x and (x & (x - 1)) == 0:
                    if (verts[i], verts[j]) not in edge_pairs:
                        induced = False
                        detail = (f"{verts[i]} and {verts[j]} differ in "
                                  f"one bit but are not adjacent")
                        break
            if not induced:
                break

    return EmbeddingReport(h.component_id, k, injective, edges_one_bit,
                           induced, detail)


# --- plain-graph machinery --------------------------------------------
#
# The distance-based testers work on bare adjacency lists so they apply
# both to resonance components and to arbitrary small graphs.


def distance_matrix(n: int, adj: dict[int, list[int]],
                    order: list[int]) -> np.ndarray:
    """All-pairs BFS distances over ``order``; -1 marks unreachable."""
    index = {v: i for i, v in enumerate(order)}
    dist = np.full((n, n), -1, dtype=np.int32)
    for src in order:
        si = index[src]
        dist[si, si] = 0
        queue = deque([src])
        while queue:
            v = queue.popleft()
            dv = dist[si, index[v]]
            for w in adj[v]:
                wi = index[w]
                if dist[si, wi] < 0:
                    dist[si, wi] = dv + 1
                    queue.append(w)
    return dist


def _two_color(adj: dict[int, list[int]], order: list[int]) -> dict[int, int] | None:
    color: dict[int, int] = {}
    for start in order:
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def partial_cube_status(adj: dict[int, list[int]],
                        dist: np.ndarray | None = None) -> tuple[bool, str]:
    """Winkler test: bipartite with a transitive Djokovic-Winkler relation.

    Edges e=uv and f=xy are related when
    d(u,x) + d(v,y) != d(u,y) + d(v,x). In a bipartite graph this says
    exactly that f crosses the distance cut of e, so the relation is
    transitive iff related edges always have identical cuts.
    """
    order = sorted(adj)
    n = len(order)
    if n == 0:
        return True, "empty"
    if _two_color(adj, order) is None:
        return False, "not bipartite"
    if dist is None:
        dist = distance_matrix(n, adj, order)
    if (dist < 0).any():
        return False, "not connected"
    index = {v: i for i, v in enumerate(order)}
    edges = sorted({(min(index[v], index[w]), max(index[v], index[w]))
                    for v in adj for w in adj[v]})
    if not edges:
        return True, "no edges"
    eu = np.array([e[0] for e in edges])
    ev = np.array([e[1] for e in edges])
    # side[e, x]: which endpoint of e the vertex x is closer to;
    # the cut is the unordered pair of sides, so the key ignores
    # complementation
    side = dist[eu] < dist[ev]
    cut_ids: dict[bytes, int] = {}
    group = np.empty(len(edges), dtype=np.int64)
    for i in range(len(edges)):
        key = min(side[i].tobytes(), (~side[i]).tobytes())
        group[i] = cut_ids.setdefault(key, len(cut_ids))
    # related(e, f) iff f's endpoints lie on opposite sides of e's cut
    for i in range(len(edges)):
        related = side[i, eu] != side[i, ev]
        if (group[related] != group[i]).any():
            j = int(np.nonzero(related & (group != group[i]))[0][0])
            return False, (f"relation not transitive: edges "
                           f"{order[eu[i]]}-{order[ev[i]]} and "
                           f"{order[eu[j]]}-{order[ev[j]]}")
    return True, "ok"


def _theta_class_labels(adj: dict[int, list[int]],
                        order: list[int],
                        dist: np.ndarray) -> list[int]:
    """Isometric hypercube coordinates of a partial cube, as packed ints."""
    index = {v: i for i, v in enumerate(order)}
    edges = sorted({(min(index[v], index[w]), max(index[v], index[w]))
                    for v in adj for w in adj[v]})
    coords: dict[bytes, int] = {}
    sides: list[np.ndarray] = []
    for a, b in edges:
        vec = dist[a] < dist[b]
        key = min(vec.tobytes(), (~vec).tobytes())
        if key not in coords:
            coords[key] = len(sides)
            sides.append(vec if vec[0] else ~vec)
    labels = [0] * len(order)
    for bit, vec in enumerate(sides):
        for i in range(len(order)):
            if not vec[i]:
                labels[i] |= 1 << bit
    return labels


def median_status(adj: dict[int, list[int]],
                  size_limit: int = 1500,
                  dist: np.ndarray | None = None,
                  pc_hint: bool | None = None) -> tuple[bool | None, tuple | None]:
    """Decide whether a connected graph is a median graph.

    Returns ``(True, None)``, ``(False, witness_triple)`` with the
    least vertex triple admitting zero or several medians, or
    ``(None, None)`` when the graph exceeds ``size_limit``.

    Partial cubes get a fast path: with an isometric labeling the only
    possible median of a triple is the coordinatewise majority, so the
    graph is median iff every majority label is realized. Other graphs
    fall back to the brute-force triple scan over the distance matrix.
    """
    order = sorted(adj)
    n = len(order)
    if n > size_limit:
        return None, None
    if n <= 2:
        return True, None

    if dist is None:
        dist = distance_matrix(n, adj, order)
    is_pc = pc_hint
    if is_pc is None:
        is_pc, _ = partial_cube_status(adj, dist=dist)
    if (dist < 0).any():
        raise ValueError("median test requires a connected graph")

    if is_pc:
        labels = _theta_class_labels(adj, order, dist)
        label_set = set(labels)
        for i in range(n - 2):
            li = labels[i]
            for j in range(i + 1, n - 1):
                both = li & labels[j]
                either = li | labels[j]
                for k in range(j + 1, n):
                    if (both | (either & labels[k])) not in label_set:
                        return False, (order[i], order[j], order[k])
        return True, None

    # brute force: count vertices on all three pairwise geodesics;
    # needs n^2-sized masks per vertex, so it gets a tighter cap.
    # int matmul, not bool: bool @ bool would only test existence
    if n > min(size_limit, 350):
        return None, None
    on_geo = [(dist[i][:, None] + dist == dist[i][None, :]).astype(np.int8)
              for i in range(n)]
    for i in range(n - 2):
        gi = on_geo[i]
        for j in range(i + 1, n - 1):
            gij = gi[:, j].astype(np.int32)
            meet = gi & on_geo[j]
            counts = gij @ meet
            bad = np.nonzero(counts[j + 1:] != 1)[0]
            if bad.size:
                k = j + 1 + int(bad[0])
                return False, (order[i], order[j], order[k])
    return True, None


# --- component-level wrappers -----------------------------------------


def component_adjacency(h: Component) -> dict[int, list[int]]:
    adj = h.adjacency()
    return {v: sorted(ws) for v, ws in adj.items()}


def is_isometric_labeling(h: Component, lab: CubeLabeling,
                          dist: np.ndarray | None = None) -> IsometryReport:
    """Compare component distances with Hamming distances of the labels."""
    order = sorted(h.vertex_ids)
    n = len(order)
    if dist is None:
        adj = component_adjacency(h)
        dist = distance_matrix(n, adj, order)
    packed = lab.packed()
    values = [packed[v] for v in order]

    witness = None
    extreme = None
    if lab.dimension <= 63:
        arr = np.asarray(values, dtype=np.uint64)
        for i in range(n):
            ham = _popcount64(arr ^ arr[i])
            diff = np.nonzero(ham[i + 1:] != dist[i, i + 1:])[0]
            for off in diff:
                j = i + 1 + int(off)
                rec = (order[i], order[j], int(dist[i, j]), int(ham[j]))
                if witness is None:
                    witness = rec
                if extreme is None or (rec[2], -rec[0], -rec[1]) > (
                        extreme[2], -extreme[0], -extreme[1]):
                    extreme = rec
    else:
        for i in range(n):
            for j in range(i + 1, n):
                ham = bin(values[i] ^ values[j]).count("1")
                if ham != dist[i, j]:
                    rec = (order[i], order[j], int(dist[i, j]), ham)
                    if witness is None:
                        witness = rec
                    if extreme is None or (rec[2], -rec[0], -rec[1]) > (
                            extreme[2], -extreme[0], -extreme[1]):
                        extreme = rec
    if witness is None:
        return IsometryReport(True)
    return IsometryReport(
        False,
        witness=(witness[0], witness[1]),
        witness_distance=witness[2],
        witness_hamming=witness[3],
        extreme_witness=(extreme[0], extreme[1]),
        extreme_distance=extreme[2],
        extreme_hamming=extreme[3],
    )


def _popcount64(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint64)
    out = np.zeros(x.shape, dtype=np.int64)
    while x.any():
        out += (x & np.uint64(1)).astype(np.int64)
        x = x >> np.uint64(1)
    return out


def is_partial_cube(h: Component, dist: np.ndarray | None = None) -> bool:
    """Winkler test applied to one resonance component."""
    ok, _ = partial_cube_status(component_adjacency(h), dist=dist)
    return ok


def is_median_graph(h: Component, size_limit: int = 1500,
                    dist: np.ndarray | None = None,
                    pc_hint: bool | None = None) -> tuple[bool | None, tuple | None]:
    """Median test applied to one resonance component."""
    return median_status(component_adjacency(h), size_limit=size_limit,
                         dist=dist, pc_hint=pc_hint)


@dataclass(frozen=True)
class FaceSubgraphReport:
    """Induced face subgraph of one component plus the restriction check."""

    component_id: int
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    restriction_ok: bool
    failing_matching: int | None = None


def component_face_subgraph(g: EmbeddedGraph,
                            h: Component) -> FaceSubgraphReport:
    """Induced subgraph on the vertices of the component's faces.

    Checks that every matching of the component restricts to a perfect
    matching of that subgraph.
    """
    faces = g.faces()
    verts: set[int] = set()
    for fid in h.face_list:
        verts.update(faces[fid].vertices)
    edge_ids = tuple(e for e, (u, v, _) in enumerate(g.edges)
                     if u in verts and v in verts)
    edge_id_set = frozenset(edge_ids)
    for mid in h.vertex_ids:
        m = h.resonance.matchings[mid]
        restricted = [e for e in m if e in edge_id_set]
        covered: set[int] = set()
        for e in restricted:
            u, v, _ = g.edges[e]
            covered.add(u)
            covered.add(v)
        if covered != verts:
            return FaceSubgraphReport(h.component_id, tuple(sorted(verts)),
                                      edge_ids, False, mid)
    return FaceSubgraphReport(h.component_id, tuple(sorted(verts)),
                              edge_ids, True)
