"""Bundled instances, instance generators and face-set selectors.

The bundled corpus covers a sphere fixture per worked example (ladders,
coronene), a torus grid, a cylinder and one non-orientable embedding,
each with named even-face sets. Generators produce deterministic
pseudo-random instances of the same families for the theorem-hunting
harness.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .embedded import EmbeddedGraph, EvenFaceSet, build, validate_even_face_set
from .errors import SizeBoundError, UnknownFaceSetError, UnknownInstanceError
from .matching import count_perfect_matchings

MATCHING_BOUND = 10_000


@dataclass(frozen=True)
class CorpusInstance:
    """A named embedded graph with designated even-face sets.

    ``face_sets`` maps selection names to explicit face-id tuples;
    ``expected`` carries optional regression values that tests compare
    against recomputation.
    """

    name: str
    graph: EmbeddedGraph
    face_sets: dict[str, tuple[int, ...]] = field(default_factory=dict)
    kind: str = "fixture"
    expected: dict = field(default_factory=dict)

    def face_set(self, name: str) -> EvenFaceSet:
        if name in self.face_sets:
            return validate_even_face_set(self.graph, self.face_sets[name])
        return resolve_face_selector(self.graph, name)


# --- constructions ------------------------------------------------------


def cycle_graph(n: int) -> EmbeddedGraph:
    """C_n embedded in the sphere."""
    edges = [(i, i, (i + 1) % n) for i in range(n)]
    rotations = [((v - 1) % n, v) for v in range(n)]
    return build(n, edges, rotations)


def _geometric_rotations(n: int, coords: list[tuple[float, float]],
                         edge_list: list[tuple[int, int, int]]):
    """Counterclockwise rotations from vertex coordinates."""
    incident: list[list[int]] = [[] for _ in range(n)]
    for eid, u, v in edge_list:
        incident[u].append(eid)
        incident[v].append(eid)

    def angle(v: int, eid: int) -> float:
        _, a, b = edge_list[eid]
        w = b if a == v else a
        return math.atan2(coords[w][1] - coords[v][1],
                          coords[w][0] - coords[v][0])

    return [tuple(sorted(incident[v], key=lambda e: angle(v, e)))
            for v in range(n)]


def grid_plane(rows: int, cols: int) -> EmbeddedGraph:
    """rows x cols grid graph with its plane embedding."""
    if rows < 2 or cols < 2:
        raise SizeBoundError("grid-plane needs both dimensions >= 2")
    vid = lambda i, j: i * cols + j
    edge_list: list[tuple[int, int, int]] = []
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edge_list.append((len(edge_list), vid(i, j), vid(i, j + 1)))
            if i + 1 < rows:
                edge_list.append((len(edge_list), vid(i, j), vid(i + 1, j)))
    coords = [(float(j), float(-i)) for i in range(rows) for j in range(cols)]
    n = rows * cols
    return build(n, edge_list, _geometric_rotations(n, coords, edge_list))


def grid_cylinder(ring: int, levels: int) -> EmbeddedGraph:
    """C_ring x P_levels drawn as concentric rings in the plane."""
    if ring < 3 or levels < 2:
        raise SizeBoundError("grid-cylinder needs ring >= 3 and levels >= 2")
    vid = lambda i, j: j * ring + i
    edge_list: list[tuple[int, int, int]] = []
    for j in range(levels):
        for i in range(ring):
            edge_list.append((len(edge_list), vid(i, j), vid((i + 1) % ring, j)))
            if j + 1 < levels:
                edge_list.append((len(edge_list), vid(i, j), vid(i, j + 1)))
    coords = []
    for j in range(levels):
        for i in range(ring):
            theta = 2 * math.pi * i / ring
            rho = 1.0 + j
            coords.append((rho * math.cos(theta), rho * math.sin(theta)))
    # coords indexed by vid: vid(i, j) = j*ring + i matches the fill order
    n = ring * levels
    return build(n, edge_list, _geometric_rotations(n, coords, edge_list))


def grid_torus(rows: int, cols: int) -> EmbeddedGraph:
    """rows x cols grid on the torus, all signs positive.

    Both dimensions must be at least 3 (simplicity) and even (so the
    graph is bipartite and has perfect matchings).
    """
    if rows < 3 or cols < 3:
        raise SizeBoundError("grid-torus needs both dimensions >= 3")
    if rows % 2 or cols % 2:
        raise SizeBoundError("grid-torus needs even dimensions")
    vid = lambda i, j: (i % rows) * cols + (j % cols)
    eid: dict[tuple[int, int], int] = {}
    edge_list: list[tuple[int, int, int]] = []
    for i in range(rows):
        for j in range(cols):
            for u, v in ((vid(i, j), vid(i, j + 1)), (vid(i, j), vid(i + 1, j))):
                key = (min(u, v), max(u, v))
                if key not in eid:
                    eid[key] = len(edge_list)
                    edge_list.append((eid[key], u, v))
    rotations = []
    for i in range(rows):
        for j in range(cols):
            v = vid(i, j)
            east = eid[tuple(sorted((v, vid(i, j + 1))))]
            north = eid[tuple(sorted((v, vid(i - 1, j))))]
            west = eid[tuple(sorted((v, vid(i, j - 1))))]
            south = eid[tuple(sorted((v, vid(i + 1, j))))]
            rotations.append((east, north, west, south))
    return build(rows * cols, edge_list, rotations)


_HEX_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
_HEX_CORNERS = ((1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1))


def hexagon_patch(cells: list[tuple[int, int]]) -> EmbeddedGraph:
    """Benzenoid-style patch from hexagon cells in axial coordinates.

    Corner positions live on an exact integer lattice scaled by
    (sqrt(3)/2, 1/2), so shared corners between adjacent cells match
    without floating-point identity.
    """
    corner_key = {}
    for q, r in cells:
        cx, cy = 2 * q + r, 3 * r
        for dx, dy in _HEX_CORNERS:
            corner_key.setdefault((cx + dx, cy + dy), None)
    keys = sorted(corner_key)
    for i, key in enumerate(keys):
        corner_key[key] = i
    edge_ids: dict[tuple[int, int], int] = {}
    edge_list: list[tuple[int, int, int]] = []
    for q, r in cells:
        cx, cy = 2 * q + r, 3 * r
        ring = [corner_key[(cx + dx, cy + dy)] for dx, dy in _HEX_CORNERS]
        for t in range(6):
            u, v = ring[t], ring[(t + 1) % 6]
            key = (min(u, v), max(u, v))
            if key not in edge_ids:
                edge_ids[key] = len(edge_list)
                edge_list.append((edge_ids[key], u, v))
    coords = [(k[0] * math.sqrt(3) / 2, k[1] * 0.5) for k in keys]
    n = len(keys)
    return build(n, edge_list, _geometric_rotations(n, coords, edge_list))


def coronene() -> EmbeddedGraph:
    """The 7-hexagon patch: a central cell surrounded by its six neighbors."""
    return hexagon_patch([(0, 0)] + [d for d in _HEX_DIRS])


def k4_projective() -> EmbeddedGraph:
    """K4 embedded in the projective plane with three quadrilateral faces.

    Rotations and signature found by exhaustive search; Euler genus 1
    and every face an even 4-cycle.
    """
    edges = [(0, 0, 1, 1), (1, 0, 2, -1), (2, 0, 3, 1),
             (3, 1, 2, 1), (4, 1, 3, -1), (5, 2, 3, 1)]
    rotations = [(0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5)]
    return build(4, edges, rotations)


# --- face-set selectors --------------------------------------------------


def resolve_face_selector(g: EmbeddedGraph, selector: str) -> EvenFaceSet:
    """Turn a selector string into a validated even-face set.

    Supported: ``all`` (every face), ``all-even``,
    ``all-even-except <id>``, ``none``, or a comma-separated id list
    such as ``0,2,5``.
    """
    sel = selector.strip()
    if sel == "all":
        return validate_even_face_set(g, range(len(g.faces())))
    if sel == "all-even":
        return validate_even_face_set(
            g, [f.face_id for f in g.faces() if f.is_even])
    if sel.startswith("all-even-except"):
        rest = sel[len("all-even-except"):].strip(" :")
        try:
            drop = {int(t) for t in rest.replace(",", " ").split()}
        except ValueError:
            raise UnknownFaceSetError(f"bad selector {selector!r}")
        return validate_even_face_set(
            g, [f.face_id for f in g.faces()
                if f.is_even and f.face_id not in drop])
    if sel in ("none", ""):
        return validate_even_face_set(g, ())
    try:
        ids = [int(t) for t in sel.replace(",", " ").split()]
    except ValueError:
        raise UnknownFaceSetError(f"bad selector {selector!r}")
    return validate_even_face_set(g, ids)


def _even_ids(g: EmbeddedGraph, length: int | None = None) -> tuple[int, ...]:
    return tuple(f.face_id for f in g.faces()
                 if f.is_even and (length is None or len(f) == length))


def _all_ids(g: EmbeddedGraph) -> tuple[int, ...]:
    return tuple(f.face_id for f in g.faces())


# --- the bundled corpus ---------------------------------------------------


def builtin_corpus() -> tuple[CorpusInstance, ...]:
    """The bundled instances, ordered by name."""
    instances = []

    k2 = build(2, [(0, 0, 1)], [(0,), (0,)])
    instances.append(CorpusInstance(
        "k2-sphere", k2, {"none": ()},
        expected={"matchings": 1, "euler_genus": 0, "faces": 1}))

    c6 = cycle_graph(6)
    instances.append(CorpusInstance(
        "c6", c6, {"inner": (0,), "all": _all_ids(c6)},
        expected={"matchings": 2, "euler_genus": 0, "faces": 2,
                  "zz": {"inner": (2, 1)}}))

    l3 = grid_plane(2, 3)
    instances.append(CorpusInstance(
        "ladder3", l3,
        {"inner": _even_ids(l3, 4), "all": _all_ids(l3)},
        expected={"matchings": 3, "euler_genus": 0, "faces": 3,
                  "zz": {"inner": (3, 2)}}))

    l4 = grid_plane(2, 4)
    instances.append(CorpusInstance(
        "ladder4", l4,
        {"inner": _even_ids(l4, 4), "all": _all_ids(l4)},
        expected={"matchings": 5, "euler_genus": 0, "faces": 4,
                  "zz": {"inner": (5, 5, 1)}}))

    cor = coronene()
    instances.append(CorpusInstance(
        "coronene", cor,
        {"inner7": _even_ids(cor, 6), "all": _all_ids(cor)},
        expected={"matchings": 20, "euler_genus": 0, "faces": 8,
                  "zz": {"inner7": (20, 32, 15, 2)},
                  "non_isometric_witness": {"pair": (0, 7), "distance": 8,
                                            "hamming": 6},
                  "central_face_parts": 3}))

    t44 = grid_torus(4, 4)
    instances.append(CorpusInstance(
        "c4xc4-torus", t44,
        {"all-even-minus-one": _even_ids(t44)[:-1], "all": _all_ids(t44)},
        expected={"matchings": 272, "euler_genus": 2, "faces": 16,
                  "zz": {"all-even-minus-one": (272, 480, 294, 78, 9)}}))

    cyl = grid_cylinder(6, 2)
    instances.append(CorpusInstance(
        "c6xp2-cylinder", cyl,
        {"squares": _even_ids(cyl, 4),
         "all-but-one": _even_ids(cyl)[:-1],
         "all": _all_ids(cyl)},
        expected={"matchings": 20, "euler_genus": 0, "faces": 8,
                  "zz": {"squares": (20, 30, 15, 2),
                         "all-but-one": (20, 32, 15, 2)}}))

    k4 = k4_projective()
    instances.append(CorpusInstance(
        "k4-projective", k4,
        {"two": _even_ids(k4)[:2], "all": _all_ids(k4)},
        expected={"matchings": 3, "euler_genus": 1, "faces": 3,
                  "zz": {"two": (3, 2)}}))

    instances.sort(key=lambda inst: inst.name)
    return tuple(instances)


def corpus_instance(name: str) -> CorpusInstance:
    for inst in builtin_corpus():
        if inst.name == name:
            return inst
    raise UnknownInstanceError(f"no corpus instance named {name!r}")


# --- random generation -----------------------------------------------------

GENERATOR_KINDS = ("grid-plane", "grid-cylinder", "grid-torus",
                   "benzenoid-patch")


def _parse_dims(size) -> tuple[int, int] | None:
    if isinstance(size, tuple):
        return size
    if isinstance(size, str) and "x" in size:
        a, b = size.lower().split("x")
        return int(a), int(b)
    return None


def generate_random(kind: str, size, seed: int) -> CorpusInstance:
    """Deterministic pseudo-random instance of one generator family.

    ``size`` is either an integer bound on the dimensions (hexagon
    count for benzenoid patches) or an explicit ``AxB`` string for the
    grid kinds. Instances whose perfect-matching count exceeds
    ``MATCHING_BOUND`` are rejected with :class:`SizeBoundError`.
    """
    if kind not in GENERATOR_KINDS:
        raise SizeBoundError(
            f"unknown kind {kind!r}; choose from {', '.join(GENERATOR_KINDS)}")
    rng = random.Random(f"{kind}:{size}:{seed}")
    dims = _parse_dims(size)

    if kind == "benzenoid-patch":
        n_hex = dims[0] * dims[1] if dims else int(size)
        if n_hex < 1:
            raise SizeBoundError("benzenoid-patch needs at least one hexagon")
        cells = _catacondensed_chain(n_hex, rng)
        g = hexagon_patch(cells)
        name = f"benzenoid-patch-{n_hex}-s{seed}"
    else:
        if dims is not None:
            a, b = dims
        elif kind == "grid-torus":
            bound = max(4, int(size))
            a = rng.randrange(4, bound + 1, 2)
            b = rng.randrange(4, bound + 1, 2)
        elif kind == "grid-cylinder":
            bound = max(3, int(size))
            a = rng.randint(3, bound)
            b = rng.randint(2, max(2, bound))
        else:
            bound = max(2, int(size))
            a = rng.randint(2, bound)
            b = rng.randint(2, bound)
        builder = {"grid-plane": grid_plane, "grid-cylinder": grid_cylinder,
                   "grid-torus": grid_torus}[kind]
        g = builder(a, b)
        name = f"{kind}-{a}x{b}-s{seed}"

    n_matchings = count_perfect_matchings(g, limit=MATCHING_BOUND)
    if n_matchings > MATCHING_BOUND:
        raise SizeBoundError(
            f"{name} exceeds the bound of {MATCHING_BOUND} matchings")
    return CorpusInstance(name, g, {"all-even": _even_ids(g)}, kind=kind,
                          expected={"matchings": n_matchings})


def _catacondensed_chain(n_hex: int, rng: random.Random):
    """Axial cells of a random catacondensed chain of hexagons.

    Every new cell touches exactly the previous one, so no vertex is
    shared by three hexagons and all hexagons stay faces.
    """
    cells = [(0, 0)]
    occupied = {(0, 0)}
    stuck = 0
    while len(cells) < n_hex:
        q, r = cells[-1]
        dirs = list(_HEX_DIRS)
        rng.shuffle(dirs)
        for dq, dr in dirs:
            cand = (q + dq, r + dr)
            if cand in occupied:
                continue
            touching = sum((cand[0] + d[0], cand[1] + d[1]) in occupied
                           for d in _HEX_DIRS)
            if touching == 1:
                cells.append(cand)
                occupied.add(cand)
                stuck = 0
                break
        else:
            # walled in (a tight spiral); try extending the other end
            cells.reverse()
            stuck += 1
            if stuck >= 2:
                raise SizeBoundError(
                    f"chain walled in after {len(cells)} hexagons")
    return cells


def random_proper_face_set(g: EmbeddedGraph, rng: random.Random,
                           p_keep: float = 0.7) -> EvenFaceSet:
    """A random even-face set that differs from the full face set."""
    evens = [f.face_id for f in g.faces() if f.is_even]
    chosen = [fid for fid in evens if rng.random() < p_keep]
    if not chosen and evens:
        chosen = [rng.choice(evens)]
    if len(chosen) == len(g.faces()):
        chosen.remove(rng.choice(chosen))
    return validate_even_face_set(g, chosen)
