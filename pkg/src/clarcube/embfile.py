"""Reading and writing the line-oriented .emb embedding format.

Format (UTF-8, ``#`` starts a comment):

    vertices <n>
    edge <eid> <u> <v> [+|-]
    rot <v> : <eid> <eid> ...

Vertices are ``0..n-1`` and edge ids must be dense ``0..m-1``; every
vertex needs a rotation line. The sign defaults to ``+``.
"""

from __future__ import annotations

from .embedded import EmbeddedGraph, build
from .errors import ClarCubeError, EmbSemanticError, EmbSyntaxError


def parse_emb(text: str) -> EmbeddedGraph:
    """Parse .emb text into a validated :class:`EmbeddedGraph`."""
    n_vertices: int | None = None
    edges: list[tuple[int, int, int, int]] = []
    rotations: dict[int, tuple[int, ...]] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "vertices":
            if n_vertices is not None:
                raise EmbSyntaxError(line_no, "duplicate vertices line")
            n_vertices = _int(fields[1], line_no) if len(fields) == 2 else \
                _fail(line_no, "expected: vertices <n>")
            if n_vertices < 0:
                raise EmbSyntaxError(line_no, "vertex count must be >= 0")
        elif kind == "edge":
            if n_vertices is None:
                raise EmbSyntaxError(line_no, "edge before vertices line")
            if len(fields) not in (4, 5):
                raise EmbSyntaxError(
                    line_no, "expected: edge <eid> <u> <v> [+|-]")
            eid = _int(fields[1], line_no)
            u = _int(fields[2], line_no)
            v = _int(fields[3], line_no)
            sign = 1
            if len(fields) == 5:
                if fields[4] not in ("+", "-"):
                    raise EmbSyntaxError(line_no, "sign must be + or -")
                sign = 1 if fields[4] == "+" else -1
            edges.append((eid, u, v, sign))
        elif kind == "rot":
            if n_vertices is None:
                raise EmbSyntaxError(line_no, "rot before vertices line")
            if len(fields) < 3 or fields[2] != ":":
                raise EmbSyntaxError(
                    line_no, "expected: rot <v> : <eid> ...")
            v = _int(fields[1], line_no)
            if v in rotations:
                raise EmbSyntaxError(line_no, f"duplicate rotation for {v}")
            rotations[v] = tuple(_int(t, line_no) for t in fields[3:])
        else:
            raise EmbSyntaxError(line_no, f"unknown directive {kind!r}")

    if n_vertices is None:
        raise EmbSyntaxError(0, "missing vertices line")
    missing = [v for v in range(n_vertices) if v not in rotations]
    if missing:
        raise EmbSemanticError(
            f"missing rotation line for vertex {missing[0]}")
    extra = [v for v in rotations if not 0 <= v < n_vertices]
    if extra:
        raise EmbSemanticError(
            f"rotation for out-of-range vertex {extra[0]}")
    ids = sorted(e[0] for e in edges)
    if ids != list(range(len(edges))):
        raise EmbSemanticError("edge ids must be dense 0..m-1")
    rot_list = [rotations[v] for v in range(n_vertices)]
    try:
        return build(n_vertices, edges, rot_list)
    except ClarCubeError as exc:
        raise EmbSemanticError(str(exc)) from exc


def write_emb(g: EmbeddedGraph, header: str = "") -> str:
    """Canonical .emb text; parse(write(g)) == g and write is idempotent."""
    lines = []
    if header:
        for h in header.splitlines():
            lines.append(f"# {h}".rstrip())
    lines.append(f"vertices {g.n_vertices}")
    for eid, (u, v, sign) in enumerate(g.edges):
        lines.append(f"edge {eid} {u} {v} {'+' if sign == 1 else '-'}")
    for v in range(g.n_vertices):
        rot = " ".join(str(e) for e in g.rotations[v])
        lines.append(f"rot {v} : {rot}".rstrip())
    return "\n".join(lines) + "\n"


def _int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise EmbSyntaxError(line_no, f"expected integer, got {token!r}")


def _fail(line_no: int, msg: str):
    raise EmbSyntaxError(line_no, msg)
