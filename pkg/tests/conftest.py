import itertools
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from clarcube.corpus import builtin_corpus, corpus_instance  # noqa: E402
from clarcube.embedded import build  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return {inst.name: inst for inst in builtin_corpus()}


@pytest.fixture(scope="session")
def ladder3():
    return corpus_instance("ladder3")


@pytest.fixture(scope="session")
def ladder4():
    return corpus_instance("ladder4")


@pytest.fixture(scope="session")
def c6():
    return corpus_instance("c6")


@pytest.fixture(scope="session")
def coronene_inst():
    return corpus_instance("coronene")


def two_c6_disjoint():
    """Two disjoint hexagons, each on its own sphere."""
    edges = [(i, i, (i + 1) % 6) for i in range(6)]
    edges += [(6 + i, 6 + i, 6 + (i + 1) % 6) for i in range(6)]
    rotations = [((v - 1) % 6, v) for v in range(6)]
    rotations += [(6 + (v - 1) % 6, 6 + v) for v in range(6)]
    return build(12, edges, rotations)


@st.composite
def embedded_graphs(draw, max_vertices=7, max_edges=10, signed=True):
    """Random valid embedded graphs: edges, signs and rotations."""
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    possible = list(itertools.combinations(range(n), 2))
    pairs = draw(st.lists(st.sampled_from(possible), unique=True,
                          min_size=1, max_size=min(max_edges, len(possible))))
    edges = []
    for eid, (u, v) in enumerate(pairs):
        sign = draw(st.sampled_from([1, -1])) if signed else 1
        edges.append((eid, u, v, sign))
    rotations = []
    for v in range(n):
        incident = [eid for eid, a, b, _ in edges if v in (a, b)]
        rotations.append(tuple(draw(st.permutations(incident))))
    return build(n, edges, rotations)


def connected(g):
    return g.is_connected()
