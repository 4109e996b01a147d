import pytest
from hypothesis import given, settings

from clarcube.embedded import (
    build,
    euler_genus,
    even_faces,
    trace_faces,
    validate_even_face_set,
)
from clarcube.errors import (
    DisconnectedGraphError,
    LoopEdgeError,
    NotEvenFaceError,
    ParallelEdgeError,
    RotationMismatchError,
    UnknownFaceIdError,
)

from conftest import embedded_graphs, two_c6_disjoint


def hexagon():
    return build(6, [(i, i, (i + 1) % 6) for i in range(6)],
                 [((v - 1) % 6, v) for v in range(6)])


def triangle():
    return build(3, [(0, 0, 1), (1, 1, 2), (2, 2, 0)],
                 [(2, 0), (0, 1), (1, 2)])


class TestBuild:
    def test_hexagon(self):
        g = hexagon()
        assert g.n_vertices == 6
        assert g.n_edges == 6

    def test_ladder3_plane(self, ladder3):
        assert ladder3.graph.n_edges == 7

    def test_loop_rejected(self):
        with pytest.raises(LoopEdgeError):
            build(2, [(0, 1, 1)], [(), (0,)])

    def test_parallel_rejected(self):
        with pytest.raises(ParallelEdgeError):
            build(2, [(0, 0, 1), (1, 1, 0)], [(0, 1), (0, 1)])

    def test_rotation_mismatch(self):
        with pytest.raises(RotationMismatchError):
            build(3, [(0, 0, 1), (1, 1, 2)], [(0,), (0,), (1,)])

    def test_rotation_repeats_edge(self):
        with pytest.raises(RotationMismatchError):
            build(2, [(0, 0, 1)], [(0, 0), (0,)])

    def test_sparse_edge_ids_rejected(self):
        with pytest.raises(RotationMismatchError):
            build(3, [(0, 0, 1), (2, 1, 2)], [(0,), (0, 2), (2,)])


class TestTraceFaces:
    def test_hexagon_two_even_faces(self):
        faces = trace_faces(hexagon())
        assert len(faces) == 2
        assert all(len(f) == 6 and f.is_cycle and f.is_even for f in faces)

    def test_ladder3_three_faces(self, ladder3):
        faces = ladder3.graph.faces()
        lengths = sorted(len(f) for f in faces)
        assert lengths == [4, 4, 6]
        assert all(f.is_even for f in faces)

    def test_torus_grid_quadrilaterals(self, corpus):
        g = corpus["c4xc4-torus"].graph
        faces = g.faces()
        assert len(faces) == 16
        assert all(len(f) == 4 and f.is_even for f in faces)
        # V - E + F = 16 - 32 + 16 = 0
        assert g.n_vertices - g.n_edges + len(faces) == 0

    def test_k2_single_walk_face(self):
        g = build(2, [(0, 0, 1)], [(0,), (0,)])
        faces = g.faces()
        assert len(faces) == 1
        assert not faces[0].is_cycle
        assert len(faces[0]) == 2

    def test_projective_c4(self):
        g = build(4, [(0, 0, 1), (1, 1, 2), (2, 2, 3), (3, 3, 0, -1)],
                  [(3, 0), (0, 1), (1, 2), (2, 3)])
        faces = g.faces()
        assert len(faces) == 1
        assert len(faces[0]) == 8
        assert not faces[0].is_cycle

    def test_determinism(self, coronene_inst):
        g = coronene_inst.graph
        again = build(g.n_vertices,
                      [(e, u, v, s) for e, (u, v, s) in enumerate(g.edges)],
                      g.rotations)
        assert trace_faces(g) == trace_faces(again)


class TestEulerGenus:
    def test_sphere_fixtures(self, corpus):
        for name in ("c6", "ladder3", "ladder4", "coronene",
                     "c6xp2-cylinder", "k2-sphere"):
            assert euler_genus(corpus[name].graph) == 0, name

    def test_torus(self, corpus):
        assert euler_genus(corpus["c4xc4-torus"].graph) == 2

    def test_projective_plane(self, corpus):
        assert euler_genus(corpus["k4-projective"].graph) == 1

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            euler_genus(two_c6_disjoint())


class TestEvenFaces:
    def test_ladder_even_faces(self, ladder3, ladder4):
        assert len(even_faces(ladder3.graph)) == 3
        assert len(even_faces(ladder4.graph)) == 4
        assert sorted(len(f) for f in ladder4.graph.faces()) == [4, 4, 4, 8]

    def test_triangle_has_none(self):
        assert even_faces(triangle()) == frozenset()

    def test_validate_proper_flag(self, ladder3):
        g = ladder3.graph
        inner = validate_even_face_set(g, ladder3.face_sets["inner"])
        assert inner.is_proper_subset
        full = validate_even_face_set(g, range(3))
        assert not full.is_proper_subset

    def test_not_even_rejected(self):
        g = triangle()
        with pytest.raises(NotEvenFaceError):
            validate_even_face_set(g, {0})

    def test_unknown_id_rejected(self, ladder3):
        with pytest.raises(UnknownFaceIdError):
            validate_even_face_set(ladder3.graph, {99})


@given(embedded_graphs())
@settings(max_examples=120, deadline=None)
def test_double_traversal(g):
    assert sum(len(f) for f in g.faces()) == 2 * g.n_edges


@given(embedded_graphs())
@settings(max_examples=120, deadline=None)
def test_genus_nonnegative_when_connected(g):
    if g.is_connected():
        assert euler_genus(g) >= 0


@given(embedded_graphs())
@settings(max_examples=60, deadline=None)
def test_trace_deterministic(g):
    assert trace_faces(g) == trace_faces(g)


@given(embedded_graphs(signed=False))
@settings(max_examples=60, deadline=None)
def test_every_edge_in_some_face(g):
    covered = set()
    for f in g.faces():
        covered |= f.edge_set
    assert covered == set(range(g.n_edges))
