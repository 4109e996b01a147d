import pytest
from hypothesis import given, settings

from clarcube.errors import NotACycleBoundaryError, NotAlternatingError
from clarcube.matching import (
    Matching,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    is_alternating_face,
    rotate_face,
)

from conftest import embedded_graphs
from oracles import pm_bruteforce, pm_count_permanent


class TestEnumeration:
    @pytest.mark.parametrize("name,count", [
        ("ladder3", 3), ("ladder4", 5), ("c6", 2), ("coronene", 20),
        ("k4-projective", 3), ("c4xc4-torus", 272), ("c6xp2-cylinder", 20),
        ("k2-sphere", 1),
    ])
    def test_fixture_counts(self, corpus, name, count):
        assert len(enumerate_perfect_matchings(corpus[name].graph)) == count

    def test_coronene_against_permanent(self, coronene_inst):
        assert pm_count_permanent(coronene_inst.graph) == 20

    def test_torus_against_permanent(self, corpus):
        assert pm_count_permanent(corpus["c4xc4-torus"].graph) == 272

    def test_small_fixtures_against_subsets(self, corpus):
        for name in ("c6", "ladder3", "ladder4", "k4-projective"):
            g = corpus[name].graph
            expected = pm_bruteforce(g)
            got = [m.edge_ids for m in enumerate_perfect_matchings(g)]
            assert got == expected, name

    def test_odd_vertex_count_empty(self):
        from clarcube.embedded import build
        g = build(3, [(0, 0, 1), (1, 1, 2)], [(0,), (0, 1), (1,)])
        assert enumerate_perfect_matchings(g) == ()

    def test_canonical_order(self, corpus):
        ms = enumerate_perfect_matchings(corpus["coronene"].graph)
        assert list(ms) == sorted(ms)

    def test_count_matches_enumeration(self, corpus):
        for inst in corpus.values():
            g = inst.graph
            assert count_perfect_matchings(g) == \
                len(enumerate_perfect_matchings(g))

    def test_count_limit_short_circuits(self, corpus):
        g = corpus["c4xc4-torus"].graph
        assert count_perfect_matchings(g, limit=10) == 11


class TestAlternation:
    def test_all_rungs_alternates_squares(self, ladder3):
        g = ladder3.graph
        ms = enumerate_perfect_matchings(g)
        rungs = next(m for m in ms
                     if all(len({u, v} & {0, 1, 2}) == 1
                            for e in m for u, v in [g.endpoints(e)[:2]]))
        for fid in ladder3.face_sets["inner"]:
            assert is_alternating_face(g, rungs, g.faces()[fid])

    def test_c6_both_matchings_alternate(self, c6):
        g = c6.graph
        for m in enumerate_perfect_matchings(g):
            assert is_alternating_face(g, m, g.faces()[0])

    def test_ladder4_outer_face_not_alternating_for_rungs(self, ladder4):
        g = ladder4.graph
        outer = next(f for f in g.faces() if len(f) == 8)
        rungs = Matching.of(
            e for e, (u, v, _) in enumerate(g.edges)
            if abs(u - v) == g.n_vertices // 2)
        assert not is_alternating_face(g, rungs, outer)

    def test_non_cycle_boundary_rejected(self, corpus):
        g = corpus["k2-sphere"].graph
        m = enumerate_perfect_matchings(g)[0]
        with pytest.raises(NotACycleBoundaryError):
            is_alternating_face(g, m, g.faces()[0])


class TestRotation:
    def test_c6_involution(self, c6):
        g = c6.graph
        a, b = enumerate_perfect_matchings(g)
        f = g.faces()[0]
        assert rotate_face(g, a, f) == b
        assert rotate_face(g, b, f) == a

    def test_changes_exactly_face_edges(self, ladder4):
        g = ladder4.graph
        ms = enumerate_perfect_matchings(g)
        for m in ms:
            for f in g.faces():
                if not is_alternating_face(g, m, f):
                    continue
                m2 = rotate_face(g, m, f)
                assert m.edge_set ^ m2.edge_set == f.edge_set

    def test_not_alternating_rejected(self, ladder4):
        g = ladder4.graph
        outer = next(f for f in g.faces() if len(f) == 8)
        rungs = Matching.of(
            e for e, (u, v, _) in enumerate(g.edges)
            if abs(u - v) == g.n_vertices // 2)
        with pytest.raises(NotAlternatingError):
            rotate_face(g, rungs, outer)

    def test_closure(self, corpus):
        for name in ("c6", "ladder3", "ladder4", "coronene"):
            g = corpus[name].graph
            ms = set(enumerate_perfect_matchings(g))
            for m in ms:
                for f in g.faces():
                    if f.is_cycle and is_alternating_face(g, m, f):
                        assert rotate_face(g, m, f) in ms


@given(embedded_graphs(max_vertices=6, max_edges=10))
@settings(max_examples=80, deadline=None)
def test_enumeration_matches_subset_oracle(g):
    got = [m.edge_ids for m in enumerate_perfect_matchings(g)]
    assert got == pm_bruteforce(g)


@given(embedded_graphs(max_vertices=6, max_edges=9))
@settings(max_examples=50, deadline=None)
def test_rotation_closure_random(g):
    ms = set(enumerate_perfect_matchings(g))
    for m in ms:
        for f in g.faces():
            if f.is_cycle and is_alternating_face(g, m, f):
                m2 = rotate_face(g, m, f)
                assert m2 in ms
                assert rotate_face(g, m2, f) == m
