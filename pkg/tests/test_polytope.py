import itertools
from fractions import Fraction as F

import pytest
from conftest import V, coned_cube, instance, octahedron, unit_square, vid
from hypothesis import given, settings
from hypothesis import strategies as st

from hassepoly.exact import affine_dim
from hassepoly.polytope import (NotSimpleError, Polytope, all_faces, edges, face_counts,
                                smallest_face, validate)

FAMILY = ["A4", "A5", "P3", "P4", "C2", "C3", "C4", "KM2", "KM3"]


def brute_edges(p):
    """Pairs whose common facets cut out exactly the pair (definition-level oracle)."""
    out = []
    for u, v in itertools.combinations(range(p.n_vertices), 2):
        common = [f for f in p.facets if u in f.vertices and v in f.vertices]
        on_all = {w for w in range(p.n_vertices) if all(w in f.vertices for f in common)}
        if common and on_all == {u, v}:
            out.append((u, v))
    return out


class TestValidate:
    def test_square(self):
        d = validate(unit_square())
        assert d.valid and d.simple and d.dim == 2

    def test_bad_incidence(self):
        sq = unit_square()
        facets = [(f.normal, f.offset, list(f.vertices)) for f in sq.facets]
        facets[0] = (facets[0][0], facets[0][1], [0, 1, 3])
        d = validate(Polytope.from_data("bad", sq.vertices, facets))
        assert not d.valid
        assert any("equality set mismatch" in v for v in d.violations)

    def test_octahedron_not_simple(self):
        p = octahedron()
        d = validate(p)
        assert d.valid and not d.simple
        assert all(len(s) == 4 for s in p.vertex_facets)

    def test_violated_inequality(self):
        sq = unit_square()
        facets = [(f.normal, f.offset, list(f.vertices)) for f in sq.facets]
        facets[1] = (facets[1][0], F(1, 2), [1, 2])
        assert any("violates" in v for v in validate(
            Polytope.from_data("bad", sq.vertices, facets)).violations)

    def test_duplicate_vertex(self):
        verts = [V(0), V(1), V(1)]
        p = Polytope.from_data("dup", verts, [(V(-1), F(0), [0]), (V(1), F(1), [1, 2])])
        assert any("duplicate" in v for v in validate(p).violations)

    @pytest.mark.parametrize("key", FAMILY)
    def test_generated_valid(self, key):
        d = validate(instance(key))
        assert d.valid and d.simple


class TestEdges:
    @pytest.mark.parametrize("key,count", [("C3", 12), ("A4", 5), ("P3", 6), ("A5", 21), ("P4", 36)])
    def test_counts(self, key, count):
        assert len(edges(instance(key))) == count

    @pytest.mark.parametrize("key", FAMILY)
    def test_matches_brute_force(self, key):
        p = instance(key)
        assert list(edges(p)) == brute_edges(p)

    @pytest.mark.parametrize("key", FAMILY)
    def test_simple_degree(self, key):
        p = instance(key)
        deg = [0] * p.n_vertices
        for u, v in p.edges:
            deg[u] += 1
            deg[v] += 1
        assert set(deg) == {p.dim}

    def test_octahedron(self):
        assert len(edges(octahedron())) == 12


class TestSmallestFace:
    def test_pentagon(self):
        p = instance("A4")
        a, b, c = vid(p, 1, 2, 3), vid(p, 2, 1, 3), vid(p, 1, 4, 1)
        f = smallest_face(p, {a})
        assert f.vertex_set == (a,) and f.dim == 0
        f = smallest_face(p, {a, b})
        assert f.dim == 1 and set(f.vertex_set) == {a, b}
        f = smallest_face(p, {b, c})
        assert f.dim == 2 and f.defining_facets == () and len(f.vertex_set) == 5

    @settings(max_examples=50, deadline=None)
    @given(st.sampled_from(["A5", "P4", "C3"]), st.data())
    def test_closure_laws(self, key, data):
        p = instance(key)
        ids = st.integers(0, p.n_vertices - 1)
        s1 = data.draw(st.sets(ids, min_size=1, max_size=4))
        s2 = data.draw(st.sets(ids, min_size=1, max_size=4))
        f1 = smallest_face(p, s1)
        assert set(s1) <= set(f1.vertex_set)
        assert smallest_face(p, f1.vertex_set) == f1
        assert set(f1.vertex_set) <= set(smallest_face(p, s1 | s2).vertex_set)
        assert f1.dim == affine_dim([p.vertices[v] for v in f1.vertex_set])

    def test_non_simple_allowed(self):
        p = coned_cube()
        assert smallest_face(p, range(p.n_vertices)).dim == 3


class TestAllFaces:
    @pytest.mark.parametrize("key,counts", [("A4", [5, 5, 1]), ("C3", [8, 12, 6, 1]),
                                            ("P4", [24, 36, 14, 1]), ("A5", [14, 21, 9, 1])])
    def test_counts(self, key, counts):
        assert face_counts(instance(key)) == counts
        assert len(all_faces(instance(key))) == sum(counts)

    @pytest.mark.parametrize("key", FAMILY)
    def test_euler(self, key):
        p = instance(key)
        fc = face_counts(p)[:-1]
        assert sum((-1) ** k * n for k, n in enumerate(fc)) == 1 - (-1) ** p.dim

    @pytest.mark.parametrize("key", ["A5", "P4", "C4"])
    def test_face_invariants(self, key):
        p = instance(key)
        faces = all_faces(p)
        assert len(set(faces)) == len(faces)
        for f in faces:
            on_all = tuple(v for v in range(p.n_vertices)
                           if all(v in p.facets[j].vertices for j in f.defining_facets))
            assert on_all == f.vertex_set
            assert f.dim == affine_dim([p.vertices[v] for v in f.vertex_set])
            if f.dim == 1:
                assert len(f.vertex_set) == 2
        # per vertex: subsets of its facets give 2^d distinct faces
        for v in range(p.n_vertices):
            through = [f for f in faces if v in f.vertex_set]
            assert len(through) == 2 ** p.dim

    def test_non_simple_rejected(self):
        with pytest.raises(NotSimpleError, match="face enumeration requires simple polytope"):
            all_faces(octahedron())
