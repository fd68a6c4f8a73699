import itertools
import math
from fractions import Fraction as F

import networkx as nx
import pytest
from conftest import V

from hassepoly.generators import (GeneratorSpec, binary_trees, default_cost, gen_associahedron,
                                  gen_cube, gen_klee_minty, gen_permutahedron, gen_simplex,
                                  gen_zonotope, is_generic)
from hassepoly.polytope import validate


def graph(p):
    g = nx.Graph()
    g.add_nodes_from(range(p.n_vertices))
    g.add_edges_from(p.edges)
    return g


class TestCube:
    @pytest.mark.parametrize("d,nv,nf", [(1, 2, 2), (2, 4, 4), (3, 8, 6), (4, 16, 8)])
    def test_counts(self, d, nv, nf):
        p = gen_cube(d)
        assert (p.n_vertices, p.n_facets, p.dim, p.is_simple) == (nv, nf, d, True)
        assert set(p.vertices) == set(itertools.product((F(-1), F(1)), repeat=d))

    def test_zero(self):
        with pytest.raises(ValueError):
            gen_cube(0)


class TestKleeMinty:
    def test_square(self):
        p = gen_klee_minty(2, F(1, 4))
        assert set(p.vertices) == {V(0, 0), V(1, "1/4"), V(1, "3/4"), V(0, 1)}

    def test_segment(self):
        assert set(gen_klee_minty(1).vertices) == {V(0), V(1)}

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_distinct_last_coordinate(self, d):
        p = gen_klee_minty(d, F(1, 4))
        assert p.n_vertices == 2 ** d and p.is_simple and validate(p).valid
        assert len({v[-1] for v in p.vertices}) == 2 ** d

    @pytest.mark.parametrize("eps", [F(0), F(1, 2), F(-1, 3), F(3, 4)])
    def test_eps_range(self, eps):
        with pytest.raises(ValueError):
            gen_klee_minty(3, eps)


class TestPermutahedron:
    def test_segment(self):
        assert set(gen_permutahedron(2).vertices) == {V(1, 2), V(2, 1)}

    def test_hexagon(self):
        p = gen_permutahedron(3)
        assert (p.n_vertices, p.n_facets, p.dim) == (6, 6, 2)

    def test_p4(self):
        p = gen_permutahedron(4)
        assert (p.n_vertices, p.n_facets, p.dim, p.is_simple) == (24, 14, 3, True)
        assert set(p.vertices) == {tuple(map(F, s)) for s in itertools.permutations(range(1, 5))}

    def test_n1(self):
        with pytest.raises(ValueError):
            gen_permutahedron(1)

    @pytest.mark.parametrize("n", [3, 4])
    def test_zonotope_isomorphic(self, n):
        gens = [tuple(int(k == i) - int(k == j) for k in range(n))
                for i, j in itertools.combinations(range(n), 2)]
        assert nx.is_isomorphic(graph(gen_permutahedron(n)), graph(gen_zonotope(gens)))


class TestAssociahedron:
    def test_loday_pentagon(self):
        p = gen_associahedron(4)
        assert list(p.vertices) == [V(3, 2, 1), V(3, 1, 2), V(1, 4, 1), V(2, 1, 3), V(1, 2, 3)]

    def test_segment(self):
        assert set(gen_associahedron(3).vertices) == {V(2, 1), V(1, 2)}

    def test_n5(self):
        p = gen_associahedron(5)
        assert (p.n_vertices, p.n_facets, len(p.edges), p.dim) == (14, 9, 21, 3)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_catalan_and_simple(self, n):
        p = gen_associahedron(n)
        assert p.n_vertices == math.comb(2 * (n - 1), n - 1) // n
        assert p.n_vertices == len(list(binary_trees(1, n)))
        assert p.is_simple and p.dim == n - 2 and validate(p).valid
        assert len(p.edges) * 2 == p.n_vertices * (n - 2)
        # Loday points lie on the hyperplane sum = C(n, 2)
        assert {sum(v) for v in p.vertices} == {F(n * (n - 1), 2)}

    def test_n2(self):
        with pytest.raises(ValueError):
            gen_associahedron(2)


class TestZonotope:
    def test_square(self):
        p = gen_zonotope([(1, 0), (0, 1)])
        assert set(p.vertices) == {V(0, 0), V(1, 0), V(0, 1), V(1, 1)}

    def test_hexagon(self):
        p = gen_zonotope([(1, 0), (0, 1), (1, 1)])
        assert p.n_vertices == 6 and p.n_facets == 6 and p.is_simple

    def test_permutahedral_hexagon(self):
        gens = [(1, -1, 0), (1, 0, -1), (0, 1, -1)]
        assert nx.is_isomorphic(graph(gen_zonotope(gens)), graph(gen_permutahedron(3)))

    def test_zero_generator(self):
        with pytest.raises(ValueError):
            gen_zonotope([(1, 0), (0, 0)])

    def test_mixed_dimension(self):
        with pytest.raises(ValueError):
            gen_zonotope([(1, 0), (0, 1, 0)])

    def test_simplicity_reported(self):
        p = gen_zonotope([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
        assert validate(p).valid and not p.is_simple

    def test_random_suite_valid(self, zonotopes):
        assert sum(z.name.startswith("zrand") for z in zonotopes) == 20
        for z in zonotopes:
            assert validate(z).valid and z.is_simple


class TestSpec:
    def test_dispatch(self):
        assert GeneratorSpec("klee-minty", d=3).build().n_vertices == 8
        assert GeneratorSpec("simplex", d=3).build().n_vertices == 4
        with pytest.raises(ValueError):
            GeneratorSpec("cube").build()
        with pytest.raises(ValueError):
            GeneratorSpec("dodecahedron", d=3).build()

    def test_simplex(self):
        p = gen_simplex(3)
        assert (p.n_vertices, p.n_facets, len(p.edges), p.is_simple) == (4, 4, 6, True)


class TestDefaultCost:
    @pytest.mark.parametrize("p", [gen_permutahedron(3), gen_permutahedron(4),
                                   gen_associahedron(4), gen_associahedron(5), gen_cube(3),
                                   gen_klee_minty(3), gen_zonotope([(1, 0), (0, 1), (1, 1)])])
    def test_generic(self, p):
        c = default_cost(p)
        assert is_generic(p, c)
        assert all(isinstance(x, F) for x in c)

    def test_descending_shapes(self):
        assert default_cost(gen_associahedron(4)) == (3, 2, 1)
        assert default_cost(gen_klee_minty(3)) == (0, 0, 1)
        assert default_cost(gen_cube(3)) == (1, 2, 4)
        c = default_cost(gen_permutahedron(3))
        assert list(c) == sorted(c, reverse=True) and len(set(c)) == 3

    def test_plain_descending_ties_on_hexagon(self):
        assert not is_generic(gen_permutahedron(3), (3, 2, 1))
