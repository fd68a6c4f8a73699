from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hassepoly.exact import (affine_dim, dot, format_rational, nullspace, parse_rational,
                             parse_vector, q, rank, row_echelon, sparse_rank, strictly_feasible,
                             transpose)

small = st.integers(-4, 4)
rationals = st.builds(F, st.integers(-60, 60), st.integers(1, 12))


def matrices(max_rows=5, max_cols=5, elems=small):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(elems, min_size=c, max_size=c), min_size=1, max_size=max_rows))


class TestRank:
    def test_identity(self):
        assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3

    def test_zero(self):
        assert rank([[0, 0], [0, 0]]) == 0

    def test_hand_example(self):
        assert rank([[1, 2], [2, 4], [0, 1]]) == 2

    def test_empty(self):
        assert rank([]) == 0

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            rank([[1, 2], [3]])

    @given(matrices())
    def test_transpose_invariant(self, m):
        assert rank(m) == rank(transpose(m))

    @given(matrices())
    def test_matches_sympy(self, m):
        assert rank(m) == sympy.Matrix(m).rank()

    @given(matrices(elems=rationals))
    def test_rational_matches_sympy(self, m):
        assert rank(m) == sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r]
                                        for r in m]).rank()

    @given(matrices())
    def test_integer_and_fraction_paths_agree(self, m):
        assert rank(m) == sum(1 for r in row_echelon([[F(x) for x in r] for r in m]) if any(r))


def sparse_cols(m):
    return [{i: r[j] for i, r in enumerate(m) if r[j]} for j in range(len(m[0]))]


class TestSparseRank:
    def test_empty(self):
        assert sparse_rank([]) == 0 and sparse_rank([{}, {}]) == 0

    def test_triangle_boundary(self):
        # d_1 of a triangle: three edges on three vertices
        assert sparse_rank([{0: -1, 1: 1}, {0: -1, 2: 1}, {1: -1, 2: 1}]) == 2

    @given(matrices(max_rows=7, max_cols=7))
    def test_matches_dense(self, m):
        assert sparse_rank(sparse_cols(m)) == rank(m)

    @given(matrices(elems=rationals))
    def test_rational_matches_sympy(self, m):
        want = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r]
                             for r in m]).rank()
        assert sparse_rank(sparse_cols(m)) == want


@given(matrices(elems=rationals))
def test_nullspace_is_kernel(m):
    ncols = len(m[0])
    basis = nullspace(m)
    assert len(basis) == ncols - rank(m)
    for v in basis:
        for r in m:
            assert dot(r, v) == 0


class TestAffineDim:
    def test_point(self):
        assert affine_dim([(F(3), F(1))]) == 0

    def test_triangle(self):
        assert affine_dim([(0, 0), (1, 0), (0, 1)]) == 2

    def test_pentagon_plane(self):
        pts = [(3, 2, 1), (3, 1, 2), (1, 4, 1), (2, 1, 3), (1, 2, 3)]
        assert affine_dim(pts) == 2

    def test_empty(self):
        with pytest.raises(ValueError):
            affine_dim([])


class TestRationalText:
    def test_round_trip_examples(self):
        for s, x in [("3/4", F(3, 4)), ("-2", F(-2)), ("+6/4", F(3, 2)), ("0/5", F(0))]:
            assert parse_rational(s) == x
        assert format_rational(F(6, 4)) == "3/2"
        assert format_rational(F(-5)) == "-5"
        assert format_rational(F(0)) == "0"

    @pytest.mark.parametrize("bad", ["1.5", "1/0", "a", "", "1//2", "1e3"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    @given(rationals)
    def test_round_trip(self, x):
        assert parse_rational(format_rational(x)) == x

    def test_vector(self):
        assert parse_vector("1, -1/2,3") == (F(1), F(-1, 2), F(3))

    def test_no_floats(self):
        with pytest.raises(TypeError):
            q(0.5)
        with pytest.raises(TypeError):
            q(True)

    @given(rationals, rationals, rationals)
    def test_field_laws(self, a, b, c):
        assert (a + b) - b == a
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)


class TestStrictFeasibility:
    def test_positive_ray(self):
        ok, w = strictly_feasible([((1,), 1)])
        assert ok and w[0] > 0

    def test_contradiction(self):
        assert strictly_feasible([((1,), 1), ((1,), -1)]) == (False, None)

    def test_sum_forced_positive(self):
        assert not strictly_feasible([((1, 0), 1), ((0, 1), 1), ((1, 1), -1)])[0]

    def test_empty_system(self):
        assert strictly_feasible([])[0]

    def test_zero_normal(self):
        assert not strictly_feasible([((0, 0), 1)])[0]

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.tuples(st.lists(small, min_size=3, max_size=3), st.sampled_from([1, -1])),
                    min_size=1, max_size=6))
    def test_witness_and_monotone(self, cons):
        ok, w = strictly_feasible(cons)
        if ok:
            for g, s in cons:
                assert s * dot(g, w) > 0
            for i in range(len(cons)):
                assert strictly_feasible(cons[:i] + cons[i + 1:])[0]
