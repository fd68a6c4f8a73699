"""Constructors for the polytope families studied here, all with exact
coordinates and explicit facet incidences."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Sequence

from .exact import (RatVector, dot, nullspace, q, rank, row_echelon,
                    strictly_feasible, vec)
from .polytope import Polytope


@dataclass
class GeneratorSpec:
    family: str
    d: int | None = None
    n: int | None = None
    eps: Fraction = Fraction(1, 4)
    generators: list = field(default_factory=list)

    def build(self) -> Polytope:
        fam = self.family.replace("-", "_")
        if fam == "cube":
            return gen_cube(_need(self.d, "d"))
        if fam == "simplex":
            return gen_simplex(_need(self.d, "d"))
        if fam == "klee_minty":
            return gen_klee_minty(_need(self.d, "d"), self.eps)
        if fam == "permutahedron":
            return gen_permutahedron(_need(self.n, "n"))
        if fam == "associahedron":
            return gen_associahedron(_need(self.n, "n"))
        if fam == "zonotope":
            return gen_zonotope(self.generators)
        raise ValueError(f"unknown family {self.family!r}")


def _need(x, name):
    if x is None:
        raise ValueError(f"parameter {name} is required")
    return x


def gen_cube(d: int) -> Polytope:
    if d < 1:
        raise ValueError("cube dimension must be >= 1")
    verts = list(itertools.product((-1, 1), repeat=d))
    ineqs = []
    for i in range(d):
        for s in (-1, 1):
            nrm = [0] * d
            nrm[i] = s
            ineqs.append((nrm, 1))
    return Polytope.from_inequalities(f"cube-{d}", verts, ineqs)


def gen_simplex(d: int) -> Polytope:
    """conv{0, e_1, ..., e_d}."""
    if d < 1:
        raise ValueError("simplex dimension must be >= 1")
    verts = [[0] * d] + [[int(i == j) for j in range(d)] for i in range(d)]
    ineqs = [([-int(i == j) for j in range(d)], 0) for i in range(d)]
    ineqs.append(([1] * d, 1))
    return Polytope.from_inequalities(f"simplex-{d}", verts, ineqs)


def gen_klee_minty(d: int, eps=Fraction(1, 4)) -> Polytope:
    """Deformed cube 0 <= x1 <= 1, eps*x_{i-1} <= x_i <= 1 - eps*x_{i-1}.

    Vertex ``k`` chooses the upper bound at level ``i`` iff bit ``d-1-i`` of
    ``k`` is set.
    """
    eps = q(eps)
    if d < 1:
        raise ValueError("Klee-Minty dimension must be >= 1")
    if not 0 < eps < Fraction(1, 2):
        raise ValueError("eps must satisfy 0 < eps < 1/2")
    verts = []
    for choice in itertools.product((0, 1), repeat=d):
        x = []
        for i, up in enumerate(choice):
            prev = x[i - 1] if i else Fraction(0)
            lo = eps * prev if i else Fraction(0)
            hi = 1 - eps * prev if i else Fraction(1)
            x.append(hi if up else lo)
        verts.append(x)
    ineqs = []
    for i in range(d):
        lo = [Fraction(0)] * d
        hi = [Fraction(0)] * d
        lo[i] = Fraction(-1)
        hi[i] = Fraction(1)
        if i:
            lo[i - 1] = eps
            hi[i - 1] = eps
        ineqs.append((lo, 0))
        ineqs.append((hi, 1))
    return Polytope.from_inequalities(f"klee-minty-{d}", verts, ineqs)


def gen_permutahedron(n: int) -> Polytope:
    """Permutations of (1..n); facet S: sum_{i in S} x_i >= 1 + ... + |S|."""
    if n < 2:
        raise ValueError("permutahedron needs n >= 2")
    verts = list(itertools.permutations(range(1, n + 1)))
    facets = []
    for k in range(1, n):
        target = set(range(1, k + 1))
        for S in itertools.combinations(range(n), k):
            nrm = [-1 if i in S else 0 for i in range(n)]
            ids = [j for j, v in enumerate(verts) if {v[i] for i in S} == target]
            facets.append((nrm, -k * (k + 1) // 2, ids))
    return Polytope.from_data(f"permutahedron-{n}", verts, facets)


def binary_trees(lo: int, hi: int):
    """Planar binary trees on leaves lo..hi, as tuples of (node, lo, hi).

    Internal node k sits between leaves k and k+1; the root split runs over
    k ascending, left subtree varying slowest.
    """
    if lo == hi:
        yield ()
        return
    for k in range(lo, hi):
        for left in binary_trees(lo, k):
            for right in binary_trees(k + 1, hi):
                yield left + ((k, lo, hi),) + right


def loday_point(tree, n: int) -> tuple[int, ...]:
    x = [0] * (n - 1)
    for k, lo, hi in tree:
        x[k - 1] = (k - lo + 1) * (hi - k)
    return tuple(x)


def gen_associahedron(n: int) -> Polytope:
    """Loday's realisation on planar binary trees with n leaves."""
    if n < 3:
        raise ValueError("associahedron needs n >= 3")
    trees = list(binary_trees(1, n))
    verts = [loday_point(t, n) for t in trees]
    intervals = [set((lo, hi) for _, lo, hi in t) for t in trees]
    facets = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) == (1, n):
                continue
            nrm = [-1 if i <= k <= j - 1 else 0 for k in range(1, n)]
            ids = [t for t, iv in enumerate(intervals) if (i, j) in iv]
            facets.append((nrm, -comb(j - i + 1, 2), ids))
    return Polytope.from_data(f"associahedron-{n}", verts, facets)


def gen_zonotope(gens: Sequence[Sequence], name: str = "zonotope") -> Polytope:
    """Minkowski sum of the segments [0, g] over the generators.

    Vertices come from the sign vectors realisable by some linear functional;
    facet normals are the directions in span(gens) orthogonal to a corank-one
    subset of generators.
    """
    G = [vec(g) for g in gens]
    if not G:
        raise ValueError("zonotope needs at least one generator")
    d = len(G[0])
    if any(len(g) != d for g in G):
        raise ValueError("generators must share one dimension")
    if any(all(x == 0 for x in g) for g in G):
        raise ValueError("zero generator")

    verts = []
    seen = set()
    for signs in itertools.product((1, -1), repeat=len(G)):
        ok, _ = strictly_feasible(list(zip(G, signs)))
        if not ok:
            continue
        pt = tuple(sum((g[i] for g, s in zip(G, signs) if s > 0), Fraction(0)) for i in range(d))
        if pt not in seen:
            seen.add(pt)
            verts.append(pt)

    basis = row_echelon(G)
    r = len(basis)
    normals = []
    for sub in itertools.combinations(range(len(G)), r - 1):
        rows = [G[i] for i in sub]
        if rows and rank(rows) != r - 1:
            continue
        # n = y @ basis with (g . n) = 0 for g in sub
        coeffs = [[dot(g, b) for b in basis] for g in rows]
        ns = nullspace(coeffs, ncols=r)
        if len(ns) != 1:
            continue
        y = ns[0]
        nrm = tuple(sum((yk * b[i] for yk, b in zip(y, basis)), Fraction(0)) for i in range(d))
        nrm = _primitive(nrm)
        for s in (1, -1):
            cand = tuple(s * x for x in nrm)
            if cand not in normals:
                normals.append(cand)
    ineqs = []
    for nrm in normals:
        off = max(dot(nrm, v) for v in verts)
        ineqs.append((nrm, off))
    return Polytope.from_inequalities(name, verts, ineqs)


def _primitive(v: RatVector) -> RatVector:
    """Scale to the primitive integer vector with the same direction."""
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(Fraction(x // g) for x in ints)


def descending_cost(dim: int, base: int | None = None) -> RatVector:
    """(dim, ..., 1), or (base^(dim-1), ..., base, 1) when ``base`` is given."""
    if base is None:
        return tuple(Fraction(dim - i) for i in range(dim))
    return tuple(Fraction(base ** (dim - 1 - i)) for i in range(dim))


def generic_descending_cost(p: Polytope) -> RatVector:
    """First generic cost among (d, ..., 1), (2^(d-1), ..., 1), (3^(d-1), ..., 1), ..."""
    dim = p.ambient_dim
    c = descending_cost(dim)
    base = 2
    while not is_generic(p, c):
        c = descending_cost(dim, base)
        base += 1
    return c


def binary_cost(dim: int) -> RatVector:
    return tuple(Fraction(2 ** i) for i in range(dim))


def unit_cost(dim: int, i: int | None = None) -> RatVector:
    i = dim - 1 if i is None else i
    return tuple(Fraction(int(j == i)) for j in range(dim))


def is_generic(p: Polytope, c: Sequence) -> bool:
    vals = [dot(c, v) for v in p.vertices]
    return len(set(vals)) == len(vals)


def default_cost(p: Polytope, family: str | None = None) -> RatVector:
    """Family default cost; falls back to a moment-curve vector if tied."""
    dim = p.ambient_dim
    fam = (family or p.name.rsplit("-", 1)[0]).replace("-", "_")
    if fam in ("permutahedron", "associahedron"):
        return generic_descending_cost(p)
    elif fam == "klee_minty":
        c = unit_cost(dim)
    else:
        c = binary_cost(dim)
    if is_generic(p, c):
        return c
    spread = max(abs(a - b) for u in p.vertices for v in p.vertices for a, b in zip(u, v))
    den = lcm(*(x.denominator for v in p.vertices for x in v))
    base = Fraction(2 * int(spread * den) + 1)
    c = tuple(base ** i for i in range(dim))
    assert is_generic(p, c)
    return c
