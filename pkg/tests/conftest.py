import itertools
import random
import sys
from fractions import Fraction as F
from functools import lru_cache

import pytest

from hassepoly.generators import (default_cost, gen_associahedron, gen_cube, gen_klee_minty,
                                  gen_permutahedron, gen_zonotope)
from hassepoly.orientation import Poset, from_arcs, orient
from hassepoly.polytope import Polytope


def V(*xs):
    return tuple(F(x) for x in xs)


@lru_cache(maxsize=None)
def instance(key: str) -> Polytope:
    fam, k = key[:-1], int(key[-1])
    return {"A": gen_associahedron, "P": gen_permutahedron, "C": gen_cube,
            "KM": gen_klee_minty}[fam](k)


@lru_cache(maxsize=None)
def oriented(key: str):
    p = instance(key)
    c = (0,) * (p.ambient_dim - 1) + (1,) if key.startswith("KM") else default_cost(p)
    return orient(p, c)


@lru_cache(maxsize=None)
def poset(key: str) -> Poset:
    o = oriented(key)
    return Poset(o.n, o)


def vid(p: Polytope, *coords) -> int:
    return list(p.vertices).index(V(*coords))


def unit_square() -> Polytope:
    verts = [V(0, 0), V(1, 0), V(1, 1), V(0, 1)]
    facets = [((V(-1, 0)), F(0), [0, 3]), (V(1, 0), F(1), [1, 2]),
              (V(0, -1), F(0), [0, 1]), (V(0, 1), F(1), [2, 3])]
    return Polytope.from_data("square", verts, facets)


def octahedron() -> Polytope:
    verts = []
    for i in range(3):
        for s in (1, -1):
            v = [0, 0, 0]
            v[i] = s
            verts.append(V(*v))
    ineqs = [(V(*s), F(1)) for s in itertools.product((-1, 1), repeat=3)]
    return Polytope.from_inequalities("octahedron", verts, ineqs)


def segment() -> Polytope:
    return gen_cube(1)


def coned_cube() -> Polytope:
    """Cube [-1,1]^3 coned to (2,0,0) over x=1, apex cut by x - y/8 - z/8 <= 3/2.

    Not simple; under c = (100, 2, 1) the skeleton is a Hasse diagram of a
    lattice in which the pseudo-join of the three atoms is a cut vertex while
    their join is still (1, 1, 1).
    """
    a, b, k = F(-1, 8), F(-1, 8), F(1, 2)
    verts = [V(*v) for v in itertools.product((-1, 1), repeat=3)]
    for s1, s2 in itertools.product((-1, 1), repeat=2):
        t = k / (1 - a * s1 - b * s2)
        verts.append((2 - t, t * s1, t * s2))
    ineqs = [((-1, 0, 0), 1), ((0, 1, 0), 1), ((0, -1, 0), 1), ((0, 0, 1), 1), ((0, 0, -1), 1),
             ((1, 1, 0), 2), ((1, -1, 0), 2), ((1, 0, 1), 2), ((1, 0, -1), 2), ((1, a, b), 2 - k)]
    return Polytope.from_inequalities("coned-cube", verts,
                                      [(V(*n), F(o)) for n, o in ineqs])


def bowtie() -> Poset:
    """0 < a, b < x, y < 1 : a and b have two minimal upper bounds."""
    # 0:bottom 1:a 2:b 3:x 4:y 5:top
    return Poset(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)])


def random_orientation(p: Polytope, rng: random.Random):
    perm = list(range(p.n_vertices))
    rng.shuffle(perm)
    rank = {v: i for i, v in enumerate(perm)}
    return from_arcs(p, [(u, v) if rank[u] < rank[v] else (v, u) for u, v in p.edges])


def zonotope_suite(n_random: int = 20, seed: int = 2024):
    """Named zonotopes plus seeded random generator sets, simple ones only."""
    out = []
    for d in range(1, 5):
        out.append(gen_zonotope([tuple(int(i == j) for j in range(d)) for i in range(d)],
                                name=f"zcube-{d}"))
    out.append(gen_zonotope([(1, 0), (0, 1), (1, 1)], name="zhexagon"))
    out.append(gen_zonotope([(1, -1, 0), (1, 0, -1), (0, 1, -1)], name="zperm-3"))
    rng = random.Random(seed)
    tries = 0
    while sum(z.name.startswith("zrand") for z in out) < n_random:
        tries += 1
        assert tries < 500, "random zonotope generation stalled"
        d = rng.randint(2, 4)
        m = rng.randint(d, 6)
        gens = []
        while len(gens) < m:
            g = tuple(rng.randint(-2, 2) for _ in range(d))
            if any(g):
                gens.append(g)
        try:
            z = gen_zonotope(gens, name=f"zrand-{tries}")
        except ValueError:
            continue
        if z.is_simple and z.dim >= 1:
            out.append(z)
    return out


@pytest.fixture(scope="session")
def zonotopes():
    return zonotope_suite()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.LINES):
        terminalreporter.write_line(line)
