"""Exact rational arithmetic helpers.

Coordinates and cost vectors are tuples of :class:`fractions.Fraction`.
Nothing in here ever touches a float.
"""
from __future__ import annotations

import re
from math import gcd, lcm
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def q(x) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are rejected on purpose.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def vec(xs: Iterable) -> RatVector:
    return tuple(q(x) for x in xs)


def parse_rational(s: str) -> Fraction:
    m = _RAT_RE.match(s)
    if m is None:
        raise ValueError(f"not a rational literal: {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {s!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_vector(s: str) -> RatVector:
    """Parse a comma separated list such as ``"3,2,1/2"``."""
    parts = [p for p in s.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty vector")
    return tuple(parse_rational(p) for p in parts)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> RatVector:
    return tuple(x - y for x, y in zip(a, b))


def add(a: Sequence[Fraction], b: Sequence[Fraction]) -> RatVector:
    return tuple(x + y for x, y in zip(a, b))


def scale(k, a: Sequence[Fraction]) -> RatVector:
    return tuple(k * x for x in a)


def _check_rect(rows) -> list[list[Fraction]]:
    m = [[q(x) for x in r] for r in rows]
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("matrix is not rectangular")
    return m


def row_echelon(rows) -> list[list[Fraction]]:
    """Reduced row echelon form over Q (nonzero rows only)."""
    m = _check_rect(rows)
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return m[:r]


def rank(rows) -> int:
    """Rank over the rationals.

    Uses fraction-free elimination on integer input (the common case for
    boundary matrices) and plain Fraction elimination otherwise.
    """
    m = _check_rect(rows)
    if not m or not m[0]:
        return 0
    if all(x.denominator == 1 for r in m for x in r):
        return _int_rank([[int(x) for x in r] for r in m])
    return len(row_echelon(m))


def _int_rank(m: list[list[int]]) -> int:
    # Bareiss elimination; every intermediate division is exact.
    m = [r[:] for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            row_i = m[i]
            row_r = m[r]
            m[i] = [(p * row_i[k] - f * row_r[k]) // prev for k in range(ncols)]
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def sparse_rank(columns: Iterable[dict]) -> int:
    """Exact rank over Q of a matrix given as sparse columns ``{row: value}``.

    Column reduction keyed on the lowest nonzero row; suited to boundary
    matrices, where fill-in stays small. Columns are scaled to primitive
    integer vectors, which leaves the rank unchanged.
    """
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for col in columns:
        col = _primitive({i: x for i, x in col.items() if x})
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                r += 1
                break
            a, b = piv[low], col[low]
            out = {i: a * x for i, x in col.items()}
            for i, x in piv.items():
                y = out.get(i, 0) - b * x
                if y:
                    out[i] = y
                else:
                    out.pop(i, None)
            g = gcd(*out.values()) if out else 1
            col = {i: x // g for i, x in out.items()} if g > 1 else out
    return r


def _primitive(col: dict) -> dict[int, int]:
    if not col:
        return {}
    if all(type(x) is int for x in col.values()):
        g = gcd(*col.values())
        return col if g == 1 else {i: x // g for i, x in col.items()}
    col = {i: Fraction(x) for i, x in col.items()}
    den = lcm(*(x.denominator for x in col.values()))
    ints = {i: int(x * den) for i, x in col.items()}
    g = gcd(*ints.values())
    return {i: x // g for i, x in ints.items()}


def nullspace(rows, ncols: int | None = None) -> list[RatVector]:
    """Basis of {x : rows @ x = 0}."""
    m = _check_rect(rows)
    if not m:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    n = len(m[0])
    rref = row_echelon(m)
    pivots = []
    for r in rref:
        pivots.append(next(i for i, x in enumerate(r) if x != 0))
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r, p in zip(rref, pivots):
            x[p] = -r[f]
        basis.append(tuple(x))
    return basis


def transpose(rows) -> list[list[Fraction]]:
    m = _check_rect(rows)
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def affine_dim(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    pts = list(points)
    if not pts:
        raise ValueError("affine_dim of an empty point set")
    base = pts[0]
    diffs = [sub(p, base) for p in pts[1:]]
    return rank(diffs) if diffs else 0


def strictly_feasible(constraints: Sequence[tuple[Sequence, int]]):
    """Decide whether some c satisfies ``sign_i * (g_i . c) > 0`` for all i.

    Returns ``(feasible, witness)`` where witness is an exact rational point
    (or None). Solved as: maximise t subject to ``sign_i * g_i . c >= t`` and
    ``t <= 1`` with a Bland-rule simplex; feasible iff the optimum is positive.
    """
    cons = [(vec(g), int(s)) for g, s in constraints]
    if not cons:
        return True, ()
    d = len(cons[0][0])
    if any(len(g) != d for g, _ in cons):
        raise ValueError("all normals must share one dimension")
    if any(s not in (1, -1) for _, s in cons):
        raise ValueError("signs must be +1 or -1")

    # variables: c+ (d), c- (d), t  -> all >= 0
    # rows:  t - s*g.(c+ - c-) <= 0   for each constraint
    #        t <= 1
    nv = 2 * d + 1
    A = []
    b = []
    for g, s in cons:
        row = [-s * x for x in g] + [s * x for x in g] + [Fraction(1)]
        A.append(row)
        b.append(Fraction(0))
    A.append([Fraction(0)] * (2 * d) + [Fraction(1)])
    b.append(Fraction(1))
    obj = [Fraction(0)] * (2 * d) + [Fraction(1)]

    x = _simplex_max(A, b, obj)
    t = x[2 * d]
    if t <= 0:
        return False, None
    c = tuple(x[i] - x[d + i] for i in range(d))
    assert all(s * dot(g, c) > 0 for g, s in cons)
    return True, c


def _simplex_max(A, b, obj):
    """max obj.x s.t. A x <= b, x >= 0, with b >= 0 (origin feasible).

    Dense tableau with Bland's least-index rule, so it cannot cycle.
    Assumes the optimum is bounded (true for every caller here).
    """
    m = len(A)
    n = len(obj)
    # tableau rows: [A | I | b]; basis initially the slacks n..n+m-1
    T = [list(A[i]) + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    # reduced costs of the max problem: z_j - c_j
    z = [-c for c in obj] + [Fraction(0)] * m + [Fraction(0)]
    basis = [n + i for i in range(m)]
    while True:
        enter = next((j for j in range(n + m) if z[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise ArithmeticError("unbounded LP")
        r = best[1]
        piv = T[r][enter]
        T[r] = [v / piv for v in T[r]]
        for i in range(m):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * p for a, p in zip(T[i], T[r])]
        f = z[enter]
        z = [a - f * p for a, p in zip(z, T[r])]
        basis[r] = enter
    x = [Fraction(0)] * (n + m)
    for i, bv in enumerate(basis):
        x[bv] = T[i][-1]
    return x[:n]
