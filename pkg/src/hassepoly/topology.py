"""Order complexes of open intervals, Moebius values and rational Betti
numbers."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .exact import sparse_rank
from .orientation import Poset

DEFAULT_MAX_INTERVAL = 64


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[int, ...]
    facets_of_complex: tuple[tuple[int, ...], ...]

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @cached_property
    def faces_by_dim(self) -> list[list[tuple[int, ...]]]:
        faces = set()
        for chain in self.facets_of_complex:
            for k in range(1, len(chain) + 1):
                faces.update(itertools.combinations(chain, k))
        top = max((len(f) for f in faces), default=0)
        out = [[] for _ in range(top)]
        for f in faces:
            out[len(f) - 1].append(f)
        for lst in out:
            lst.sort()
        return out

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 1

    def f_vector(self) -> list[int]:
        return [len(x) for x in self.faces_by_dim]


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers over Q; ``reduced_betti[k]`` is degree k >= 0.

    The empty complex has only reduced homology in degree -1, flagged by
    ``empty``.
    """

    reduced_betti: tuple[int, ...]
    empty: bool = False


def maximal_chains(ps: Poset, u: int, v: int):
    """Saturated chains u < ... < v along cover arcs, endpoints included."""
    inside = ps.up[u] & ps.down[v]
    stack = [(u, (u,))]
    while stack:
        x, chain = stack.pop()
        if x == v:
            yield chain
            continue
        for y in reversed(ps.up_covers(x)):
            if inside >> y & 1:
                stack.append((y, chain + (y,)))


def order_complex(ps: Poset, u: int, v: int) -> SimplicialComplex:
    """Complex of chains in the open interval (u, v)."""
    if u == v or not ps.le(u, v):
        raise ValueError(f"order complex needs {u} < {v}")
    chains = sorted({c[1:-1] for c in maximal_chains(ps, u, v)})
    chains = [c for c in chains if c]
    verts = tuple(sorted({x for c in chains for x in c}))
    return SimplicialComplex(verts, tuple(chains))


class MobiusTable:
    """All values mu(u, v), u <= v, from the defining recursion (memoised
    once per poset through the graph kernels)."""

    def __init__(self, ps: Poset):
        self.ps = ps
        self.table = kernels.mobius_table(ps.leq_matrix, ps.topo)

    def __call__(self, u: int, v: int) -> int:
        if not self.ps.le(u, v):
            raise ValueError(f"mobius({u}, {v}) undefined: not comparable as u <= v")
        return int(self.table[u, v])


def mobius(ps: Poset, u: int, v: int) -> int:
    """mu(u, v) by plain memoised recursion (small posets, reference path)."""
    if not ps.le(u, v):
        raise ValueError(f"mobius({u}, {v}) undefined: not comparable as u <= v")
    memo = {}

    def mu(z):
        if z in memo:
            return memo[z]
        if z == u:
            val = 1
        else:
            val = -sum(mu(y) for y in ps.interval(u, z) if y != z)
        memo[z] = val
        return val

    return mu(v)


def reduced_euler(c: SimplicialComplex) -> int:
    return -1 + sum((-1) ** k * n for k, n in enumerate(c.f_vector()))


def boundary_matrix(c: SimplicialComplex, k: int) -> list[list[int]]:
    """Matrix of d_k : C_k -> C_{k-1} (rows = (k-1)-faces); k >= 1."""
    rows = len(c.faces_by_dim[k - 1])
    m = [[0] * len(c.faces_by_dim[k]) for _ in range(rows)]
    for j, col in enumerate(boundary_columns(c, k)):
        for i, x in col.items():
            m[i][j] = x
    return m


def boundary_columns(c: SimplicialComplex, k: int) -> list[dict[int, int]]:
    """Sparse columns of d_k, one ``{row: +-1}`` per k-face."""
    index = {f: i for i, f in enumerate(c.faces_by_dim[k - 1])}
    return [{index[f[:i] + f[i + 1:]]: (-1) ** i for i in range(len(f))}
            for f in c.faces_by_dim[k]]


def betti_numbers(c: SimplicialComplex) -> BettiProfile:
    if c.is_empty:
        return BettiProfile((), empty=True)
    fv = c.f_vector()
    ranks = [1]  # augmentation C_0 -> Q
    for k in range(1, len(fv)):
        ranks.append(sparse_rank(boundary_columns(c, k)))
    ranks.append(0)
    betti = tuple(fv[k] - ranks[k] - ranks[k + 1] for k in range(len(fv)))
    return BettiProfile(betti)


def ball_or_sphere_profile(b: BettiProfile) -> str:
    if b.empty:
        return "sphere(-1)"
    nz = [(k, x) for k, x in enumerate(b.reduced_betti) if x]
    if not nz:
        return "ball-compatible"
    if len(nz) == 1 and nz[0][1] == 1:
        return f"sphere({nz[0][0]})"
    return "VIOLATION"


def sphere_dim(label: str) -> int | None:
    if label.startswith("sphere("):
        return int(label[7:-1])
    return None


def interval_sweep(ps: Poset, max_interval: int = DEFAULT_MAX_INTERVAL) -> dict:
    """Moebius, Euler and Betti data over every open interval u < v.

    Homology is skipped (and counted) for closed intervals larger than
    ``max_interval`` elements; the Moebius/Euler cross-check always runs.
    """
    mt = MobiusTable(ps)
    out = {"intervals": 0, "mobius_values": {}, "hall_mismatches": [],
           "mobius_out_of_range": [], "profile_counts": {}, "profile_violations": [],
           "homology_skipped": 0}
    for u, v in ps.intervals():
        if u == v:
            continue
        out["intervals"] += 1
        mu = mt(u, v)
        key = str(mu)
        out["mobius_values"][key] = out["mobius_values"].get(key, 0) + 1
        if mu not in (-1, 0, 1):
            out["mobius_out_of_range"].append([u, v, mu])
        cx = order_complex(ps, u, v)
        chi = reduced_euler(cx)
        if chi != mu:
            out["hall_mismatches"].append([u, v, mu, chi])
        if len(ps.interval(u, v)) > max_interval:
            out["homology_skipped"] += 1
            continue
        label = ball_or_sphere_profile(betti_numbers(cx))
        out["profile_counts"][label] = out["profile_counts"].get(label, 0) + 1
        k = sphere_dim(label)
        if label == "VIOLATION" or (k is not None and mu != (-1) ** (k % 2)) or (k is None and mu != 0):
            out["profile_violations"].append([u, v, label, mu])
    out["profile_counts"] = dict(sorted(out["profile_counts"].items()))
    out["mobius_values"] = dict(sorted(out["mobius_values"].items()))
    return out
