"""Oriented 1-skeleta and the posets they induce.

``orient`` directs every edge by strict increase of a generic cost vector;
``from_arcs`` accepts an explicit acyclic orientation. ``build_poset`` turns
a Hasse-valid skeleton into a :class:`Poset` with join/meet machinery.
"""
from __future__ import annotations

import graphlib
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import kernels
from .exact import RatVector, dot, vec
from .polytope import NotSimpleError, Polytope


class NonGenericCostError(ValueError):
    def __init__(self, u: int, v: int):
        super().__init__(f"cost vector not generic: vertices {u} and {v} tie")
        self.pair = (u, v)


class CyclicOrientationError(ValueError):
    pass


class NotHasseError(ValueError):
    def __init__(self, witness):
        super().__init__(f"orientation is not a Hasse diagram: {witness}")
        self.witness = witness


class Check(NamedTuple):
    ok: bool
    witness: object = None


class Digraph:
    """Directed graph on ``0..n-1`` in CSR form with sorted successor lists."""

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        self.n = n
        arcs = sorted(set((int(u), int(v)) for u, v in arcs))
        self.arcs = tuple(arcs)
        succ = [[] for _ in range(n)]
        pred = [[] for _ in range(n)]
        for u, v in arcs:
            succ[u].append(v)
            pred[v].append(u)
        self.succ = [tuple(s) for s in succ]
        self.pred = [tuple(p) for p in pred]
        ptr = np.zeros(n + 1, dtype=np.int32)
        for u in range(n):
            ptr[u + 1] = ptr[u] + len(succ[u])
        self.succ_ptr = ptr
        self.succ_idx = np.array([v for s in succ for v in s], dtype=np.int32)

    @cached_property
    def topo(self) -> np.ndarray:
        ts = graphlib.TopologicalSorter({v: self.pred[v] for v in range(self.n)})
        try:
            ts.prepare()
        except graphlib.CycleError as exc:
            raise CyclicOrientationError(f"orientation has a directed cycle: {exc.args[1]}")
        order = []
        while ts.is_active():
            ready = sorted(ts.get_ready())
            order.extend(ready)
            ts.done(*ready)
        return np.array(order, dtype=np.int32)

    @cached_property
    def reach(self) -> np.ndarray:
        return kernels.closure(self.n, self.succ_ptr, self.succ_idx, self.topo)

    @cached_property
    def longest(self) -> tuple[np.ndarray, np.ndarray]:
        return kernels.longest_remaining(self.n, self.succ_ptr, self.succ_idx, self.topo)

    def sources(self) -> list[int]:
        return [v for v in range(self.n) if not self.pred[v]]

    def sinks(self) -> list[int]:
        return [v for v in range(self.n) if not self.succ[v]]

    def path(self, a: int, b: int, avoid_arc: tuple[int, int] | None = None) -> list[int] | None:
        """Shortest directed path a -> b (BFS, least-index tie-break)."""
        prev = {a: None}
        dq = deque([a])
        while dq:
            u = dq.popleft()
            if u == b:
                break
            for w in self.succ[u]:
                if (u, w) == avoid_arc or w in prev:
                    continue
                prev[w] = u
                dq.append(w)
        if b not in prev:
            return None
        out = [b]
        while prev[out[-1]] is not None:
            out.append(prev[out[-1]])
        return out[::-1]

    def reversed(self) -> "Digraph":
        return Digraph(self.n, [(v, u) for u, v in self.arcs])


class OrientedSkeleton(Digraph):
    def __init__(self, polytope: Polytope, arcs, cost: RatVector | None = None):
        super().__init__(polytope.n_vertices, arcs)
        self.polytope = polytope
        self.cost = cost
        self.source_kind = "cost_vector" if cost is not None else "explicit"
        _ = self.topo  # acyclicity is part of the contract

    @cached_property
    def values(self) -> tuple | None:
        if self.cost is None:
            return None
        return tuple(dot(self.cost, v) for v in self.polytope.vertices)

    def reversed(self) -> "OrientedSkeleton":
        cost = None if self.cost is None else tuple(-x for x in self.cost)
        return OrientedSkeleton(self.polytope, [(v, u) for u, v in self.arcs], cost)

    def face_sources_sinks(self, verts: Sequence[int]) -> tuple[list[int], list[int]]:
        vs = set(verts)
        srcs = [v for v in verts if not any(u in vs for u in self.pred[v])]
        snks = [v for v in verts if not any(w in vs for w in self.succ[v])]
        return srcs, snks

    def face_sink(self, verts: Sequence[int]) -> int:
        _, snks = self.face_sources_sinks(verts)
        if len(snks) != 1:
            raise ValueError(f"face {tuple(verts)} has {len(snks)} sinks")
        return snks[0]

    def face_source(self, verts: Sequence[int]) -> int:
        srcs, _ = self.face_sources_sinks(verts)
        if len(srcs) != 1:
            raise ValueError(f"face {tuple(verts)} has {len(srcs)} sources")
        return srcs[0]


def orient(p: Polytope, c: Sequence) -> OrientedSkeleton:
    """G(P, c): each edge directed towards the larger cost value."""
    c = vec(c)
    if len(c) != p.ambient_dim:
        raise ValueError(f"cost has dimension {len(c)}, polytope lives in {p.ambient_dim}")
    vals = [dot(c, v) for v in p.vertices]
    first = {}
    for i, x in enumerate(vals):
        if x in first:
            raise NonGenericCostError(first[x], i)
        first[x] = i
    arcs = [(u, v) if vals[u] < vals[v] else (v, u) for u, v in p.edges]
    return OrientedSkeleton(p, arcs, c)


def from_arcs(p: Polytope, arcs) -> OrientedSkeleton:
    """Explicit orientation; must orient exactly the polytope's edges."""
    arcs = [(int(u), int(v)) for u, v in arcs]
    und = sorted(tuple(sorted(a)) for a in arcs)
    if und != sorted(p.edges):
        raise ValueError("arcs do not orient exactly the edges of the polytope")
    return OrientedSkeleton(p, arcs)


def is_facial(o: OrientedSkeleton) -> Check:
    """Every face has exactly one source and one sink."""
    if not o.polytope.is_simple:
        raise NotSimpleError("face enumeration requires simple polytope")
    for f in o.polytope.faces:
        srcs, snks = o.face_sources_sinks(f.vertex_set)
        if len(srcs) != 1 or len(snks) != 1:
            return Check(False, {"face": f.vertex_set, "sources": srcs, "sinks": snks})
    return Check(True)


def hasse_witnesses(g: Digraph) -> list[dict]:
    """Every arc bypassed by a directed path of length >= 2."""
    hits = kernels.bypassed(g.reach, g.succ_ptr, g.succ_idx)
    out = []
    k = 0
    for u in range(g.n):
        for v in g.succ[u]:
            w = int(hits[k])
            k += 1
            if w >= 0:
                out.append({"arc": (u, v), "path": [u] + g.path(w, v)})
    return out


def is_hasse(g: Digraph) -> Check:
    """Transitive-reduction test: no arc u->v has a second route u ~> v."""
    hits = kernels.bypassed(g.reach, g.succ_ptr, g.succ_idx)
    bad = np.flatnonzero(hits >= 0)
    if len(bad) == 0:
        return Check(True)
    k = int(bad[0])
    u = int(np.searchsorted(g.succ_ptr, k, side="right")) - 1
    v = int(g.succ_idx[k])
    w = int(hits[k])
    return Check(False, {"arc": (u, v), "path": [u] + g.path(w, v)})


def billera_traces(g: Digraph) -> list[int]:
    """trace(A^T A^i) for i = 2, 3, ... until A^i vanishes.

    Exact integer matrix powers; independent of the reachability kernels.
    """
    n = g.n
    A = np.zeros((n, n), dtype=object)
    A[:, :] = 0
    for u, v in g.arcs:
        A[u, v] = 1
    out = []
    P = A.dot(A)
    while P.any():
        out.append(int((A * P).sum()))
        P = P.dot(A)
    return out


def billera_trace(g: Digraph) -> bool:
    return all(t == 0 for t in billera_traces(g))


class Poset:
    """Finite poset on ``0..n-1`` given by its cover arcs."""

    def __init__(self, n: int, covers: Iterable[tuple[int, int]], check: bool = True):
        self.graph = covers if isinstance(covers, Digraph) else Digraph(n, covers)
        self.n = n
        if check:
            w = is_hasse(self.graph)
            if not w.ok:
                raise NotHasseError(w.witness)
        R = self.graph.reach
        self.leq_matrix = R
        self.up = [_rowmask(R[u]) for u in range(n)]
        self.down = [_rowmask(R[:, v]) for v in range(n)]

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        return self.graph.arcs

    def up_covers(self, u: int) -> tuple[int, ...]:
        return self.graph.succ[u]

    def down_covers(self, v: int) -> tuple[int, ...]:
        return self.graph.pred[v]

    @property
    def topo(self) -> np.ndarray:
        return self.graph.topo

    def le(self, u: int, v: int) -> bool:
        return bool(self.leq_matrix[u, v])

    def lt(self, u: int, v: int) -> bool:
        return u != v and self.le(u, v)

    @cached_property
    def minimal(self) -> list[int]:
        return self.graph.sources()

    @cached_property
    def maximal(self) -> list[int]:
        return self.graph.sinks()

    @property
    def bottom(self) -> int | None:
        return self.minimal[0] if len(self.minimal) == 1 else None

    @property
    def top(self) -> int | None:
        return self.maximal[0] if len(self.maximal) == 1 else None

    def interval(self, u: int, v: int) -> tuple[int, ...]:
        return _bitlist(self.up[u] & self.down[v])

    def intervals(self):
        for u in range(self.n):
            for v in _bitlist(self.up[u]):
                yield u, v

    def minimal_upper_bounds(self, s: Iterable[int]) -> list[int]:
        ub = -1
        for x in s:
            ub &= self.up[x]
        return [x for x in _bitlist(ub) if self.down[x] & ub == 1 << x]

    def maximal_lower_bounds(self, s: Iterable[int]) -> list[int]:
        lb = -1
        for x in s:
            lb &= self.down[x]
        return [x for x in _bitlist(lb) if self.up[x] & lb == 1 << x]

    def join(self, s: Iterable[int]) -> int | None:
        s = list(s)
        if not s:
            raise ValueError("join of an empty set")
        m = self.minimal_upper_bounds(s)
        return m[0] if len(m) == 1 else None

    def meet(self, s: Iterable[int]) -> int | None:
        s = list(s)
        if not s:
            raise ValueError("meet of an empty set")
        m = self.maximal_lower_bounds(s)
        return m[0] if len(m) == 1 else None

    def is_lattice(self) -> Check:
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if self.join((x, y)) is None:
                    return Check(False, {"pair": (x, y), "missing": "join",
                                         "minimal_upper_bounds": self.minimal_upper_bounds((x, y))})
                if self.meet((x, y)) is None:
                    return Check(False, {"pair": (x, y), "missing": "meet",
                                         "maximal_lower_bounds": self.maximal_lower_bounds((x, y))})
        return Check(True)

    @cached_property
    def lattice(self) -> bool:
        return self.is_lattice().ok

    def dual(self) -> "Poset":
        return Poset(self.n, [(v, u) for u, v in self.covers], check=False)


def _rowmask(row) -> int:
    m = 0
    for i in np.flatnonzero(row):
        m |= 1 << int(i)
    return m


def _bitlist(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def build_poset(o: Digraph) -> Poset:
    """Reachability poset of a Hasse-valid orientation; covers are the arcs."""
    return Poset(o.n, o)


def join(ps: Poset, s) -> int | None:
    return ps.join(s)


def meet(ps: Poset, s) -> int | None:
    return ps.meet(s)


def is_lattice(ps: Poset) -> Check:
    return ps.is_lattice()
