"""Vertex + facet-incidence representation of a polytope.

A polytope is stored as its vertex coordinates together with every facet's
supporting inequality ``normal . x <= offset`` and the set of vertices on
it. Edges and faces are derived purely from incidences.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .exact import RatVector, affine_dim, dot, vec


class NotSimpleError(ValueError):
    pass


@dataclass(frozen=True)
class Facet:
    normal: RatVector
    offset: Fraction
    vertices: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Face:
    """A face, identified by its vertex set.

    ``defining_facets`` is the full set of facets containing the face (empty
    for the whole polytope).
    """

    defining_facets: tuple[int, ...]
    vertex_set: tuple[int, ...]
    dim: int

    def __eq__(self, other):
        return isinstance(other, Face) and self.vertex_set == other.vertex_set

    def __hash__(self):
        return hash(self.vertex_set)

    def __contains__(self, v) -> bool:
        return v in self.vertex_set


@dataclass
class Diagnostics:
    violations: list[str] = field(default_factory=list)
    simple: bool = False
    dim: int = -1

    @property
    def valid(self) -> bool:
        return not self.violations


def _mask(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Polytope:
    name: str
    vertices: tuple[RatVector, ...]
    facets: tuple[Facet, ...]

    @classmethod
    def from_data(cls, name, vertices, facets) -> "Polytope":
        """Build from raw coordinates and ``(normal, offset, vertex_ids)`` triples."""
        vs = tuple(vec(v) for v in vertices)
        fs = tuple(
            Facet(vec(nrm), vec([off])[0], tuple(sorted(set(int(i) for i in ids))))
            for nrm, off, ids in facets
        )
        return cls(name, vs, fs)

    @classmethod
    def from_inequalities(cls, name, vertices, inequalities) -> "Polytope":
        """Incidence sets computed by evaluating each ``normal . x <= offset``."""
        vs = tuple(vec(v) for v in vertices)
        fs = []
        for nrm, off in inequalities:
            nrm = vec(nrm)
            off = vec([off])[0]
            ids = tuple(i for i, v in enumerate(vs) if dot(nrm, v) == off)
            fs.append(Facet(nrm, off, ids))
        return cls(name, vs, tuple(fs))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0

    @cached_property
    def dim(self) -> int:
        return affine_dim(self.vertices)

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(_mask(f.vertices) for f in self.facets)

    @cached_property
    def vertex_facets(self) -> tuple[frozenset, ...]:
        inc = [set() for _ in self.vertices]
        for j, f in enumerate(self.facets):
            for v in f.vertices:
                inc[v].add(j)
        return tuple(frozenset(s) for s in inc)

    @cached_property
    def is_simple(self) -> bool:
        return all(len(s) == self.dim for s in self.vertex_facets)

    @cached_property
    def all_mask(self) -> int:
        return (1 << self.n_vertices) - 1

    def closure_mask(self, facet_ids: Iterable[int]) -> int:
        m = self.all_mask
        for j in facet_ids:
            m &= self.facet_masks[j]
        return m

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(_edges(self))

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(_all_faces(self))


def validate(p: Polytope) -> Diagnostics:
    """Check every representation invariant; violations are returned as text."""
    diag = Diagnostics()
    out = diag.violations
    if not p.vertices:
        out.append("no vertices")
        return diag
    d_amb = p.ambient_dim
    if any(len(v) != d_amb for v in p.vertices):
        out.append("vertices have mixed dimensions")
        return diag
    dim = p.dim
    diag.dim = dim
    if len(set(p.vertices)) != len(p.vertices):
        out.append("duplicate vertex coordinates")
    seen = {}
    for j, f in enumerate(p.facets):
        if len(f.normal) != d_amb:
            out.append(f"facet {j}: normal has wrong dimension")
            continue
        if not f.vertices:
            out.append(f"facet {j}: empty incidence set")
            continue
        if any(not 0 <= i < p.n_vertices for i in f.vertices):
            out.append(f"facet {j}: vertex index out of range")
            continue
        tight = []
        for i, v in enumerate(p.vertices):
            val = dot(f.normal, v)
            if val > f.offset:
                out.append(f"facet {j}: vertex {i} violates inequality")
            elif val == f.offset:
                tight.append(i)
        if tuple(tight) != tuple(f.vertices):
            out.append(f"facet {j}: equality set mismatch")
        if affine_dim([p.vertices[i] for i in f.vertices]) != dim - 1:
            out.append(f"facet {j}: incident vertices do not span a facet")
        if f.vertices in seen:
            out.append(f"facet {j}: same incidence set as facet {seen[f.vertices]}")
        seen.setdefault(f.vertices, j)
    if dim >= 1:
        for i, s in enumerate(p.vertex_facets):
            if len(s) < dim:
                out.append(f"vertex {i}: lies on {len(s)} < {dim} facets")
    diag.simple = not out and all(len(s) == dim for s in p.vertex_facets)
    return diag


def _edges(p: Polytope):
    inc = p.vertex_facets
    simple = p.is_simple
    n = p.n_vertices
    for u in range(n):
        for v in range(u + 1, n):
            common = inc[u] & inc[v]
            if simple and len(common) != p.dim - 1:
                continue
            if p.closure_mask(common) == (1 << u) | (1 << v):
                yield (u, v)


def edges(p: Polytope) -> tuple[tuple[int, int], ...]:
    return p.edges


def smallest_face(p: Polytope, s: Iterable[int]) -> Face:
    """Inclusion-minimal face containing the vertex set ``s``."""
    s = set(s)
    if not s:
        raise ValueError("smallest_face needs a nonempty vertex set")
    common = frozenset.intersection(*(p.vertex_facets[v] for v in s))
    return _face_from_facets(p, common)


def _face_from_facets(p: Polytope, facet_ids) -> Face:
    mask = p.closure_mask(facet_ids)
    verts = _bits(mask)
    # close the facet set: every facet containing all the vertices
    closed = tuple(j for j, fm in enumerate(p.facet_masks) if fm & mask == mask)
    return Face(closed, verts, affine_dim([p.vertices[i] for i in verts]))


def face_of_facet(p: Polytope, j: int) -> Face:
    return _face_from_facets(p, (j,))


def _all_faces(p: Polytope):
    if not p.is_simple:
        raise NotSimpleError("face enumeration requires simple polytope")
    seen = {}
    for v in range(p.n_vertices):
        fs = sorted(p.vertex_facets[v])
        for k in range(len(fs) + 1):
            for T in itertools.combinations(fs, k):
                mask = p.closure_mask(T)
                if mask not in seen:
                    seen[mask] = _face_from_facets(p, T)
    return sorted(seen.values(), key=lambda f: (f.dim, f.vertex_set))


def all_faces(p: Polytope) -> tuple[Face, ...]:
    return p.faces


def face_counts(p: Polytope) -> list[int]:
    """Number of faces per dimension 0..dim (improper face included)."""
    counts = [0] * (p.dim + 1)
    for f in p.faces:
        counts[f.dim] += 1
    return counts
