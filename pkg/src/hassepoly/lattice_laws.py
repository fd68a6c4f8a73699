"""Pseudo-joins, pseudo-meets and sweeps over the lattice laws they obey.

The pseudo-join of covers ``a_1..a_k`` of ``u`` is the sink of the smallest
face containing ``u`` and the ``a_i``; the pseudo-meet is the dual notion.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .orientation import OrientedSkeleton, Poset
from .polytope import Face, NotSimpleError, smallest_face

DEFAULT_MAX_ATOMS = 12


class NotALatticeError(ValueError):
    pass


@dataclass
class PseudoJoinRecord:
    base: int
    atoms: tuple[int, ...]
    face: Face
    pseudo_join: int
    lattice_join: int | None

    @property
    def agrees(self) -> bool:
        return self.pseudo_join == self.lattice_join


@dataclass
class LawReport:
    name: str
    checks: int = 0
    counterexamples: list = field(default_factory=list)
    capped: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {"checks": self.checks, "counterexamples": self.counterexamples,
                "capped": self.capped}


def pseudo_join_face(o: OrientedSkeleton, u: int, atoms) -> Face:
    atoms = tuple(sorted(set(atoms)))
    for a in atoms:
        if a not in o.succ[u]:
            raise ValueError(f"{a} does not cover {u}")
    return smallest_face(o.polytope, (u,) + atoms)


def pseudo_join(o: OrientedSkeleton, ps: Poset | None, u: int, atoms) -> int:
    """Sink of the smallest face through ``u`` and the given up-covers."""
    atoms = tuple(atoms)
    if not atoms:
        return u
    return o.face_sink(pseudo_join_face(o, u, atoms).vertex_set)


def pseudo_meet(o: OrientedSkeleton, ps: Poset | None, v: int, coatoms) -> int:
    coatoms = tuple(sorted(set(coatoms)))
    if not coatoms:
        return v
    for a in coatoms:
        if a not in o.pred[v]:
            raise ValueError(f"{v} does not cover {a}")
    face = smallest_face(o.polytope, (v,) + coatoms)
    return o.face_source(face.vertex_set)


def _require(o: OrientedSkeleton, ps: Poset, require_simple=True, require_lattice=True):
    if require_simple and not o.polytope.is_simple:
        raise NotSimpleError("lattice-law checks require a simple polytope")
    if require_lattice and not ps.lattice:
        raise NotALatticeError(f"poset is not a lattice: {ps.is_lattice().witness}")


def _subsets(items, min_size=1):
    for k in range(min_size, len(items) + 1):
        yield from itertools.combinations(items, k)


def pseudo_join_records(o: OrientedSkeleton, ps: Poset, max_atoms=DEFAULT_MAX_ATOMS):
    """All (u, cover subset) records, plus the bases skipped by the cap."""
    recs, capped = [], []
    for u in range(o.n):
        covers = ps.up_covers(u)
        if len(covers) > max_atoms:
            capped.append(u)
            continue
        for S in _subsets(covers):
            face = pseudo_join_face(o, u, S)
            recs.append(PseudoJoinRecord(u, S, face, o.face_sink(face.vertex_set), ps.join(S)))
    return recs, capped


def verify_pseudo_join_theorem(o: OrientedSkeleton, ps: Poset, max_atoms=DEFAULT_MAX_ATOMS,
                               require_simple=True, require_lattice=True) -> LawReport:
    """psj(S) == join(S) for every u and cover set S (and dually for meets)."""
    _require(o, ps, require_simple, require_lattice)
    rep = LawReport("pseudo_join_theorem")
    for u in range(o.n):
        covers = ps.up_covers(u)
        if len(covers) > max_atoms:
            rep.capped.append({"base": u, "kind": "join", "atoms": len(covers)})
            continue
        for S in _subsets(covers):
            rep.checks += 1
            pj = pseudo_join(o, ps, u, S)
            j = ps.join(S)
            if pj != j:
                rep.counterexamples.append({"kind": "join", "base": u, "atoms": list(S),
                                            "pseudo": pj, "lattice": j})
    for v in range(o.n):
        covers = ps.down_covers(v)
        if len(covers) > max_atoms:
            rep.capped.append({"base": v, "kind": "meet", "atoms": len(covers)})
            continue
        for T in _subsets(covers):
            rep.checks += 1
            pm = pseudo_meet(o, ps, v, T)
            m = ps.meet(T)
            if pm != m:
                rep.counterexamples.append({"kind": "meet", "base": v, "atoms": list(T),
                                            "pseudo": pm, "lattice": m})
    return rep


def _psj_table(o, ps, u, atoms):
    return {S: pseudo_join(o, ps, u, S) for S in _subsets(atoms, 0)}


def interval_atoms(ps: Poset, u: int, v: int) -> tuple[int, ...]:
    return tuple(a for a in ps.up_covers(u) if ps.le(a, v))


def verify_distinct_pseudo_joins(o: OrientedSkeleton, ps: Poset, max_atoms=DEFAULT_MAX_ATOMS,
                                 require_lattice=True) -> LawReport:
    """Distinct atom sets of an interval never share a pseudo-join."""
    _require(o, ps, True, require_lattice)
    rep = LawReport("distinct_pseudo_joins")
    tables = {}
    for u, v in ps.intervals():
        atoms = interval_atoms(ps, u, v)
        if len(atoms) > max_atoms:
            rep.capped.append({"interval": [u, v], "atoms": len(atoms)})
            continue
        if u not in tables:
            tables[u] = _psj_table(o, ps, u, ps.up_covers(u))
        rep.checks += 1
        seen = {}
        for S in _subsets(atoms, 0):
            x = tables[u][S]
            if x in seen:
                rep.counterexamples.append({"interval": [u, v], "sets": [list(seen[x]), list(S)],
                                            "pseudo_join": x})
                break
            seen[x] = S
    return rep


def verify_boolean_sublattice(o: OrientedSkeleton, ps: Poset, max_atoms=DEFAULT_MAX_ATOMS,
                              require_lattice=True) -> LawReport:
    """S -> psj(S) is an order embedding of the Boolean lattice on the atoms
    of [u, v] into [u, v]."""
    _require(o, ps, True, require_lattice)
    rep = LawReport("boolean_sublattice")
    tables = {}
    for u, v in ps.intervals():
        atoms = interval_atoms(ps, u, v)
        if len(atoms) > max_atoms:
            rep.capped.append({"interval": [u, v], "atoms": len(atoms)})
            continue
        if u not in tables:
            tables[u] = _psj_table(o, ps, u, ps.up_covers(u))
        rep.checks += 1
        bad = _boolean_failure(ps, tables[u], atoms, u, v)
        if bad is not None:
            rep.counterexamples.append({"interval": [u, v], **bad})
    return rep


def _boolean_failure(ps, table, atoms, u, v):
    subs = list(_subsets(atoms, 0))
    img = {S: table[S] for S in subs}
    if len(set(img.values())) != len(subs):
        return {"reason": "not injective"}
    for S in subs:
        x = img[S]
        if not (ps.le(u, x) and ps.le(x, v)):
            return {"reason": "image leaves interval", "set": list(S), "pseudo_join": x}
    for S, T in itertools.product(subs, repeat=2):
        if (set(S) <= set(T)) != ps.le(img[S], img[T]):
            return {"reason": "order mismatch", "sets": [list(S), list(T)]}
    return None


def verify_join_in_face(o: OrientedSkeleton, ps: Poset, max_atoms=DEFAULT_MAX_ATOMS) -> LawReport:
    """The join of covers of u lies in the smallest face containing them."""
    _require(o, ps)
    rep = LawReport("join_in_face")
    for u in range(o.n):
        covers = ps.up_covers(u)
        if len(covers) > max_atoms:
            rep.capped.append({"base": u, "atoms": len(covers)})
            continue
        for S in _subsets(covers):
            rep.checks += 1
            j = ps.join(S)
            face = smallest_face(o.polytope, S)
            if j not in face.vertex_set:
                rep.counterexamples.append({"base": u, "atoms": list(S), "join": j,
                                            "face": list(face.vertex_set)})
    return rep
