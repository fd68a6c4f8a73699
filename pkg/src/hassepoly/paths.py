"""Directed-path diagnostics: face nonrevisiting, n - d bounds, spindles and
pivot-rule walks."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .orientation import OrientedSkeleton, Poset, is_hasse
from .polytope import Face, Polytope, face_of_facet

RULES = ("greatest_improvement", "least_index", "random", "adversarial_longest")


@dataclass
class NonrevisitReport:
    scope: str
    checked_faces: int = 0
    violations: list = field(default_factory=list)
    hirsch_bound: int = 0
    longest_path: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"scope": self.scope, "checked_faces": self.checked_faces,
                "violations": self.violations, "hirsch_bound": self.hirsch_bound,
                "longest_path": self.longest_path}


@dataclass
class WalkTrace:
    rule: str
    path: list[int]
    seed: int | None = None

    @property
    def steps(self) -> int:
        return len(self.path) - 1

    def as_dict(self) -> dict:
        return {"rule": self.rule, "seed": self.seed, "path": self.path, "steps": self.steps}


def hirsch_bound(p: Polytope) -> int:
    return p.n_facets - p.dim


def _scope_faces(p: Polytope, scope: str) -> list[Face]:
    if scope in ("facets", "facets_only"):
        return [face_of_facet(p, j) for j in range(p.n_facets)]
    if scope in ("all", "all_faces", "all-faces"):
        return list(p.faces)
    raise ValueError(f"unknown scope {scope!r}")


def face_reentry(o: OrientedSkeleton, face: Face) -> list[int] | None:
    """An exit-and-return path for the face, or None when there is none."""
    mask = np.zeros(o.n, dtype=np.uint8)
    mask[list(face.vertex_set)] = 1
    u, w, x = kernels.reentry(o.reach, o.succ_ptr, o.succ_idx, mask)
    if u < 0:
        return None
    return [int(u)] + o.path(int(w), int(x))


def check_nonrevisiting(o: OrientedSkeleton, scope: str = "all_faces") -> NonrevisitReport:
    """No directed path leaves a face in scope and later comes back."""
    faces = _scope_faces(o.polytope, scope)
    rep = NonrevisitReport(scope=scope, hirsch_bound=hirsch_bound(o.polytope),
                           longest_path=longest_directed_path(o)[0])
    for f in faces:
        rep.checked_faces += 1
        path = face_reentry(o, f)
        if path is not None:
            rep.violations.append({"face": list(f.vertex_set), "dim": f.dim, "path": path})
    return rep


def longest_directed_path(o) -> tuple[int, list[int]]:
    """Length (in arcs) of a longest directed path and one such path."""
    lr, nxt = o.longest
    if o.n == 0:
        return 0, []
    start = int(np.argmax(lr))
    path = [start]
    while nxt[path[-1]] >= 0:
        path.append(int(nxt[path[-1]]))
    return int(lr[start]), path


def graph_diameter(p: Polytope) -> int:
    adj = [[] for _ in range(p.n_vertices)]
    for u, v in p.edges:
        adj[u].append(v)
        adj[v].append(u)
    best = 0
    for s in range(p.n_vertices):
        dist = {s: 0}
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    dq.append(w)
        if len(dist) < p.n_vertices:
            raise ValueError("polytope graph is disconnected")
        best = max(best, max(dist.values()))
    return best


def hirsch_check(o: OrientedSkeleton) -> dict:
    bound = hirsch_bound(o.polytope)
    lp, path = longest_directed_path(o)
    diam = graph_diameter(o.polytope)
    return {"n": o.polytope.n_facets, "d": o.polytope.dim, "bound": bound,
            "longest_path": lp, "longest_path_witness": path, "diameter": diam,
            "directed_ok": lp <= bound, "diameter_ok": diam <= bound}


def spindle_pairs(p: Polytope):
    full = (1 << p.n_facets) - 1
    masks = [sum(1 << j for j in s) for s in p.vertex_facets]
    for u in range(p.n_vertices):
        for v in range(u + 1, p.n_vertices):
            if masks[u] | masks[v] == full:
                yield u, v


def is_spindle(p: Polytope) -> tuple[int, int] | None:
    """First vertex pair (by index) such that every facet contains one of them."""
    return next(spindle_pairs(p), None)


def covers_all_facets(p: Polytope, u: int, v: int) -> bool:
    return all(u in f.vertices or v in f.vertices for f in p.facets)


def spindle_theorem_check(o: OrientedSkeleton) -> dict:
    """Simple spindle with source/sink as its apexes and the Hasse property
    must give facet nonrevisiting and paths of length <= n - d."""
    p = o.polytope
    srcs, snks = o.sources(), o.sinks()
    failing = []
    if not p.is_simple:
        failing.append("polytope is not simple")
    if is_spindle(p) is None:
        failing.append("polytope is not a spindle")
    if not is_hasse(o).ok:
        failing.append("Hasse property fails")
    if len(srcs) != 1 or len(snks) != 1:
        failing.append("no unique source and sink")
    elif not covers_all_facets(p, srcs[0], snks[0]):
        failing.append("source and sink are not spindle apexes")
    if failing:
        return {"status": "not_applicable", "failing": failing,
                "reason": f"hypotheses not satisfied: {failing[0]}"}
    rep = check_nonrevisiting(o, "facets")
    lp, path = longest_directed_path(o)
    bound = hirsch_bound(p)
    ok = rep.ok and lp <= bound
    return {"status": "pass" if ok else "fail", "apexes": [srcs[0], snks[0]],
            "longest_path": lp, "bound": bound, "nonrevisit_violations": rep.violations}


_HYP_NAMES = {"simple": "simple", "hasse": "Hasse", "lattice": "a lattice"}


def conjecture_check(o: OrientedSkeleton, ps: Poset | None = None) -> dict:
    """Hypotheses (simple, Hasse, lattice) then nonrevisiting on all faces."""
    p = o.polytope
    hyp = {"simple": p.is_simple}
    hw = is_hasse(o)
    hyp["hasse"] = hw.ok
    if hw.ok:
        if ps is None:
            ps = Poset(o.n, o, check=False)
        hyp["lattice"] = ps.lattice
    else:
        hyp["lattice"] = None
    failed = [_HYP_NAMES[k] for k, v in hyp.items() if v is False]
    if failed:
        return {"status": "not_applicable", "hypotheses": hyp,
                "reason": "hypotheses fail (" + ", ".join(f"not {k}" for k in failed) + ")"}
    rep = check_nonrevisiting(o, "all_faces")
    if rep.ok:
        return {"status": "pass", "hypotheses": hyp, "checked_faces": rep.checked_faces}
    return {"status": "POTENTIAL COUNTEREXAMPLE", "hypotheses": hyp,
            "checked_faces": rep.checked_faces, "violations": rep.violations,
            "vertices": {str(v): [str(x) for x in p.vertices[v]]
                         for viol in rep.violations for v in viol["path"]}}


def pivot_walk(o: OrientedSkeleton, rule: str, seed: int | None = None,
               start: int | None = None) -> WalkTrace:
    """Follow out-arcs until a sink, choosing the next vertex by ``rule``."""
    if rule not in RULES:
        raise ValueError(f"unknown pivot rule {rule!r}")
    if rule == "greatest_improvement" and o.values is None:
        raise ValueError("greatest_improvement needs a cost-derived orientation")
    if start is None:
        srcs = o.sources()
        start = srcs[0]
    rng = random.Random(seed)
    lr, _ = o.longest
    path = [start]
    while o.succ[path[-1]]:
        u = path[-1]
        out = o.succ[u]
        if rule == "least_index":
            nxt = out[0]
        elif rule == "random":
            nxt = rng.choice(out)
        elif rule == "greatest_improvement":
            vals = o.values
            nxt = max(out, key=lambda w: (vals[w] - vals[u], -w))
        else:
            nxt = max(out, key=lambda w: (int(lr[w]), -w))
        path.append(nxt)
    return WalkTrace(rule, path, seed if rule == "random" else None)
