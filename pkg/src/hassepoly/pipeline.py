"""Gated analysis of one polytope + orientation.

Gate order: genericity -> acyclicity -> facial -> Hasse -> poset -> lattice
-> {lattice laws, nonrevisiting, topology}. A failed gate marks everything
behind it ``not_applicable`` instead of failing it.
"""
from __future__ import annotations

import time
from fractions import Fraction
from typing import Sequence

from . import lattice_laws as laws
from . import paths, topology
from .exact import format_rational
from .lattice_laws import DEFAULT_MAX_ATOMS
from .orientation import (CyclicOrientationError, NonGenericCostError, Poset, billera_traces,
                          from_arcs, is_facial, is_hasse, orient)
from .polytope import Polytope
from .topology import DEFAULT_MAX_INTERVAL

CHECKS = ("genericity", "acyclic", "facial", "hasse", "billera", "lattice",
          "pseudo_join_theorem", "distinct_pseudo_joins", "boolean_sublattice",
          "nonrevisiting", "hirsch", "spindle", "mobius_range", "topology_profiles")

PASS, FAIL, NA = "pass", "fail", "not_applicable"


def _entry(status, **detail):
    e = {"status": status}
    e.update(detail)
    return e


def analyze(p: Polytope, cost: Sequence | None = None, arcs=None, scope: str = "all_faces",
            max_interval: int = DEFAULT_MAX_INTERVAL, max_atoms: int = DEFAULT_MAX_ATOMS,
            timings: bool = True) -> dict:
    if (cost is None) == (arcs is None):
        raise ValueError("give exactly one of cost or arcs")
    checks: dict[str, dict] = {}
    times: dict[str, float] = {}
    clock = [time.perf_counter()]

    def done(name, entry):
        now = time.perf_counter()
        times[name] = round(now - clock[0], 6)
        clock[0] = now
        checks[name] = entry

    def skip_rest(reason):
        for name in CHECKS:
            if name not in checks:
                checks[name] = _entry(NA, reason=reason)

    report = {
        "instance": {"name": p.name, "n": p.n_facets, "d": p.dim, "simple": p.is_simple,
                     "vertices": p.n_vertices, "edges": len(p.edges)},
        "orientation": "cost_vector" if cost is not None else "explicit",
        "cost": [format_rational(Fraction(x)) for x in cost] if cost is not None else None,
        "checks": checks,
    }

    o = None
    if cost is not None:
        try:
            o = orient(p, cost)
            done("genericity", _entry(PASS))
            done("acyclic", _entry(PASS))
        except NonGenericCostError as exc:
            done("genericity", _entry(FAIL, witness={"tied_vertices": list(exc.pair)}))
            skip_rest("cost vector not generic")
    else:
        done("genericity", _entry(NA, reason="explicit orientation"))
        try:
            o = from_arcs(p, arcs)
            done("acyclic", _entry(PASS))
        except CyclicOrientationError as exc:
            done("acyclic", _entry(FAIL, witness=str(exc)))
            skip_rest("orientation has a directed cycle")

    if o is None:
        report["conjecture"] = {"status": NA, "reason": "no valid orientation"}
        return _finish(report, times, timings)

    simple = p.is_simple
    facial_ok = True
    if simple:
        fc = is_facial(o)
        facial_ok = fc.ok
        done("facial", _entry(PASS if fc.ok else FAIL, witness=fc.witness))
    else:
        done("facial", _entry(NA, reason="polytope not simple"))

    hw = is_hasse(o)
    traces = billera_traces(o)
    billera_ok = all(t == 0 for t in traces)
    done("hasse", _entry(PASS if hw.ok else FAIL, witness=hw.witness))
    done("billera", _entry(PASS if billera_ok else FAIL, traces=traces,
                           agrees_with_hasse=billera_ok == hw.ok))

    h = paths.hirsch_check(o)
    done("hirsch", _entry(PASS if h["directed_ok"] else FAIL, **h))
    sp = paths.spindle_theorem_check(o)
    done("spindle", _entry(sp.pop("status"), **sp))

    gate = None
    if not facial_ok:
        gate = "orientation not facial"
    elif not hw.ok:
        gate = "Hasse property fails"
    ps = None
    if gate is None:
        ps = Poset(o.n, o, check=False)
        lc = ps.is_lattice()
        done("lattice", _entry(PASS if lc.ok else FAIL, witness=lc.witness))
        if not lc.ok:
            gate = "poset is not a lattice"
        elif not simple:
            gate = "polytope not simple"

    if gate is not None:
        nr = paths.check_nonrevisiting(o, "facets" if not simple else scope)
        checks_na = {"reason": gate,
                     "observed": {"violations": nr.violations[:5],
                                  "violation_count": len(nr.violations)}}
        done("nonrevisiting", _entry(NA, **checks_na))
        skip_rest(gate)
        report["conjecture"] = paths.conjecture_check(o, ps)
        return _finish(report, times, timings)

    for name, fn in (("pseudo_join_theorem", laws.verify_pseudo_join_theorem),
                     ("distinct_pseudo_joins", laws.verify_distinct_pseudo_joins),
                     ("boolean_sublattice", laws.verify_boolean_sublattice)):
        rep = fn(o, ps, max_atoms=max_atoms)
        done(name, _entry(PASS if rep.ok else FAIL, **rep.as_dict()))

    nr = paths.check_nonrevisiting(o, scope)
    done("nonrevisiting", _entry(PASS if nr.ok else FAIL, **nr.as_dict()))

    sweep = topology.interval_sweep(ps, max_interval=max_interval)
    mob_ok = not sweep["mobius_out_of_range"] and not sweep["hall_mismatches"]
    done("mobius_range", _entry(PASS if mob_ok else FAIL, intervals=sweep["intervals"],
                                values=sweep["mobius_values"],
                                out_of_range=sweep["mobius_out_of_range"],
                                hall_mismatches=sweep["hall_mismatches"]))
    done("topology_profiles", _entry(PASS if not sweep["profile_violations"] else FAIL,
                                     profiles=sweep["profile_counts"],
                                     violations=sweep["profile_violations"],
                                     homology_skipped=sweep["homology_skipped"],
                                     max_interval=max_interval))
    conj = paths.conjecture_check(o, ps)
    if conj["status"] == "POTENTIAL COUNTEREXAMPLE":
        conj["witness_scope"] = scope
    report["conjecture"] = conj
    return _finish(report, times, timings)


def _finish(report, times, timings):
    report["checks"] = {k: report["checks"][k] for k in CHECKS}
    for entry in report["checks"].values():
        if entry.get("witness", 0) is None:
            del entry["witness"]
    if timings:
        report["timings"] = times
    return report


def expectation_met(report: dict, expect: str) -> bool:
    key = expect.replace("-", "_")
    if key in ("conjecture_pass", "conjecture"):
        return report["conjecture"]["status"] == PASS
    if key not in report["checks"]:
        raise KeyError(f"unknown check {expect!r}")
    return report["checks"][key]["status"] == PASS
