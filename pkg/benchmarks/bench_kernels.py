"""Time the graph kernels under the compiled and pure-Python backends.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints one row per (instance, kernel) with the best wall time of each
backend and the speedup. Both backends are checked for identical output.
A second table times the whole ``analyze`` pipeline under each backend.
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from hassepoly import kernels
from hassepoly.generators import (default_cost, gen_associahedron, gen_cube, gen_klee_minty,
                                  gen_permutahedron)
from hassepoly.orientation import orient

INSTANCES = [
    ("P4", lambda: gen_permutahedron(4)),
    ("P5", lambda: gen_permutahedron(5)),
    ("A6", lambda: gen_associahedron(6)),
    ("A7", lambda: gen_associahedron(7)),
    ("C6", lambda: gen_cube(6)),
    ("KM8", lambda: gen_klee_minty(8)),
]


def calls(g):
    mask = np.zeros(g.n, dtype=np.uint8)
    mask[: max(1, g.n // 3)] = 1
    return {
        "closure": lambda m: m.closure(g.n, g.succ_ptr, g.succ_idx, g.topo),
        "bypassed": lambda m: m.bypassed(REACH[m], g.succ_ptr, g.succ_idx),
        "longest_remaining": lambda m: m.longest_remaining(g.n, g.succ_ptr, g.succ_idx, g.topo),
        "mobius_table": lambda m: m.mobius_table(REACH[m], g.topo),
        "reentry": lambda m: m.reentry(REACH[m], g.succ_ptr, g.succ_idx, mask),
    }


REACH = {}


def best(fn, mod, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(mod)
        times.append(time.perf_counter() - t)
    return min(times), out


def equal(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(np.asarray(x), np.asarray(y)) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if "cython" not in kernels.available_backends():
        raise SystemExit("compiled kernels are not built; run pip install -e . first")
    py, cy = kernels.get_backend("python"), kernels.get_backend("cython")
    print(f"{'instance':<9}{'n':>6}{'kernel':>20}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, make in INSTANCES:
        p = make()
        g = orient(p, default_cost(p))
        for m in (py, cy):
            REACH[m] = m.closure(g.n, g.succ_ptr, g.succ_idx, g.topo)
        for kname, fn in calls(g).items():
            tp, op = best(fn, py, args.repeat)
            tc, oc = best(fn, cy, args.repeat)
            assert equal(op, oc), (name, kname)
            print(f"{name:<9}{g.n:>6}{kname:>20}{tp:>12.5f}{tc:>12.5f}{tp / max(tc, 1e-9):>9.1f}x")

    print()
    print(f"{'analyze':<18}{'python s':>12}{'cython s':>12}")
    for name in ("P4", "A6", "C5", "P5"):
        tp, tc = end_to_end(name, pure=True), end_to_end(name, pure=False)
        print(f"{name:<18}{tp:>12.3f}{tc:>12.3f}")


E2E = {"P4": "gen_permutahedron(4)", "A6": "gen_associahedron(6)", "C5": "gen_cube(5)",
       "P5": "gen_permutahedron(5)"}


def end_to_end(name, pure):
    code = ("import time, hassepoly as h\n"
            f"p = h.{E2E[name]}\n"
            "t = time.perf_counter()\n"
            "h.analyze(p, h.default_cost(p), timings=False)\n"
            "print(time.perf_counter() - t)")
    env = dict(os.environ)
    env.pop("HASSEPOLY_PURE", None)
    if pure:
        env["HASSEPOLY_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    return float(out.stdout)


if __name__ == "__main__":
    main()
