"""Compare the compiled and pure-Python row reduction kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--census-degree D]

Part one times both kernels directly on random integer matrices shaped like
the realization systems (many rows, up to 15 columns).  Part two runs a full
census once per backend in a subprocess, the pure one via TROPREAL_PURE=1.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from tropreal.exactmath import _pykernel

try:
    from tropreal.exactmath import _ckernel
except ImportError:
    _ckernel = None


def _matrices(n: int, seed: int = 1):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        rows, cols = rng.randint(10, 40), rng.randint(6, 15)
        out.append(([[rng.choice((0, 0, 1, -1, 2, -3)) for _ in range(cols)] for _ in range(rows)], cols))
    return out


def bench_kernels(repeat: int):
    mats = _matrices(200)
    kernels = [("python", _pykernel)] + ([("cython", _ckernel)] if _ckernel else [])
    for label, mod in (("rref_int", "int"), ("rref_mod_p", "p")):
        times = {}
        for name, k in kernels:
            if mod == "int":
                fn = lambda k=k: [k.rref_int(m, c) for m, c in mats]  # noqa: E731
            else:
                fn = lambda k=k: [k.rref_mod_p(m, c, 101) for m, c in mats]  # noqa: E731
            times[name] = min(timeit.repeat(fn, number=1, repeat=repeat))
        line = "  ".join(f"{n}={t * 1e3:8.2f} ms" for n, t in times.items())
        speed = f"  speedup={times['python'] / times['cython']:.1f}x" if "cython" in times else ""
        print(f"{label:<11} x200  {line}{speed}")


def bench_census(d: int):
    code = ("import time; from tropreal.census import run_census; from tropreal.exactmath import BACKEND;"
            f"t = time.perf_counter(); s = run_census({d}).summary();"
            "print(BACKEND, round(time.perf_counter() - t, 2), s['classes'], s['non_realizable'])")
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("TROPREAL_PURE", None)
        if pure:
            env["TROPREAL_PURE"] = "1"
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, secs, classes, nonreal = out.stdout.split()
        print(f"census d={d} backend={backend:<7} {float(secs):7.2f} s  classes={classes} non_realizable={nonreal}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--census-degree", type=int, default=3)
    args = ap.parse_args()
    bench_kernels(args.repeat)
    if args.census_degree:
        bench_census(args.census_degree)


if __name__ == "__main__":
    main()
