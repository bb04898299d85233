"""Shared oracles and cached census runs for the test suite."""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import combinations, permutations
from math import gcd
from pathlib import Path

from tropreal.census import run_census, symmetric_plane

DATA = Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def reference_tables() -> dict:
    return json.loads((DATA / "reference_tables.json").read_text())


@lru_cache(maxsize=None)
def census(d: int, characteristic: int = 0, with_irr: bool = False):
    return run_census(d, characteristic, with_irr=with_irr)


@lru_cache(maxsize=None)
def plane(characteristic: int = 0):
    return symmetric_plane(characteristic)


def as_key(vectors) -> tuple:
    return tuple(sorted(tuple(v) for v in vectors))


def orbit_min(vectors) -> tuple:
    """Least sorted vector tuple over all coordinate permutations (written out
    here without the library's canonical_form)."""
    return min(as_key([v[g[0]], v[g[1]], v[g[2]], v[g[3]]] for v in vectors)
               for g in permutations(range(4)))


def _primitive_directions(d: int) -> list[tuple]:
    """Primitive vectors of L^3_2 whose multiples can occur in degree ``d``."""
    out = []
    for i in range(4):
        out.append(tuple(int(t == i) for t in range(4)))
    for i, j in combinations(range(4), 2):
        for a in range(1, d + 1):
            for b in range(1, d + 1):
                if gcd(a, b) == 1:
                    v = [0] * 4
                    v[i], v[j] = a, b
                    out.append(tuple(v))
    return out


@lru_cache(maxsize=None)
def raw_curves(d: int) -> frozenset:
    """Every degree-``d`` curve in L^3_2 as a sorted vector tuple, no symmetry.

    Each primitive direction gets a multiplicity 0..d; branches whose partial
    sum already exceeds ``d`` in some coordinate are cut.
    """
    dirs = _primitive_directions(d)
    found = set()

    def rec(idx, rest, chosen):
        if not any(rest):
            found.add(as_key(chosen))
            return
        if idx == len(dirs):
            return
        rec(idx + 1, rest, chosen)
        u = dirs[idx]
        k = 1
        while all(k * x <= r for x, r in zip(u, rest)):
            rec(idx + 1, [r - k * x for r, x in zip(rest, u)], chosen + [tuple(k * x for x in u)])
            k += 1

    rec(0, [d] * 4, [])
    return frozenset(found)


def burnside_orbits(curves) -> int:
    """Number of S4 orbits via Burnside's lemma (fixed points per element)."""
    group = list(permutations(range(4)))
    fixed = 0
    for g in group:
        for c in curves:
            if as_key(tuple(v[t] for t in g) for v in c) == c:
                fixed += 1
    assert fixed % len(group) == 0
    return fixed // len(group)


def table_classes(rows) -> set:
    return {orbit_min(r["P"]) for r in rows}


def low_degree_rows(d: int) -> list[dict]:
    return [r for r in reference_tables()["low_degree_nonrealizable"] if sum(v[0] for v in r["P"]) == d]
