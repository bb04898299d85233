"""Census of tropical curves in L^3_2 up to coordinate permutation."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .criteria32 import ObstructionReport, run_all
from .matroid import PlaneIdeal, plane_from_forms
from .realize import RealizationCache, irr_realization_dim
from .tropcurve import TropicalCurve, canonical_form, symmetric_group

SYMMETRIC_FORM = (1, 1, 1, 1)


def symmetric_plane(characteristic: int = 0) -> PlaneIdeal:
    return plane_from_forms([list(SYMMETRIC_FORM)], characteristic)


def candidate_vectors(d: int) -> list[tuple[int, ...]]:
    """Normalized vectors with entries at most ``d`` and support of size 1 or 2."""
    out = []
    for i in range(4):
        for a in range(1, d + 1):
            out.append(tuple(a * (t == i) for t in range(4)))
    for i, j in combinations(range(4), 2):
        for a in range(1, d + 1):
            for b in range(1, d + 1):
                v = [0] * 4
                v[i], v[j] = a, b
                out.append(tuple(v))
    return sorted(out)


def _direction(v) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v)


def enumerate_curves(d: int) -> list[TropicalCurve]:
    """Canonical representatives of all degree-``d`` curves in L^3_2, sorted."""
    if d < 1:
        raise ValueError("degree must be positive")
    cands = candidate_vectors(d)
    group = symmetric_group(4)
    seen: set = set()
    chosen: list = []
    used: set = set()

    def dfs(start: int, rest: list[int]):
        if not any(rest):
            seen.add(canonical_form(TropicalCurve(tuple(chosen), 4), group).vectors)
            return
        for idx in range(start, len(cands)):
            v = cands[idx]
            if any(x > r for x, r in zip(v, rest)):
                continue
            u = _direction(v)
            if u in used:
                continue
            used.add(u)
            chosen.append(v)
            dfs(idx + 1, [r - x for r, x in zip(rest, v)])
            chosen.pop()
            used.discard(u)

    dfs(0, [d] * 4)
    return [TropicalCurve(vs, 4) for vs in sorted(seen)]


@dataclass(frozen=True)
class CensusRecord:
    curve: TropicalCurve
    dim: int
    obstructions: ObstructionReport
    irr_dim: int | None = None

    def to_json(self) -> dict:
        out = {"P": [list(v) for v in self.curve.vectors], "dim": self.dim}
        if self.irr_dim is not None:
            out["irr_dim"] = self.irr_dim
        out["obstructions"] = self.obstructions.to_json()
        return out


@dataclass(frozen=True)
class CensusReport:
    degree: int
    characteristic: int
    records: tuple

    @property
    def total_classes(self) -> int:
        return len(self.records)

    def non_realizable(self) -> list[CensusRecord]:
        return [r for r in self.records if r.dim < 0]

    def flagged(self) -> list[CensusRecord]:
        return [r for r in self.records if r.obstructions.fires]

    def undetected(self) -> list[CensusRecord]:
        return [r for r in self.non_realizable() if not r.obstructions.fires]

    def not_flagged_by(self, criterion: str) -> list[CensusRecord]:
        return [r for r in self.non_realizable() if not r.obstructions[criterion].fires]

    def summary(self) -> dict:
        s = {
            "classes": self.total_classes,
            "non_realizable": len(self.non_realizable()),
            "flagged": len(self.flagged()),
            "undetected": len(self.undetected()),
            "not_flagged_by_intprod": len(self.not_flagged_by("intprod")),
            "flagged_but_realizable": sum(1 for r in self.flagged() if r.dim >= 0),
        }
        if self.records and self.records[0].irr_dim is not None:
            s["irreducibly_realizable"] = sum(1 for r in self.records if r.irr_dim is not None and r.irr_dim >= 0)
        return s

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "characteristic": self.characteristic,
            "summary": self.summary(),
            "classes": [r.to_json() for r in self.records],
        }


# Per-process state for worker pools: the plane and its dimension memo.
_WORKER: dict = {}


def _init_worker(characteristic: int, with_irr: bool):
    plane = symmetric_plane(characteristic)
    _WORKER.update(plane=plane, cache=RealizationCache(plane), char=characteristic, irr=with_irr)


def _evaluate(vectors: tuple) -> CensusRecord:
    c = TropicalCurve(vectors, 4)
    cache = _WORKER["cache"]
    dim = cache.dim(c)
    irr = irr_realization_dim(_WORKER["plane"], c, cache) if _WORKER["irr"] else None
    return CensusRecord(c, dim, run_all(c, _WORKER["char"]), irr)


def run_census(d: int, characteristic: int = 0, with_irr: bool = False, jobs: int = 1) -> CensusReport:
    """Evaluate every class of degree ``d``; output order is canonical, not completion order."""
    curves = [c.vectors for c in enumerate_curves(d)]
    jobs = max(1, jobs or os.cpu_count() or 1)
    if jobs == 1:
        _init_worker(characteristic, with_irr)
        records = [_evaluate(vs) for vs in curves]
    else:
        chunk = max(1, len(curves) // (8 * jobs))
        with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(characteristic, with_irr)) as ex:
            records = list(ex.map(_evaluate, curves, chunksize=chunk))
    return CensusReport(d, characteristic, tuple(records))
