"""Intersection theory and closed-form obstructions for L = (x0+x1+x2+x3).

The Bergman fan of this plane is L^3_2, the fan over the six cones
``cone(e_i, e_j)``.  The criteria below inspect ``P(C)`` and the Newton
polygons of two projections; each is sound (a firing criterion proves
non-realizability) but none is complete.

Projection conventions: ``p^k`` drops coordinate ``k``.  Points of
``Newt(p^0 C)`` are ``(exp x1, exp x2)`` and points of ``Newt(p^3 C)`` are
``(exp x0, exp x1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations
from typing import Sequence

from .errors import InvalidNormal
from .exactmath import ExactMatrix, QQ, mat_kernel
from .polygon import NewtonPolygon
from .tropcurve import (
    TropicalCurve,
    curve_from_vectors,
    newton_polygon,
    permute_curve,
    project,
)

LABELINGS: tuple = tuple(permutations(range(4)))


@dataclass(frozen=True)
class ClassicalLine:
    """The line spanned by ``e_i + e_j`` and ``e_k + e_l``; ``pair`` holds 0."""

    pair: tuple

    @property
    def rays(self) -> tuple:
        i, j = self.pair
        k, l = (t for t in range(4) if t not in self.pair)
        r1 = tuple(int(t in (i, j)) for t in range(4))
        r2 = tuple(int(t in (k, l)) for t in range(4))
        return r1, r2

    @property
    def curve(self) -> TropicalCurve:
        return curve_from_vectors(self.rays)

    def frame(self) -> tuple:
        """A labeling sending this line to the one through (1,1,0,0)."""
        i, j = self.pair
        return (i, j) + tuple(t for t in range(4) if t not in self.pair)


CLASSICAL_LINES = (ClassicalLine((0, 1)), ClassicalLine((0, 2)), ClassicalLine((0, 3)))


# -- intersection products --------------------------------------------------

def _two_supported(c: TropicalCurve, i: int, j: int):
    return [(v[i], v[j]) for v in c.vectors if v[i] and v[j] and not any(
        v[t] for t in range(len(v)) if t not in (i, j))]


def intersection_product(c1: TropicalCurve, c2: TropicalCurve) -> int:
    total = c1.degree * c2.degree
    for i, j in combinations(range(4), 2):
        for a, b in _two_supported(c1, i, j):
            for c, d in _two_supported(c2, i, j):
                total -= min(a * d, b * c)
    return total


def _margins(c: TropicalCurve) -> tuple[int, int, NewtonPolygon, NewtonPolygon]:
    """``(m0, m3, Newt(p^0 C), Newt(p^3 C))`` in the standard frame."""
    d = c.degree
    p0 = newton_polygon(project(c, (1, 2, 3)))
    p3 = newton_polygon(project(c, (0, 1, 2)))
    m3 = min(i + j for i, j in p3.vertices)
    m0 = d - max(i for i, _ in p0.vertices)
    return m0, m3, p0, p3


def line_intersection_via_newton(c: TropicalCurve, line: ClassicalLine) -> int:
    """``C . D`` read off the Newton polygons as ``d - m0 - m3``."""
    m0, m3, _, _ = _margins(permute_curve(c, line.frame()))
    return c.degree - m0 - m3


def plane_cycle_intersection(a: Sequence[int]) -> TropicalCurve:
    """Stable intersection of L^3_2 with the classical plane ``a . x = 0``."""
    a = tuple(int(x) for x in a)
    if len(a) != 4 or sum(a) != 0 or not any(a):
        raise InvalidNormal(f"normal {a} must be a nonzero integer 4-vector summing to 0")
    d = sum(x for x in a if x > 0)
    vs = []
    for i in range(4):
        for j in range(4):
            if a[i] > 0 and a[j] < 0:
                v = [0] * 4
                v[j] += a[i]
                v[i] -= a[j]
                vs.append(tuple(v))
    for i in range(4):
        if a[i] == 0:
            vs.append(tuple(d * int(t == i) for t in range(4)))
    return curve_from_vectors(vs)


# -- verdicts ---------------------------------------------------------------

class Outcome(Enum):
    FIRES = "fires"
    SILENT = "does_not_fire"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Verdict:
    criterion: str
    outcome: Outcome
    labeling: tuple | None = None
    data: dict = field(default_factory=dict, compare=False)

    @property
    def fires(self) -> bool:
        return self.outcome is Outcome.FIRES

    def to_json(self) -> dict:
        out = {"outcome": self.outcome.value}
        if self.labeling is not None:
            out["labeling"] = list(self.labeling)
        if self.data:
            out["data"] = self.data
        return out


def _silent(name):
    return Verdict(name, Outcome.SILENT)


def _char_ok(characteristic: int, d: int) -> bool:
    return characteristic == 0 or characteristic >= d


def obstruction_intprod(c: TropicalCurve) -> Verdict:
    for line in CLASSICAL_LINES:
        r1, r2 = line.rays
        k1, k2 = c.mult_of(r1), c.mult_of(r2)
        cd = intersection_product(c, line.curve)
        if cd < -min(k1, k2):
            return Verdict("intprod", Outcome.FIRES, line.frame(),
                           {"line": list(line.pair), "product": cd, "k": min(k1, k2)})
    return _silent("intprod")


def obstruction_newton_margin(c: TropicalCurve) -> Verdict:
    d = c.degree
    for g in LABELINGS:
        m0, m3, p0, p3 = _margins(permute_curve(c, g))
        n0 = sum(1 for j in range(m0 + 1) if not p0.contains((d - m0, j)))
        n3 = sum(1 for i in range(m3 + 1) if not p3.contains((i, m3 - i)))
        if n0 > d - m3 or n3 > d - m0:
            return Verdict("newton_margin", Outcome.FIRES, g, {"m0": m0, "m3": m3, "n0": n0, "n3": n3})
    return _silent("newton_margin")


def _support(v) -> frozenset:
    return frozenset(t for t, x in enumerate(v) if x)


def _unit(t: int) -> tuple:
    return tuple(int(s == t) for s in range(4))


def obstruction_commonray(c: TropicalCurve) -> Verdict:
    sups = [_support(v) for v in c.vectors]
    for i, j, k, l in LABELINGS:
        if all(len(s) == 1 or i in s for s in sups):
            if c.mult_of(_unit(j)) == 0 and c.mult_of(_unit(k)) == 0 and c.mult_of(_unit(l)) == 1:
                return Verdict("commonray", Outcome.FIRES, (i, j, k, l))
    return _silent("commonray")


def obstruction_oppositefaces(c: TropicalCurve) -> Verdict:
    sups = [_support(v) for v in c.vectors]
    for i, j, k, l in LABELINGS:
        if all(s <= {i, j} or s <= {k, l} for s in sups):
            m = [c.mult_of(_unit(t)) for t in (i, j, k, l)]
            if m == [0, 0, 0, 1]:
                return Verdict("oppositefaces", Outcome.FIRES, (i, j, k, l))
    return _silent("oppositefaces")


def _oneside_numbers(c: TropicalCurve, i: int, j: int, k: int, l: int):
    """``(c1, c2)`` if C avoids the three closed cones at e_i, else None."""
    for v in c.vectors:
        s = _support(v)
        if s <= {i, j}:
            return None
        for t in (k, l):
            if s <= {i, t} and v[i] >= v[t]:
                return None
    c1 = sum(v[j] for v in c.vectors if _support(v) <= {j, k})
    c2 = sum(v[i] for v in c.vectors if _support(v) <= {i, k})
    return c1, c2


def obstruction_oneside(c: TropicalCurve, characteristic: int = 0) -> Verdict:
    d = c.degree
    if not _char_ok(characteristic, d):
        return Verdict("oneside", Outcome.NOT_APPLICABLE)
    for lab in LABELINGS:
        nums = _oneside_numbers(c, *lab)
        if nums is None:
            continue
        c1, c2 = nums
        if c1 != c2 and 0 < c2 < d:
            return Verdict("oneside", Outcome.FIRES, lab, {"c1": c1, "c2": c2})
    return _silent("oneside")


def lattice_sets(d: int, cc: int) -> tuple[list, list]:
    a = [(d - k, k) for k in range(d + 1) if k != cc] + [(d - 1 - k, k) for k in range(d)]
    b = [(0, d - k) for k in range(d + 1) if k != cc]
    return a, b


def obstruction_lattice(c: TropicalCurve, characteristic: int = 0) -> Verdict:
    d = c.degree
    if not _char_ok(characteristic, d):
        return Verdict("lattice", Outcome.NOT_APPLICABLE)
    for g in LABELINGS:
        _, _, p0, p3 = _margins(permute_curve(c, g))
        for cc in range(1, d):
            a, b = lattice_sets(d, cc)
            if any(p0.contains(pt) for pt in a):
                continue
            if sum(1 for pt in b if p3.contains(pt)) == 1:
                return Verdict("lattice", Outcome.FIRES, g, {"c": cc})
    return _silent("lattice")


def containing_plane(c: TropicalCurve) -> tuple | None:
    """Primitive normal ``a`` of the unique classical plane holding C, if any."""
    rows = [list(v) for v in c.vectors] + [[1, 1, 1, 1]]
    ker = mat_kernel(ExactMatrix.from_rows(rows, QQ))
    if len(ker) != 1:
        return None
    a = [int(x) for x in ker[0]]
    lead = next(x for x in a if x)
    return tuple(-x for x in a) if lead < 0 else tuple(a)


def _is_multiple(c: TropicalCurve, d: TropicalCurve) -> bool:
    mc, md = c.multiplicities(), d.multiplicities()
    if set(mc) != set(md):
        return False
    base = next(iter(mc))
    return all(mc[u] * md[base] == mc[base] * md[u] for u in mc)


def contains_classical_line(c: TropicalCurve) -> bool:
    return any(c.mult_of(r1) and c.mult_of(r2) for r1, r2 in (ln.rays for ln in CLASSICAL_LINES))


def obstruction_bogartkatz(c: TropicalCurve, characteristic: int = 0) -> Verdict:
    d = c.degree
    if not _char_ok(characteristic, d):
        return Verdict("bogartkatz", Outcome.NOT_APPLICABLE)
    a = containing_plane(c)
    if a is None:
        return _silent("bogartkatz")
    lh = plane_cycle_intersection(a)
    if _is_multiple(c, lh) or contains_classical_line(lh) or contains_classical_line(c):
        return _silent("bogartkatz")
    return Verdict("bogartkatz", Outcome.FIRES, None, {"normal": list(a)})


CRITERIA = ("intprod", "newton_margin", "commonray", "oppositefaces", "oneside", "lattice", "bogartkatz")


@dataclass(frozen=True)
class ObstructionReport:
    verdicts: tuple  # Verdict per name in CRITERIA order

    def __getitem__(self, name: str) -> Verdict:
        for v in self.verdicts:
            if v.criterion == name:
                return v
        raise KeyError(name)

    @property
    def fires(self) -> bool:
        return any(v.fires for v in self.verdicts)

    def firing(self) -> list[str]:
        return [v.criterion for v in self.verdicts if v.fires]

    def to_json(self) -> dict:
        return {v.criterion: v.to_json() for v in self.verdicts}


def run_all(c: TropicalCurve, characteristic: int = 0) -> ObstructionReport:
    return ObstructionReport((
        obstruction_intprod(c),
        obstruction_newton_margin(c),
        obstruction_commonray(c),
        obstruction_oppositefaces(c),
        obstruction_oneside(c, characteristic),
        obstruction_lattice(c, characteristic),
        obstruction_bogartkatz(c, characteristic),
    ))
