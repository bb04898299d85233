"""Tropical curves in Bergman fans, encoded by their set P(C).

``P(C)`` holds one integer vector per ray: the multiplicity times the
primitive generator, normalized so that the smallest coordinate is 0.  The
vectors sum to ``deg(C) * (1, ..., 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import permutations, product
from math import gcd
from typing import Iterable, Sequence

from .errors import NotNormalized, ParallelRays, RayOutsideFan, Unbalanced, ZeroVector
from .matroid import Matroid
from .polygon import NewtonPolygon

Vector = tuple  # tuple[int, ...]


def multiplicity(v: Sequence[int]) -> int:
    return reduce(gcd, v, 0)


def primitive(v: Sequence[int]) -> Vector:
    g = multiplicity(v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


@dataclass(frozen=True)
class TropicalCurve:
    vectors: tuple  # sorted tuple of vectors
    ambient: int

    @property
    def degree(self) -> int:
        return sum(v[0] for v in self.vectors)

    def multiplicities(self) -> dict[Vector, int]:
        """Primitive ray generator -> multiplicity."""
        return {primitive(v): multiplicity(v) for v in self.vectors}

    def mult_of(self, ray: Sequence[int]) -> int:
        """Multiplicity on the ray spanned by ``ray`` (0 if absent)."""
        return self.multiplicities().get(primitive(tuple(ray)), 0)

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)


@dataclass(frozen=True)
class PlaneTropicalCurve(TropicalCurve):
    frame: tuple = field(default=(0, 1, 2))  # ordered coordinate triple it came from


def _check_vectors(vs: list[Vector], ambient: int) -> int:
    if not vs:
        raise Unbalanced("empty curve")
    for v in vs:
        if len(v) != ambient:
            raise ValueError(f"vector {v} does not have {ambient} coordinates")
        if not any(v):
            raise ZeroVector(f"zero vector {v}")
        if min(v) != 0:
            raise NotNormalized(f"vector {v} does not have minimum coordinate 0")
    seen: dict[Vector, Vector] = {}
    for v in vs:
        u = primitive(v)
        if u in seen:
            raise ParallelRays(f"vectors {seen[u]} and {v} span the same ray")
        seen[u] = v
    total = [sum(col) for col in zip(*vs)]
    if len(set(total)) != 1 or total[0] <= 0:
        raise Unbalanced(f"vectors sum to {tuple(total)}, not a positive multiple of (1,...,1)")
    return total[0]


def curve_from_vectors(vs: Iterable[Sequence[int]], ambient: int | None = None) -> TropicalCurve:
    vs = [tuple(int(x) for x in v) for v in vs]
    if ambient is None:
        ambient = len(vs[0]) if vs else 0
    _check_vectors(vs, ambient)
    return TropicalCurve(tuple(sorted(vs)), ambient)


def degree(c: TropicalCurve) -> int:
    return c.degree


def validate_in_fan(c: TropicalCurve, m: Matroid) -> None:
    if c.ambient != len(m.ground):
        raise ValueError(f"curve lives in {c.ambient} coordinates, matroid has {len(m.ground)}")
    for v in c.vectors:
        if m.contains_ray(v) is None:
            raise RayOutsideFan(f"ray {v} is not in the Bergman fan")


def project(c: TropicalCurve, a: Sequence[int]) -> PlaneTropicalCurve:
    """Push-forward to the coordinates in ``a``: delete the others, merge rays."""
    a = tuple(sorted(a))
    merged: dict[Vector, list[int]] = {}
    for v in c.vectors:
        w = tuple(v[i] for i in a)
        if not any(w):
            continue
        acc = merged.setdefault(primitive(w), [0] * len(a))
        for k, x in enumerate(w):
            acc[k] += x
    out = []
    for acc in merged.values():
        assert min(acc) == 0, f"projected vector {acc} is not normalized"
        out.append(tuple(acc))
    return PlaneTropicalCurve(tuple(sorted(out)), len(a), a)


def _orientation_key(v: Vector):
    """Position of ``v`` in positive (counterclockwise) order, ending at e_0."""
    v0, v1, v2 = v
    from fractions import Fraction

    if v0 and v1 and not v2:
        return (0, Fraction(v1, v0))
    if v1 and not v0 and not v2:
        return (1, 0)
    if v1 and v2 and not v0:
        return (2, Fraction(v2, v1))
    if v2 and not v0 and not v1:
        return (3, 0)
    if v0 and v2 and not v1:
        return (4, Fraction(v0, v2))
    return (5, 0)


def positive_order(vectors: Iterable[Vector]) -> list[Vector]:
    return sorted(vectors, key=_orientation_key)


def newton_polygon(c: TropicalCurve) -> NewtonPolygon:
    """Newton polygon of a plane tropical curve, placed in the simplex Delta_d."""
    if c.ambient != 3:
        raise ValueError("newton_polygon needs a curve in a 3-coordinate frame")
    d = c.degree
    vs = positive_order(c.vectors)
    m = sum(v[0] for v in vs if v[1])
    q = (0, m, d - m)
    pts = [q]
    for v in vs[:-1]:
        q = (q[0] + v[1] - v[2], q[1] + v[2] - v[0], q[2] + v[0] - v[1])
        pts.append(q)
    poly = NewtonPolygon.from_points(d, [(p[0], p[1]) for p in pts])
    assert len(poly.vertices) == len(vs), "Newton polygon lost a vertex"
    assert poly.inside_simplex() and poly.meets_all_sides()
    return poly


def decompositions(c: TropicalCurve) -> list[tuple[TropicalCurve, TropicalCurve]]:
    """All splittings C = D1 + D2 into two nonzero tropical curves."""
    key = (c.vectors, c.ambient)
    hit = _DECOMP_CACHE.get(key)
    if hit is not None:
        return list(hit)
    prims = [(primitive(v), multiplicity(v)) for v in c.vectors]
    n = c.ambient
    seen = set()
    out = []
    for ts in product(*(range(m + 1) for _, m in prims)):
        if not any(ts) or all(t == m for t, (_, m) in zip(ts, prims)):
            continue
        s = [0] * n
        for t, (u, _) in zip(ts, prims):
            if t:
                for k in range(n):
                    s[k] += t * u[k]
        if len(set(s)) != 1:
            continue
        d1 = tuple(sorted(tuple(t * x for x in u) for t, (u, _) in zip(ts, prims) if t))
        d2 = tuple(sorted(tuple((m - t) * x for x in u) for t, (u, m) in zip(ts, prims) if m > t))
        pair = (d1, d2) if d1 <= d2 else (d2, d1)
        if pair in seen:
            continue
        seen.add(pair)
        out.append((TropicalCurve(pair[0], n), TropicalCurve(pair[1], n)))
    out.sort(key=lambda p: (p[0].vectors, p[1].vectors))
    _DECOMP_CACHE[key] = tuple(out)
    return out


_DECOMP_CACHE: dict = {}


def permute_vector(v: Vector, perm: Sequence[int]) -> Vector:
    return tuple(v[p] for p in perm)


def permute_curve(c: TropicalCurve, perm: Sequence[int]) -> TropicalCurve:
    return TropicalCurve(tuple(sorted(permute_vector(v, perm) for v in c.vectors)), c.ambient)


def symmetric_group(n: int) -> list[tuple[int, ...]]:
    return list(permutations(range(n)))


def canonical_form(c: TropicalCurve, group: Iterable[Sequence[int]] | None = None) -> TropicalCurve:
    """Lexicographically least sorted vector list over the orbit of ``group``."""
    if group is None:
        group = symmetric_group(c.ambient)
    best = min(tuple(sorted(permute_vector(v, g) for v in c.vectors)) for g in group)
    return TropicalCurve(best, c.ambient)


def rank1_flats_curve(m: Matroid) -> TropicalCurve:
    n = len(m.ground)
    vs = [tuple(int(i in f) for i in range(n)) for f in m.flats_of_rank(1)]
    return curve_from_vectors(vs, n)
