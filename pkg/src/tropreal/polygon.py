"""Lattice polygons inside the dilated simplex, in exact integer arithmetic.

A point ``(i, j)`` stands for the monomial whose first two exponents are
``i`` and ``j``; the third exponent is ``d - i - j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Counterclockwise extreme points, starting at the lexicographic minimum."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return tuple(hull)


@dataclass(frozen=True)
class NewtonPolygon:
    degree: int
    vertices: tuple  # counterclockwise, starting at the lexicographic minimum

    @classmethod
    def from_points(cls, degree: int, points) -> "NewtonPolygon":
        return cls(degree, convex_hull(points))

    @property
    def dim(self) -> int:
        return min(len(self.vertices), 3) - 1

    def contains(self, pt) -> bool:
        vs = self.vertices
        if not vs:
            return False
        if len(vs) == 1:
            return tuple(pt) == vs[0]
        if len(vs) == 2:
            a, b = vs
            if _cross(a, b, pt):
                return False
            return min(a[0], b[0]) <= pt[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= pt[1] <= max(a[1], b[1])
        n = len(vs)
        return all(_cross(vs[k], vs[(k + 1) % n], pt) >= 0 for k in range(n))

    def lattice_points(self) -> list[tuple[int, int]]:
        d = self.degree
        return [(i, j) for i in range(d + 1) for j in range(d + 1 - i) if self.contains((i, j))]

    def meets_all_sides(self) -> bool:
        d = self.degree
        vs = self.vertices
        return (
            any(v[0] == 0 for v in vs)
            and any(v[1] == 0 for v in vs)
            and any(v[0] + v[1] == d for v in vs)
        )

    def inside_simplex(self) -> bool:
        d = self.degree
        return all(v[0] >= 0 and v[1] >= 0 and v[0] + v[1] <= d for v in self.vertices)


def polygon_contains(p: NewtonPolygon, pt) -> bool:
    return p.contains(pt)
