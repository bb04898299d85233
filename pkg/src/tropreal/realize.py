"""Deciding relative realizability of tropical curves in a tropical plane.

A degree-``d`` curve in the plane is cut out by a form ``f`` in the variables
of a reference basis ``B``.  For every basis ``A`` the coefficients of the
rewritten form ``f_A`` are linear in those of ``f``, and ``f`` realizes ``C``
exactly when each ``Newt(f_A)`` equals the Newton polygon of the projection of
``C`` to ``A``.  That is a system of linear equations (coefficients outside
the polygon vanish) and inequations (vertex coefficients do not).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import count, product
from math import gcd
from typing import Iterator, Sequence

from .errors import CharNotZero, DegreeMismatch, InvariantViolation, NotRealizable
from .exactmath import ExactMatrix, mat_kernel
from .matroid import PlaneIdeal, eliminate, plane_symmetries
from .poly import HomoPoly, monomials, substitution_expand
from .polygon import NewtonPolygon
from .tropcurve import (
    TropicalCurve,
    canonical_form,
    curve_from_vectors,
    decompositions,
    newton_polygon,
    primitive,
    project,
    rank1_flats_curve,
    validate_in_fan,
)


class Status(Enum):
    EMPTY = "empty"
    NONEMPTY = "nonempty"


@dataclass(frozen=True)
class RealizationResult:
    status: Status
    proj_dim: int
    solution_basis: tuple  # kernel vectors of the equality system
    vertex_functionals: tuple  # rows that must not vanish on the solution
    reference_basis: tuple
    degree: int
    witness: HomoPoly | None = field(default=None, compare=False)

    @property
    def nonempty(self) -> bool:
        return self.status is Status.NONEMPTY


def _reference_basis(plane: PlaneIdeal, reference=None) -> tuple:
    if reference is None:
        return plane.matroid.bases[0]
    return tuple(sorted(reference))


def _constraints(plane: PlaneIdeal, c: TropicalCurve, ref: tuple):
    d = c.degree
    mons = monomials(d)
    eqs: dict = {}
    funcs: dict = {}
    for a in plane.matroid.bases:
        poly = newton_polygon(project(c, a))
        verts = set(poly.vertices)
        m_a = substitution_expand(eliminate(plane, ref, a), d)
        for t, e in enumerate(mons):
            pt = (e[0], e[1])
            row = m_a.entries[t]
            if pt in verts:
                funcs.setdefault(row, None)
            elif not poly.contains(pt) and any(row):
                eqs.setdefault(row, None)
    return list(eqs), list(funcs)


def _nonvanishing(f, functional, kernel) -> bool:
    return any(_dot(f, functional, k) for k in kernel)


def _dot(f, a, b):
    s = sum(x * y for x, y in zip(a, b))
    return s % f.char if f.char else s


def realization_space(plane: PlaneIdeal, c: TropicalCurve, reference=None) -> RealizationResult:
    """Solve the linear (in)equation system describing all realizations of ``c``."""
    validate_in_fan(c, plane.matroid)
    ref = _reference_basis(plane, reference)
    d = c.degree
    n = len(monomials(d))
    eqs, funcs = _constraints(plane, c, ref)
    fld = plane.field
    if eqs:
        kernel = mat_kernel(ExactMatrix(len(eqs), n, tuple(eqs), fld))
    else:
        kernel = [tuple(fld.convert(int(i == j)) for j in range(n)) for i in range(n)]
    ok = bool(kernel) and all(_nonvanishing(fld, phi, kernel) for phi in funcs)
    status = Status.NONEMPTY if ok else Status.EMPTY
    return RealizationResult(
        status,
        len(kernel) - 1 if ok else -1,
        tuple(tuple(k) for k in kernel),
        tuple(funcs),
        ref,
        d,
    )


def realization_dim(plane: PlaneIdeal, c: TropicalCurve) -> int:
    return realization_space(plane, c).proj_dim


def _signed_values() -> Iterator[int]:
    for k in count(1):
        yield k
        yield -k


def _combinations(k: int) -> Iterator[tuple[int, ...]]:
    """Nonzero integer tuples of length ``k`` by increasing max-abs, deterministic."""
    for r in count(1):
        vals = [v for pair in ((i, -i) for i in range(1, r + 1)) for v in pair]
        for t in product(vals, repeat=k):
            if max(abs(x) for x in t) == r:
                yield t


def _primitive_int(vec) -> list[int]:
    from math import lcm

    den = 1
    for x in vec:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return [-x for x in ints] if lead < 0 else ints


def realization_poly(plane: PlaneIdeal, c: TropicalCurve) -> tuple[int, HomoPoly]:
    """Realization dimension and a witness with small integer coefficients."""
    if plane.characteristic != 0:
        raise CharNotZero("explicit witnesses are only produced in characteristic 0")
    res = realization_space(plane, c)
    if not res.nonempty:
        raise NotRealizable("the realization space is empty")
    fld = plane.field
    kernel = res.solution_basis
    for t in _combinations(len(kernel)):
        vec = [sum(ti * k[j] for ti, k in zip(t, kernel)) for j in range(len(kernel[0]))]
        if not any(vec):
            continue
        if all(_dot(fld, phi, vec) for phi in res.vertex_functionals):
            f = HomoPoly.from_vector(res.degree, res.reference_basis, _primitive_int(vec), fld)
            if not tropicalizes_to(plane, f, c):
                raise InvariantViolation(f"witness {f} fails the projection test")
            return res.proj_dim, f
    raise AssertionError("unreachable")  # pragma: no cover


def plane_newton_polygons(plane: PlaneIdeal, f: HomoPoly) -> dict[tuple, NewtonPolygon]:
    """Newton polygon of ``f_A`` for every basis ``A``."""
    vec = f.coefficient_vector()
    mons = monomials(f.degree)
    out = {}
    for a in plane.matroid.bases:
        img = substitution_expand(eliminate(plane, f.variables, a), f.degree) @ vec
        pts = [(e[0], e[1]) for e, x in zip(mons, img) if x]
        out[a] = NewtonPolygon.from_points(f.degree, pts)
    return out


def tropicalizes_to(plane: PlaneIdeal, f: HomoPoly, c: TropicalCurve) -> bool:
    """Whether the curve cut out by ``f`` in the plane tropicalizes to ``c``."""
    if f.degree != c.degree:
        raise DegreeMismatch(f"polynomial has degree {f.degree}, curve has degree {c.degree}")
    validate_in_fan(c, plane.matroid)
    for a, poly in plane_newton_polygons(plane, f).items():
        if poly != newton_polygon(project(c, a)):
            return False
    return True


class RealizationCache:
    """Realization dimensions memoized up to the coordinate symmetries of the plane."""

    def __init__(self, plane: PlaneIdeal):
        self.plane = plane
        self.group = plane_symmetries(plane)
        self._dims: dict = {}

    def key(self, c: TropicalCurve) -> tuple:
        if len(self.group) == 1:
            return c.vectors
        return canonical_form(c, self.group).vectors

    def dim(self, c: TropicalCurve) -> int:
        k = self.key(c)
        hit = self._dims.get(k)
        if hit is None:
            hit = self._dims[k] = realization_dim(self.plane, c)
        return hit


def irr_realization_dim(plane: PlaneIdeal, c: TropicalCurve, cache: RealizationCache | None = None) -> int:
    """Dimension of the irreducible realizations, or -1 if there are none.

    Realizations of ``D1`` and ``D2`` add up to a closed subset of dimension
    ``m1 + m2`` in the realization space of ``C``; if it fills the space, no
    irreducible curve exists.
    """
    cache = cache or RealizationCache(plane)
    m = cache.dim(c)
    if m < 0:
        return -1
    for d1, d2 in decompositions(c):
        m1 = cache.dim(d1)
        if m1 < 0:
            continue
        m2 = cache.dim(d2)
        if m2 < 0:
            continue
        if m1 + m2 == m:
            return -1
        if m1 + m2 > m:
            raise InvariantViolation(
                f"decomposition {d1.vectors} + {d2.vectors} has dimensions {m1}+{m2} > {m}"
            )
    return m


# -- constructive realization by signed cycles -----------------------------

@dataclass(frozen=True)
class CyclePiece:
    sign: int
    mult: int
    poly: HomoPoly
    curve: TropicalCurve


def _generic_constants(attempt: int, k: int) -> list[int]:
    seq = [1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
           71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149]
    return seq[attempt:attempt + k]


_MAX_RETRIES = 32


def _one_ray_poly(plane, chain, d: int) -> Iterator[HomoPoly]:
    """Candidates ``c0 x_g^d + c1 x_k1^d + c2 x_g^b x_k2^(d-b) + c3 x_k1^a x_k2^(d-a)``."""
    m = plane.matroid
    g2 = chain.g2
    g1 = chain.g1 if chain.g1 is not None else next(f for f in m.flats_of_rank(1) if f <= g2)
    a, b = chain.alpha + chain.beta, chain.beta
    g = min(g1)
    k1 = min(g2 - g1)
    k2 = min(set(m.ground) - g2)
    basis = tuple(sorted((g, k1, k2)))
    pos = {v: basis.index(v) for v in (g, k1, k2)}

    def mono(parts):
        e = [0, 0, 0]
        for var, k in parts:
            e[pos[var]] += k
        return tuple(e)

    shape = [mono([(g, d)]), mono([(k1, d)]), mono([(g, b), (k2, d - b)]), mono([(k1, a), (k2, d - a)])]
    for attempt in range(_MAX_RETRIES):
        consts = _generic_constants(attempt, 4)
        coeffs: dict = {}
        for e, cst in zip(shape, consts):
            coeffs[e] = coeffs.get(e, 0) + cst
        yield HomoPoly.from_map(d, basis, coeffs, plane.field)


def _linear_forms(plane) -> Iterator[HomoPoly]:
    basis = plane.matroid.bases[0]
    for attempt in range(_MAX_RETRIES):
        yield HomoPoly.from_vector(1, basis, _generic_constants(attempt, 3), plane.field)


def _first_valid(plane, cands, curve) -> HomoPoly:
    for f in cands:
        if tropicalizes_to(plane, f, curve):
            return f
    raise InvariantViolation(f"no generic constants realize {curve.vectors} within {_MAX_RETRIES} tries")


def realize_as_cycle(plane: PlaneIdeal, c: TropicalCurve) -> list[CyclePiece]:
    """Write ``c`` as a signed sum of tropicalizations of explicit curves."""
    if plane.characteristic != 0:
        raise CharNotZero("generic constants are chosen over Q")
    m = plane.matroid
    validate_in_fan(c, m)
    flats = m.flats_of_rank(1)
    flat_vec = [tuple(int(i in f) for i in m.ground) for f in flats]
    remainder = [c.mult_of(v) for v in flat_vec]
    pieces = []
    for v in c.vectors:
        if primitive(v) in flat_vec:
            continue
        chain = m.contains_ray(v)
        a = [chain.alpha * (f == chain.g1) + chain.beta * (f <= chain.g2) for f in flats]
        dv = max(a) + 1
        dcurve = curve_from_vectors([v] + [tuple((dv - ai) * x for x in fv) for ai, fv in zip(a, flat_vec)])
        poly = _first_valid(plane, _one_ray_poly(plane, chain, dv), dcurve)
        pieces.append(CyclePiece(1, 1, poly, dcurve))
        remainder = [r - (dv - ai) for r, ai in zip(remainder, a)]
    if len(set(remainder)) != 1:
        raise InvariantViolation(f"remainder {remainder} is not a multiple of the rank-1 flats curve")
    lam = remainder[0]
    if lam:
        dcurve = rank1_flats_curve(m)
        poly = _first_valid(plane, _linear_forms(plane), dcurve)
        pieces.append(CyclePiece(1 if lam > 0 else -1, abs(lam), poly, dcurve))
    return pieces


def cycle_vectors(pieces: Sequence[CyclePiece]) -> dict[tuple, int]:
    """Signed sum of the pieces, as primitive ray -> multiplicity (zeros dropped)."""
    acc: dict = {}
    for p in pieces:
        for v in p.curve.vectors:
            u = primitive(v)
            mult = gcd(*v)
            acc[u] = acc.get(u, 0) + p.sign * p.mult * mult
    return {u: k for u, k in acc.items() if k}
