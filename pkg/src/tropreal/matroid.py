"""Planes in a torus, their matroids and Bergman fans.

A plane is given by ``n - 2`` independent linear forms in ``x0..xn``.  Its
matroid is the column matroid of a 3 x (n+1) matrix ``Q`` whose rows span the
common zero set of the forms; the Bergman fan of that matroid is the
tropicalization of the plane.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import NamedTuple, Sequence

from .errors import LoopyMatroid, NotABasis, RankDeficient
from .exactmath import ExactMatrix, Field, mat_kernel, mat_rank, mat_solve


@dataclass(frozen=True)
class PlaneIdeal:
    n_plus_1: int
    characteristic: int
    forms: ExactMatrix

    @property
    def field(self) -> Field:
        return self.forms.field

    def as_int_rows(self) -> list[list[int]]:
        """Forms with entries lifted back to integers (F_p residues as is)."""
        return [[int(x) for x in row] for row in self.forms.entries]

    @cached_property
    def matroid(self) -> "Matroid":
        return matroid_of(self)


def plane_from_forms(coeffs: Sequence[Sequence[int]], characteristic: int = 0) -> PlaneIdeal:
    """Validate integer linear forms and build the plane they cut out."""
    rows = [list(r) for r in coeffs]
    if not rows:
        raise RankDeficient("need at least one linear form (n >= 3)")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("linear forms have different lengths")
    if width < 4 or len(rows) != width - 3:
        raise RankDeficient(f"expected n-2 forms in n+1 variables, got {len(rows)} forms in {width}")
    fld = Field(characteristic)
    forms = ExactMatrix.from_rows(rows, fld)
    if mat_rank(forms) != len(rows):
        raise RankDeficient(f"the linear forms are dependent over {fld}")
    plane = PlaneIdeal(width, characteristic, forms)
    q = _q_matrix(forms)
    for j in range(width):
        if not any(q.entries[i][j] for i in range(3)):
            raise LoopyMatroid(f"x{j} vanishes identically on the plane")
    return plane


def _q_matrix(forms: ExactMatrix) -> ExactMatrix:
    return ExactMatrix.from_rows(mat_kernel(forms), forms.field, ncols=forms.ncols)


class RayChain(NamedTuple):
    """``v = alpha * v_{g1} + beta * v_{g2}`` for a chain of flats ``g1 < g2``.

    ``g2`` is None (and ``beta`` 0) on rays of rank-1 flats, ``g1`` is None
    (and ``alpha`` 0) on rays of rank-2 flats.
    """

    g1: frozenset | None
    g2: frozenset | None
    alpha: int
    beta: int


@dataclass(frozen=True)
class Matroid:
    ground: tuple
    q_matrix: ExactMatrix
    _rank_cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def rank(self, subset) -> int:
        key = frozenset(subset)
        r = self._rank_cache.get(key)
        if r is None:
            r = mat_rank(self.q_matrix.columns(sorted(key))) if key else 0
            self._rank_cache[key] = r
        return r

    def closure(self, subset) -> frozenset:
        s = frozenset(subset)
        r = self.rank(s)
        return frozenset(i for i in self.ground if i in s or self.rank(s | {i}) == r)

    @cached_property
    def bases(self) -> list[tuple[int, int, int]]:
        return [b for b in combinations(self.ground, 3) if self.rank(b) == 3]

    @cached_property
    def _flats(self) -> dict[int, list[frozenset]]:
        rank1 = {self.closure({i}) for i in self.ground}
        rank2 = {self.closure(pair) for pair in combinations(self.ground, 2) if self.rank(pair) == 2}
        key = lambda f: sorted(f)  # noqa: E731
        return {1: sorted(rank1, key=key), 2: sorted(rank2, key=key)}

    def flats_of_rank(self, r: int) -> list[frozenset]:
        if r not in (1, 2):
            raise ValueError("only rank-1 and rank-2 flats are proper nonempty flats here")
        return list(self._flats[r])

    def is_flat(self, s: frozenset, r: int) -> bool:
        return s in set(self._flats[r])

    def chains(self) -> list[tuple[frozenset, frozenset]]:
        """Maximal chains (G1, G2): the two-dimensional cones of the fan."""
        return [
            (g1, g2)
            for g1 in self._flats[1]
            for g2 in self._flats[2]
            if g1 < g2
        ]

    def contains_ray(self, v: Sequence[int]) -> RayChain | None:
        """Locate ``[v]`` in the Bergman fan, or None if it lies outside.

        ``v`` must be normalized (minimum coordinate 0, not constant).  The
        vector takes value ``alpha + beta`` on G1, ``beta`` on G2 minus G1 and
        0 elsewhere, so the chain is read off from its level sets; this gives
        the unique smallest cone containing ``[v]`` in its relative interior.
        """
        levels = sorted({x for x in v if x > 0}, reverse=True)
        if not levels or len(levels) > 2 or min(v) != 0:
            return None
        if len(levels) == 1:
            s = frozenset(i for i, x in enumerate(v) if x)
            if self.is_flat(s, 1):
                return RayChain(s, None, levels[0], 0)
            if self.is_flat(s, 2):
                return RayChain(None, s, 0, levels[0])
            return None
        hi, lo = levels
        s1 = frozenset(i for i, x in enumerate(v) if x == hi)
        s2 = frozenset(i for i, x in enumerate(v) if x > 0)
        if self.is_flat(s1, 1) and self.is_flat(s2, 2):
            return RayChain(s1, s2, hi - lo, lo)
        return None

    def is_basis(self, subset) -> bool:
        s = tuple(sorted(subset))
        return len(s) == 3 and len(set(s)) == 3 and self.rank(s) == 3


def matroid_of(plane: PlaneIdeal) -> Matroid:
    return Matroid(tuple(range(plane.n_plus_1)), _q_matrix(plane.forms))


def bases(m: Matroid) -> list[tuple[int, int, int]]:
    return list(m.bases)


def flats_of_rank(m: Matroid, r: int) -> list[frozenset]:
    return m.flats_of_rank(r)


def closure(m: Matroid, s) -> frozenset:
    return m.closure(s)


def contains_ray(m: Matroid, v: Sequence[int]) -> RayChain | None:
    return m.contains_ray(v)


def eliminate(plane: PlaneIdeal, from_basis, to_basis) -> ExactMatrix:
    """Substitution ``x_b = sum_a c[b][a] x_a (mod L)``.

    Rows follow ``from_basis`` and columns ``to_basis``, both in ascending
    index order.
    """
    m = plane.matroid
    src, dst = tuple(sorted(from_basis)), tuple(sorted(to_basis))
    for b in (src, dst):
        if not m.is_basis(b):
            raise NotABasis(f"{b} is not a basis of the matroid")
    return _eliminate_cached(plane, src, dst)


_ELIM_CACHE: dict = {}


def _eliminate_cached(plane, src, dst):
    key = (plane, src, dst)
    hit = _ELIM_CACHE.get(key)
    if hit is not None:
        return hit
    q = plane.matroid.q_matrix
    qa = q.columns(dst)
    rows = []
    for b in src:
        sol = mat_solve(qa, q.column(b))
        if sol is None:  # pragma: no cover - dst is a basis
            raise NotABasis(f"{dst} does not span column {b}")
        rows.append(sol)
    res = ExactMatrix.from_rows(rows, plane.field)
    _ELIM_CACHE[key] = res
    return res


def express_in_basis(plane: PlaneIdeal, basis) -> ExactMatrix:
    """Row ``i`` writes ``x_i`` modulo L as a combination of the basis variables."""
    m = plane.matroid
    dst = tuple(sorted(basis))
    if not m.is_basis(dst):
        raise NotABasis(f"{dst} is not a basis of the matroid")
    q = m.q_matrix
    qa = q.columns(dst)
    return ExactMatrix.from_rows([mat_solve(qa, q.column(i)) for i in m.ground], plane.field)


def plane_symmetries(plane: PlaneIdeal) -> list[tuple[int, ...]]:
    """Coordinate permutations mapping the plane to itself (always holds the identity)."""
    rows = plane.forms.entries
    r = len(rows)
    out = []
    for g in permutations(range(plane.n_plus_1)):
        moved = [tuple(row[g[i]] for i in range(plane.n_plus_1)) for row in rows]
        stacked = ExactMatrix(2 * r, plane.n_plus_1, tuple(rows) + tuple(moved), plane.field)
        if mat_rank(stacked) == r:
            out.append(g)
    return out
