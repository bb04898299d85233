"""Homogeneous polynomials in three basis variables and their text form.

Coefficient vectors are indexed by ``monomials(d)``: exponent triples in
lexicographically descending order, ``(d,0,0), (d-1,1,0), (d-1,0,1), ...``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import PolyParseError
from .exactmath import QQ, ExactMatrix, Field

Exp = tuple  # exponent tuple


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple[Exp, ...]:
    return tuple((i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(d: int) -> dict[Exp, int]:
    return {e: k for k, e in enumerate(monomials(d))}


# -- sparse polynomial arithmetic over a Field ------------------------------

def _mul(f: Field, a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = f.add(out.get(e, f.zero()), f.mul(ca, cb))
    return {e: c for e, c in out.items() if c}


def _pow(f: Field, a: dict, k: int, nvars: int) -> dict:
    out = {(0,) * nvars: f.one()}
    for _ in range(k):
        out = _mul(f, out, a)
    return out


def _substitute(f: Field, terms: Mapping[Exp, object], rows: Sequence[Sequence], nvars: int) -> dict:
    """Replace variable ``r`` by the linear form ``rows[r]`` in ``nvars`` new variables."""
    linear = []
    for row in rows:
        linear.append({tuple(int(k == c) for k in range(nvars)): x for c, x in enumerate(row) if x})
    powers: dict = {}
    out: dict = {}
    for exp, coef in terms.items():
        acc = {(0,) * nvars: coef}
        for r, e in enumerate(exp):
            if e:
                key = (r, e)
                if key not in powers:
                    powers[key] = _pow(f, linear[r], e, nvars)
                acc = _mul(f, acc, powers[key])
        for e, c in acc.items():
            out[e] = f.add(out.get(e, f.zero()), c)
    return {e: c for e, c in out.items() if c}


_EXPAND_CACHE: dict = {}


def substitution_expand(sub: ExactMatrix, d: int) -> ExactMatrix:
    """Transfer matrix of degree-``d`` coefficients under a linear substitution.

    ``sub`` row ``r`` writes source variable ``r`` in the target variables.
    Column ``s`` of the result holds the expansion of source monomial ``s``.
    """
    key = (sub.entries, sub.field, d)
    hit = _EXPAND_CACHE.get(key)
    if hit is not None:
        return hit
    f = sub.field
    mons = monomials(d)
    idx = monomial_index(d)
    cols = []
    for e in mons:
        img = _substitute(f, {e: f.one()}, sub.entries, 3)
        col = [f.zero()] * len(mons)
        for t, c in img.items():
            col[idx[t]] = c
        cols.append(col)
    res = ExactMatrix(len(mons), len(mons), tuple(zip(*cols)), f)
    _EXPAND_CACHE[key] = res
    return res


# -- homogeneous polynomials in a basis ------------------------------------

@dataclass(frozen=True)
class HomoPoly:
    degree: int
    variables: tuple  # a basis of the matroid, ascending
    coeffs: tuple  # nonzero (exponent triple, raw value) pairs in monomials() order
    field: Field = QQ

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial is not allowed")
        if any(sum(e) != self.degree for e, _ in self.coeffs):
            raise ValueError("polynomial is not homogeneous of the stated degree")

    @classmethod
    def from_vector(cls, d: int, variables, vec: Sequence, field: Field = QQ) -> "HomoPoly":
        pairs = tuple((e, field.convert(c)) for e, c in zip(monomials(d), vec) if c)
        return cls(d, tuple(variables), pairs, field)

    @classmethod
    def from_map(cls, d: int, variables, coeffs: Mapping[Exp, object], field: Field = QQ) -> "HomoPoly":
        idx = monomial_index(d)
        vec = [0] * len(idx)
        for e, c in coeffs.items():
            vec[idx[tuple(e)]] = c
        return cls.from_vector(d, variables, vec, field)

    def coefficient_vector(self) -> list:
        idx = monomial_index(self.degree)
        vec = [self.field.zero()] * len(idx)
        for e, c in self.coeffs:
            vec[idx[e]] = c
        return vec

    def coeff_map(self) -> dict:
        return dict(self.coeffs)

    def support(self) -> list[Exp]:
        return [e for e, _ in self.coeffs]

    def to_text(self) -> str:
        names = [f"x{v}" for v in self.variables]
        return format_terms(dict(self.coeffs), names)

    __str__ = to_text


# -- text form -------------------------------------------------------------

def _format_coef(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _term_order(e: Exp):
    # degree-reverse-lexicographic, largest monomial first
    return (-sum(e), tuple(reversed(e)))


def format_terms(terms: Mapping[Exp, object], names: Sequence[str]) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, key=_term_order):
        c = Fraction(terms[e])
        factors = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not factors:
            body = _format_coef(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coef(mag) + "*" + "*".join(factors)
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|([-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolyParseError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos}")
        num, var, op = m.groups()
        out.append(("num", num) if num else ("var", var) if var is not None else ("op", op))
        pos = m.end()
    return out


class _Parser:
    """Recursive descent over ``+ - * ^ ( )``, integer and ``p/q`` literals, ``x<i>``."""

    def __init__(self, tokens, nvars):
        self.toks, self.i, self.n = tokens, 0, nvars

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise PolyParseError(f"expected {val or kind}, found {tok[1] or 'end of input'}")
        self.i += 1
        return tok

    def const(self, c) -> dict:
        return {(0,) * self.n: c} if c else {}

    def expr(self) -> dict:
        acc: dict = {}
        first = True
        while True:
            tok = self.peek()
            sign = 1
            if tok == ("op", "+") or tok == ("op", "-"):
                self.i += 1
                sign = -1 if tok[1] == "-" else 1
            elif not first:
                return acc
            t = self.term()
            for e, c in t.items():
                acc[e] = acc.get(e, 0) + sign * c
            acc = {e: c for e, c in acc.items() if c}
            first = False

    def term(self) -> dict:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.i += 1
            elif not (tok[0] == "var" or tok == ("op", "(")):
                return acc
            acc = _mul(QQ, acc, self.power())

    def power(self) -> dict:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.i += 1
            k = int(self.take("num")[1])
            base = _pow(QQ, base, k, self.n)
        return base

    def atom(self) -> dict:
        kind, val = self.peek()
        if kind == "num":
            self.i += 1
            c = Fraction(int(val))
            if self.peek() == ("op", "/"):
                self.i += 1
                den = int(self.take("num")[1])
                if den == 0:
                    raise PolyParseError("zero denominator")
                c /= den
            return self.const(c)
        if kind == "var":
            self.i += 1
            return {tuple(int(k == int(val)) for k in range(self.n)): Fraction(1)}
        if (kind, val) == ("op", "("):
            self.i += 1
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise PolyParseError(f"unexpected {val or 'end of input'}")


def parse_poly(text: str) -> tuple[int, dict]:
    """Parse to ``(nvars, {exponent tuple over x0..x_{nvars-1}: Fraction})``."""
    toks = _tokenize(text)
    if not toks:
        raise PolyParseError("empty polynomial")
    nvars = max((int(v) for k, v in toks if k == "var"), default=-1) + 1
    p = _Parser(toks, nvars)
    terms = p.expr()
    if p.i != len(toks):
        raise PolyParseError(f"trailing input at token {toks[p.i][1]!r}")
    return nvars, terms


def format_poly(terms: Mapping[Exp, object], nvars: int | None = None) -> str:
    if nvars is None:
        nvars = len(next(iter(terms))) if terms else 0
    return format_terms(terms, [f"x{i}" for i in range(nvars)])


def homo_poly_from_terms(plane, nvars: int, terms: Mapping[Exp, object], basis=None) -> HomoPoly:
    """Reduce a polynomial in ``x0..xn`` modulo the plane to a basis.

    Without an explicit basis, the lexicographically least basis holding all
    variables that occur is used, or the least basis overall.
    """
    from .matroid import express_in_basis

    f = plane.field
    n1 = plane.n_plus_1
    if nvars > n1:
        raise PolyParseError(f"variable x{nvars - 1} does not exist in {n1} coordinates")
    terms = {tuple(e) + (0,) * (n1 - len(e)): f.convert(c) for e, c in terms.items()}
    terms = {e: c for e, c in terms.items() if c}
    if not terms:
        raise PolyParseError("the polynomial is zero")
    degs = {sum(e) for e in terms}
    if len(degs) != 1:
        raise PolyParseError("the polynomial is not homogeneous")
    (d,) = degs
    m = plane.matroid
    if basis is None:
        used = {i for e in terms for i, k in enumerate(e) if k}
        cands = [b for b in m.bases if used <= set(b)]
        basis = cands[0] if cands else m.bases[0]
    basis = tuple(sorted(basis))
    rows = express_in_basis(plane, basis).entries
    red = _substitute(f, terms, rows, 3)
    if not red:
        raise PolyParseError("the polynomial vanishes on the plane")
    return HomoPoly.from_map(d, basis, red, f)


def homo_poly_from_text(plane, text: str, basis=None) -> HomoPoly:
    nvars, terms = parse_poly(text)
    return homo_poly_from_terms(plane, nvars, terms, basis)
