"""Command-line front end.

Problem files are JSON documents::

    {"characteristic": 0, "linear_forms": [[1, 1, 1, 1]], "curve": [[2, 2, 0, 0], [0, 0, 2, 2]]}

Exit status is 0 for an answer (including -1, "not realizable"), 2 for invalid
input and 3 for a failed internal consistency check.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .census import enumerate_curves, run_census
from .criteria32 import run_all
from .errors import InvariantViolation, TropRealError
from .matroid import PlaneIdeal, plane_from_forms
from .poly import homo_poly_from_text
from .realize import RealizationCache, irr_realization_dim, realization_dim, realization_poly, tropicalizes_to
from .tropcurve import TropicalCurve, curve_from_vectors, validate_in_fan


class ProblemFileError(TropRealError):
    pass


@dataclass(frozen=True)
class ProblemFile:
    characteristic: int
    linear_forms: tuple
    curve: tuple

    @classmethod
    def from_json(cls, doc: dict) -> "ProblemFile":
        try:
            pf = cls(
                int(doc.get("characteristic", 0)),
                tuple(tuple(int(x) for x in row) for row in doc["linear_forms"]),
                tuple(tuple(int(x) for x in v) for v in doc["curve"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ProblemFileError(f"malformed problem file: {exc!r}") from None
        pf.build()  # validate on load
        return pf

    @classmethod
    def load(cls, path: str) -> "ProblemFile":
        try:
            with open(path) as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise ProblemFileError(f"cannot read {path}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise ProblemFileError(f"{path} is not valid JSON: {exc}") from None
        return cls.from_json(doc)

    def to_json(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "linear_forms": [list(r) for r in self.linear_forms],
            "curve": [list(v) for v in self.curve],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def build(self) -> tuple[PlaneIdeal, TropicalCurve]:
        plane = plane_from_forms(self.linear_forms, self.characteristic)
        curve = curve_from_vectors(self.curve, plane.n_plus_1)
        validate_in_fan(curve, plane.matroid)
        return plane, curve


def _is_symmetric_plane(pf: ProblemFile) -> bool:
    if len(pf.linear_forms) != 1 or len(pf.linear_forms[0]) != 4:
        return False
    row = pf.linear_forms[0]
    return len(set(row)) == 1 and row[0] != 0 and (pf.characteristic == 0 or row[0] % pf.characteristic)


def cmd_dim(args) -> int:
    plane, curve = ProblemFile.load(args.file).build()
    print(realization_dim(plane, curve))
    return 0


def cmd_irr(args) -> int:
    plane, curve = ProblemFile.load(args.file).build()
    print(irr_realization_dim(plane, curve, RealizationCache(plane)))
    return 0


def cmd_poly(args) -> int:
    plane, curve = ProblemFile.load(args.file).build()
    if realization_dim(plane, curve) < 0:
        print(-1)
        return 0
    dim, f = realization_poly(plane, curve)
    print(dim)
    print(f.to_text())
    return 0


def cmd_check(args) -> int:
    plane, curve = ProblemFile.load(args.file).build()
    f = homo_poly_from_text(plane, args.poly)
    print("true" if tropicalizes_to(plane, f, curve) else "false")
    return 0


def cmd_obstructions(args) -> int:
    pf = ProblemFile.load(args.file)
    if not _is_symmetric_plane(pf):
        raise ProblemFileError("obstruction criteria need the plane x0+x1+x2+x3 = 0")
    _, curve = pf.build()
    report = run_all(curve, pf.characteristic)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
        return 0
    for v in report.verdicts:
        extra = ""
        if v.labeling is not None:
            extra += f" labeling={list(v.labeling)}"
        if v.data:
            extra += " " + " ".join(f"{k}={v.data[k]}" for k in sorted(v.data))
        print(f"{v.criterion}: {v.outcome.value}{extra}")
    return 0


def _fmt_curve(c: TropicalCurve) -> str:
    return "{" + ",".join("(" + ",".join(map(str, v)) + ")" for v in c.vectors) + "}"


def cmd_enumerate(args) -> int:
    curves = enumerate_curves(args.degree)
    if args.format == "json":
        print(json.dumps({"degree": args.degree, "classes": [[list(v) for v in c.vectors] for c in curves]}))
    else:
        for c in curves:
            print(_fmt_curve(c))
        print(f"{len(curves)} classes")
    return 0


def cmd_census(args) -> int:
    report = run_census(args.degree, args.char, with_irr=args.irr, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
        return 0
    s = report.summary()
    print(f"{s['classes']} classes, {s['non_realizable']} non-realizable")
    print(f"flagged by an obstruction: {s['flagged']}; undetected: {s['undetected']}; "
          f"not flagged by intprod: {s['not_flagged_by_intprod']}")
    if "irreducibly_realizable" in s:
        print(f"irreducibly realizable: {s['irreducibly_realizable']}")
    for r in report.non_realizable():
        fired = ",".join(r.obstructions.firing()) or "-"
        print(f"  {_fmt_curve(r.curve)}  [{fired}]")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropreal", description="Realizability of tropical curves in tropical planes.")
    sub = p.add_subparsers(dest="verb", required=True)

    for name, fn, helptext in (
        ("dim", cmd_dim, "realization dimension (-1 if not realizable)"),
        ("irr", cmd_irr, "dimension of irreducible realizations (-1 if none)"),
        ("poly", cmd_poly, "dimension and a witness polynomial (characteristic 0)"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("check", help="does a polynomial tropicalize to the curve?")
    sp.add_argument("file")
    sp.add_argument("--poly", required=True, help="e.g. 'x0^2+2*x0*x1+x1^2'")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("obstructions", help="closed-form obstructions in L^3_2")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_obstructions)

    sp = sub.add_parser("enumerate", help="curve classes of a degree in L^3_2")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("census", help="realizability census in L^3_2")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--char", type=int, default=0)
    sp.add_argument("--irr", action="store_true", help="also compute irreducible dimensions")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_census)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TropRealError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


__all__ = ["ProblemFile", "build_parser", "main"]
