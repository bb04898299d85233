"""Relative realizability of tropical curves in tropical planes."""

from .census import enumerate_curves, run_census
from .criteria32 import run_all
from .matroid import plane_from_forms
from .realize import (
    irr_realization_dim,
    realization_dim,
    realization_poly,
    realization_space,
    realize_as_cycle,
    tropicalizes_to,
)
from .tropcurve import curve_from_vectors

__version__ = "0.1.0"

__all__ = [
    "curve_from_vectors",
    "enumerate_curves",
    "irr_realization_dim",
    "plane_from_forms",
    "realization_dim",
    "realization_poly",
    "realization_space",
    "realize_as_cycle",
    "run_all",
    "run_census",
    "tropicalizes_to",
]
