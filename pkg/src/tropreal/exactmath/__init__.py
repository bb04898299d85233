"""Exact arithmetic over Q and F_p and dense exact linear algebra."""

from ._backend import BACKEND
from .field import GF, QQ, Field, FieldElement
from .matrix import (
    ExactMatrix,
    kernel_from_rref,
    mat_kernel,
    mat_rank,
    mat_solve,
    reduce_rows,
)

__all__ = [
    "BACKEND",
    "GF",
    "QQ",
    "ExactMatrix",
    "Field",
    "FieldElement",
    "kernel_from_rref",
    "mat_kernel",
    "mat_rank",
    "mat_solve",
    "reduce_rows",
]
