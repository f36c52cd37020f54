"""Linear-algebra oracle over GF(p)."""

from .check import Check, OracleReport, check_equalities
from .gfp import BACKEND
from .reps import (
    LinearRep,
    algebra_dimension,
    cover_and_kernel,
    linear_resolution,
    pd_linear,
    rep_of_injective,
    rep_of_projective,
    rep_of_simple,
    rep_of_string,
)

__all__ = [
    "BACKEND",
    "Check",
    "OracleReport",
    "check_equalities",
    "LinearRep",
    "algebra_dimension",
    "cover_and_kernel",
    "linear_resolution",
    "pd_linear",
    "rep_of_injective",
    "rep_of_projective",
    "rep_of_simple",
    "rep_of_string",
]
