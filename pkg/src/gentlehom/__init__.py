"""Homological invariants of gentle algebras.

The main entry points are re-exported here; see the submodules for the
full interface.
"""

from .dimension import INFINITY, Dimension
from .homdim import (
    gldim_via_polygons,
    gldim_via_threads,
    gorenstein_projectives,
    gp_count_via_ag,
    injdim,
    is_gldim_finite_via_ag,
    pd_injective,
    pd_simple,
    resolution_of_injective,
    resolution_of_simple,
)
from .io import parse, parse_text, serialize
from .presentation import (
    GentlePresentation,
    NotGentleError,
    PresentationError,
    full_relation_cycles,
    opposite,
    validate_gentle,
)
from .surface import ag_invariant, surface_model, surface_stats
from .threads import forbidden_tail, forbidden_threads, permitted_threads

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "Dimension",
    "GentlePresentation",
    "NotGentleError",
    "PresentationError",
    "validate_gentle",
    "opposite",
    "full_relation_cycles",
    "permitted_threads",
    "forbidden_threads",
    "forbidden_tail",
    "ag_invariant",
    "surface_model",
    "surface_stats",
    "gldim_via_polygons",
    "gldim_via_threads",
    "pd_simple",
    "pd_injective",
    "injdim",
    "resolution_of_simple",
    "resolution_of_injective",
    "gorenstein_projectives",
    "gp_count_via_ag",
    "is_gldim_finite_via_ag",
    "parse",
    "parse_text",
    "serialize",
]
