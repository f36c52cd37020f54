"""Global and self-injective dimension, resolutions, Gorenstein projectives."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .dimension import INFINITY, Dimension, dim_max
from .presentation import GentlePresentation, full_relation_cycles
from .strings import (
    StringSum,
    StringWord,
    alpha_string,
    is_projective_string,
    pd_string,
    simple_string,
    string_of_injective,
    syzygy,
    syzygy_generators,
    top,
)
from .surface import ag_invariant, surface_model
from .threads import forbidden_tail, forbidden_threads

__all__ = [
    "ResolutionLadder",
    "GorensteinReport",
    "gldim_via_polygons",
    "gldim_via_threads",
    "pd_simple",
    "resolution_of_simple",
    "injdim",
    "pd_injective",
    "pd_injective_formula",
    "pd_closed_form",
    "resolution_of_injective",
    "resolution",
    "gorenstein_projectives",
    "gp_count_via_ag",
    "is_gldim_finite_via_ag",
]

Degree = Tuple[str, ...]


@dataclass(frozen=True)
class ResolutionLadder:
    """Vertices of the projective terms of a minimal projective resolution.

    ``degrees[k]`` lists, with multiplicity, the v such that P(v) is a
    summand of the k-th term. For an infinite resolution ``period`` is the
    repeating block in its least rotation and ``period_start`` the first
    degree at which that rotation begins.
    """

    degrees: Tuple[Degree, ...]
    terminates: bool
    length: Optional[int] = None
    period: Optional[Tuple[Degree, ...]] = None
    period_start: Optional[int] = None

    @property
    def pd(self) -> Dimension:
        return Dimension(self.length) if self.terminates else INFINITY

    def degree_sets(self) -> List[Counter]:
        return [Counter(d) for d in self.degrees]


@dataclass(frozen=True)
class GorensteinReport:
    projectives: Tuple[str, ...]
    nonprojectives: Tuple[StringWord, ...]
    count_by_formula: int


def gldim_via_polygons(A: GentlePresentation) -> Dimension:
    """Largest consecutive-arcs number minus one."""
    polys = surface_model(A).polygons
    if any(p.is_infinite for p in polys):
        return INFINITY
    return dim_max((int(p.c_number) - 1 for p in polys), default=0)


def gldim_via_threads(A: GentlePresentation) -> Dimension:
    """Length of the longest forbidden thread."""
    finite, cycles = forbidden_threads(A)
    if cycles:
        return INFINITY
    return dim_max((th.length for th in finite), default=0)


def pd_simple(A: GentlePresentation, v: str) -> Dimension:
    """Projective dimension of S(v): longest forbidden path leaving v."""
    return dim_max((forbidden_tail(A, a) for a in A.out_arrows(v)), default=0)


def _sorted_degree(A: GentlePresentation, counts: Counter) -> Degree:
    return tuple(v for v in A.vertices for _ in range(counts[v]))


def _least_rotation(A: GentlePresentation, block: List[Degree]) -> int:
    keys = [tuple(A.vertex_index(v) for v in d) for d in block]
    rots = [keys[i:] + keys[:i] for i in range(len(keys))]
    return min(range(len(keys)), key=lambda i: rots[i])


def resolution(A: GentlePresentation, M, max_terms: int = 12) -> ResolutionLadder:
    """Degree ladder of the minimal projective resolution of a string sum.

    The syzygies of string modules run through a finite set of states, so a
    nonterminating resolution is recognised by a repeated syzygy; degrees
    past ``max_terms`` are not listed.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    cur = M if isinstance(M, StringSum) else StringSum.of([M])
    seen: Dict[StringSum, int] = {}
    states: List[StringSum] = []
    while cur and cur not in seen:
        seen[cur] = len(states)
        states.append(cur)
        cur = syzygy(A, cur)
    tops = [_sorted_degree(A, top(s)) for s in states]
    if not cur:
        return ResolutionLadder(tuple(tops[:max_terms]), True, max(len(states) - 1, 0))
    first = seen[cur]
    block = tops[first:]
    shift = _least_rotation(A, block)
    period = tuple(block[shift:] + block[:shift])
    degrees = list(tops)
    while len(degrees) < max_terms:
        degrees.append(block[(len(degrees) - first) % len(block)])
    return ResolutionLadder(tuple(degrees[:max_terms]), False, None, period, first + shift)


def resolution_of_simple(A: GentlePresentation, v: str, max_terms: int = 12) -> ResolutionLadder:
    return resolution(A, simple_string(A, v), max_terms)


def resolution_of_injective(A: GentlePresentation, v: str, max_terms: int = 12) -> ResolutionLadder:
    return resolution(A, string_of_injective(A, v), max_terms)


def injdim(A: GentlePresentation) -> Dimension:
    """Self-injective dimension (the same on both sides).

    Zero for a single vertex and for an oriented cycle with full relations;
    otherwise the largest finite forbidden thread length, but at least 1.
    """
    if not A.arrows:
        return Dimension(0)
    finite, cycles = forbidden_threads(A)
    if len(cycles) == 1 and len(cycles[0]) == len(A.arrows) == len(A.vertices):
        return Dimension(0)
    return dim_max((th.length for th in finite), default=1)


def pd_closed_form(A: GentlePresentation, w: StringWord) -> Dimension:
    """Projective dimension of M(w) read from forbidden tails.

    Zero for a projective string; otherwise the largest forbidden tail of
    the arrows ``a`` with ``aA`` in the first syzygy, and at least 1.
    """
    if is_projective_string(A, w):
        return Dimension(0)
    _, arrows = syzygy_generators(A, w)
    return dim_max((forbidden_tail(A, a) for a in arrows), default=1)


def pd_injective(A: GentlePresentation, v: str, cap: Optional[int] = None) -> Dimension:
    return pd_string(A, string_of_injective(A, v), cap)


def pd_injective_formula(A: GentlePresentation, v: str) -> Dimension:
    return pd_closed_form(A, string_of_injective(A, v))


def gp_count_via_ag(A: GentlePresentation) -> int:
    return sum(ag_invariant(A).infinite_lengths)


def is_gldim_finite_via_ag(A: GentlePresentation) -> bool:
    return not ag_invariant(A).infinite_lengths


def gorenstein_projectives(A: GentlePresentation) -> GorensteinReport:
    """Indecomposable Gorenstein projectives: every P(v) plus ``aA`` for arrows a on full-relation cycles."""
    nonproj = [alpha_string(A, a) for cyc in full_relation_cycles(A) for a in cyc]
    return GorensteinReport(tuple(A.vertices), tuple(nonproj), gp_count_via_ag(A))
