"""AG-invariant and the combinatorial marked surface of a gentle algebra.

Marked points correspond to permitted threads and elementary polygons to
forbidden threads. The boundary components are recovered by the
alternating walk: from a permitted thread go to the forbidden thread
ending at the same vertex, then to the permitted thread starting where
that forbidden thread starts, and so on until the walk closes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .dimension import INFINITY, Dimension
from .presentation import GentlePresentation
from .threads import Thread, forbidden_threads, permitted_threads

__all__ = [
    "AGInvariant",
    "ElementaryPolygon",
    "BoundaryComponent",
    "SurfaceModel",
    "SurfaceStats",
    "WalkError",
    "ag_invariant",
    "surface_model",
    "c_numbers",
    "surface_stats",
]


class WalkError(RuntimeError):
    """The pairing walk found no unique partner thread."""


@dataclass(frozen=True)
class AGInvariant:
    """The multiset of pairs ``(m, n)``, sorted descending."""

    pairs: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "AGInvariant":
        return cls(tuple(sorted((tuple(p) for p in pairs), reverse=True)))

    def phi(self, m: int, n: int) -> int:
        return sum(1 for p in self.pairs if p == (m, n))

    def as_counter(self) -> Counter:
        return Counter(self.pairs)

    @property
    def infinite_lengths(self) -> List[int]:
        return [n for m, n in self.pairs if m == 0]

    def to_json(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs]}

    def __str__(self) -> str:
        return "{" + ", ".join(f"({m},{n})" for m, n in self.pairs) + "}"


@dataclass(frozen=True)
class ElementaryPolygon:
    arc_sides: Tuple[str, ...]
    c_number: Dimension
    source_thread: Union[Thread, Tuple[str, ...]]
    component: int

    @property
    def is_infinite(self) -> bool:
        return not self.c_number.is_finite


@dataclass(frozen=True)
class BoundaryComponent:
    id: int
    marked_points: Tuple[Thread, ...]
    polygons: Tuple[int, ...]

    @property
    def marked_point_count(self) -> int:
        return len(self.marked_points)

    @property
    def is_unmarked(self) -> bool:
        return not self.marked_points


@dataclass(frozen=True)
class SurfaceModel:
    boundary_components: Tuple[BoundaryComponent, ...]
    polygons: Tuple[ElementaryPolygon, ...]
    marked_points: Tuple[Thread, ...]
    arcs: Tuple[str, ...]
    ag: AGInvariant


@dataclass(frozen=True)
class SurfaceStats:
    boundary_count: int
    marked_total: int
    arc_count: int
    polygon_count: int
    genus: int


def _match(sources: Sequence[Thread], targets: Sequence[Thread], end: str) -> Dict[Thread, Thread]:
    """Pair threads meeting at one vertex.

    ``end`` is "last" for the permitted-to-forbidden step at a common target
    and "first" for the forbidden-to-permitted step at a common source. A
    nontrivial thread goes to the nontrivial partner through the other arrow
    at the vertex, or to a trivial partner if there is none; trivial threads
    take what is left.
    """
    key = (lambda th: th.last) if end == "last" else (lambda th: th.first)
    left = list(targets)
    out: Dict[Thread, Thread] = {}
    for th in sources:
        if th.is_trivial:
            continue
        cands = [x for x in left if not x.is_trivial and key(x) != key(th)]
        if not cands:
            cands = [x for x in left if x.is_trivial]
        if len(cands) != 1:
            raise WalkError(f"no unique partner for {th} at {th.t if end == 'last' else th.s}")
        out[th] = cands[0]
        left.remove(cands[0])
    trivial = [th for th in sources if th.is_trivial]
    if len(trivial) != len(left):
        raise WalkError(f"unbalanced threads at a vertex: {trivial} vs {left}")
    if end == "first" and len(trivial) > 1:
        # isolated vertex: the two marked points alternate around one boundary
        left = left[1:] + left[:1]
    for th, partner in zip(trivial, left):
        out[th] = partner
    return out


def _walk(A: GentlePresentation, start_order: Optional[Sequence[int]] = None):
    perm = permitted_threads(A)
    forb, cycles = forbidden_threads(A)
    to_forbidden: Dict[Thread, Thread] = {}
    to_permitted: Dict[Thread, Thread] = {}
    for v in A.vertices:
        to_forbidden.update(_match([h for h in perm if h.t == v], [f for f in forb if f.t == v], "last"))
        to_permitted.update(_match([f for f in forb if f.s == v], [h for h in perm if h.s == v], "first"))
    if len(to_forbidden) != len(perm) or len(to_permitted) != len(forb):
        raise WalkError("thread pairing is not a bijection")

    order = list(range(len(perm))) if start_order is None else list(start_order)
    if sorted(order) != list(range(len(perm))):
        raise ValueError("start_order must be a permutation of the permitted threads")
    used = set()
    comps = []
    for i in order:
        h0 = perm[i]
        if h0 in used:
            continue
        hs, fs = [], []
        h = h0
        while True:
            if h in used:
                raise WalkError(f"walk from {h0} re-entered {h} before closing")
            used.add(h)
            hs.append(h)
            f = to_forbidden[h]
            fs.append(f)
            h = to_permitted[f]
            if h == h0:
                break
        comps.append((hs, fs))
    return comps, cycles


def ag_invariant(A: GentlePresentation, start_order: Optional[Sequence[int]] = None) -> AGInvariant:
    """Run the pairing walk and collect one ``(m, n)`` per boundary component.

    ``start_order`` permutes the permitted threads used as starting points;
    the result does not depend on it.
    """
    comps, cycles = _walk(A, start_order)
    pairs = [(len(hs), sum(f.length for f in fs)) for hs, fs in comps]
    pairs.extend((0, len(c)) for c in cycles)
    return AGInvariant.from_pairs(pairs)


def _thread_vertices(A: GentlePresentation, th: Thread) -> Tuple[str, ...]:
    if th.is_trivial:
        return (th.vertex,)
    return (A.source(th.arrows[0]),) + tuple(A.target(a) for a in th.arrows)


def surface_model(A: GentlePresentation) -> SurfaceModel:
    comps, cycles = _walk(A)
    polygons: List[ElementaryPolygon] = []
    boundary: List[BoundaryComponent] = []
    marked: List[Thread] = []
    for cid, (hs, fs) in enumerate(comps):
        idx = []
        for f in fs:
            idx.append(len(polygons))
            polygons.append(ElementaryPolygon(_thread_vertices(A, f), Dimension(f.length + 1), f, cid))
        marked.extend(hs)
        boundary.append(BoundaryComponent(cid, tuple(hs), tuple(idx)))
    for cyc in cycles:
        cid = len(boundary)
        polygons.append(ElementaryPolygon(tuple(A.source(a) for a in cyc), INFINITY, cyc, cid))
        boundary.append(BoundaryComponent(cid, (), (len(polygons) - 1,)))
    pairs = [(b.marked_point_count, sum(int(polygons[i].c_number) - 1 for i in b.polygons))
             if not b.is_unmarked else (0, len(polygons[b.polygons[0]].arc_sides))
             for b in boundary]
    return SurfaceModel(tuple(boundary), tuple(polygons), tuple(marked), A.vertices,
                        AGInvariant.from_pairs(pairs))


def c_numbers(A: GentlePresentation) -> List[Dimension]:
    """Consecutive-arcs numbers, aligned with ``surface_model(A).polygons``."""
    return [p.c_number for p in surface_model(A).polygons]


def surface_stats(A: GentlePresentation) -> SurfaceStats:
    """Counts and genus of the surface; genus via the Euler characteristic."""
    model = surface_model(A)
    unmarked = sum(1 for b in model.boundary_components if b.is_unmarked)
    marked = len(model.marked_points)
    finite = sum(1 for p in model.polygons if not p.is_infinite)
    b = len(model.boundary_components)
    V = marked + unmarked
    E = len(model.arcs) + marked + unmarked
    chi = V - E + finite
    twice_g = 2 - b - chi
    if twice_g < 0 or twice_g % 2:
        raise WalkError(f"inconsistent surface: b={b}, chi={chi}")
    return SurfaceStats(b, marked, len(model.arcs), len(model.polygons), twice_g // 2)
