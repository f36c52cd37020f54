"""Quivers with length-two relations and the gentleness test.

Composition is written left to right: the relation ``(a, b)`` stands for
the path ``a`` followed by ``b`` and requires ``target(a) == source(b)``.
Identifiers are opaque strings; the order in which vertices and arrows are
declared is kept and used for every deterministic tie-break downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

__all__ = [
    "Arrow",
    "Quiver",
    "Violation",
    "PresentationError",
    "NotGentleError",
    "GentlePresentation",
    "build_quiver",
    "gentleness_violations",
    "validate_gentle",
    "opposite",
    "full_relation_cycles",
    "is_connected",
]


class PresentationError(ValueError):
    """Structural problem: duplicate ids, dangling endpoints, bad relations."""


@dataclass(frozen=True)
class Violation:
    """One failed gentleness condition."""

    condition: str
    message: str
    subject: Tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"[{self.condition}] {self.message}"


class NotGentleError(ValueError):
    """The presentation is well formed but not gentle."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"not a gentle presentation: {lines}")


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]


def build_quiver(vertices: Iterable[str], arrows: Iterable[Sequence[str]]) -> Quiver:
    """Check ids and endpoints; raise :class:`PresentationError` on failure."""
    verts = tuple(vertices)
    if not verts:
        raise PresentationError("a quiver needs at least one vertex")
    seen = set()
    for v in verts:
        if v in seen:
            raise PresentationError(f"duplicate vertex id {v!r}")
        seen.add(v)
    arrs: List[Arrow] = []
    arrow_ids = set()
    for spec in arrows:
        a = spec if isinstance(spec, Arrow) else Arrow(*spec)
        if a.id in arrow_ids:
            raise PresentationError(f"duplicate arrow id {a.id!r}")
        if a.id in seen:
            raise PresentationError(f"arrow id {a.id!r} clashes with a vertex id")
        for end in (a.source, a.target):
            if end not in seen:
                raise PresentationError(f"arrow {a.id!r} has undeclared endpoint {end!r}")
        arrow_ids.add(a.id)
        arrs.append(a)
    return Quiver(verts, tuple(arrs))


def _check_relations(quiver: Quiver, relations: Iterable[Sequence[str]]) -> FrozenSet[Tuple[str, str]]:
    by_id = {a.id: a for a in quiver.arrows}
    rels = set()
    for rel in relations:
        if len(rel) != 2:
            raise PresentationError(f"relation {tuple(rel)!r} is not a path of length 2")
        first, second = rel
        for a in (first, second):
            if a not in by_id:
                raise PresentationError(f"relation uses unknown arrow {a!r}")
        if by_id[first].target != by_id[second].source:
            raise PresentationError(
                f"relation {first} {second} is not composable: "
                f"target({first})={by_id[first].target} != source({second})={by_id[second].source}"
            )
        rels.add((first, second))
    return frozenset(rels)


@dataclass(frozen=True)
class GentlePresentation:
    """A validated gentle algebra kQ/I.

    Build through :func:`validate_gentle`; direct construction skips the
    gentleness checks.
    """

    quiver: Quiver
    relations: FrozenSet[Tuple[str, str]]
    _arrow: Dict[str, Arrow] = field(init=False, repr=False, compare=False)
    _out: Dict[str, Tuple[str, ...]] = field(init=False, repr=False, compare=False)
    _in: Dict[str, Tuple[str, ...]] = field(init=False, repr=False, compare=False)
    _vindex: Dict[str, int] = field(init=False, repr=False, compare=False)
    _aindex: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        arrow = {a.id: a for a in self.quiver.arrows}
        out: Dict[str, List[str]] = {v: [] for v in self.quiver.vertices}
        inc: Dict[str, List[str]] = {v: [] for v in self.quiver.vertices}
        for a in self.quiver.arrows:
            out[a.source].append(a.id)
            inc[a.target].append(a.id)
        object.__setattr__(self, "_arrow", arrow)
        object.__setattr__(self, "_out", {v: tuple(x) for v, x in out.items()})
        object.__setattr__(self, "_in", {v: tuple(x) for v, x in inc.items()})
        object.__setattr__(self, "_vindex", {v: i for i, v in enumerate(self.quiver.vertices)})
        object.__setattr__(self, "_aindex", {a.id: i for i, a in enumerate(self.quiver.arrows)})

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> Tuple[Arrow, ...]:
        return self.quiver.arrows

    @property
    def arrow_ids(self) -> Tuple[str, ...]:
        return tuple(a.id for a in self.quiver.arrows)

    def arrow(self, arrow_id: str) -> Arrow:
        try:
            return self._arrow[arrow_id]
        except KeyError:
            raise KeyError(f"unknown arrow {arrow_id!r}") from None

    def has_arrow(self, arrow_id: str) -> bool:
        return arrow_id in self._arrow

    def has_vertex(self, v: str) -> bool:
        return v in self._vindex

    def source(self, arrow_id: str) -> str:
        return self.arrow(arrow_id).source

    def target(self, arrow_id: str) -> str:
        return self.arrow(arrow_id).target

    def out_arrows(self, v: str) -> Tuple[str, ...]:
        return self._out[v]

    def in_arrows(self, v: str) -> Tuple[str, ...]:
        return self._in[v]

    def vertex_index(self, v: str) -> int:
        return self._vindex[v]

    def arrow_index(self, a: str) -> int:
        return self._aindex[a]

    def is_relation(self, first: str, second: str) -> bool:
        return (first, second) in self.relations

    # -- unique continuations (well defined once gentle) -----------------
    def next_permitted(self, a: str) -> Optional[str]:
        """The arrow b with ab a nonzero path, if any."""
        for b in self._out[self.target(a)]:
            if (a, b) not in self.relations:
                return b
        return None

    def next_forbidden(self, a: str) -> Optional[str]:
        """The arrow b with ab in I, if any."""
        for b in self._out[self.target(a)]:
            if (a, b) in self.relations:
                return b
        return None

    def prev_permitted(self, b: str) -> Optional[str]:
        for a in self._in[self.source(b)]:
            if (a, b) not in self.relations:
                return a
        return None

    def prev_forbidden(self, b: str) -> Optional[str]:
        for a in self._in[self.source(b)]:
            if (a, b) in self.relations:
                return a
        return None

    def sorted_relations(self) -> List[Tuple[str, str]]:
        return sorted(self.relations, key=lambda r: (self._aindex[r[0]], self._aindex[r[1]]))

    def __str__(self) -> str:
        return (
            f"GentlePresentation({len(self.vertices)} vertices, "
            f"{len(self.arrows)} arrows, {len(self.relations)} relations)"
        )


def _relation_free_cycle(quiver: Quiver, relations: FrozenSet[Tuple[str, str]]) -> Optional[List[str]]:
    """Return one oriented cycle whose compositions all avoid I, or None."""
    out: Dict[str, List[str]] = {v: [] for v in quiver.vertices}
    for a in quiver.arrows:
        out[a.source].append(a.id)
    by_id = {a.id: a for a in quiver.arrows}
    succ = {
        a.id: [b for b in out[a.target] if (a.id, b) not in relations] for a in quiver.arrows
    }
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {a.id: WHITE for a in quiver.arrows}
    for root in by_id:
        if colour[root] != WHITE:
            continue
        stack = [(root, iter(succ[root]))]
        path = [root]
        colour[root] = GREY
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[node] = BLACK
                stack.pop()
                path.pop()
                continue
            if colour[nxt] == GREY:
                return path[path.index(nxt):]
            if colour[nxt] == WHITE:
                colour[nxt] = GREY
                stack.append((nxt, iter(succ[nxt])))
                path.append(nxt)
    return None


def gentleness_violations(quiver: Quiver, relations: FrozenSet[Tuple[str, str]]) -> List[Violation]:
    """Every failed gentleness condition of a structurally valid presentation."""
    found: List[Violation] = []
    out: Dict[str, List[str]] = {v: [] for v in quiver.vertices}
    inc: Dict[str, List[str]] = {v: [] for v in quiver.vertices}
    for a in quiver.arrows:
        out[a.source].append(a.id)
        inc[a.target].append(a.id)
    by_id = {a.id: a for a in quiver.arrows}

    for v in quiver.vertices:
        if len(out[v]) > 2:
            found.append(Violation("1", f"vertex {v} has {len(out[v])} outgoing arrows (at most 2)", (v,)))
        if len(inc[v]) > 2:
            found.append(Violation("1", f"vertex {v} has {len(inc[v])} incoming arrows (at most 2)", (v,)))

    for b in quiver.arrows:
        before = inc[b.source]
        after = out[b.target]
        left_ok = [a for a in before if (a, b.id) not in relations]
        right_ok = [c for c in after if (b.id, c) not in relations]
        left_rel = [a for a in before if (a, b.id) in relations]
        right_rel = [c for c in after if (b.id, c) in relations]
        if len(left_ok) > 1:
            found.append(Violation(
                "2", f"arrows {', '.join(left_ok)} all compose with {b.id} outside I", (b.id, *left_ok)))
        if len(right_ok) > 1:
            found.append(Violation(
                "2", f"{b.id} composes outside I with {', '.join(right_ok)}", (b.id, *right_ok)))
        if len(left_rel) > 1:
            found.append(Violation(
                "6", f"relations {', '.join(a + b.id for a in left_rel)} share the second arrow {b.id}",
                (b.id, *left_rel)))
        if len(right_rel) > 1:
            found.append(Violation(
                "6", f"relations {', '.join(b.id + c for c in right_rel)} share the first arrow {b.id}",
                (b.id, *right_rel)))

    cycle = _relation_free_cycle(quiver, relations)
    if cycle is not None:
        found.append(Violation(
            "3",
            "oriented cycle " + " ".join(cycle) + " avoids I in every composition "
            "(the algebra is infinite dimensional)",
            tuple(cycle),
        ))
    del by_id
    return found


def validate_gentle(
    vertices: Iterable[str],
    arrows: Iterable[Sequence[str]],
    relations: Iterable[Sequence[str]] = (),
) -> GentlePresentation:
    """Build a :class:`GentlePresentation` or raise.

    Raises :class:`PresentationError` for malformed input and
    :class:`NotGentleError` (carrying every violation) otherwise.
    """
    quiver = build_quiver(vertices, arrows)
    rels = _check_relations(quiver, relations)
    violations = gentleness_violations(quiver, rels)
    if violations:
        raise NotGentleError(violations)
    return GentlePresentation(quiver, rels)


def opposite(A: GentlePresentation) -> GentlePresentation:
    """Reverse every arrow and every relation; ids are kept."""
    arrows = tuple(Arrow(a.id, a.target, a.source) for a in A.arrows)
    rels = frozenset((b, a) for a, b in A.relations)
    return GentlePresentation(Quiver(A.vertices, arrows), rels)


def full_relation_cycles(A: GentlePresentation) -> List[Tuple[str, ...]]:
    """Oriented cycles all of whose compositions, cyclically, lie in I.

    Each cycle is reported once, rotated so that its least arrow id comes
    first; cycles are listed in declaration order of that arrow.
    """
    cycles = []
    seen = set()
    for a in A.arrow_ids:
        if a in seen:
            continue
        walk = [a]
        cur = A.next_forbidden(a)
        while cur is not None and cur != a and cur not in walk:
            walk.append(cur)
            cur = A.next_forbidden(cur)
        if cur == a:
            seen.update(walk)
            k = walk.index(min(walk))
            cycles.append(tuple(walk[k:] + walk[:k]))
    cycles.sort(key=lambda c: A.arrow_index(c[0]))
    return cycles


def is_connected(A: GentlePresentation) -> bool:
    verts = A.vertices
    adj: Dict[str, set] = {v: set() for v in verts}
    for a in A.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    seen = {verts[0]}
    todo = [verts[0]]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(verts)
