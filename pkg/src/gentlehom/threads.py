"""Permitted and forbidden threads of a gentle presentation.

A permitted thread is a maximal path whose consecutive compositions avoid
the relations; a forbidden thread is a maximal path all of whose
compositions are relations. Oriented cycles with full relations give
forbidden threads of infinite length; they are kept as cycles and never
unrolled.

Trivial threads sit at vertices of low degree. The number of trivial
permitted threads at ``v`` is ``2 - (in + out - c)`` where ``c`` counts
the compositions through ``v`` that avoid I; the forbidden count uses the
compositions that lie in I. For a connected quiver with at least one arrow
this reproduces the usual rule (in, out <= 1 and the composition through
``v``, if any, of the right kind). The isolated vertex gets two threads of
each kind, which keeps the count identities
``#permitted = #finite forbidden = 2|Q0| - |Q1|`` valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .dimension import INFINITY, Dimension
from .presentation import GentlePresentation, full_relation_cycles

__all__ = [
    "PERMITTED",
    "FORBIDDEN",
    "Thread",
    "ThreadSet",
    "permitted_threads",
    "forbidden_threads",
    "thread_set",
    "forbidden_tail",
    "trivial_thread_count",
]

PERMITTED = "permitted"
FORBIDDEN = "forbidden"


@dataclass(frozen=True)
class Thread:
    """A permitted or forbidden thread.

    Nontrivial threads carry their arrows; trivial ones carry ``vertex`` and
    a ``slot`` number that only matters at an isolated vertex, where two
    trivial threads of each kind exist.
    """

    kind: str
    arrows: Tuple[str, ...]
    vertex: Optional[str] = None
    slot: int = 0
    # endpoints are stored so that a thread is meaningful without its algebra
    start: Optional[str] = None
    end: Optional[str] = None

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def s(self) -> str:
        return self.vertex if self.is_trivial else self.start

    @property
    def t(self) -> str:
        return self.vertex if self.is_trivial else self.end

    @property
    def first(self) -> Optional[str]:
        return self.arrows[0] if self.arrows else None

    @property
    def last(self) -> Optional[str]:
        return self.arrows[-1] if self.arrows else None

    def label(self) -> str:
        if self.is_trivial:
            tag = f"e_{self.vertex}" if self.slot == 0 else f"e_{self.vertex}'"
            return tag
        return " ".join(self.arrows)

    def __str__(self) -> str:
        return f"{self.kind}[{self.label()}]"


@dataclass(frozen=True)
class ThreadSet:
    permitted: Tuple[Thread, ...]
    forbidden_finite: Tuple[Thread, ...]
    infinite_cycles: Tuple[Tuple[str, ...], ...]


def trivial_thread_count(A: GentlePresentation, v: str, kind: str) -> int:
    ins = A.in_arrows(v)
    outs = A.out_arrows(v)
    want_rel = kind == FORBIDDEN
    composites = sum(1 for b in ins for g in outs if A.is_relation(b, g) == want_rel)
    n = 2 - (len(ins) + len(outs) - composites)
    if n < 0:
        raise AssertionError(f"negative trivial {kind} thread count at {v}")
    return n


def _maximal(A: GentlePresentation, kind: str) -> List[Thread]:
    if kind == PERMITTED:
        prev, nxt = A.prev_permitted, A.next_permitted
    else:
        prev, nxt = A.prev_forbidden, A.next_forbidden
    threads = []
    for a in A.arrow_ids:
        if prev(a) is not None:
            continue
        path = [a]
        cur = nxt(a)
        while cur is not None:
            if len(path) > len(A.arrows):
                raise AssertionError(f"{kind} path from {a} does not terminate")
            path.append(cur)
            cur = nxt(cur)
        threads.append(Thread(kind, tuple(path), start=A.source(path[0]), end=A.target(path[-1])))
    for v in A.vertices:
        for slot in range(trivial_thread_count(A, v, kind)):
            threads.append(Thread(kind, (), vertex=v, slot=slot, start=v, end=v))
    return threads


def permitted_threads(A: GentlePresentation) -> List[Thread]:
    """All permitted threads, nontrivial ones first, in declaration order."""
    return _maximal(A, PERMITTED)


def forbidden_threads(A: GentlePresentation) -> Tuple[List[Thread], List[Tuple[str, ...]]]:
    """Finite forbidden threads and, separately, the full-relation cycles."""
    return _maximal(A, FORBIDDEN), full_relation_cycles(A)


def thread_set(A: GentlePresentation) -> ThreadSet:
    finite, cycles = forbidden_threads(A)
    return ThreadSet(tuple(permitted_threads(A)), tuple(finite), tuple(cycles))


def forbidden_tail(A: GentlePresentation, alpha: str) -> Dimension:
    """Length of the maximal forbidden path beginning with ``alpha``."""
    A.arrow(alpha)
    n = 1
    cur = A.next_forbidden(alpha)
    while cur is not None:
        if cur == alpha or n > len(A.arrows):
            return INFINITY
        n += 1
        cur = A.next_forbidden(cur)
    return Dimension(n)
