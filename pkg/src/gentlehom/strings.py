"""String combinatorics for gentle algebras.

A string is a reduced walk avoiding the relations, written as a start
vertex and a sequence of letters ``(arrow, +1)`` (direct) or
``(arrow, -1)`` (inverse). Positions along the walk index the basis of the
string module M(w); a direct letter between positions i and i+1 means the
arrow maps position i to position i+1.

Syzygies are computed by the valley-tail rule. For a string w, the kernel
of its projective cover is the direct sum of

* ``P(v)`` for each interior valley v of w,
* ``gA`` for each end of w that is a valley, where ``g`` is the permitted
  continuation of the arrow entering that end,
* ``a'A`` for each end of w that is a peak and each out-arrow ``a'`` there
  not used by w,

where ``aA`` denotes the uniserial string along the maximal permitted
path at ``t(a)`` continuing ``a``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .dimension import INFINITY, Dimension
from .presentation import GentlePresentation

__all__ = [
    "StringWord",
    "StringSum",
    "is_valid_string",
    "string_of_projective",
    "string_of_injective",
    "alpha_string",
    "simple_string",
    "top",
    "socle",
    "is_projective_string",
    "syzygy",
    "syzygy_generators",
    "projective_cover",
    "pd_string",
    "syzygy_sequence",
    "dim_vector",
]

Letter = Tuple[str, int]


def _walk(A: GentlePresentation, start: str, letters: Sequence[Letter]) -> Tuple[str, ...]:
    verts = [start]
    cur = start
    for a, sign in letters:
        arr = A.arrow(a)
        if sign == 1:
            if arr.source != cur:
                raise ValueError(f"letter {a} does not start at {cur}")
            cur = arr.target
        elif sign == -1:
            if arr.target != cur:
                raise ValueError(f"letter {a}- does not start at {cur}")
            cur = arr.source
        else:
            raise ValueError(f"bad letter sign {sign!r}")
        verts.append(cur)
    return tuple(verts)


@dataclass(frozen=True, order=True)
class StringWord:
    """A walk stored in canonical orientation.

    ``vertices`` has one more entry than ``letters``; position ``i`` of the
    string module lives at ``vertices[i]``. Use :meth:`make`, which picks
    the lexicographically smaller of the word and its reverse.
    """

    vertices: Tuple[str, ...]
    letters: Tuple[Letter, ...]

    @classmethod
    def make(cls, A: GentlePresentation, start: str, letters: Iterable[Letter] = ()) -> "StringWord":
        letters = tuple((a, int(s)) for a, s in letters)
        verts = _walk(A, start, letters)
        fwd = cls(verts, letters)
        rev = cls(tuple(reversed(verts)), tuple((a, -s) for a, s in reversed(letters)))
        return min(fwd, rev)

    @classmethod
    def from_letters(cls, A: GentlePresentation, letters: Iterable[Letter]) -> "StringWord":
        letters = tuple(letters)
        if not letters:
            raise ValueError("an empty word needs a start vertex; use simple_string")
        a, s = letters[0]
        return cls.make(A, A.source(a) if s == 1 else A.target(a), letters)

    @classmethod
    def parse(cls, A: GentlePresentation, text: str) -> "StringWord":
        """Parse ``"d- c- a f"`` style words; ``"1_v"`` gives a simple string."""
        text = text.strip()
        if text.startswith("1_"):
            v = text[2:]
            if not A.has_vertex(v):
                raise KeyError(f"unknown vertex {v!r}")
            return cls.make(A, v)
        letters = []
        for tok in text.split():
            if tok.endswith("-"):
                letters.append((tok[:-1], -1))
            else:
                letters.append((tok, 1))
        return cls.from_letters(A, letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def dimension(self) -> int:
        return len(self.vertices)

    def is_simple(self) -> bool:
        return not self.letters

    def left(self, i: int) -> Optional[Letter]:
        return self.letters[i - 1] if i > 0 else None

    def right(self, i: int) -> Optional[Letter]:
        return self.letters[i] if i < len(self.letters) else None

    def top_positions(self) -> List[int]:
        out = []
        for i in range(len(self.vertices)):
            lft, rgt = self.left(i), self.right(i)
            if (lft is None or lft[1] == -1) and (rgt is None or rgt[1] == 1):
                out.append(i)
        return out

    def socle_positions(self) -> List[int]:
        out = []
        for i in range(len(self.vertices)):
            lft, rgt = self.left(i), self.right(i)
            if (lft is None or lft[1] == 1) and (rgt is None or rgt[1] == -1):
                out.append(i)
        return out

    def __str__(self) -> str:
        if not self.letters:
            return f"1_{self.vertices[0]}"
        return " ".join(a if s == 1 else f"{a}-" for a, s in self.letters)


@dataclass(frozen=True)
class StringSum:
    """Formal direct sum of strings, kept sorted; empty means zero."""

    summands: Tuple[StringWord, ...] = ()

    @classmethod
    def of(cls, words: Iterable[StringWord]) -> "StringSum":
        return cls(tuple(sorted(words)))

    def __add__(self, other: "StringSum") -> "StringSum":
        return StringSum.of(self.summands + other.summands)

    def __bool__(self) -> bool:
        return bool(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __str__(self) -> str:
        return " (+) ".join(str(w) for w in self.summands) if self.summands else "0"


StringLike = Union[StringWord, StringSum]


def _as_sum(M: StringLike) -> StringSum:
    return M if isinstance(M, StringSum) else StringSum.of([M])


def is_valid_string(A: GentlePresentation, w: Union[StringWord, Sequence[Letter]],
                    start: Optional[str] = None) -> bool:
    """True iff ``w`` is a reduced walk with no relation as a direct or inverse subword.

    Raises ``KeyError`` for an unknown arrow.
    """
    if isinstance(w, StringWord):
        letters, start = w.letters, w.vertices[0]
    else:
        letters = tuple((a, int(s)) for a, s in w)
        for a, _ in letters:
            A.arrow(a)
        if start is None:
            if not letters:
                return False
            a, s = letters[0]
            start = A.source(a) if s == 1 else A.target(a)
    try:
        _walk(A, start, letters)
    except ValueError:
        return False
    for (a, s), (b, t) in zip(letters, letters[1:]):
        if a == b and s == -t:
            return False
        if s == 1 and t == 1 and A.is_relation(a, b):
            return False
        if s == -1 and t == -1 and A.is_relation(b, a):
            return False
    return True


def simple_string(A: GentlePresentation, v: str) -> StringWord:
    return StringWord.make(A, v)


def _permitted_path_from(A: GentlePresentation, a: Optional[str]) -> List[str]:
    path = []
    while a is not None:
        path.append(a)
        a = A.next_permitted(a)
        if len(path) > len(A.arrows):
            raise AssertionError("permitted path does not terminate")
    return path


def _permitted_path_into(A: GentlePresentation, b: Optional[str]) -> List[str]:
    path = []
    while b is not None:
        path.append(b)
        b = A.prev_permitted(b)
        if len(path) > len(A.arrows):
            raise AssertionError("permitted path does not terminate")
    path.reverse()
    return path


def _hook(A: GentlePresentation, v: str, left: List[str], right: List[str]) -> StringWord:
    """String ``left^-1 v right`` for two permitted paths starting at v."""
    start = A.target(left[-1]) if left else v
    letters = [(a, -1) for a in reversed(left)] + [(a, 1) for a in right]
    return StringWord.make(A, start, letters)


def string_of_projective(A: GentlePresentation, v: str) -> StringWord:
    legs = [_permitted_path_from(A, a) for a in A.out_arrows(v)]
    legs += [[]] * (2 - len(legs))
    return _hook(A, v, legs[0], legs[1])


def string_of_injective(A: GentlePresentation, v: str) -> StringWord:
    legs = [_permitted_path_into(A, b) for b in A.in_arrows(v)]
    legs += [[]] * (2 - len(legs))
    first, second = legs
    start = A.source(first[0]) if first else v
    letters = [(a, 1) for a in first] + [(a, -1) for a in reversed(second)]
    return StringWord.make(A, start, letters)


def alpha_string(A: GentlePresentation, a: str) -> StringWord:
    """The module ``aA``: uniserial along the permitted continuation of ``a``."""
    return _hook(A, A.target(a), [], _permitted_path_from(A, A.next_permitted(a)))


def top(w: StringLike) -> Counter:
    """Multiset of vertices in the top."""
    return Counter(s.vertices[i] for s in _as_sum(w) for i in s.top_positions())


def socle(w: StringLike) -> Counter:
    return Counter(s.vertices[i] for s in _as_sum(w) for i in s.socle_positions())


def is_projective_string(A: GentlePresentation, w: StringWord) -> bool:
    tops = w.top_positions()
    return len(tops) == 1 and string_of_projective(A, w.vertices[tops[0]]) == w


def syzygy_generators(A: GentlePresentation, w: StringWord) -> Tuple[List[str], List[str]]:
    """Pieces of the kernel of the projective cover of M(w).

    Returns the interior valley vertices v (each contributing ``P(v)``) and
    the arrows ``a`` whose modules ``aA`` make up the rest.
    """
    if w.is_simple():
        return [], list(A.out_arrows(w.vertices[0]))
    valleys: List[str] = []
    arrows: List[str] = []
    n = len(w.letters)
    for i in range(1, n):
        if w.letters[i - 1][1] == 1 and w.letters[i][1] == -1:
            valleys.append(w.vertices[i])
    # each end: the adjacent letter and whether it leaves the end vertex
    for a, leaves in ((w.letters[0][0], w.letters[0][1] == 1), (w.letters[-1][0], w.letters[-1][1] == -1)):
        if leaves:
            arrows.extend(x for x in A.out_arrows(A.source(a)) if x != a)
        else:
            g = A.next_permitted(a)
            if g is not None:
                arrows.append(g)
    return valleys, arrows


def _syzygy_word(A: GentlePresentation, w: StringWord) -> List[StringWord]:
    valleys, arrows = syzygy_generators(A, w)
    return [string_of_projective(A, v) for v in valleys] + [alpha_string(A, a) for a in arrows]


def syzygy(A: GentlePresentation, M: StringLike) -> StringSum:
    """Kernel of the projective cover of M."""
    return StringSum.of(x for w in _as_sum(M) for x in _syzygy_word(A, w))


def projective_cover(A: GentlePresentation, M: StringLike) -> Tuple[StringSum, StringSum]:
    """Return ``(P, Omega)`` with P the projective cover of M and Omega its kernel."""
    M = _as_sum(M)
    tops = top(M)
    P = StringSum.of(string_of_projective(A, v) for v in A.vertices for _ in range(tops[v]))
    return P, syzygy(A, M)


def syzygy_sequence(A: GentlePresentation, M: StringLike, steps: int) -> List[StringSum]:
    """``[M, Omega M, ..., Omega^steps M]``, stopping early at zero."""
    seq = [_as_sum(M)]
    for _ in range(steps):
        if not seq[-1]:
            break
        seq.append(syzygy(A, seq[-1]))
    return seq


def default_cap(A: GentlePresentation) -> int:
    from .homdim import injdim

    d = injdim(A)
    return int(d) + 1


def pd_string(A: GentlePresentation, M: StringLike, cap: Optional[int] = None,
              certify: bool = True) -> Dimension:
    """Projective dimension of a sum of string modules.

    Syzygies are taken up to ``cap`` steps; a nonzero ``cap``-th syzygy
    gives infinity. This is sound once ``cap`` exceeds the self-injective
    dimension, since finite projective dimensions never exceed it. With
    ``certify`` a smaller cap raises ``ValueError``.
    """
    need = default_cap(A)
    if cap is None:
        cap = need
    elif certify and cap < need:
        raise ValueError(f"cap {cap} is below the certified bound {need}")
    seq = syzygy_sequence(A, M, cap)
    if len(seq) == cap + 1 and seq[-1]:
        return INFINITY
    if not seq[0]:
        return Dimension(0)
    return Dimension(len(seq) - 2)


def dim_vector(A: GentlePresentation, M: StringLike) -> Dict[str, int]:
    counts = Counter(v for w in _as_sum(M) for v in w.vertices)
    return {v: counts[v] for v in A.vertices}
