"""Quiver representations over GF(p) and projective resolutions by linear algebra.

Nothing here uses threads, polygons or syzygy rules: projectives are built
from the basis of paths avoiding the relations, injectives as duals of
those, and covers and kernels by row reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..dimension import INFINITY, Dimension
from ..presentation import GentlePresentation
from ..strings import StringWord
from . import gfp

__all__ = [
    "LinearRep",
    "SyzygyStep",
    "nonzero_paths",
    "algebra_dimension",
    "rep_of_string",
    "rep_of_simple",
    "rep_of_projective",
    "rep_of_injective",
    "cover_and_kernel",
    "linear_resolution",
    "pd_linear",
]

Path = Tuple[str, ...]


@dataclass
class LinearRep:
    """A representation: a space per vertex and a matrix per arrow.

    ``maps[a]`` has shape ``dims[source(a)] x dims[target(a)]``.
    """

    A: GentlePresentation
    dims: Dict[str, int]
    maps: Dict[str, np.ndarray]
    p: int = 2

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total == 0

    def dim_vector(self) -> Dict[str, int]:
        return {v: self.dims[v] for v in self.A.vertices}

    def satisfies_relations(self) -> bool:
        for a, b in self.A.relations:
            prod = (self.maps[a] @ self.maps[b]) % self.p
            if np.any(prod):
                return False
        return True


def _zero_rep(A: GentlePresentation, dims: Dict[str, int], p: int) -> LinearRep:
    maps = {a.id: np.zeros((dims[a.source], dims[a.target]), dtype=gfp.DTYPE) for a in A.arrows}
    return LinearRep(A, dims, maps, p)


def nonzero_paths(A: GentlePresentation) -> List[Path]:
    """All paths avoiding the relations, trivial ones written ``(v,)`` with v a vertex."""
    out: List[Path] = []
    for v in A.vertices:
        out.append(("@" + v,))
    stack = [(a,) for a in A.arrow_ids]
    while stack:
        q = stack.pop()
        out.append(q)
        if len(q) > len(A.arrows) * 2 + 2:
            raise ValueError("relation-free path longer than any finite-dimensional algebra allows")
        for b in A.out_arrows(A.target(q[-1])):
            if not A.is_relation(q[-1], b):
                stack.append(q + (b,))
    return out


def algebra_dimension(A: GentlePresentation) -> int:
    """Number of paths avoiding the relations, trivial paths included."""
    return len(nonzero_paths(A))


def _path_end(A: GentlePresentation, q: Path) -> str:
    return q[0][1:] if q[0].startswith("@") else A.target(q[-1])


def _path_start(A: GentlePresentation, q: Path) -> str:
    return q[0][1:] if q[0].startswith("@") else A.source(q[0])


def _arrows_of(q: Path) -> Path:
    return () if q[0].startswith("@") else q


class _PathModule:
    """e_v A with its basis of paths, grouped by end vertex."""

    def __init__(self, A: GentlePresentation, v: str, paths: List[Path]):
        self.v = v
        self.basis: Dict[str, List[Path]] = {u: [] for u in A.vertices}
        for q in paths:
            if _path_start(A, q) == v:
                self.basis[_path_end(A, q)].append(_arrows_of(q))
        self.index = {u: {q: i for i, q in enumerate(b)} for u, b in self.basis.items()}


def rep_of_projective(A: GentlePresentation, v: str, p: int = 2,
                      _paths: Optional[List[Path]] = None) -> LinearRep:
    """The right module e_v A: basis the nonzero paths from v, arrows act by composing."""
    P = _PathModule(A, v, _paths if _paths is not None else nonzero_paths(A))
    dims = {u: len(P.basis[u]) for u in A.vertices}
    rep = _zero_rep(A, dims, p)
    for a in A.arrows:
        M = rep.maps[a.id]
        for i, q in enumerate(P.basis[a.source]):
            if q and A.is_relation(q[-1], a.id):
                continue
            M[i, P.index[a.target][q + (a.id,)]] = 1
    return rep


def rep_of_injective(A: GentlePresentation, v: str, p: int = 2) -> LinearRep:
    """D(A e_v): dual basis of nonzero paths ending at v, placed at their sources."""
    basis: Dict[str, List[Path]] = {u: [] for u in A.vertices}
    for q in nonzero_paths(A):
        if _path_end(A, q) == v:
            basis[_path_start(A, q)].append(_arrows_of(q))
    index = {u: {q: i for i, q in enumerate(b)} for u, b in basis.items()}
    rep = _zero_rep(A, {u: len(b) for u, b in basis.items()}, p)
    for a in A.arrows:
        M = rep.maps[a.id]
        for i, q in enumerate(basis[a.source]):
            if q and q[0] == a.id:
                M[i, index[a.target][q[1:]]] = 1
    return rep


def rep_of_string(A: GentlePresentation, w: StringWord, p: int = 2) -> LinearRep:
    """M(w): one basis vector per position of the walk, letters act as identities."""
    local: List[int] = []
    counts = {u: 0 for u in A.vertices}
    for u in w.vertices:
        local.append(counts[u])
        counts[u] += 1
    rep = _zero_rep(A, counts, p)
    for i, (a, s) in enumerate(w.letters):
        src, dst = (i, i + 1) if s == 1 else (i + 1, i)
        rep.maps[a][local[src], local[dst]] = 1
    return rep


def rep_of_simple(A: GentlePresentation, v: str, p: int = 2) -> LinearRep:
    return _zero_rep(A, {u: int(u == v) for u in A.vertices}, p)


@dataclass
class SyzygyStep:
    """One step of a resolution: the module, its top and its cover's kernel."""

    module: LinearRep
    top: Dict[str, int]
    kernel: LinearRep
    cover_rank: Dict[str, int] = field(default_factory=dict)


def _top_generators(M: LinearRep) -> Dict[str, np.ndarray]:
    """Rows spanning a complement of the radical at each vertex."""
    A, p = M.A, M.p
    gens = {}
    for u in A.vertices:
        n = M.dims[u]
        images = [M.maps[a] for a in A.in_arrows(u) if M.maps[a].shape[0]]
        rad = np.concatenate(images, axis=0) if images else np.zeros((0, n), dtype=gfp.DTYPE)
        gens[u] = gfp.extend_to_basis(rad, n, p) if n else np.zeros((0, 0), dtype=gfp.DTYPE)
    return gens


def cover_and_kernel(M: LinearRep, paths: Optional[List[Path]] = None) -> SyzygyStep:
    """Projective cover of M built on its top, and the kernel of the cover map."""
    A, p = M.A, M.p
    paths = paths if paths is not None else nonzero_paths(A)
    gens = _top_generators(M)
    summands: List[Tuple[_PathModule, np.ndarray]] = []
    top = {u: 0 for u in A.vertices}
    for u in A.vertices:
        for g in gens[u]:
            summands.append((_PathModule(A, u, paths), g))
            top[u] += 1

    # basis of the cover at each vertex: (summand index, path); images in M
    pbasis: Dict[str, List[Tuple[int, Path]]] = {u: [] for u in A.vertices}
    images: Dict[str, List[np.ndarray]] = {u: [] for u in A.vertices}
    for k, (P, g) in enumerate(summands):
        for u in A.vertices:
            for q in P.basis[u]:
                x = g
                for a in q:
                    x = (x @ M.maps[a]) % p
                pbasis[u].append((k, q))
                images[u].append(x)
    pindex = {u: {b: i for i, b in enumerate(pbasis[u])} for u in A.vertices}

    kernels: Dict[str, np.ndarray] = {}
    ranks: Dict[str, int] = {}
    for u in A.vertices:
        phi = (np.array(images[u], dtype=gfp.DTYPE).reshape(len(images[u]), M.dims[u]))
        r = gfp.rank(phi, p) if phi.size else 0
        if r != M.dims[u]:
            raise ArithmeticError(f"cover map is not onto at vertex {u}")
        ranks[u] = r
        kernels[u] = gfp.left_nullspace(phi, p) if phi.shape[0] else np.zeros((0, 0), dtype=gfp.DTYPE)

    kdims = {u: kernels[u].shape[0] for u in A.vertices}
    K = _zero_rep(A, kdims, p)
    for a in A.arrows:
        s, t = a.source, a.target
        T = np.zeros((len(pbasis[s]), len(pbasis[t])), dtype=gfp.DTYPE)
        for i, (k, q) in enumerate(pbasis[s]):
            if q and A.is_relation(q[-1], a.id):
                continue
            T[i, pindex[t][(k, q + (a.id,))]] = 1
        if kdims[s] == 0 or kdims[t] == 0:
            img = (kernels[s] @ T) % p if kdims[s] and T.size else None
            if img is not None and np.any(img):
                raise ArithmeticError(f"kernel not closed under {a.id}")
            continue
        K.maps[a.id] = gfp.solve_left(kernels[t], (kernels[s] @ T) % p, p)
    return SyzygyStep(M, top, K, ranks)


def linear_resolution(M: LinearRep, steps: int) -> List[SyzygyStep]:
    """Up to ``steps`` cover/kernel steps, stopping after a zero kernel."""
    paths = nonzero_paths(M.A)
    out: List[SyzygyStep] = []
    cur = M
    for _ in range(steps):
        if cur.is_zero():
            break
        step = cover_and_kernel(cur, paths)
        out.append(step)
        cur = step.kernel
    return out


def pd_linear(A: GentlePresentation, M: LinearRep, cap: Optional[int] = None,
              certify: bool = True) -> Dimension:
    """Projective dimension by explicit covers and kernels.

    A nonzero ``cap``-th syzygy means infinite projective dimension; this is
    sound when ``cap`` exceeds the self-injective dimension.
    """
    from ..homdim import injdim

    need = int(injdim(A)) + 1
    if cap is None:
        cap = need
    elif certify and cap < need:
        raise ValueError(f"cap {cap} is below the certified bound {need}")
    if M.is_zero():
        return Dimension(0)
    steps = linear_resolution(M, cap)
    if len(steps) == cap and not steps[-1].kernel.is_zero():
        return INFINITY
    return Dimension(len(steps) - 1)
