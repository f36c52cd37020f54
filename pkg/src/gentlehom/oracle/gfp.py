"""Dense linear algebra over GF(p).

Row reduction comes from the compiled extension when it is importable and
``GENTLEHOM_PURE`` is unset, otherwise from the numpy fallback. Vectors are
rows: a map V -> W is a ``dim V x dim W`` matrix acting by ``x -> x @ T``.
"""

from __future__ import annotations

import os
from typing import List, Tuple

import numpy as np

from . import _gfp_py

BACKEND = "python"
_rref = _gfp_py.rref_inplace
if os.environ.get("GENTLEHOM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _gfp  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        _rref = _gfp.rref_inplace
        BACKEND = "cython"

DTYPE = np.int64

__all__ = [
    "BACKEND",
    "DTYPE",
    "use_backend",
    "as_field",
    "rref",
    "rank",
    "left_nullspace",
    "row_space",
    "solve_left",
    "extend_to_basis",
]


def use_backend(name: str) -> None:
    """Switch the row-reduction kernel (``"cython"`` or ``"python"``)."""
    global _rref, BACKEND
    if name == "python":
        _rref, BACKEND = _gfp_py.rref_inplace, "python"
    elif name == "cython":
        from . import _gfp  # type: ignore[attr-defined]

        _rref, BACKEND = _gfp.rref_inplace, "cython"
    else:
        raise ValueError(f"unknown backend {name!r}")


def as_field(M, p: int) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(M, dtype=DTYPE) % p)


def rref(M: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    R = as_field(M, p).copy()
    if R.size == 0:
        return R, []
    piv = _rref(R, p)
    return R, list(piv)


def rank(M: np.ndarray, p: int) -> int:
    return len(rref(M, p)[1])


def row_space(M: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of the row space of M."""
    R, piv = rref(M, p)
    return R[: len(piv)]


def left_nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : x @ M = 0}``."""
    m, n = M.shape
    aug = np.concatenate([as_field(M, p), np.eye(m, dtype=DTYPE)], axis=1)
    R, piv = rref(aug, p)
    r = sum(1 for c in piv if c < n)
    return np.ascontiguousarray(R[r:, n:])


def solve_left(K: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Return C with ``C @ K = B``; K must have independent rows.

    Raises ``ValueError`` if some row of B is outside the row space of K.
    """
    k, n = K.shape
    if B.shape[0] == 0 or k == 0:
        if B.shape[0] and np.any(as_field(B, p)):
            raise ValueError("right-hand side is not in the row space")
        return np.zeros((B.shape[0], k), dtype=DTYPE)
    # columns of K^T C^T = B^T: reduce [K^T | B^T]
    aug = np.concatenate([as_field(K, p).T, as_field(B, p).T], axis=1)
    R, piv = rref(aug, p)
    if len([c for c in piv if c < k]) != k or any(c >= k for c in piv):
        raise ValueError("right-hand side is not in the row space")
    return np.ascontiguousarray(R[:k, k:].T % p)


def extend_to_basis(S: np.ndarray, n: int, p: int) -> np.ndarray:
    """Standard basis vectors completing the row space of S to the whole space."""
    R, piv = rref(S, p) if S.shape[0] else (S, [])
    free = [i for i in range(n) if i not in set(piv)]
    out = np.zeros((len(free), n), dtype=DTYPE)
    for r, i in enumerate(free):
        out[r, i] = 1
    return out
