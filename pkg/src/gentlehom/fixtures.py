"""Named example presentations.

Builders construct the families; :func:`load` reads the shipped
``.gentle`` files from the package data directory.
"""

from __future__ import annotations

from importlib import resources
from typing import List

from .io import parse_text
from .presentation import GentlePresentation, validate_gentle

__all__ = ["cyc", "nak", "a2", "pt", "kron", "t9", "ex72", "ex74", "load", "names", "all_fixtures"]


def cyc(n: int) -> GentlePresentation:
    """Oriented n-cycle g0 -> ... -> g(n-1) -> g0 with the relations a1a2, ..., a(n-1)an.

    Arrow ``a{i}`` runs from ``g{i-1}`` to ``g{i}`` (indices mod n). For
    n = 1 there is no relation and the loop is rejected as infinite
    dimensional.
    """
    if n < 1:
        raise ValueError("n must be positive")
    verts = [f"g{i}" for i in range(n)]
    arrows = [(f"a{i}", f"g{i - 1}", f"g{i % n}") for i in range(1, n + 1)]
    rels = [(f"a{i}", f"a{i + 1}") for i in range(1, n)]
    return validate_gentle(verts, arrows, rels)


def nak(length: int) -> GentlePresentation:
    """Oriented cycle of the given length with every composition a relation."""
    if length < 1:
        raise ValueError("length must be positive")
    verts = [f"g{i}" for i in range(length)]
    arrows = [(f"a{i}", f"g{i - 1}", f"g{i % length}") for i in range(1, length + 1)]
    rels = [(f"a{i}", f"a{i % length + 1}") for i in range(1, length + 1)]
    return validate_gentle(verts, arrows, rels)


def a2() -> GentlePresentation:
    return validate_gentle(["1", "2"], [("a", "1", "2")])


def pt() -> GentlePresentation:
    return validate_gentle(["1"], [])


def kron() -> GentlePresentation:
    return validate_gentle(["u", "v"], [("b1", "u", "v"), ("b2", "u", "v")])


def t9() -> GentlePresentation:
    arrows = [
        ("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "1", "4"), ("e", "4", "5"),
        ("f", "2", "6"), ("g", "6", "7"), ("h", "3", "8"), ("i", "8", "9"),
    ]
    return validate_gentle([str(i) for i in range(1, 10)], arrows, [("a", "b"), ("b", "c"), ("c", "a")])


def ex72() -> GentlePresentation:
    arrows = [
        ("a1", "1", "3"), ("a2", "3", "2"), ("a3", "3", "4"), ("a4", "5", "4"), ("a5", "6", "5"),
        ("a6", "7", "6"), ("a7", "8", "7"), ("a8", "9", "8"), ("a9", "9", "10"), ("a10", "10", "3"),
        ("a10'", "10", "14"), ("a11", "11", "8"), ("a12", "12", "11"), ("a13", "13", "12"),
        ("a14", "14", "13"),
    ]
    rels = [
        ("a1", "a3"), ("a5", "a4"), ("a8", "a7"), ("a7", "a6"),
        ("a10", "a2"), ("a9", "a10'"), ("a10'", "a14"), ("a14", "a13"),
    ]
    return validate_gentle([str(i) for i in range(1, 15)], arrows, rels)


def ex74() -> GentlePresentation:
    arrows = [
        ("b1", "1", "2"), ("b2", "2", "3"),
        ("c1", "3", "4"), ("c2", "4", "5"), ("c3", "5", "6"), ("c4", "6", "3"),
        ("d1", "5", "7"), ("d2", "7", "8"), ("d3", "8", "5"),
        ("e1", "7", "9"), ("e2", "10", "7"),
    ]
    rels = [
        ("c1", "c2"), ("c2", "c3"), ("c3", "c4"), ("c4", "c1"),
        ("d1", "d2"), ("d2", "d3"), ("d3", "d1"),
        ("e2", "e1"),
    ]
    return validate_gentle([str(i) for i in range(1, 11)], arrows, rels)


def names() -> List[str]:
    return sorted(
        p.name[: -len(".gentle")]
        for p in resources.files("gentlehom.data").iterdir()
        if p.name.endswith(".gentle")
    )


def load(name: str) -> GentlePresentation:
    """Load a shipped fixture such as ``"T9"`` or ``"CYC4"``."""
    path = resources.files("gentlehom.data") / f"{name}.gentle"
    if not path.is_file():
        raise KeyError(f"no fixture named {name!r}")
    return parse_text(path.read_text(encoding="utf-8"))


def all_fixtures() -> dict:
    return {n: load(n) for n in names()}
