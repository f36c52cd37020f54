"""Homological dimension values: natural numbers extended by infinity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Union

__all__ = ["Dimension", "INFINITY", "dim_max"]


@total_ordering
@dataclass(frozen=True)
class Dimension:
    """A value in N u {infinity}.

    ``value`` is a non-negative int, or ``None`` for infinity. Instances
    compare against each other and against plain ints.
    """

    value: Union[int, None]

    def __post_init__(self) -> None:
        if self.value is not None and self.value < 0:
            raise ValueError(f"dimension must be non-negative, got {self.value}")

    @classmethod
    def of(cls, value: Union[int, "Dimension", None]) -> "Dimension":
        if isinstance(value, Dimension):
            return value
        return cls(value)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def _key(self) -> float:
        return float("inf") if self.value is None else float(self.value)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Dimension(other)
        if not isinstance(other, Dimension):
            return NotImplemented
        return self._key() < other._key()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other
        if not isinstance(other, Dimension):
            return NotImplemented
        return self.value == other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __add__(self, other: Union[int, "Dimension"]) -> "Dimension":
        other = Dimension.of(other)
        if self.value is None or other.value is None:
            return INFINITY
        return Dimension(self.value + other.value)

    __radd__ = __add__

    def __int__(self) -> int:
        if self.value is None:
            raise OverflowError("infinite dimension has no int value")
        return self.value

    def __str__(self) -> str:
        return "infinity" if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return f"Dimension({self})"

    def to_json(self) -> dict:
        return {"value": "infinity" if self.value is None else self.value}

    @classmethod
    def from_json(cls, obj: dict) -> "Dimension":
        v = obj["value"]
        return INFINITY if v == "infinity" else cls(int(v))


INFINITY = Dimension(None)


def dim_max(values: Iterable[Union[int, Dimension]], default: int = 0) -> Dimension:
    """Maximum of dimensions; ``default`` for an empty iterable."""
    best = Dimension(default)
    for v in values:
        v = Dimension.of(v)
        if v > best:
            best = v
    return best
