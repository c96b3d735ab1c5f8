"""Exact rational grades and the componentwise partial order on R^n."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction, str]


def rational(value: Rational) -> Fraction:
    """Parse a rational exactly; accepts ints, Fractions, '-3', '0.25', '7/4'."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot interpret {value!r} as a rational")


@dataclass(frozen=True)
class Grade:
    """A point of R^n with exact rational coordinates.

    Comparisons are the componentwise partial order: ``u.leq(v)`` means
    u_i <= v_i for every axis, ``u.lt(v)`` means u_i < v_i for every axis.
    Note that ``not u.leq(v)`` does not imply ``v.leq(u)``.
    """

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coords:
            raise ValueError("a grade needs at least one coordinate")

    @classmethod
    def of(cls, *values: Rational) -> "Grade":
        return cls(tuple(rational(v) for v in values))

    @classmethod
    def from_seq(cls, values: Iterable[Rational]) -> "Grade":
        return cls(tuple(rational(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.coords)

    def leq(self, other: "Grade") -> bool:
        self._check_n(other)
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def lt(self, other: "Grade") -> bool:
        self._check_n(other)
        return all(a < b for a, b in zip(self.coords, other.coords))

    def positive(self) -> bool:
        return all(c > 0 for c in self.coords)

    def __add__(self, other: "Grade") -> "Grade":
        self._check_n(other)
        return Grade(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Grade") -> "Grade":
        self._check_n(other)
        return Grade(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, factor: Rational) -> "Grade":
        f = rational(factor)
        return Grade(tuple(f * c for c in self.coords))

    def shift(self, delta: Rational) -> "Grade":
        """Add the same rational to every coordinate (moves along (1,...,1))."""
        d = rational(delta)
        return Grade(tuple(c + d for c in self.coords))

    def cwise_max(self, other: "Grade") -> "Grade":
        self._check_n(other)
        return Grade(tuple(max(a, b) for a, b in zip(self.coords, other.coords)))

    def sup_diff(self, other: "Grade") -> Fraction:
        """Max-norm of the coordinatewise difference."""
        self._check_n(other)
        return max(abs(a - b) for a, b in zip(self.coords, other.coords))

    def min_span(self, other: "Grade") -> Fraction:
        """min_i (other_i - self_i); positive iff self strictly below other."""
        self._check_n(other)
        return min(b - a for a, b in zip(self.coords, other.coords))

    def _check_n(self, other: "Grade") -> None:
        if len(self.coords) != len(other.coords):
            raise ValueError(
                f"grade dimension mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.coords]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def diagonal(n: int, value: Rational) -> Grade:
    """The grade value*(1,...,1) in R^n."""
    v = rational(value)
    return Grade(tuple(v for _ in range(n)))


def parse_grade(tokens: Sequence[str]) -> Grade:
    return Grade.from_seq(tokens)
