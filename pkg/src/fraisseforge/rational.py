"""Exact nonnegative rational values extended with +infinity.

Distances, hom-metric values and norm bounds all live here.  Plain
`fractions.Fraction` is used wherever a value is known to be finite; the
`ExtRational` wrapper exists so that +infinity can flow through norm
computations without ever touching floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Fraction

RatLike = Union[Fraction, int, str]


def rat(value: RatLike) -> Fraction:
    """Coerce ints and 'p/q' strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class ExtRational:
    """A nonnegative rational or +infinity, closed under + and comparison."""

    __slots__ = ("_v",)

    def __init__(self, value: Union[RatLike, None] = 0):
        if value is None:
            self._v = None  # infinity
        else:
            v = rat(value)
            if v < 0:
                raise ValueError("ExtRational must be nonnegative")
            self._v = v

    @property
    def is_infinite(self) -> bool:
        return self._v is None

    @property
    def value(self) -> Fraction:
        if self._v is None:
            raise ValueError("infinite value has no finite part")
        return self._v

    def __add__(self, other: "ExtRational") -> "ExtRational":
        other = _coerce(other)
        if self._v is None or other._v is None:
            return INF
        return ExtRational(self._v + other._v)

    __radd__ = __add__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Fraction, int)):
            return self._v is not None and self._v == other
        if isinstance(other, ExtRational):
            return self._v == other._v
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._v)

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if self._v is None:
            return False
        if other._v is None:
            return True
        return self._v < other._v

    def __le__(self, other) -> bool:
        other = _coerce(other)
        return self == other or self < other

    def __gt__(self, other) -> bool:
        return _coerce(other) < self

    def __ge__(self, other) -> bool:
        return _coerce(other) <= self

    def __repr__(self) -> str:
        return f"ExtRational({format_rat(self)})"


def _coerce(x) -> ExtRational:
    if isinstance(x, ExtRational):
        return x
    return ExtRational(x)


INF = ExtRational(None)


def fin(x: Union[ExtRational, Fraction, int]) -> Fraction:
    """Extract a finite Fraction, erroring out on infinity."""
    if isinstance(x, ExtRational):
        return x.value
    return rat(x)


def format_rat(x: Union[ExtRational, Fraction, int]) -> str:
    """Render a value as 'p/q' (or 'p' for integers, 'inf' for infinity)."""
    if isinstance(x, ExtRational):
        if x.is_infinite:
            return "inf"
        x = x.value
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_ext(s: str) -> ExtRational:
    if s == "inf":
        return INF
    return ExtRational(Fraction(s))
