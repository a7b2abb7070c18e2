"""Exact rationals, refined numeric checks, the rational metric and
uniformly continuous function records.

Rationals are :class:`fractions.Fraction` throughout; nothing in the core
ever touches a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Callable, Optional, Union

if TYPE_CHECKING:
    from .completion import Complete

Rational = Fraction
RationalLike = Union[Fraction, int]

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def rat(value: Union[RationalLike, str]) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` / decimal strings to a Fraction.

    Floats are refused: they would smuggle rounding into exact code.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(value)


def pos(value: RationalLike) -> Fraction:
    """Return ``value`` as a positive rational, rejecting anything <= 0."""
    q = rat(value)
    if q <= 0:
        raise ValueError(f"expected a positive rational, got {q}")
    return q


def open_unit(value: RationalLike) -> Fraction:
    q = rat(value)
    if not 0 < q < 1:
        raise ValueError(f"expected a rational strictly between 0 and 1, got {q}")
    return q


def clamp01(x: Fraction) -> Fraction:
    if x < 0:
        return ZERO
    if x > 1:
        return ONE
    return x


def qball(eps: Fraction, x: Fraction, y: Fraction) -> bool:
    """Closed ball on the rationals: ``|x - y| <= eps``."""
    return abs(x - y) <= eps


def ou_div(a: Fraction, o: Fraction) -> Fraction:
    """``a / o`` for open-unit ``a < o``; the result is again in (0, 1)."""
    if not (0 < a < o < 1):
        raise ValueError(f"ou_div needs 0 < a < o < 1, got a={a}, o={o}")
    return a / o


def ou_section(a: Fraction, o: Fraction) -> Fraction:
    """``(a - o) / (1 - o)`` for open-unit ``o < a``."""
    if not (0 < o < a < 1):
        raise ValueError(f"ou_section needs 0 < o < a < 1, got a={a}, o={o}")
    return (a - o) / (1 - o)


def decimal_round(x: Fraction, digits: int) -> str:
    """Render ``x`` rounded to the nearest multiple of ``10**-digits``.

    Ties go away from zero.  The result has no exponent, no leading zeros
    besides a lone ``0`` and exactly ``digits`` fractional digits.
    """
    if digits < 0:
        raise ValueError("digit count must be non-negative")
    x = rat(x)
    scaled = abs(x) * 10**digits
    # floor(|x| * 10^n + 1/2) rounds half away from zero once the sign is reapplied
    n = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    sign = "-" if x < 0 and n != 0 else ""
    if digits == 0:
        return f"{sign}{n}"
    whole, frac = divmod(n, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def identity_modulus(eps: Fraction) -> Fraction:
    return eps


def lipschitz_modulus(lip: Fraction) -> Callable[[Fraction], Fraction]:
    """Modulus ``eps -> eps / lip``; the identity when ``lip`` is zero."""
    if lip < 0:
        raise ValueError("Lipschitz constant must be non-negative")
    if lip == 0:
        return identity_modulus
    return lambda eps: eps / lip


@dataclass(frozen=True)
class LipschitzBound:
    """Lipschitz constant and enclosing range of a function on [0, 1]."""

    lip: Fraction
    lo: Fraction
    hi: Fraction

    @property
    def maxabs(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))


@dataclass(frozen=True)
class UcFunQQ:
    """Uniformly continuous ``Q -> Q`` map with an explicit modulus.

    Inputs are clamped to [0, 1] before evaluation; the modulus is only
    promised to hold there.
    """

    fn: Callable[[Fraction], Fraction]
    modulus: Callable[[Fraction], Fraction]
    bound: Optional[LipschitzBound] = None

    def __call__(self, x: RationalLike) -> Fraction:
        return self.fn(clamp01(rat(x)))


@dataclass(frozen=True)
class UcFunQR:
    """Uniformly continuous ``Q -> R`` map; ``fn`` returns a Real."""

    fn: Callable[[Fraction], "Complete"]
    modulus: Callable[[Fraction], Fraction]
    bound: Optional[LipschitzBound] = None

    def __call__(self, x: RationalLike) -> "Complete":
        return self.fn(clamp01(rat(x)))


@dataclass(frozen=True)
class UcFunRR:
    """Uniformly continuous ``R -> R`` map (no clamping: inputs are Reals)."""

    fn: Callable[["Complete"], "Complete"]
    modulus: Callable[[Fraction], Fraction]

    def __call__(self, x: "Complete") -> "Complete":
        return self.fn(x)
