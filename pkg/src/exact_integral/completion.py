"""The completion monad over metric spaces, and the reals built on it.

An element of a completion is a function from a requested precision
``eps > 0`` to an approximation in the underlying space, subject to the
regularity contract ``ball(e1 + e2, query(e1), query(e2))``.  Regularity is
not carried as a proof; :func:`is_regular` checks it on sample precisions.
"""
from __future__ import annotations

import threading
from collections import OrderedDict
from fractions import Fraction
from typing import Any, Callable, Generic, Iterable, Optional, TypeVar

from .foundations import (
    HALF,
    RationalLike,
    decimal_round,
    identity_modulus,
    pos,
    qball,
    rat,
)

X = TypeVar("X")
Y = TypeVar("Y")

Ball = Callable[[Fraction, Any, Any], bool]
Modulus = Callable[[Fraction], Fraction]

_CACHE_SIZE = 16


class Complete(Generic[X]):
    """A regular approximation function together with the ball it is regular in.

    Queries are memoised per precision in a small thread-safe LRU table.
    The approximation function must be pure, so caching never changes a
    result.
    """

    __slots__ = ("_approx", "ball", "_cache", "_lock")

    def __init__(self, approx: Callable[[Fraction], X], ball: Ball = qball):
        self._approx = approx
        self.ball = ball
        self._cache: "OrderedDict[Fraction, X]" = OrderedDict()
        self._lock = threading.Lock()

    def query(self, eps: RationalLike) -> X:
        eps = pos(eps)
        with self._lock:
            if eps in self._cache:
                self._cache.move_to_end(eps)
                return self._cache[eps]
        value = self._approx(eps)
        with self._lock:
            self._cache[eps] = value
            if len(self._cache) > _CACHE_SIZE:
                self._cache.popitem(last=False)
        return value

    def __repr__(self) -> str:
        return f"<Complete {self._approx!r}>"


Real = Complete  # Complete[Fraction] under qball


def c_return(x: X, ball: Ball = qball) -> Complete[X]:
    return Complete(lambda eps: x, ball)


def c_map(
    f: Callable[[X], Y],
    x: Complete[X],
    modulus: Optional[Modulus] = None,
    ball: Optional[Ball] = None,
) -> Complete[Y]:
    """Lift a uniformly continuous ``f`` with ``modulus`` through the completion.

    ``ball`` is the codomain's ball; it defaults to the domain's, which is
    right whenever ``f`` is an endomap.  A :class:`UcFunQQ` carries its own
    modulus.
    """
    if modulus is None:
        modulus = getattr(f, "modulus", identity_modulus)
    return Complete(lambda eps: f(x.query(modulus(eps))), ball or x.ball)


def c_join(m: Complete[Complete[X]], ball: Ball = qball) -> Complete[X]:
    return Complete(lambda eps: m.query(eps * HALF).query(eps * HALF), ball)


def c_bind(
    f: Callable[[X], Complete[Y]],
    x: Complete[X],
    modulus: Optional[Modulus] = None,
    ball: Ball = qball,
) -> Complete[Y]:
    """``join . map f``; ``ball`` is the ball of the inner space ``Y``."""
    return c_join(c_map(f, x, modulus, ball=_approx_ball(ball)), ball)


def _approx_ball(ball: Ball) -> Ball:
    # ball on a completion, made decidable by querying both sides at eps/4
    def test(eps: Fraction, a: Complete, b: Complete) -> bool:
        d = eps / 4
        return ball(eps + 2 * d, a.query(d), b.query(d))

    return test


def r_add(x: Complete[Fraction], y: Complete[Fraction]) -> Complete[Fraction]:
    return Complete(lambda eps: x.query(eps * HALF) + y.query(eps * HALF))


def r_neg(x: Complete[Fraction]) -> Complete[Fraction]:
    return Complete(lambda eps: -x.query(eps))


def r_abs(x: Complete[Fraction]) -> Complete[Fraction]:
    return Complete(lambda eps: abs(x.query(eps)))


def r_scale(c: RationalLike, x: Complete[Fraction]) -> Complete[Fraction]:
    c = rat(c)
    if c == 0:
        return c_return(Fraction(0))
    return Complete(lambda eps: c * x.query(eps / abs(c)))


def r_const(q: RationalLike) -> Complete[Fraction]:
    return c_return(rat(q))


def answer(digits: int, x: Complete[Fraction]) -> str:
    """Decimal string within ``10**-digits`` of the real ``x``.

    Half the budget goes to the query, half to the final rounding.
    """
    if digits < 0:
        raise ValueError("digit count must be non-negative")
    return decimal_round(x.query(Fraction(1, 2 * 10**digits)), digits)


def ball_approx(eps: RationalLike, delta: RationalLike, x: Complete, y: Complete) -> bool:
    """Approximate ball test between two completion elements.

    Sound for refutation: if the true distance is at most ``eps`` this is
    true; it may also be true up to distance ``eps + 4 * delta``.
    """
    eps, delta = pos(eps), pos(delta)
    return x.ball(eps + 2 * delta, x.query(delta), y.query(delta))


def is_regular(x: Complete, grid: Iterable[RationalLike]) -> bool:
    """Check ``ball(e1 + e2, query e1, query e2)`` for every pair from ``grid``."""
    grid = [pos(e) for e in grid]
    for i, e1 in enumerate(grid):
        for e2 in grid[i:]:
            if not x.ball(e1 + e2, x.query(e1), x.query(e2)):
                return False
    return True


def log_grid(lo_exp: int = 1, hi_exp: int = 8) -> list:
    """``[10**-lo_exp, ..., 10**-hi_exp]``, coarsest first."""
    return [Fraction(1, 10**k) for k in range(lo_exp, hi_exp + 1)]

