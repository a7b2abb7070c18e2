"""Bounded and integrable functions, and Riemann/Stieltjes integration on [0, 1].

Bounded functions are completions of rational step functions under the sup
metric, integrable functions under the L1 metric.  A uniformly continuous
integrand is turned into a bounded function by mapping it over the
approximants of the identity on [0, 1]; swapping that identity for another
non-decreasing bounded function gives the Stieltjes integral against its
inverse.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

from .completion import Complete, c_bind, c_map, c_return
from .foundations import HALF, UcFunQQ, UcFunQR, UcFunRR, pos, qball, rat
from .stepfn import Const, Glue, StepF, leaves, s_map
from .stepmetric import ball_1, ball_inf, fold_affine, fold_sup

BoundedFn = Complete  # Complete[StepF[Fraction]] under ball_inf
IntegrableFn = Complete  # Complete[StepF[Fraction]] under ball_1


class InvalidMeasure(ValueError):
    """A quantile function approximant failed to be non-decreasing."""


def bounded(approx: Callable[[Fraction], StepF]) -> BoundedFn:
    return Complete(approx, ball_inf)


def b_sup(f: BoundedFn) -> Complete:
    return c_map(fold_sup, f, ball=qball)


def integral(f: IntegrableFn) -> Complete:
    return c_map(fold_affine, f, ball=qball)


def iota_lift(f: BoundedFn) -> IntegrableFn:
    # same approximants; d_1 <= d_inf keeps them regular under L1
    return Complete(f.query, ball_1)


def dist(f: StepF, ball=ball_inf) -> BoundedFn:
    """Turn a step function of completion elements into a completion of step functions."""
    return Complete(lambda eps: s_map(lambda x: x.query(eps), f), ball)


@lru_cache(maxsize=64)
def step_sample(n: int) -> StepF:
    """Midpoint approximation of the identity with ``n`` equal steps.

    Leaf ``k`` covers ``[k/n, (k+1)/n]`` and holds ``(2k+1)/(2n)``.  The tree
    is balanced: the left part takes ``ceil(m/2)`` of ``m`` remaining steps.
    """
    if n < 1:
        raise ValueError("step_sample needs at least one step")
    two_n = 2 * n

    def build(first: int, m: int) -> StepF:
        if m == 1:
            return Const(Fraction(2 * first + 1, two_n))
        left = (m + 1) // 2
        return Glue(Fraction(left, m), build(first, left), build(first + left, m - left))

    return build(0, n)


def id01_steps(eps: Fraction) -> int:
    # fewest steps with sup distance 1/(2n) <= eps
    eps = pos(eps)
    return math.ceil(1 / (2 * eps))


def id01() -> BoundedFn:
    return bounded(lambda eps: step_sample(id01_steps(eps)))


def compose_qq(f: UcFunQQ, g: BoundedFn) -> BoundedFn:
    return c_map(lambda s: s_map(f, s), g, f.modulus, ball_inf)


def compose_qr(f: UcFunQR, g: BoundedFn) -> BoundedFn:
    return c_bind(lambda s: dist(s_map(f, s)), g, f.modulus, ball_inf)


def lift_qq(f: UcFunQQ) -> UcFunQR:
    """View a rational-valued integrand as real-valued."""
    return UcFunQR(lambda x: c_return(f(x)), f.modulus, f.bound)


def integrate01_qq(f: UcFunQQ) -> Complete:
    return integral(iota_lift(compose_qq(f, id01())))


def integrate01_qr(f: UcFunQR) -> Complete:
    return integral(iota_lift(compose_qr(f, id01())))


def integrate01(f: Union[UcFunQQ, UcFunQR]) -> Complete:
    if isinstance(f, UcFunQQ):
        return integrate01_qq(f)
    return integrate01_qr(f)


def sup01(f: Union[UcFunQQ, UcFunQR]) -> Complete:
    """Supremum of a uniformly continuous function over [0, 1]."""
    if isinstance(f, UcFunQQ):
        return b_sup(compose_qq(f, id01()))
    return b_sup(compose_qr(f, id01()))


def precompose_return(f: UcFunRR) -> UcFunQR:
    return UcFunQR(lambda q: f(c_return(q)), f.modulus)


def is_nondecreasing(s: StepF) -> bool:
    vals = leaves(s)
    return all(a <= b for a, b in zip(vals, vals[1:]))


@dataclass(frozen=True)
class QuantileFn:
    """A non-decreasing bounded function on [0, 1] with values in [0, 1].

    Monotonicity is checked on every approximant that is actually queried.
    """

    fn: BoundedFn
    name: str = "quantile"

    def query(self, eps) -> StepF:
        s = self.fn.query(eps)
        if not is_nondecreasing(s):
            raise InvalidMeasure(f"{self.name}: approximant at {eps} is not non-decreasing")
        return s

    def as_bounded(self) -> BoundedFn:
        return bounded(self.query)


def q_dirac(a) -> QuantileFn:
    a = rat(a)
    if not 0 <= a <= 1:
        raise ValueError(f"dirac point must lie in [0, 1], got {a}")
    leaf = Const(a)
    return QuantileFn(bounded(lambda eps: leaf), f"dirac:{a}")


def q_uniform() -> QuantileFn:
    return QuantileFn(id01(), "uniform")


@lru_cache(maxsize=32)
def cantor_step(n: int) -> StepF:
    """``n``-th self-similar approximant of the Cantor quantile function.

    Its sup distance from the true quantile function is ``3**-n / 2``.
    """
    if n == 0:
        return Const(HALF)
    prev = cantor_step(n - 1)
    return Glue(HALF, s_map(lambda x: x / 3, prev), s_map(lambda x: (x + 2) / 3, prev))


def cantor_level(eps: Fraction) -> int:
    eps = pos(eps)
    n = 0
    while 3**n * 2 * eps < 1:
        n += 1
    return n + 1


def q_cantor() -> QuantileFn:
    return QuantileFn(bounded(lambda eps: cantor_step(cantor_level(eps))), "cantor")


def stieltjes(f: Union[UcFunQQ, UcFunQR], g: QuantileFn) -> Complete:
    """Integral of ``f`` against the distribution whose quantile function is ``g``."""
    if isinstance(f, UcFunQQ):
        f = lift_qq(f)
    return integral(iota_lift(compose_qr(f, g.as_bounded())))

