"""Shared strategies, random generators and independent oracles for the tests.

The oracles here never call split/ap/align: they evaluate a step tree at a
point by walking it directly, and compare functions on the midpoints of the
union of their breakpoints.
"""
from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from exact_integral.completion import c_return
from exact_integral.functions import cos_uc, sin_uc
from exact_integral.stepfn import Const, Glue

# -- pointwise oracle -------------------------------------------------------


def evaluate(f, t: Fraction):
    """Value of step tree ``f`` at ``t`` (``t`` must not be a breakpoint)."""
    while isinstance(f, Glue):
        if t < f.o:
            t = t / f.o
            f = f.left
        else:
            t = (t - f.o) / (1 - f.o)
            f = f.right
    return f.value


def breakpoints(f, lo=Fraction(0), hi=Fraction(1)) -> set:
    if isinstance(f, Const):
        return set()
    mid = lo + f.o * (hi - lo)
    return {mid} | breakpoints(f.left, lo, mid) | breakpoints(f.right, mid, hi)


def probe_points(*fs) -> list:
    """Midpoints of every cell of the common refinement of ``fs``."""
    cuts = sorted({Fraction(0), Fraction(1)}.union(*(breakpoints(f) for f in fs)))
    return [(a + b) / 2 for a, b in zip(cuts, cuts[1:])]


def pointwise_equal(f, g) -> bool:
    return all(evaluate(f, t) == evaluate(g, t) for t in probe_points(f, g))


def diagonal_points(m) -> list:
    inner = []

    def collect(node):
        if isinstance(node, Const):
            inner.append(node.value)
        else:
            collect(node.left)
            collect(node.right)

    collect(m)
    return probe_points(m, *inner)


def grid_sup(f) -> Fraction:
    return max(evaluate(f, t) for t in probe_points(f))


def riemann_integral(f) -> Fraction:
    """Sum of width * value over the cells of ``f``, computed from breakpoints."""
    cuts = sorted({Fraction(0), Fraction(1)} | breakpoints(f))
    return sum(((b - a) * evaluate(f, (a + b) / 2) for a, b in zip(cuts, cuts[1:])), Fraction(0))


# -- named rational functions (printable, comparable by parameters) --------


class Affine:
    def __init__(self, a, b):
        self.a, self.b = Fraction(a), Fraction(b)

    def __call__(self, x):
        return self.a * x + self.b

    def __repr__(self):
        return f"Affine({self.a}, {self.b})"


class Square:
    def __call__(self, x):
        return x * x

    def __repr__(self):
        return "Square()"


class AbsFn:
    def __call__(self, x):
        return abs(x)

    def __repr__(self):
        return "AbsFn()"


# -- hypothesis strategies --------------------------------------------------

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)
unit_rationals = st.fractions(min_value=0, max_value=1, max_denominator=24)
open_units = st.fractions(min_value=0, max_value=1, max_denominator=16).filter(lambda o: 0 < o < 1)
pos_rationals = st.fractions(min_value=Fraction(1, 1000), max_value=4, max_denominator=1000)
eps_values = st.sampled_from([Fraction(1, 10**k) for k in range(1, 9)])


def steps_of(leaf, max_leaves: int = 10):
    return st.recursive(
        st.builds(Const, leaf),
        lambda children: st.builds(Glue, open_units, children, children),
        max_leaves=max_leaves,
    )


step_q = steps_of(rationals)
step_bool = steps_of(st.booleans())
rational_fns = st.one_of(
    st.builds(Affine, rationals, rationals),
    st.just(Square()),
    st.just(AbsFn()),
)
step_fn = steps_of(rational_fns, max_leaves=6)

# -- seeded generators for the counted acceptance suites --------------------


def rand_rational(rng: random.Random, span: int = 5, den: int = 12) -> Fraction:
    d = rng.randint(1, den)
    return Fraction(rng.randint(-span * d, span * d), d)


def rand_open_unit(rng: random.Random, den: int = 16) -> Fraction:
    d = rng.randint(2, den)
    return Fraction(rng.randint(1, d - 1), d)


def rand_step(rng: random.Random, leaf, depth: int = 3):
    if depth == 0 or rng.random() < 0.35:
        return Const(leaf(rng))
    return Glue(rand_open_unit(rng), rand_step(rng, leaf, depth - 1), rand_step(rng, leaf, depth - 1))


def rand_fn(rng: random.Random):
    r = rng.random()
    if r < 0.6:
        return Affine(rand_rational(rng), rand_rational(rng))
    return Square() if r < 0.8 else AbsFn()


def rand_real(rng: random.Random):
    """A Real that is either an exact rational or a series-backed transcendental."""
    q = Fraction(rng.randint(0, 24), 24)
    r = rng.random()
    if r < 0.4:
        return c_return(rand_rational(rng))
    return sin_uc()(q) if r < 0.7 else cos_uc()(q)
