"""Formal step functions on [0, 1].

A step function is a finite binary tree: a :class:`Const` leaf, or a
:class:`Glue` node that squeezes its left subtree into ``[0, o]`` and its
right subtree into ``[o, 1]``.  Trees are never evaluated at a point and are
not kept in a canonical form; two trees describe the same step function when
:func:`s_eqv` says so.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Generic, Tuple, TypeVar, Union

from .foundations import ou_div, ou_section

X = TypeVar("X")
Y = TypeVar("Y")
Z = TypeVar("Z")


@dataclass(frozen=True)
class Const(Generic[X]):
    value: X


@dataclass(frozen=True)
class Glue(Generic[X]):
    o: Fraction
    left: "StepF[X]"
    right: "StepF[X]"

    def __post_init__(self):
        if not 0 < self.o < 1:
            raise ValueError(f"glue point must lie in (0, 1), got {self.o}")


StepF = Union[Const, Glue]


def s_const(x: X) -> Const[X]:
    return Const(x)


def s_glue(o, left: StepF, right: StepF) -> Glue:
    return Glue(Fraction(o), left, right)


def split_l(f: StepF, a: Fraction) -> StepF:
    """The part of ``f`` on ``[0, a]``, rescaled to [0, 1]."""
    if isinstance(f, Const):
        return f
    o = f.o
    if a < o:
        return split_l(f.left, ou_div(a, o))
    if a == o:
        return f.left
    return Glue(ou_div(o, a), f.left, split_l(f.right, ou_section(a, o)))


def split_r(f: StepF, a: Fraction) -> StepF:
    """The part of ``f`` on ``[a, 1]``, rescaled to [0, 1]."""
    if isinstance(f, Const):
        return f
    o = f.o
    if a < o:
        return Glue(ou_section(o, a), split_r(f.left, ou_div(a, o)), f.right)
    if a == o:
        return f.right
    return split_r(f.right, ou_section(a, o))


def split(f: StepF, a: Fraction) -> Tuple[StepF, StepF]:
    return split_l(f, a), split_r(f, a)


def s_fold(phi: Callable[[X], Y], psi: Callable[[Fraction, Y, Y], Y], f: StepF) -> Y:
    if isinstance(f, Const):
        return phi(f.value)
    return psi(f.o, s_fold(phi, psi, f.left), s_fold(phi, psi, f.right))


def s_map(fn: Callable[[X], Y], f: StepF) -> StepF:
    if isinstance(f, Const):
        return Const(fn(f.value))
    return Glue(f.o, s_map(fn, f.left), s_map(fn, f.right))


def s_ap(fs: StepF, x: StepF) -> StepF:
    """Pointwise application of a step function of functions."""
    if isinstance(fs, Const):
        return s_map(fs.value, x)
    left, right = split(x, fs.o)
    return Glue(fs.o, s_ap(fs.left, left), s_ap(fs.right, right))


def s_map2(fn: Callable[[X, Y], Z], a: StepF, b: StepF) -> StepF:
    return s_ap(s_map(lambda x: lambda y: fn(x, y), a), b)


def s_join(m: StepF) -> StepF:
    """Diagonal of a step function of step functions."""
    if isinstance(m, Const):
        return m.value
    o = m.o
    return Glue(
        o,
        s_join(s_map(lambda g: split_l(g, o), m.left)),
        s_join(s_map(lambda g: split_r(g, o), m.right)),
    )


def fold_star(p: StepF) -> bool:
    return s_fold(bool, lambda o, l, r: l and r, p)


def lift_rel2(rel: Callable[[X, Y], bool], f: StepF, g: StepF) -> bool:
    return fold_star(s_map2(rel, f, g))


def s_eqv(f: StepF, g: StepF, eq: Callable[[Any, Any], bool] = operator.eq) -> bool:
    return lift_rel2(eq, f, g)


def s_leq(f: StepF, g: StepF) -> bool:
    return lift_rel2(operator.le, f, g)


def align(f: StepF, g: StepF) -> Tuple[StepF, StepF]:
    """Refine ``f`` and ``g`` onto one common glue skeleton."""
    if isinstance(f, Glue):
        gl, gr = split(g, f.o)
        fl2, gl2 = align(f.left, gl)
        fr2, gr2 = align(f.right, gr)
        return Glue(f.o, fl2, fr2), Glue(f.o, gl2, gr2)
    if isinstance(g, Glue):
        g2, f2 = align(g, f)
        return f2, g2
    return f, g


def skeleton(f: StepF):
    """Shape of the tree with leaves erased, for structural comparisons."""
    if isinstance(f, Const):
        return None
    return (f.o, skeleton(f.left), skeleton(f.right))


def leaves(f: StepF) -> list:
    out = []
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Const):
            out.append(node.value)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return out


def leaf_count(f: StepF) -> int:
    return s_fold(lambda _: 1, lambda o, l, r: l + r, f)


def intervals(f: StepF, lo: Fraction = Fraction(0), hi: Fraction = Fraction(1)):
    """``(lo, hi, value)`` for every leaf, left to right."""
    if isinstance(f, Const):
        return [(lo, hi, f.value)]
    mid = lo + f.o * (hi - lo)
    return intervals(f.left, lo, mid) + intervals(f.right, mid, hi)


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int) and not isinstance(x, bool):
        return f"{x}/1"
    return str(x)


def render(f: StepF) -> str:
    """Debug text: ``const <x>`` / ``glue <o> (<l>) (<r>)``."""
    if isinstance(f, Const):
        return f"const {_fmt(f.value)}"
    return f"glue {_fmt(f.o)} ({render(f.left)}) ({render(f.right)})"
