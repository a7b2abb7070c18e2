"""Sup and L1 norms, distances and balls on rational step functions."""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Callable

from .stepfn import Glue, StepF, fold_star, s_fold, s_map, s_map2, split


class StepMetricTag(enum.Enum):
    LInf = "linf"
    L1 = "l1"


def _identity(x):
    return x


def fold_sup(f: StepF) -> Fraction:
    return s_fold(_identity, lambda o, x, y: max(x, y), f)


def fold_affine(f: StepF) -> Fraction:
    """Exact integral over [0, 1] of a rational step function."""
    return s_fold(_identity, lambda o, x, y: o * x + (1 - o) * y, f)


def norm_inf(f: StepF) -> Fraction:
    return fold_sup(s_map(abs, f))


def norm_1(f: StepF) -> Fraction:
    return fold_affine(s_map(abs, f))


def _fold_gap(f: StepF, g: StepF, glue) -> Fraction:
    # fold of |f - g| without building the aligned difference tree
    if isinstance(f, Glue):
        gl, gr = split(g, f.o)
        return glue(f.o, _fold_gap(f.left, gl, glue), _fold_gap(f.right, gr, glue))
    if isinstance(g, Glue):
        return glue(g.o, _fold_gap(f, g.left, glue), _fold_gap(f, g.right, glue))
    return abs(f.value - g.value)


def d_inf(f: StepF, g: StepF) -> Fraction:
    """``norm_inf (f - g)``, computed in one pass."""
    return _fold_gap(f, g, lambda o, x, y: max(x, y))


def d_1(f: StepF, g: StepF) -> Fraction:
    return _fold_gap(f, g, lambda o, x, y: o * x + (1 - o) * y)


def ball_inf(eps: Fraction, f: StepF, g: StepF) -> bool:
    return d_inf(f, g) <= eps


def ball_1(eps: Fraction, f: StepF, g: StepF) -> bool:
    return d_1(f, g) <= eps


def ball_inf_generic(
    ball_x: Callable[[Fraction, object, object], bool],
    eps: Fraction,
    f: StepF,
    g: StepF,
) -> bool:
    """Sup-metric ball for step functions over any metric space ``ball_x``."""
    return fold_star(s_map2(lambda x, y: ball_x(eps, x, y), f, g))


def ball_for(tag: StepMetricTag):
    return ball_inf if tag is StepMetricTag.LInf else ball_1
