"""Uniformly continuous integrands with certified moduli.

Everything here is certified on [0, 1] only.  The modulus of each function
comes from a Lipschitz constant ``L`` as ``eps -> eps / L``; ranges are
tracked alongside so products and compositions can bound their constants.
Transcendentals are evaluated by Taylor partial sums over exact rationals.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence, Union

from .completion import Complete, c_return
from .foundations import (
    HALF,
    LipschitzBound,
    UcFunQQ,
    UcFunQR,
    lipschitz_modulus,
    pos,
    rat,
)

UcFun = Union[UcFunQQ, UcFunQR]

# e < 3 bounds both exp and its derivative on [0, 1]
EXP_LIP = Fraction(3)


def sin_q(q: Fraction, eps: Fraction) -> Fraction:
    """Rational within ``eps`` of ``sin q``.

    Stops once the first omitted term is at most ``eps``; by Lagrange's
    remainder that term bounds the error for every rational ``q``.
    """
    q, eps = rat(q), pos(eps)
    total = Fraction(0)
    term = q
    k = 1
    while True:
        total += term
        term = -term * q * q / ((k + 1) * (k + 2))
        k += 2
        if abs(term) <= eps:
            return total


def cos_q(q: Fraction, eps: Fraction) -> Fraction:
    q, eps = rat(q), pos(eps)
    total = Fraction(0)
    term = Fraction(1)
    k = 0
    while True:
        total += term
        term = -term * q * q / ((k + 1) * (k + 2))
        k += 2
        if abs(term) <= eps:
            return total


def exp_q(q: Fraction, eps: Fraction) -> Fraction:
    """Rational within ``eps`` of ``exp q`` for ``q`` in [0, 1].

    After the terms up to ``q**k / k!`` the tail is at most
    ``term * q / (k + 1 - q)`` (geometric majorant).
    """
    q, eps = rat(q), pos(eps)
    if not 0 <= q <= 1:
        raise ValueError(f"exp_q is certified on [0, 1] only, got {q}")
    total = Fraction(0)
    term = Fraction(1)
    k = 0
    while True:
        total += term
        # the majorant needs k + 1 > q; k >= 1 guarantees it on [0, 1]
        if k >= 1 and term * q / (k + 1 - q) <= eps:
            return total
        k += 1
        term = term * q / k


SERIES = {"sin": sin_q, "cos": cos_q, "exp": exp_q}


def _real_of(series: Callable[[Fraction, Fraction], Fraction], q: Fraction) -> Complete:
    return Complete(lambda eps: series(q, eps))


def sin_uc() -> UcFunQR:
    return UcFunQR(
        lambda q: _real_of(sin_q, q),
        lipschitz_modulus(Fraction(1)),
        LipschitzBound(Fraction(1), Fraction(0), Fraction(1)),
    )


def cos_uc() -> UcFunQR:
    return UcFunQR(
        lambda q: _real_of(cos_q, q),
        lipschitz_modulus(Fraction(1)),
        LipschitzBound(Fraction(1), Fraction(0), Fraction(1)),
    )


def exp_uc() -> UcFunQR:
    return UcFunQR(
        lambda q: _real_of(exp_q, q),
        lipschitz_modulus(EXP_LIP),
        LipschitzBound(EXP_LIP, Fraction(1), EXP_LIP),
    )


def poly_uc(coeffs: Sequence) -> UcFunQQ:
    """Polynomial with ascending rational coefficients, evaluated by Horner."""
    coeffs = [rat(c) for c in coeffs] or [Fraction(0)]

    def horner(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    lip = sum((k * abs(c) for k, c in enumerate(coeffs)), Fraction(0))
    # x**k ranges over [0, 1], so each coefficient widens one side only
    lo = coeffs[0] + sum((c for c in coeffs[1:] if c < 0), Fraction(0))
    hi = coeffs[0] + sum((c for c in coeffs[1:] if c > 0), Fraction(0))
    bound = LipschitzBound(lip, lo, hi)
    return UcFunQQ(horner, lipschitz_modulus(lip), bound)


def uc_const(c) -> UcFunQQ:
    c = rat(c)
    return UcFunQQ(lambda x: c, lipschitz_modulus(Fraction(0)), LipschitzBound(Fraction(0), c, c))


def uc_var() -> UcFunQQ:
    return poly_uc([0, 1])


class RangeError(ValueError):
    """A composition was asked for outside the range it is certified on."""


def _bound(f: UcFun) -> LipschitzBound:
    if f.bound is None:
        raise ValueError("function carries no Lipschitz bound")
    return f.bound


def _as_real(f: UcFun, x: Fraction) -> Complete:
    if isinstance(f, UcFunQQ):
        return c_return(f(x))
    return f(x)


def _make(fn_qq, fn_qr, bound: LipschitzBound, exact: bool) -> UcFun:
    modulus = lipschitz_modulus(bound.lip)
    if exact:
        return UcFunQQ(fn_qq, modulus, bound)
    return UcFunQR(fn_qr, modulus, bound)


def _both_exact(*fs: UcFun) -> bool:
    return all(isinstance(f, UcFunQQ) for f in fs)


def uc_add(f: UcFun, g: UcFun) -> UcFun:
    bf, bg = _bound(f), _bound(g)
    bound = LipschitzBound(bf.lip + bg.lip, bf.lo + bg.lo, bf.hi + bg.hi)

    def real(x):
        a, b = _as_real(f, x), _as_real(g, x)
        return Complete(lambda eps: a.query(eps * HALF) + b.query(eps * HALF))

    return _make(lambda x: f(x) + g(x), real, bound, _both_exact(f, g))


def uc_neg(f: UcFun) -> UcFun:
    b = _bound(f)
    bound = LipschitzBound(b.lip, -b.hi, -b.lo)

    def real(x):
        a = _as_real(f, x)
        return Complete(lambda eps: -a.query(eps))

    return _make(lambda x: -f(x), real, bound, _both_exact(f))


def uc_sub(f: UcFun, g: UcFun) -> UcFun:
    return uc_add(f, uc_neg(g))


def uc_abs(f: UcFun) -> UcFun:
    b = _bound(f)
    lo = Fraction(0) if b.lo <= 0 <= b.hi else min(abs(b.lo), abs(b.hi))
    bound = LipschitzBound(b.lip, lo, b.maxabs)

    def real(x):
        a = _as_real(f, x)
        return Complete(lambda eps: abs(a.query(eps)))

    return _make(lambda x: abs(f(x)), real, bound, _both_exact(f))


def uc_mul(f: UcFun, g: UcFun) -> UcFun:
    bf, bg = _bound(f), _bound(g)
    corners = [bf.lo * bg.lo, bf.lo * bg.hi, bf.hi * bg.lo, bf.hi * bg.hi]
    lip = bf.lip * bg.maxabs + bg.lip * bf.maxabs
    bound = LipschitzBound(lip, min(corners), max(corners))
    ma, mb = bf.maxabs, bg.maxabs

    def real(x):
        a, b = _as_real(f, x), _as_real(g, x)

        # |ab - a'b'| <= |a||b - b'| + |b'||a - a'| with |b'| <= mb + 1
        def approx(eps):
            eb = min(Fraction(1), eps / (2 * max(ma, Fraction(1))))
            ea = eps / (2 * (mb + 1))
            return a.query(ea) * b.query(eb)

        return Complete(approx)

    return _make(lambda x: f(x) * g(x), real, bound, _both_exact(f, g))


def _sin_range(b: LipschitzBound):
    m = min(Fraction(1), b.maxabs)
    return -m, m


def _cos_range(b: LipschitzBound):
    m = b.maxabs
    return max(Fraction(-1), 1 - m * m / 2), Fraction(1)


def uc_compose_r(h: str, f: UcFun) -> UcFunQR:
    """``h . f`` for ``h`` one of ``"sin"``, ``"cos"``, ``"exp"``.

    ``exp`` is only accepted when the inner range lies within [0, 1].
    """
    b = _bound(f)
    if h in ("sin", "cos"):
        lip_h = Fraction(1)
        lo, hi = _sin_range(b) if h == "sin" else _cos_range(b)
    elif h == "exp":
        if b.lo < 0 or b.hi > 1:
            raise RangeError(
                f"exp needs its argument within [0, 1]; inner range is [{b.lo}, {b.hi}]"
            )
        lip_h = EXP_LIP
        lo, hi = Fraction(1), EXP_LIP
    else:
        raise ValueError(f"unknown outer function {h!r}")
    series = SERIES[h]
    bound = LipschitzBound(lip_h * b.lip, lo, hi)

    def real(x):
        a = _as_real(f, x)

        def approx(eps):
            inner = a.query(eps / (2 * lip_h))
            # the true argument lies in [b.lo, b.hi]; clamping only moves closer
            inner = min(max(inner, b.lo), b.hi)
            return series(inner, eps * HALF)

        return Complete(approx)

    return UcFunQR(real, lipschitz_modulus(bound.lip), bound)
