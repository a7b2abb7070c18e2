"""Integrand expressions: a small recursive-descent parser and a compiler to
uniformly continuous functions.

Grammar::

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := "-" unary | atom
    atom    := NUMBER | "x" | NAME "(" expr ")" | "(" expr ")"
    NUMBER  := digits ["." digits] | digits "/" digits

``NAME`` is one of ``sin``, ``cos``, ``exp``, ``abs``.  There is no division
operator; ``p/q`` is only ever a rational literal.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from . import functions as F
from .foundations import UcFunQQ, UcFunQR


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class CompileError(ValueError):
    pass


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Abs:
    arg: "Expr"


@dataclass(frozen=True)
class Sin:
    arg: "Expr"


@dataclass(frozen=True)
class Cos:
    arg: "Expr"


@dataclass(frozen=True)
class Exp:
    arg: "Expr"


Expr = Union[Num, Var, Add, Sub, Mul, Neg, Abs, Sin, Cos, Exp]

FUNCTIONS = {"sin": Sin, "cos": Cos, "exp": Exp, "abs": Abs}

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+/\d+|\d+(?:\.\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*()]))"
)


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].isspace():
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.take()
        if text != value or kind == "end":
            found = "end of input" if kind == "end" else repr(text)
            raise ParseError(f"expected {value!r}, found {found}", pos)

    def expr(self) -> Expr:
        left = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            _, op, _ = self.take()
            right = self.term()
            left = Add(left, right) if op == "+" else Sub(left, right)
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            left = Mul(left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Expr:
        kind, text, pos = self.take()
        if kind == "num":
            return Num(Fraction(text))
        if kind == "name":
            if text == "x":
                return Var()
            if text not in FUNCTIONS:
                raise ParseError(f"unknown identifier {text!r}", pos)
            if self.peek()[:2] != ("op", "("):
                raise ParseError(f"{text} must be applied with parentheses", self.peek()[2])
            self.take()
            arg = self.expr()
            self.expect(")")
            return FUNCTIONS[text](arg)
        if (kind, text) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        found = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"unexpected {found}", pos)


def parse(text: str) -> Expr:
    p = _Parser(text)
    e = p.expr()
    kind, tok, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {tok!r}", pos)
    return e


def compile_expr(e: Expr) -> Union[UcFunQQ, UcFunQR]:
    """Build a uniformly continuous function on [0, 1] from ``e``.

    Polynomial/abs expressions stay rational-valued; any transcendental node
    makes the result real-valued.
    """
    if isinstance(e, Num):
        return F.uc_const(e.value)
    if isinstance(e, Var):
        return F.uc_var()
    if isinstance(e, Add):
        return F.uc_add(compile_expr(e.left), compile_expr(e.right))
    if isinstance(e, Sub):
        return F.uc_sub(compile_expr(e.left), compile_expr(e.right))
    if isinstance(e, Mul):
        return F.uc_mul(compile_expr(e.left), compile_expr(e.right))
    if isinstance(e, Neg):
        return F.uc_neg(compile_expr(e.arg))
    if isinstance(e, Abs):
        return F.uc_abs(compile_expr(e.arg))
    if isinstance(e, (Sin, Cos, Exp)):
        name = type(e).__name__.lower()
        try:
            return F.uc_compose_r(name, compile_expr(e.arg))
        except F.RangeError as err:
            raise CompileError(str(err)) from err
    raise CompileError(f"cannot compile {e!r}")
