"""A tiny arithmetic DSL for describing functions on coordinate tuples.

Grammar (no unary minus, no division operator; '/' only inside rational
literals):

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := rational | coord | 'sum' '(' ')' | fn '(' expr (',' expr)* ')'
              | '(' expr ')'
    rational := INT ('/' INT)?
    coord    := 'x' INT                      (1-based coordinate index)
    fn       := 'min' | 'max' | 'abs' | 'floor' | 'clip'

Evaluation is total and exact over Fractions.  parse/format round-trip to
structurally equal trees.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, InvalidInterval, ParseError


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Coord:
    index: int  # 1-based


@dataclass(frozen=True)
class CoordSum:
    """sum(): the sum of all coordinates."""


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str  # min, max, abs, floor, clip
    args: tuple


Expr = "Lit | Coord | CoordSum | BinOp | Call"

_FUNCTIONS = {"min": (1, None), "max": (1, None), "abs": (1, 1), "floor": (1, 1), "clip": (3, 3)}

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([+\-*/(),]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = pos + len(text[pos:]) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", position=at)
        number, name, sym = m.groups()
        start = m.start(1) if number else m.start(2) if name else m.start(3)
        if number:
            tokens.append(("num", number, start))
        elif name:
            tokens.append(("name", name, start))
        else:
            tokens.append((sym, sym, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, d: int | None):
        self.tokens = tokens
        self.i = 0
        self.d = d

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", position=tok[2])
        self.i += 1
        return tok

    def parse(self):
        e = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[1]!r}", position=tok[2])
        return e

    def expr(self):
        left = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            left = BinOp(op, left, self.term())
        return left

    def term(self):
        left = self.factor()
        while self.peek()[0] == "*":
            self.take()
            left = BinOp("*", left, self.factor())
        return left

    def factor(self):
        kind, text, start = self.peek()
        if kind == "num":
            self.take()
            num = int(text)
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.take("num")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError("zero denominator", position=den_tok[2])
                return Lit(Fraction(num, den))
            return Lit(Fraction(num))
        if kind == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if kind == "name":
            self.take()
            if text == "sum":
                self.take("(")
                self.take(")")
                return CoordSum()
            coord = re.fullmatch(r"x(\d+)", text)
            if coord:
                k = int(coord.group(1))
                if k < 1:
                    raise ParseError("coordinate indices start at x1", position=start)
                if self.d is not None and k > self.d:
                    raise DimensionError(
                        f"x{k} out of range for dimension {self.d}"
                    )
                return Coord(k)
            if text in _FUNCTIONS:
                lo, hi = _FUNCTIONS[text]
                self.take("(")
                args = [self.expr()]
                while self.peek()[0] == ",":
                    self.take()
                    args.append(self.expr())
                self.take(")")
                if len(args) < lo or (hi is not None and len(args) > hi):
                    raise ParseError(
                        f"{text} takes {lo if hi == lo else f'{lo}..{hi or chr(8734)}'} "
                        f"arguments, got {len(args)}",
                        position=start,
                    )
                return Call(text, tuple(args))
            raise ParseError(f"unknown name {text!r}", position=start)
        raise ParseError(f"unexpected token {text!r}", position=start)


def parse_expr(text: str, d: int | None = None):
    """Parse an expression; with d given, reject coordinates beyond x<d>."""
    return _Parser(_tokenize(text), d).parse()


def evaluate(expr, coords) -> Fraction:
    """Evaluate on a coordinate tuple.  Exact and total."""
    if isinstance(expr, Lit):
        return expr.value
    if isinstance(expr, Coord):
        if expr.index > len(coords):
            raise DimensionError(f"x{expr.index} out of range for {coords!r}")
        return Fraction(coords[expr.index - 1])
    if isinstance(expr, CoordSum):
        return Fraction(sum(coords))
    if isinstance(expr, BinOp):
        a = evaluate(expr.left, coords)
        b = evaluate(expr.right, coords)
        if expr.op == "+":
            return a + b
        if expr.op == "-":
            return a - b
        return a * b
    if isinstance(expr, Call):
        args = [evaluate(a, coords) for a in expr.args]
        if expr.name == "min":
            return min(args)
        if expr.name == "max":
            return max(args)
        if expr.name == "abs":
            return abs(args[0])
        if expr.name == "floor":
            return Fraction(math.floor(args[0]))
        v, lo, hi = args
        if lo > hi:
            raise InvalidInterval(f"clip bounds out of order: {lo} > {hi}")
        return min(max(v, lo), hi)
    raise TypeError(f"not an expression node: {expr!r}")


_PREC = {"+": 1, "-": 1, "*": 2}


def format_expr(expr) -> str:
    """Render with minimal parentheses; parse(format(e)) == e."""

    def fmt(e, parent_prec):
        if isinstance(e, Lit):
            return str(e.value)
        if isinstance(e, Coord):
            return f"x{e.index}"
        if isinstance(e, CoordSum):
            return "sum()"
        if isinstance(e, Call):
            return f"{e.name}({', '.join(fmt(a, 0) for a in e.args)})"
        prec = _PREC[e.op]
        # left-associative grammar: the right child needs parens at equal
        # precedence or the tree would re-parse differently
        text = f"{fmt(e.left, prec)} {e.op} {fmt(e.right, prec + 1)}"
        if prec < parent_prec:
            return f"({text})"
        return text

    return fmt(expr, 0)
