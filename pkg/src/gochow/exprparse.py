"""Polynomial expressions: ``2*c1 - 2*l``, ``(l + c1)^2``, ...

Grammar (``^`` binds tighter than unary minus, which binds tighter than
``*``, which binds tighter than ``+``/``-``; binary operators associate to
the left; multiplication must be written explicitly)::

    expr     := term (("+" | "-") term)*
    term     := unary ("*" unary)*
    unary    := "-" unary | power
    power    := atom ("^" exponent)?
    exponent := ["-"] INT | "(" ["-"] INT ")"
    atom     := INT | NAME | "(" expr ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .polycore import GradedContext, Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position + 1})")
        self.message = message
        self.position = position


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-" or "*"
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Var, Neg, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def tokenize(text: str) -> list[tuple[str, object, int]]:
    if not text.isascii():
        pos = next(i for i, ch in enumerate(text) if not ch.isascii())
        raise ParseError("non-ASCII character", pos)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {self._describe(tok)}", tok[2])
        self.i += 1
        return tok

    @staticmethod
    def _describe(tok):
        return "end of input" if tok[0] == "end" else repr(tok[1])

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("name", "int", "("):
                raise ParseError("implicit multiplication is not supported; use '*'", tok[2])
            raise ParseError(f"unexpected {self._describe(tok)}", tok[2])
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek()[0] == "*":
            self.take()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek()[0] == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            return Pow(base, self.exponent())
        return base

    def exponent(self) -> int:
        paren = self.peek()[0] == "("
        if paren:
            self.take()
        start = self.peek()[2]
        negative = self.peek()[0] == "-"
        if negative:
            self.take()
        tok = self.peek()
        if tok[0] != "int":
            raise ParseError("exponent must be an integer literal", tok[2])
        self.take()
        if negative and tok[1] != 0:
            raise ParseError("negative exponent", start)
        if paren:
            self.take(")")
        return tok[1]

    def atom(self) -> Node:
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return Num(tok[1])
        if tok[0] == "name":
            self.take()
            return Var(tok[1])
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"unexpected {self._describe(tok)}", tok[2])


def parse_expression(text: str) -> Node:
    return _Parser(text).parse()


_PREC = {"+": 1, "-": 1, "*": 2}


def to_text(node: Node) -> str:
    """Canonical printer; ``parse_expression(to_text(a)) == a``."""
    return _print(node, 0)


def _print(node: Node, ctx_prec: int) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Pow):
        base = node.base
        inner = _print(base, 0)
        if not isinstance(base, (Num, Var)):
            inner = f"({inner})"
        return f"{inner}^{node.exponent}"
    if isinstance(node, Neg):
        # unary minus sits between '*' and '^'
        text = "-" + _print(node.operand, 3)
        return f"({text})" if ctx_prec > 3 else text
    if isinstance(node, BinOp):
        prec = _PREC[node.op]
        left = _print(node.left, prec)
        right = _print(node.right, prec + 1)
        sep = "*" if node.op == "*" else f" {node.op} "
        text = f"{left}{sep}{right}"
        return f"({text})" if prec < ctx_prec else text
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Node, ctx: GradedContext) -> Polynomial:
    if isinstance(node, Num):
        return ctx.const(node.value)
    if isinstance(node, Var):
        return ctx.var(node.name)
    if isinstance(node, Neg):
        return -evaluate(node.operand, ctx)
    if isinstance(node, Pow):
        return evaluate(node.base, ctx) ** node.exponent
    left, right = evaluate(node.left, ctx), evaluate(node.right, ctx)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def _check_names(node: Node, ctx: GradedContext, text: str) -> None:
    names = set(ctx.names)
    for kind, value, pos in tokenize(text):
        if kind == "name" and value not in names:
            raise ParseError(f"unknown variable {value!r}", pos)


def parse_poly_expression(text: str, ctx: GradedContext) -> Polynomial:
    """Parse ``text`` into a polynomial over ``ctx``."""
    node = parse_expression(text)
    _check_names(node, ctx, text)
    return evaluate(node, ctx)
