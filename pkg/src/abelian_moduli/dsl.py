"""Parser for divisor intersection expressions.

Examples::

    (3L - D - 1/2 R - 1/2 E)^3
    prod(L, L, R)
    prod(kL - D, kL - D - K, 2kL - 2D - K) / 12

Juxtaposition multiplies (``1/2 R``, ``2kL``); ``K`` is shorthand for the
canonical class; ``p`` and ``k`` are scalars. Multiplying divisor-valued
factors is the intersection product, so a query must have degree 3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple

from .divisors import BASIS, DivisorClass, DivisorProduct, TrilinearForm, canonical_class
from .errors import DegreeError, ParseError
from .poly import K as WEIGHT, P, Poly


class Node:
    pos: int = 0

    def expand(self) -> DivisorProduct:
        raise NotImplementedError

    @property
    def degree(self) -> int:
        return self.expand().degree

    def evaluate(self, form: TrilinearForm) -> Poly:
        prod = self.expand()
        if prod.degree != 3:
            raise DegreeError(f"degree must be 3, got {prod.degree}")
        return prod.evaluate(form)


def _scalar(value: Poly) -> DivisorProduct:
    return DivisorProduct(0, {(): value})


@dataclass
class Num(Node):
    value: int
    pos: int = 0

    def expand(self):
        return _scalar(Poly.const(self.value))


@dataclass
class Var(Node):
    name: str
    pos: int = 0

    def expand(self):
        return _scalar(P if self.name == "p" else WEIGHT)


@dataclass
class Sym(Node):
    name: str
    pos: int = 0

    def expand(self):
        cls = canonical_class() if self.name == "K" else DivisorClass.basis(self.name)
        return DivisorProduct.from_class(cls)


@dataclass
class Neg(Node):
    arg: Node
    pos: int = 0

    def expand(self):
        return self.arg.expand().scale(-1)


@dataclass
class Sum(Node):
    left: Node
    right: Node
    sign: int
    pos: int = 0

    def expand(self):
        a, b = self.left.expand(), self.right.expand()
        if a.degree != b.degree:
            raise DegreeError(
                f"cannot add terms of degree {a.degree} and {b.degree} (at position {self.pos})"
            )
        return a + (b if self.sign > 0 else b.scale(-1))


@dataclass
class Prod(Node):
    factors: Tuple[Node, ...]
    pos: int = 0

    def expand(self):
        out = _scalar(Poly.const(1))
        for f in self.factors:
            out = out * f.expand()
        return out


@dataclass
class Quot(Node):
    num: Node
    den: Node
    pos: int = 0

    def expand(self):
        d = self.den.expand()
        if d.degree != 0:
            raise ParseError("division by a divisor class", "", self.pos)
        value = d.terms.get((), Poly())
        if not value.is_constant() or value.is_zero():
            raise ParseError("division by a non-constant or zero scalar", "", self.pos)
        return self.num.expand().scale(Poly.const(1) / value)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(\S))")
_SYMBOLS = set(BASIS) | {"K"}


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == m.start() or not m.group(0).strip():
            break
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            word, start = m.group(2), m.start(2)
            if word == "prod":
                tokens.append(("prod", word, start))
            else:
                # single-letter names may be juxtaposed: "kL" is k*L
                for i, ch in enumerate(word):
                    tokens.append(("name", ch, start + i))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def is_op(self, *ops):
        t = self.peek()
        return t[0] == "op" and t[1] in ops

    def parse(self) -> Node:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.is_op("+", "-"):
            tok = self.take()
            rhs = self.term()
            node = Sum(node, rhs, 1 if tok[1] == "+" else -1, tok[2])
        return node

    def _starts_factor(self):
        t = self.peek()
        return t[0] in ("int", "name", "prod") or (t[0] == "op" and t[1] == "(")

    def term(self) -> Node:
        start = self.peek()[2]
        node = self.factor()
        while True:
            if self.is_op("*"):
                self.take()
                node = Prod((node, self.factor()), start)
            elif self.is_op("/"):
                tok = self.take()
                node = Quot(node, self.factor(), tok[2])
            elif self._starts_factor():
                node = Prod((node, self.factor()), start)
            else:
                return node

    def factor(self) -> Node:
        if self.is_op("-", "+"):
            tok = self.take()
            inner = self.factor()
            return Neg(inner, tok[2]) if tok[1] == "-" else inner
        base = self.atom()
        if self.is_op("^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer literal", tok)
            n = int(tok[1])
            return Prod((base,) * n, base.pos) if n else Num(1, base.pos)
        return base

    def atom(self) -> Node:
        tok = self.take()
        kind, value, pos = tok
        if kind == "int":
            return Num(int(value), pos)
        if kind == "name":
            if value in ("p", "k"):
                return Var(value, pos)
            if value in _SYMBOLS:
                return Sym(value, pos)
            self.fail(f"unknown symbol {value!r}", tok)
        if kind == "prod":
            open_tok = self.take()
            if open_tok[1] != "(":
                self.fail("expected '(' after prod", open_tok)
            args = [self.expr()]
            while self.is_op(","):
                self.take()
                args.append(self.expr())
            close = self.take()
            if close[1] != ")":
                self.fail("expected ')'", close)
            return Prod(tuple(args), pos)
        if kind == "op" and value == "(":
            inner = self.expr()
            close = self.take()
            if close[1] != ")":
                self.fail("expected ')'", close)
            return inner
        self.fail(f"unexpected {value or 'end of input'!r}", tok)


def parse_divisor_expr(text: str) -> Node:
    return _Parser(text).parse()


def intersect(text: str, form: TrilinearForm) -> Poly:
    """Parse and evaluate a degree-3 intersection query."""
    return parse_divisor_expr(text).evaluate(form)
