"""Exact polynomials in the two variables ``p`` and ``k``.

Every closed form handled by this package lives in Q[p, k]: ``p`` is the
prime of the polarization and ``k`` the weight of the modular forms.
Coefficients are :class:`fractions.Fraction`, so all arithmetic is exact.

>>> kappa = P**2 - 1
>>> str((P - 1) * (P + 1))
'p^2 - 1'
>>> kappa(5)
Fraction(24, 1)
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterator, Optional, Tuple, Union

from .errors import ParseError

Exponent = Tuple[int, int]  # (degree in p, degree in k)
Scalar = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Poly:
    """Immutable element of Q[p, k], stored as ``{(deg_p, deg_k): coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Dict[Exponent, Scalar]] = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = _as_fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    # construction

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls({(0, 0): value})

    @classmethod
    def coerce(cls, value) -> "Poly":
        if isinstance(value, Poly):
            return value
        return cls.const(_as_fraction(value))

    # inspection

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(sorted(self._terms.items(), key=_render_key))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0, 0), Fraction(0))

    def coeff(self, deg_p: int, deg_k: int = 0) -> Fraction:
        return self._terms.get((deg_p, deg_k), Fraction(0))

    def coeff_k(self, deg_k: int) -> "Poly":
        """Coefficient of ``k**deg_k`` as a polynomial in ``p``."""
        return Poly({(i, 0): c for (i, j), c in self._terms.items() if j == deg_k})

    def degree(self, var: str = "p") -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        idx = _var_index(var)
        return max((e[idx] for e in self._terms), default=-1)

    # arithmetic

    def __add__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Division by a nonzero constant only; see :meth:`divexact` otherwise."""
        if isinstance(other, Poly):
            if not other.is_constant():
                raise ZeroDivisionError("division by a non-constant polynomial")
            other = other.constant_value()
        other = _as_fraction(other)
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return Poly({e: c / other for e, c in self._terms.items()})

    def divexact(self, divisor: "Poly") -> "Poly":
        """Exact quotient ``self / divisor``; raises ArithmeticError on a remainder.

        Single-divisor lex division: when the quotient is exact, the leading
        term of every intermediate remainder is divisible by the divisor's.
        """
        divisor = Poly.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = max(divisor._terms)
        lead_c = divisor._terms[lead_e]
        rem = self
        quot: Dict[Exponent, Fraction] = {}
        while rem:
            e = max(rem._terms)
            if e[0] < lead_e[0] or e[1] < lead_e[1]:
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
            qe = (e[0] - lead_e[0], e[1] - lead_e[1])
            qc = rem._terms[e] / lead_c
            quot[qe] = quot.get(qe, 0) + qc
            rem = rem - Poly({qe: qc}) * divisor
        return Poly(quot)

    # comparison

    def __eq__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation

    def subs(self, p=None, k=None) -> "Poly":
        """Substitute exact values for ``p`` and/or ``k``; the result is a Poly."""
        pv = None if p is None else _as_fraction(p)
        kv = None if k is None else _as_fraction(k)
        out: Dict[Exponent, Fraction] = {}
        for (i, j), c in self._terms.items():
            if pv is not None:
                c, i = c * pv**i, 0
            if kv is not None:
                c, j = c * kv**j, 0
            out[(i, j)] = out.get((i, j), 0) + c
        return Poly(out)

    def __call__(self, p=None, k=None):
        """Evaluate; returns a Fraction when no variable is left, else a Poly."""
        out = self.subs(p=p, k=k)
        return out.constant_value() if out.is_constant() else out

    # rendering

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self):
            mono = _monomial(e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag}*{mono}"
            else:
                body = f"({mag})*{mono}"
            if idx == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Poly('{self}')"


def _var_index(var: str) -> int:
    if var == "p":
        return 0
    if var == "k":
        return 1
    raise ValueError(f"unknown variable {var!r}")


def _render_key(item):
    (i, j), _ = item
    return (-j, -i)


def _monomial(e: Exponent) -> str:
    parts = []
    for name, d in zip("pk", e):
        if d == 1:
            parts.append(name)
        elif d > 1:
            parts.append(f"{name}^{d}")
    return "*".join(parts)


ZERO = Poly()
ONE = Poly.const(1)
P = Poly({(1, 0): 1})
K = Poly({(0, 1): 1})
KAPPA = P**2 - 1


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _PolyParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            self.error(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok)
        return tok

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        out = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return out

    def expr(self) -> Poly:
        out = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> Poly:
        out = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op[1] == "*":
                out = out * rhs
            else:
                if not rhs.is_constant():
                    self.error("division by a non-constant", op)
                if rhs.is_zero():
                    self.error("division by zero", op)
                out = out / rhs
        return out

    def unary(self) -> Poly:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer literal", tok)
            base = base ** int(tok[1])
        return base

    def atom(self) -> Poly:
        tok = self.take()
        kind, value, _ = tok
        if kind == "int":
            return Poly.const(int(value))
        if kind == "name":
            if value == "p":
                return P
            if value == "k":
                return K
            self.error(f"unknown variable {value!r}", tok)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        self.error(f"unexpected {value or 'end of input'!r}", tok)


def parse_poly(text: str) -> Poly:
    """Parse ``text`` in the ``+ - * / ^`` grammar over integers, ``p`` and ``k``.

    ``/`` accepts only nonzero constant divisors and ``^`` only nonnegative
    integer literals.
    """
    return _PolyParser(text).parse()
