"""Exact sums of rational functions of roots of unity.

Elements of Q(zeta_N) are accumulated in the group ring Q[x]/(x^N - 1) and
reduced modulo the N-th cyclotomic polynomial only when a value is read
out, at which point all non-constant coordinates must vanish for the sum to
be rational.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .errors import DomainError, NotRationalError, OrderOverflowError
from .poly import Poly

MAX_ORDER = 10_000


@dataclass(frozen=True)
class RootOfUnity:
    """``exp(2*pi*i * exponent / order)``."""

    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")

    def is_trivial(self) -> bool:
        return self.exponent % self.order == 0

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    def __complex__(self):
        return cmath.exp(2j * math.pi * self.exponent / self.order)

    def __str__(self):
        return f"zeta_{self.order}^{self.exponent % self.order}"


# ---------------------------------------------------------------------------
# closed forms


def lemma7_sum(kind: str, n: Union[int, Poly]):
    """Sums over the nontrivial n-th roots of unity.

    ``simple``:      sum_j 1/(1 - xi^j)         = (n - 1)/2
    ``double_pole``: sum_j xi^j/(1 - xi^j)^2    = -(n^2 - 1)/12

    ``n`` may be an integer (result is a Fraction) or a Poly such as
    ``p^2`` (result is a Poly).
    """
    if isinstance(n, Poly):
        if n.is_constant():
            n = n.constant_value()
            if n.denominator != 1:
                raise DomainError("order must be an integer")
            n = int(n)
        else:
            return _closed_form(kind, n)
    if n < 2:
        raise DomainError(f"order must be at least 2, got {n}")
    return _closed_form(kind, Fraction(n))


def _closed_form(kind, n):
    if kind == "simple":
        return (n - 1) / 2
    if kind == "double_pole":
        return -(n * n - 1) / 12
    raise ValueError(f"unknown sum kind {kind!r}")


# ---------------------------------------------------------------------------
# cyclotomic field arithmetic


def _mobius(n: int) -> int:
    result, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


def _divisors(n: int) -> List[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _mul_binomial(a: List[int], d: int) -> List[int]:
    # a(x) * (x^d - 1)
    out = [0] * (len(a) + d)
    for i, c in enumerate(a):
        out[i + d] += c
        out[i] -= c
    return out


def _div_binomial(a: List[int], d: int) -> List[int]:
    # exact a(x) / (x^d - 1), computed from the top coefficient down
    a = list(a)
    q = [0] * (len(a) - d)
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            q[i - d] = c
            a[i] -= c
            a[i - d] += c
    if any(a):
        raise ArithmeticError("inexact division by x^d - 1")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    num, den = [1], []
    for d in _divisors(n):
        mu = _mobius(n // d)
        if mu == 1:
            num = _mul_binomial(num, d)
        elif mu == -1:
            den.append(d)
    for d in den:
        num = _div_binomial(num, d)
    return tuple(num)


class CyclotomicSum:
    """Accumulator for an element of Q(zeta_N), in the group-ring representation."""

    def __init__(self, order: int, coords: Dict[int, Fraction] = None):
        if order > MAX_ORDER:
            raise OrderOverflowError(f"cyclotomic order {order} exceeds {MAX_ORDER}")
        self.order = order
        self.coords: Dict[int, Fraction] = {}
        for e, c in (coords or {}).items():
            e %= order
            self.coords[e] = self.coords.get(e, 0) + c

    @classmethod
    def power(cls, order: int, exponent: int) -> "CyclotomicSum":
        return cls(order, {exponent: Fraction(1)})

    @classmethod
    def inv_one_minus(cls, order: int, exponent: int) -> "CyclotomicSum":
        """1/(1 - x) for x = zeta_order^exponent != 1.

        Uses (1 - x) * sum_{i<m} i x^i = -m where m is the order of x.
        """
        m = order // math.gcd(exponent % order, order)
        if m == 1:
            raise ZeroDivisionError("1 - x vanishes for x = 1")
        step = exponent % order
        coords = {}
        for i in range(1, m):
            e = (i * step) % order
            coords[e] = coords.get(e, 0) + Fraction(-i, m)
        return cls(order, coords)

    def __add__(self, other: "CyclotomicSum") -> "CyclotomicSum":
        self._check(other)
        out = dict(self.coords)
        for e, c in other.coords.items():
            out[e] = out.get(e, 0) + c
        return CyclotomicSum(self.order, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicSum(self.order, {e: c * other for e, c in self.coords.items()})
        self._check(other)
        n = self.order
        out: Dict[int, Fraction] = {}
        for e1, c1 in self.coords.items():
            if not c1:
                continue
            for e2, c2 in other.coords.items():
                e = (e1 + e2) % n
                out[e] = out.get(e, 0) + c1 * c2
        return CyclotomicSum(n, out)

    __rmul__ = __mul__

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("mismatched cyclotomic orders")

    def __complex__(self):
        return sum(
            (complex(c) * cmath.exp(2j * math.pi * e / self.order) for e, c in self.coords.items()),
            0j,
        )

    def reduced(self) -> List[Fraction]:
        """Coordinates in the power basis 1, z, ..., z^(phi(N)-1)."""
        phi = cyclotomic_polynomial(self.order)
        deg = len(phi) - 1
        denom = reduce(math.lcm, (c.denominator for c in self.coords.values()), 1)
        vec = [0] * max(self.order, deg + 1)
        for e, c in self.coords.items():
            vec[e] += c.numerator * (denom // c.denominator)
        # Phi_N is monic with integer coefficients, so the reduction stays integral
        for i in range(len(vec) - 1, deg - 1, -1):
            c = vec[i]
            if c:
                base = i - deg
                for j, f in enumerate(phi):
                    if f:
                        vec[base + j] -= c * f
        return [Fraction(v, denom) for v in vec[:deg]] if deg else [Fraction(0)]

    def to_rational(self) -> Fraction:
        coords = self.reduced()
        if any(coords[1:]):
            raise NotRationalError(f"sum is not rational in Q(zeta_{self.order})")
        return coords[0]


def common_order(roots: Iterable[RootOfUnity]) -> int:
    order = reduce(math.lcm, (r.order for r in roots), 1)
    if order > MAX_ORDER:
        raise OrderOverflowError(f"common order {order} exceeds {MAX_ORDER}")
    return order


def _lift(root: RootOfUnity, order: int) -> int:
    return root.exponent * (order // root.order)


def single_pole_sum(angles: Sequence[RootOfUnity]) -> Fraction:
    """sum over angles a of 1/(1 - a^{-1})."""
    n = common_order(angles)
    total = CyclotomicSum(n)
    for a in angles:
        total = total + CyclotomicSum.inv_one_minus(n, -_lift(a, n))
    return total.to_rational()


def double_pole_sum(angles: Sequence[RootOfUnity]) -> Fraction:
    """sum over angles a of a^{-1}/(1 - a^{-1})^2."""
    n = common_order(angles)
    total = CyclotomicSum(n)
    for a in angles:
        e = -_lift(a, n)
        inv = CyclotomicSum.inv_one_minus(n, e)
        total = total + CyclotomicSum.power(n, e) * inv * inv
    return total.to_rational()


def unit_root_pair_sum(
    elements: Sequence[Tuple[RootOfUnity, RootOfUnity]], signs: Sequence[int] = None
) -> Fraction:
    """sum_i sign_i / ((1 - alpha_i^{-1})(1 - beta_i^{-1})), exactly.

    Raises NotRationalError when the total is not Galois-stable and
    OrderOverflowError when the common order exceeds 10^4.
    """
    if signs is None:
        signs = [1] * len(elements)
    if len(signs) != len(elements):
        raise ValueError("one sign per element required")
    if not elements:
        return Fraction(0)
    n = common_order(r for pair in elements for r in pair)
    total = CyclotomicSum(n)
    for (alpha, beta), sign in zip(elements, signs):
        if sign not in (1, -1):
            raise ValueError("signs must be +1 or -1")
        term = CyclotomicSum.inv_one_minus(n, -_lift(alpha, n)) * CyclotomicSum.inv_one_minus(
            n, -_lift(beta, n)
        )
        total = total + term * sign
    return total.to_rational()
