"""Independent reference computations shared by the tests.

Nothing here goes through the package's own parser or trilinear code:
tables are read with sympy, products are brute-forced over ordered triples.
"""

import itertools
import re
from importlib import resources

import sympy

p, k = sympy.symbols("p k")
KAPPA = p**2 - 1
SYMBOLS = ("L", "R", "D", "E")


def sym(text: str) -> sympy.Expr:
    """Parse a p/k expression with sympy (caret as power)."""
    return sympy.expand(sympy.sympify(text.replace("^", "**"), locals={"p": p, "k": k}))


def to_sympy(poly) -> sympy.Expr:
    return sym(str(poly))


def same(poly, expr) -> bool:
    return sympy.expand(to_sympy(poly) - sympy.sympify(expr)) == 0


def raw_table() -> dict:
    """Every ``A.B.C = value`` line of the shipped table, keyed by the sorted triple."""
    text = resources.files("abelian_moduli").joinpath("data/tables_hkw.txt").read_text()
    out = {}
    for line in text.splitlines():
        m = re.match(r"\s*(\w)\.(\w)\.(\w)\s*=\s*(.+)", line)
        if m:
            key = tuple(sorted(m.group(1, 2, 3), key=SYMBOLS.index))
            out.setdefault(key, []).append(sym(m.group(4)))
    return out


def table_value(table, a, b, c):
    return table[tuple(sorted((a, b, c), key=SYMBOLS.index))][0]


def cube(table, coeffs) -> sympy.Expr:
    """(sum coeffs[s] s)^3 summed over all 64 ordered triples."""
    return triple(table, coeffs, coeffs, coeffs)


def triple(table, a, b, c) -> sympy.Expr:
    total = 0
    for x, y, z in itertools.product(SYMBOLS, repeat=3):
        coef = a.get(x, 0) * b.get(y, 0) * c.get(z, 0)
        if coef:
            total += coef * table_value(table, x, y, z)
    return sympy.expand(total)


HALF = sympy.Rational(1, 2)
CANONICAL = {"L": 3, "D": -1, "R": -HALF, "E": -HALF}
