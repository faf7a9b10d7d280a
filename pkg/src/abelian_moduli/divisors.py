"""Divisor classes and the triple intersection form on the coarse basis L, R, D, E."""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple, Union

from . import closed_forms
from ._util import require_prime
from .errors import DegreeError, ParseError, TableError
from .poly import K as WEIGHT, KAPPA, ONE, Poly, parse_poly

BASIS = ("L", "R", "D", "E")
_ORDER = {s: i for i, s in enumerate(BASIS)}

Monomial = Tuple[str, ...]
Coefficient = Union[int, Fraction, Poly]


def monomial(*symbols: str) -> Monomial:
    """Canonical (sorted) key for a product of basis symbols."""
    for s in symbols:
        if s not in _ORDER:
            raise KeyError(f"unknown basis symbol {s!r}")
    return tuple(sorted(symbols, key=_ORDER.__getitem__))


ALL_CUBIC_MONOMIALS: Tuple[Monomial, ...] = tuple(
    itertools.combinations_with_replacement(BASIS, 3)
)


class DivisorClass:
    """Formal combination of L, R, D, E with coefficients in Q[p, k]."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[str, Coefficient]] = None, **kw: Coefficient):
        merged = dict(coeffs or {})
        merged.update(kw)
        clean = {}
        for s, c in merged.items():
            if s not in _ORDER:
                raise KeyError(f"unknown basis symbol {s!r}")
            c = Poly.coerce(c)
            if c:
                clean[s] = c
        self._coeffs = clean

    @classmethod
    def basis(cls, symbol: str) -> "DivisorClass":
        return cls({symbol: 1})

    def __getitem__(self, symbol: str) -> Poly:
        if symbol not in _ORDER:
            raise KeyError(symbol)
        return self._coeffs.get(symbol, Poly())

    def items(self):
        return ((s, self._coeffs[s]) for s in BASIS if s in self._coeffs)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass({s: self[s] + other[s] for s in BASIS})

    def __neg__(self):
        return DivisorClass({s: -c for s, c in self._coeffs.items()})

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __mul__(self, scalar: Coefficient) -> "DivisorClass":
        scalar = Poly.coerce(scalar)
        return DivisorClass({s: c * scalar for s, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __str__(self):
        if not self._coeffs:
            return "0"
        return " + ".join(f"({c})*{s}" for s, c in self.items())

    def __repr__(self):
        return f"DivisorClass({self})"


L, R, D, E = (DivisorClass.basis(s) for s in BASIS)


@dataclass(frozen=True)
class Overlap:
    """A monomial listed in more than one table section."""

    monomial: Monomial
    sources: Tuple[Tuple[str, Poly], ...]

    @property
    def consistent(self) -> bool:
        return len({v for _, v in self.sources}) == 1


@dataclass(frozen=True)
class TrilinearForm:
    """Totally symmetric triple intersection form; keyed by sorted monomials."""

    entries: Mapping[Monomial, Poly]
    overlaps: Tuple[Overlap, ...] = ()
    source: str = "<memory>"

    def __post_init__(self):
        missing = [m for m in ALL_CUBIC_MONOMIALS if m not in self.entries]
        if missing:
            raise TableError("missing monomial(s): " + ", ".join(".".join(m) for m in missing))
        extra = set(self.entries) - set(ALL_CUBIC_MONOMIALS)
        if extra:
            raise TableError("unexpected keys: " + ", ".join(".".join(m) for m in sorted(extra)))

    def value(self, a: str, b: str, c: str) -> Poly:
        return self.entries[monomial(a, b, c)]

    def replace(self, mono: Monomial, value: Poly) -> "TrilinearForm":
        """A copy with one entry changed (what-if analyses)."""
        entries = dict(self.entries)
        entries[monomial(*mono)] = Poly.coerce(value)
        return TrilinearForm(entries, (), self.source + " (modified)")


_LINE = re.compile(r"^\s*([A-Za-z])\s*\.\s*([A-Za-z])\s*\.\s*([A-Za-z])\s*=\s*(.+?)\s*$")


def load_table(text: str, source: str = "<string>") -> TrilinearForm:
    """Parse a table file.

    Lines are ``A.B.C = <polynomial in p>``; ``#`` starts a comment and
    ``[name]`` starts a section. A monomial may occur at most once per
    section; a repeat in another section is an overlap whose values must
    agree exactly.
    """
    section = "(top)"
    per_section: Dict[str, Dict[Monomial, Poly]] = {}
    order: List[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip() or f"section@{lineno}"
            continue
        m = _LINE.match(line)
        if m is None:
            raise TableError(f"{source}:{lineno}: cannot parse line {raw.strip()!r}")
        syms = [s.upper() for s in m.group(1, 2, 3)]
        bad = [s for s in syms if s not in _ORDER]
        if bad:
            raise TableError(f"{source}:{lineno}: unknown symbol {bad[0]!r}")
        try:
            value = parse_poly(m.group(4))
        except ParseError as exc:
            raise TableError(f"{source}:{lineno}: {exc}") from None
        if value.degree("k") > 0:
            raise TableError(f"{source}:{lineno}: entries must not depend on k")
        key = monomial(*syms)
        bucket = per_section.setdefault(section, {})
        if section not in order:
            order.append(section)
        if key in bucket:
            raise TableError(f"{source}:{lineno}: duplicate monomial {'.'.join(key)} in [{section}]")
        bucket[key] = value

    entries: Dict[Monomial, Poly] = {}
    seen: Dict[Monomial, List[Tuple[str, Poly]]] = {}
    for name in order:
        for key, value in per_section[name].items():
            seen.setdefault(key, []).append((name, value))
    overlaps = []
    for key, sources in seen.items():
        if len(sources) > 1:
            ov = Overlap(key, tuple(sources))
            if not ov.consistent:
                detail = " vs ".join(f"{v} [{n}]" for n, v in sources)
                raise TableError(f"overlap inconsistency for {'.'.join(key)}: {detail}")
            overlaps.append(ov)
        entries[key] = sources[0][1]
    return TrilinearForm(entries, tuple(overlaps), source)


def default_table_path() -> Path:
    env = os.environ.get("MODULI_TABLE_PATH")
    if env:
        return Path(env)
    return Path(str(resources.files("abelian_moduli") / "data" / "tables_hkw.txt"))


def load_table_file(path: Union[str, Path, None] = None) -> TrilinearForm:
    path = Path(path) if path is not None else default_table_path()
    return load_table(path.read_text(encoding="utf-8"), str(path))


@lru_cache(maxsize=None)
def shipped_form() -> TrilinearForm:
    """The packaged table (ignores MODULI_TABLE_PATH)."""
    text = resources.files("abelian_moduli").joinpath("data/tables_hkw.txt").read_text("utf-8")
    return load_table(text, "tables_hkw.txt")


@dataclass(frozen=True)
class OverlapCheck:
    name: str
    values: Tuple[Poly, ...]
    expected: Poly
    passed: bool


def overlap_identities(form: TrilinearForm) -> List[OverlapCheck]:
    """The four cross-table identities plus the unpaired zero entry L.L.D."""
    found = {ov.monomial: ov for ov in form.overlaps}
    checks = []
    for mono, expected in closed_forms.TABLE_OVERLAPS.items():
        ov = found.get(mono)
        values = tuple(v for _, v in ov.sources) if ov else (form.entries[mono],)
        ok = ov is not None and len(values) == 2 and all(v == expected for v in values)
        checks.append(OverlapCheck(".".join(mono), values, expected, ok))
    lld = form.value("L", "L", "D")
    checks.append(OverlapCheck("L.L.D", (lld,), Poly(), lld == 0))
    return checks


# ---------------------------------------------------------------------------
# products


class DivisorProduct:
    """Homogeneous formal product of divisor classes: ``{sorted monomial: coeff}``."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Monomial, Poly]):
        self.degree = degree
        self._terms = {m: c for m, c in terms.items() if c}

    @classmethod
    def from_class(cls, d: DivisorClass) -> "DivisorProduct":
        return cls(1, {(s,): c for s, c in d.items()})

    def __mul__(self, other: "DivisorProduct") -> "DivisorProduct":
        out: Dict[Monomial, Poly] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial(*(m1 + m2))
                out[m] = out.get(m, Poly()) + c1 * c2
        return DivisorProduct(self.degree + other.degree, out)

    def __add__(self, other: "DivisorProduct") -> "DivisorProduct":
        if self.degree != other.degree:
            raise DegreeError(f"cannot add products of degree {self.degree} and {other.degree}")
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Poly()) + c
        return DivisorProduct(self.degree, out)

    def scale(self, c: Coefficient) -> "DivisorProduct":
        c = Poly.coerce(c)
        return DivisorProduct(self.degree, {m: v * c for m, v in self._terms.items()})

    @property
    def terms(self) -> Dict[Monomial, Poly]:
        return dict(self._terms)

    def evaluate(self, form: TrilinearForm) -> Poly:
        if self.degree != 3:
            raise DegreeError(f"degree must be 3, got {self.degree}")
        total = Poly()
        for m, c in self._terms.items():
            total = total + c * form.entries[m]
        return total


def triple_product(a: DivisorClass, b: DivisorClass, c: DivisorClass, form: TrilinearForm) -> Poly:
    """A.B.C, grouped by the 20 unordered monomials."""
    prod = DivisorProduct.from_class(a) * DivisorProduct.from_class(b) * DivisorProduct.from_class(c)
    return prod.evaluate(form)


def canonical_class() -> DivisorClass:
    """K = 3L - D - R/2 - E/2."""
    half = Fraction(1, 2)
    return DivisorClass(L=3, D=-1, R=-half, E=-half)


def k_cubed(form: TrilinearForm) -> Poly:
    kc = canonical_class()
    return triple_product(kc, kc, kc, form)


def rr_cubic(form: TrilinearForm) -> Poly:
    """(1/12)(kL - D)(kL - D - K)(2kL - 2D - K) as a polynomial in p and k."""
    kc = canonical_class()
    a = L * WEIGHT - D
    return triple_product(a, a - kc, a * 2 - kc, form) / 12


# ---------------------------------------------------------------------------
# fine basis


@dataclass(frozen=True)
class FineSymbol:
    name: str
    count: Poly
    in_census: bool = True


@dataclass(frozen=True)
class FineDivisorModel:
    symbols: Tuple[FineSymbol, ...]

    def census(self, p_val: int) -> int:
        total = sum(s.count(p_val) for s in self.symbols if s.in_census)
        return int(total)

    def census_poly(self) -> Poly:
        return sum((s.count for s in self.symbols if s.in_census), Poly())


_HALF_KAPPA = KAPPA / 2

# T1 carries a 60L coefficient but is not among the counted classes
FINE_MODEL = FineDivisorModel(
    (
        FineSymbol("L", ONE),
        FineSymbol("H1", ONE),
        FineSymbol("H2", ONE),
        FineSymbol("T1", ONE, in_census=False),
        FineSymbol("D0", ONE),
        FineSymbol("Dper", _HALF_KAPPA),
        FineSymbol("E1", ONE),
        FineSymbol("E2", ONE),
        FineSymbol("E3", _HALF_KAPPA),
        FineSymbol("E4", _HALF_KAPPA),
        FineSymbol("E5", _HALF_KAPPA),
    )
)


def divisor_census(p_val: int) -> int:
    """Number of known independent divisor classes, 2p^2 + 4."""
    p_val = require_prime(p_val)
    return FINE_MODEL.census(p_val)


def c_ab(a: int, p_val: int):
    """Weight of a peripheral component: p^2 if standard (a = 0 mod p), else 1."""
    return p_val * p_val if a % p_val == 0 else 1


@dataclass(frozen=True)
class SixtyLTerm:
    symbol: str
    multiplicity: int
    count: Poly
    weighted_by_c: bool

    def as_dict(self):
        return {
            "symbol": self.symbol,
            "multiplicity": self.multiplicity,
            "count": str(self.count),
            "c_rule": self.weighted_by_c,
        }


def sixty_L_class() -> Tuple[SixtyLTerm, ...]:
    """Zero divisor of the weight-60 section Theta^12, on the fine basis."""
    one = ONE
    return (
        SixtyLTerm("H1", 6, one, False),
        SixtyLTerm("T1", 12, one, False),
        SixtyLTerm("D0", 6, one, False),
        SixtyLTerm("Dper", 6, _HALF_KAPPA, True),
        SixtyLTerm("E1", 3, one, False),
        SixtyLTerm("E2", 2, one, False),
        SixtyLTerm("E3", 3, _HALF_KAPPA, True),
        SixtyLTerm("E4", 2, _HALF_KAPPA, True),
        SixtyLTerm("E5", 4, _HALF_KAPPA, True),
    )
