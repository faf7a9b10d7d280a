"""Holomorphic Lefschetz contributions of the fixed sets of Gamma_{1,p}/Gamma_2(p^2).

Only the k^2 and k^1 coefficients of each trace are computed; constant
terms never enter the c2.L computation and are not modelled.

A codimension-1 fixed set X with rotation angle a = e^{i theta} on its
normal bundle contributes, per group element,

    k^2 * 1/2 L^2X * u
  + k^1 * [(-3/2 L^2X - 1/2 LDX - 1/2 LX^2) * u - LX^2 * v]

with u = 1/(1 - a^{-1}) and v = a^{-1}/(1 - a^{-1})^2. A codimension-2
fixed set with angles (a, b) contributes k * chi * deg(L|X) / ((1 - a^{-1})(1 - b^{-1})).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from . import closed_forms
from .cyclotomic import (
    RootOfUnity,
    double_pole_sum,
    lemma7_sum,
    single_pole_sum,
    unit_root_pair_sum,
)
from .poly import KAPPA, P, Poly

Angles = Tuple[RootOfUnity, ...]


@dataclass(frozen=True)
class ExplicitElements:
    """Group elements listed by their rotation angles, one per normal direction."""

    elements: Tuple[Angles, ...]

    def expand(self, p_val: Optional[int] = None) -> Tuple[Angles, ...]:
        return self.elements


@dataclass(frozen=True)
class CyclicElements:
    """Elements (fixed..., xi^j) for j = 1..n-1, xi a primitive n-th root, n a Poly in p.

    Summed in closed form; :meth:`expand` lists them for a concrete prime.
    """

    order: Poly
    fixed: Angles = ()

    def expand(self, p_val: int) -> Tuple[Angles, ...]:
        n = int(self.order(p_val))
        return tuple(self.fixed + (RootOfUnity(n, j),) for j in range(1, n))


ElementSpec = Union[ExplicitElements, CyclicElements]


@dataclass(frozen=True)
class FixedSetRecord:
    case_id: str
    codim: int
    elements: ElementSpec
    component_count: Poly
    # codim 1: "L2X", "LDX", "LX2"; codim 2: "degL"
    per_component: Dict[str, Poly] = field(default_factory=dict)
    chi_sign: int = 1
    extra_factor: Fraction = Fraction(1)
    description: str = ""

    def __post_init__(self):
        if self.codim not in (1, 2):
            raise ValueError("codimension must be 1 or 2")
        if isinstance(self.elements, ExplicitElements):
            for el in self.elements.elements:
                if len(el) != self.codim:
                    raise ValueError(f"{self.case_id}: need {self.codim} angle(s) per element")
        elif len(self.elements.fixed) + 1 != self.codim:
            raise ValueError(f"{self.case_id}: need {self.codim} angle(s) per element")
        if self.chi_sign not in (1, -1):
            raise ValueError("chi_sign must be +1 or -1")


@dataclass(frozen=True)
class TracePoly:
    """k^2 and k^1 coefficients of a trace, as polynomials in p (raw, not normalized)."""

    k2: Poly
    k1: Poly

    def __add__(self, other: "TracePoly") -> "TracePoly":
        return TracePoly(self.k2 + other.k2, self.k1 + other.k1)

    def __mul__(self, c) -> "TracePoly":
        return TracePoly(self.k2 * c, self.k1 * c)

    __rmul__ = __mul__

    def normalized(self) -> Tuple[Poly, Poly]:
        """Brackets in units of kappa^2/34560."""
        unit = closed_forms.TRACE_UNIT
        return self.k2.divexact(unit), self.k1.divexact(unit)

    def evaluate(self, p_val) -> Tuple[Fraction, Fraction]:
        return self.k2(p_val), self.k1(p_val)

    def as_poly(self) -> Poly:
        """k^2 * k2 + k * k1 as a Poly in p and k."""
        from .poly import K as WEIGHT

        return WEIGHT**2 * self.k2 + WEIGHT * self.k1

    def as_dict(self, case: str, normalized: bool = False) -> dict:
        k2, k1 = self.normalized() if normalized else (self.k2, self.k1)
        out = {"case": case, "k2": str(k2), "k1": str(k1)}
        if normalized:
            out["unit"] = "(p^2-1)^2/34560"
        return out


ZERO_TRACE = TracePoly(Poly(), Poly())


def _builtin():
    kappa = KAPPA
    half = Fraction(1, 2)
    minus_one = RootOfUnity(2, 1)
    # Humbert surface H1*: each component is X(p^2) x X(p^2)
    l2x_h1 = P**8 * kappa**2 / 288
    deg_l_curve = P**4 * kappa / 24  # deg L on X(p^2)
    ldx_h1 = P**2 * kappa * deg_l_curve
    h1_count = P**6
    boundary_lx2 = -(P**6) * kappa / 12
    rho = RootOfUnity(3, 1)
    rho2 = RootOfUnity(3, 2)
    return (
        FixedSetRecord(
            "1a",
            1,
            ExplicitElements(((minus_one,),)),
            h1_count,
            {"L2X": l2x_h1, "LDX": ldx_h1, "LX2": -l2x_h1},
            description="nu_1 fixing H1*",
        ),
        FixedSetRecord(
            "1b",
            1,
            ExplicitElements(((minus_one,),)),
            h1_count,
            {"L2X": 6 * l2x_h1, "LDX": 3 * ldx_h1, "LX2": -6 * l2x_h1},
            description="nu_2 fixing H2*",
        ),
        FixedSetRecord(
            "1c",
            1,
            CyclicElements(P**2),
            P**4 * (P**3 - 1) / 2,
            {"L2X": Poly(), "LDX": -boundary_lx2, "LX2": boundary_lx2},
            description="boundary components, stabilizer of order p^2",
        ),
        FixedSetRecord(
            "2a",
            2,
            ExplicitElements(((minus_one, RootOfUnity(4, 3)), (minus_one, RootOfUnity(4, 1)))),
            P**10 * kappa / 4,
            {"degL": deg_l_curve},
            description="zeta_1 of order 4 fixing C1*",
        ),
        FixedSetRecord(
            "2b",
            2,
            ExplicitElements(((rho, rho2), (rho2, rho))),
            P**10 * kappa / 6,
            {"degL": deg_l_curve},
            description="zeta_2 of order 6 fixing C2*",
        ),
        FixedSetRecord(
            "2c_B1",
            2,
            CyclicElements(P**2, (minus_one,)),
            P**8 * (P**2 + P - 2) / 2,
            {"degL": deg_l_curve},
            chi_sign=-1,
            description="B1*: H1* meeting the boundary",
        ),
        FixedSetRecord(
            "2c_B2",
            2,
            CyclicElements(P**2, (minus_one,)),
            P**8 * (P**2 + P - 2) / 2,
            {"degL": deg_l_curve},
            chi_sign=-1,
            extra_factor=Fraction(3),
            description="B2*: three times the B1* contribution",
        ),
    )


_BUILTIN = _builtin()
CASE_IDS = tuple(r.case_id for r in _BUILTIN)


def builtin_fixed_sets() -> Tuple[FixedSetRecord, ...]:
    return _BUILTIN


def fixed_set(case_id: str) -> FixedSetRecord:
    for rec in _BUILTIN:
        if rec.case_id == case_id:
            return rec
    raise KeyError(f"unknown case {case_id!r}; expected one of {', '.join(CASE_IDS)}")


def pole_sums(rec: FixedSetRecord):
    """(sum u, sum v) over the elements of a codimension-1 record."""
    elems = rec.elements
    if isinstance(elems, CyclicElements):
        return lemma7_sum("simple", elems.order), lemma7_sum("double_pole", elems.order)
    angles = [el[0] for el in elems.elements]
    return Poly.const(single_pole_sum(angles)), Poly.const(double_pole_sum(angles))


def pair_sum(rec: FixedSetRecord) -> Poly:
    """sum over elements of 1/((1 - a^{-1})(1 - b^{-1})) for a codimension-2 record."""
    elems = rec.elements
    if isinstance(elems, CyclicElements):
        (fixed,) = elems.fixed
        return lemma7_sum("simple", elems.order) * single_pole_sum([fixed])
    return Poly.const(unit_root_pair_sum(list(elems.elements)))


def trace_codim1(rec: FixedSetRecord) -> TracePoly:
    if rec.codim != 1:
        raise ValueError(f"case {rec.case_id} has codimension {rec.codim}, expected 1")
    u, v = pole_sums(rec)
    l2x, ldx, lx2 = (rec.per_component[key] for key in ("L2X", "LDX", "LX2"))
    k2 = l2x * u / 2
    k1 = (-Fraction(3, 2) * l2x - ldx / 2 - lx2 / 2) * u - lx2 * v
    scale = rec.component_count * rec.extra_factor * rec.chi_sign
    return TracePoly(k2 * scale, k1 * scale)


def trace_codim2(rec: FixedSetRecord) -> TracePoly:
    if rec.codim != 2:
        raise ValueError(f"case {rec.case_id} has codimension {rec.codim}, expected 2")
    k1 = pair_sum(rec) * rec.per_component["degL"] * rec.component_count
    return TracePoly(Poly(), k1 * rec.extra_factor * rec.chi_sign)


def trace(rec: FixedSetRecord) -> TracePoly:
    return trace_codim1(rec) if rec.codim == 1 else trace_codim2(rec)


def all_traces() -> Dict[str, TracePoly]:
    return {rec.case_id: trace(rec) for rec in _BUILTIN}


def total_trace_sum() -> TracePoly:
    total = ZERO_TRACE
    for t in all_traces().values():
        total = total + t
    return total


def component_count_derivations() -> Dict[str, Tuple[Poly, Poly]]:
    """Component counts rederived from covering degrees, next to the recorded ones.

    Every division here must be exact in Q[p].
    """
    d = P**13 * KAPPA
    h1 = (d / 2).divexact(P**7 * KAPPA / 2)
    boundary = P**5 * KAPPA / 2 + P**3 * (P * (P - 1) / 2)
    b1 = P**4 * P**3 * (P * (P - 1) / 2) + P**3 * (P**5 * KAPPA / 2)
    return {
        "1a": (h1, fixed_set("1a").component_count),
        "1c": (boundary, fixed_set("1c").component_count),
        "2c_B1": (b1, fixed_set("2c_B1").component_count),
    }
