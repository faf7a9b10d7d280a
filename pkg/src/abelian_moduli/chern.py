"""Chern numbers of the desingularized moduli space.

c1.c2 is assembled as -K.c2 on a blow-up that resolves the central boundary
component, using

    K'' = 3L'' - D0'' - sum D_ab'' - 1/2 H1'' - 1/2 H2'' - E'' - F'' - G'',

with E'' = 1/2 E = 1/4 E1 + 1/2 E2 + 1/4 sum E3. For a smooth hypersurface A,
c2.A = e(A) - K_A . N_A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from . import closed_forms
from .dimensions import group_index, star_lhs
from .divisors import TrilinearForm, k_cubed, shipped_form
from .lefschetz import total_trace_sum
from .poly import KAPPA, ONE, P, Poly


@dataclass(frozen=True)
class HypersurfaceData:
    """One row of the Euler-number table: e(A) and K_A . N_A per component."""

    name: str
    euler: Poly
    K_dot_N: Poly
    multiplicity_in_K: Fraction  # coefficient of one component in -K
    count: Poly


_HALF_KAPPA = KAPPA / 2

TABLE4: Dict[str, HypersurfaceData] = {
    row.name: row
    for row in (
        HypersurfaceData("H1", -(P - 6) / 6 * KAPPA, (P + 6) / 12 * KAPPA, Fraction(1, 2), ONE),
        HypersurfaceData("H2", -(P - 21) / 6 * KAPPA, (P + 3) / 12 * KAPPA, Fraction(1, 2), ONE),
        HypersurfaceData("Dper", Poly.const(9), Poly.const(1), Fraction(1), _HALF_KAPPA),
        HypersurfaceData("E1", -(P - 6) / 6 * KAPPA, KAPPA, Fraction(1, 4), ONE),
        HypersurfaceData("E2", -(P - 6) / 6 * KAPPA, KAPPA * Fraction(3, 2), Fraction(1, 2), ONE),
        HypersurfaceData("E3", Poly.const(3), Poly.const(6), Fraction(1, 4), _HALF_KAPPA),
        # E4, E5 do not occur in the canonical class
        HypersurfaceData("E4", Poly.const(4), Poly.const(6), Fraction(0), _HALF_KAPPA),
        HypersurfaceData("E5", Poly.const(3), Poly.const(6), Fraction(0), _HALF_KAPPA),
    )
}


def c2_dot_smooth(name: str, table4: Mapping[str, HypersurfaceData] = TABLE4, aggregate: bool = False) -> Poly:
    """c2 . A = e(A) - K_A . N_A, per component unless ``aggregate``."""
    try:
        row = table4[name]
    except KeyError:
        raise KeyError(f"unknown hypersurface {name!r}; expected one of {', '.join(table4)}") from None
    value = row.euler - row.K_dot_N
    return value * row.count if aggregate else value


@dataclass(frozen=True)
class SurfaceClassModel:
    """A smooth surface given by its Picard lattice, Euler number, K and normal class."""

    name: str
    generators: Tuple[str, ...]
    form: Mapping[Tuple[str, str], int]
    euler: int
    canonical: Mapping[str, int]
    self_class: Mapping[str, int]

    def dot(self, a: Mapping[str, int], b: Mapping[str, int]) -> int:
        total = 0
        for g1, c1 in a.items():
            for g2, c2 in b.items():
                total += c1 * c2 * self.pairing(g1, g2)
        return total

    def pairing(self, g1: str, g2: str) -> int:
        if (g1, g2) in self.form:
            return self.form[(g1, g2)]
        return self.form.get((g2, g1), 0)

    def c2_correction(self) -> int:
        """c2(X).S = e(S) - K_S . (S|S)."""
        return self.euler - self.dot(self.canonical, self.self_class)


# P^2 blown up in three points: components of G''
DEL_PEZZO_G = SurfaceClassModel(
    "P2 blown up in 3 points",
    ("h", "e1", "e2", "e3"),
    {("h", "h"): 1, ("e1", "e1"): -1, ("e2", "e2"): -1, ("e3", "e3"): -1},
    6,
    {"h": -3, "e1": 1, "e2": 1, "e3": 1},
    {"h": -1},
)

# P(O + O(1)) over P^1: top components of F''; b is the (-1)-section, f a fibre
RULED_F_TOP = SurfaceClassModel(
    "P(O + O(1))",
    ("b", "f"),
    {("b", "b"): -1, ("b", "f"): 1, ("f", "f"): 0},
    4,
    {"b": -2, "f": -3},
    {"b": -1, "f": -3},
)

# P^1 x P^1: remaining components of F''
QUADRIC_F = SurfaceClassModel(
    "P1 x P1",
    ("b", "f"),
    {("b", "b"): 0, ("b", "f"): 1, ("f", "f"): 0},
    4,
    {"b": -2, "f": -2},
    {"b": -1, "f": -4},
)


@dataclass(frozen=True)
class BlowupCorrections:
    c2_H2pp: Poly
    c2_D0pp: Poly
    c2_Gpp: Poly
    c2_Fpp: Poly


# component counts of the blow-up
G_COMPONENTS = KAPPA * (P - 5) / 12
F_TOP_COMPONENTS = _HALF_KAPPA
F_OTHER_COMPONENTS = _HALF_KAPPA * ((P - 3) / 4 - 1)


def blowup_corrections(table4: Mapping[str, HypersurfaceData] = TABLE4) -> BlowupCorrections:
    # (i) H2 passes through kappa/2 blown-up points; each adds 1 to e(H2'') and
    # a (-1)-curve F_H2 with F''|H2'' = 2 F_H2, so c2.H2'' = c2.H2 + kappa/2 + 2 F_H2^2
    blown_points = _HALF_KAPPA
    exceptional_self = -1
    c2_h2pp = c2_dot_smooth("H2", table4) + blown_points + 2 * exceptional_self * blown_points
    c2_d0pp = KAPPA / 24 * (3 * P**2 - 10 * P + 3) + 6 * G_COMPONENTS
    c2_gpp = G_COMPONENTS * DEL_PEZZO_G.c2_correction()
    c2_fpp = F_TOP_COMPONENTS * RULED_F_TOP.c2_correction() + F_OTHER_COMPONENTS * QUADRIC_F.c2_correction()
    return BlowupCorrections(c2_h2pp, c2_d0pp, c2_gpp, c2_fpp)


def c2_dot_L_solve(form: Optional[TrilinearForm] = None, printed_comparison: bool = False) -> Dict[str, Poly]:
    """Solve the k^1 coefficient of the trace identity for c2.L.

    Returns the k^3 and k^2 residuals (which must vanish) alongside the result.
    """
    form = form or shipped_form()
    lhs = star_lhs(form, printed_comparison)
    traces = total_trace_sum()
    d = group_index()
    return {
        "k3_residual": lhs[3],
        "k2_residual": lhs[2] - traces.k2,
        "c2L": ((traces.k1 - lhs[1]) * 12).divexact(d),
    }


def c2_dot_L(form: Optional[TrilinearForm] = None, printed_comparison: bool = False) -> Poly:
    solved = c2_dot_L_solve(form, printed_comparison)
    if solved["k3_residual"] or solved["k2_residual"]:
        raise ArithmeticError("k^3/k^2 coefficients of the trace identity do not match")
    return solved["c2L"]


def c1_c2(
    form: Optional[TrilinearForm] = None,
    table4: Mapping[str, HypersurfaceData] = TABLE4,
    c2L: Optional[Poly] = None,
) -> Poly:
    if c2L is None:
        c2L = c2_dot_L(form)
    bu = blowup_corrections(table4)
    k_dot_c2 = 3 * c2L - bu.c2_D0pp - bu.c2_Fpp - bu.c2_Gpp
    for name, row in table4.items():
        if not row.multiplicity_in_K:
            continue
        per_component = bu.c2_H2pp if name == "H2" else c2_dot_smooth(name, table4)
        k_dot_c2 = k_dot_c2 - row.multiplicity_in_K * row.count * per_component
    return -k_dot_c2


def c1_cubed(form: Optional[TrilinearForm] = None) -> Poly:
    return -k_cubed(form or shipped_form())


def c3_euler() -> Poly:
    """Euler number (closed form, not recomputed here)."""
    return closed_forms.C3


def arithmetic_genus(form: Optional[TrilinearForm] = None) -> Poly:
    return 1 - c1_c2(form) / 24


def c2_dot_D0() -> Poly:
    """c2 . D0 on the desingularized space (closed form, not recomputed here)."""
    return closed_forms.C2_DOT_D0


def chern_numbers(form: Optional[TrilinearForm] = None) -> Dict[str, Poly]:
    form = form or shipped_form()
    c2L = c2_dot_L(form)
    c1c2 = c1_c2(form, c2L=c2L)
    return {
        "c1^3": c1_cubed(form),
        "c1c2": c1c2,
        "c3": c3_euler(),
        "pa": 1 - c1c2 / 24,
        "c2L": c2L,
        "c2D0": c2_dot_D0(),
    }
