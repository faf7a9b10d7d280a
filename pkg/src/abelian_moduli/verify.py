"""Verification suites run by ``abelmod verify``.

Each suite returns a list of :class:`~abelian_moduli.report.Check`.
Symbolic checks are exact; numeric ones state their tolerance in the
check details.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import mpmath
import numpy as np

from . import chern, closed_forms, dimensions, lefschetz, siegel
from .cyclotomic import lemma7_sum
from .divisors import ALL_CUBIC_MONOMIALS, TrilinearForm, divisor_census, k_cubed, overlap_identities, rr_cubic
from .report import Check, identity_check

DEFAULT_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DIM_WEIGHTS = (12, 24, 36, 48)


def suite_tables(form: TrilinearForm, **_) -> List[Check]:
    checks = [
        Check(
            "all 20 monomials present",
            all(m in form.entries for m in ALL_CUBIC_MONOMIALS),
            {"count": len(form.entries)},
        )
    ]
    for ov in overlap_identities(form):
        checks.append(
            Check(f"overlap {ov.name}", ov.passed, {"values": list(ov.values), "expected": ov.expected})
        )
    checks.append(identity_check("L^3", form.value("L", "L", "L"), closed_forms.L_CUBED))
    return checks


def suite_intersections(form: TrilinearForm, **_) -> List[Check]:
    rr = rr_cubic(form)
    checks = [identity_check("K^3", k_cubed(form), closed_forms.K_CUBED)]
    for i in (3, 2, 1):
        checks.append(
            identity_check(
                f"rr_cubic k^{i} coefficient", rr.coeff_k(i), closed_forms.DIM_UNIT * closed_forms.RR_BRACKET[i]
            )
        )
    return checks


def _mp_root(order: int, exponent: int):
    return mpmath.expjpi(mpmath.mpf(2 * exponent) / order)


def float_pole_sums(angles, dps: int = 100):
    """Direct (sum u, sum v) in mpmath for a list of RootOfUnity angles."""
    with mpmath.workdps(dps):
        su = sv = mpmath.mpc(0)
        for a in angles:
            x = 1 / _mp_root(a.order, a.exponent)
            su += 1 / (1 - x)
            sv += x / (1 - x) ** 2
        return complex(su), complex(sv)


def float_pair_sum(elements, dps: int = 100) -> complex:
    with mpmath.workdps(dps):
        s = mpmath.mpc(0)
        for a, b in elements:
            s += 1 / ((1 - 1 / _mp_root(a.order, a.exponent)) * (1 - 1 / _mp_root(b.order, b.exponent)))
        return complex(s)


def _rel_err(exact: Fraction, approx: complex) -> float:
    scale = max(abs(float(exact)), 1e-300)
    return abs(approx - float(exact)) / scale


def cyclotomic_float_checks(primes: Sequence[int], tol: float = 1e-9) -> List[Check]:
    """Exact root-of-unity sums of every built-in record against 100-digit direct sums."""
    checks = []
    for rec in lefschetz.builtin_fixed_sets():
        cyclic = isinstance(rec.elements, lefschetz.CyclicElements)
        for p_val in primes if cyclic else primes[:1]:
            elements = rec.elements.expand(p_val)
            if rec.codim == 1:
                u, v = lefschetz.pole_sums(rec)
                exact_vals = [u(p_val), v(p_val)]
                approx = float_pole_sums([e[0] for e in elements])
            else:
                exact_vals = [lefschetz.pair_sum(rec)(p_val)]
                approx = (float_pair_sum(elements),)
            err = max(_rel_err(x, y) for x, y in zip(exact_vals, approx))
            checks.append(
                Check(
                    f"cyclotomic sums {rec.case_id} at p={p_val}",
                    err < tol,
                    {"exact": exact_vals, "max_rel_err": err, "tol": tol},
                )
            )
    return checks


def suite_trace(primes: Sequence[int] = (5, 7), **_) -> List[Check]:
    traces = lefschetz.all_traces()
    unit = closed_forms.TRACE_UNIT
    checks = []
    for case, (k2, k1) in closed_forms.TRACE_BRACKETS.items():
        t = traces[case]
        checks.append(identity_check(f"trace {case} k^2", t.k2, unit * k2))
        checks.append(identity_check(f"trace {case} k^1", t.k1, unit * k1))
    t = traces
    checks.append(identity_check("t4 as displayed", t["2a"].k1, closed_forms.T4_DISPLAY))
    checks.append(identity_check("t5 as displayed", t["2b"].k1, closed_forms.T5_DISPLAY))
    checks.append(
        identity_check("t4 + t5", t["2a"].k1 + t["2b"].k1, unit * closed_forms.T4_PLUS_T5_BRACKET)
    )
    checks.append(identity_check("t7 = 3 t6", t["2c_B2"].k1, 3 * t["2c_B1"].k1))
    checks.append(identity_check("t2 k^2 = 6 t1 k^2", t["1b"].k2, 6 * t["1a"].k2))
    total = lefschetz.total_trace_sum()
    checks.append(identity_check("trace total k^2", total.k2, unit * closed_forms.TRACE_TOTAL_BRACKET[0]))
    checks.append(identity_check("trace total k^1", total.k1, unit * closed_forms.TRACE_TOTAL_BRACKET[1]))
    for case, (derived, recorded) in lefschetz.component_count_derivations().items():
        checks.append(identity_check(f"component count {case}", derived, recorded))
    checks.extend(cyclotomic_float_checks(primes))
    return checks


def suite_star(form: TrilinearForm, printed_comparison: bool = False, **_) -> List[Check]:
    checks = list(dimensions.verify_star_identity(form, printed_comparison=printed_comparison))
    try:
        solved = chern.c2_dot_L_solve(form, printed_comparison)["c2L"]
    except ArithmeticError as exc:
        checks.append(Check("c2.L from the k^1 solve", False, {"error": str(exc)}))
    else:
        checks.append(identity_check("c2.L from the k^1 solve", solved, closed_forms.C2_DOT_L))
    checks.extend(dimensions.dim_final_consistency(form))
    return checks


def suite_chern(form: TrilinearForm, primes: Sequence[int] = DEFAULT_PRIMES, **_) -> List[Check]:
    try:
        numbers = chern.chern_numbers(form)
    except ArithmeticError as exc:
        return [Check("chern numbers", False, {"error": str(exc)})]
    checks = [
        identity_check("c2.L", numbers["c2L"], closed_forms.C2_DOT_L),
        identity_check("c1^3", numbers["c1^3"], closed_forms.C1_CUBED),
        identity_check("c1.c2", numbers["c1c2"], closed_forms.C1_C2),
        identity_check("arithmetic genus", numbers["pa"], closed_forms.ARITHMETIC_GENUS),
    ]
    for p_val in primes:
        pa = numbers["pa"](p_val)
        if p_val in (5, 7, 11):
            ok = pa == 0 and numbers["c1c2"](p_val) == 24
            rule = "c1.c2 = 24 and p_a = 0"
        else:
            ok = pa > 0
            rule = "p_a > 0"
        checks.append(Check(f"p={p_val}: {rule}", ok, {"c1c2": numbers["c1c2"](p_val), "pa": pa}))
    return checks


def suite_dims(primes: Sequence[int] = DEFAULT_PRIMES, **_) -> List[Check]:
    checks = []
    for p_val in primes:
        values = {}
        ok = True
        prev = None
        for k_val in DIM_WEIGHTS:
            try:
                a = dimensions.dim_cusp_gamma1p(p_val, k_val)
                b = dimensions.dim_cusp_gamma2(p_val, k_val)
            except ArithmeticError:
                ok = False
                break
            values[k_val] = a
            ok = ok and a >= 0 and b >= 0 and (prev is None or a > prev)
            prev = a
        checks.append(Check(f"p={p_val}: integral, nonnegative, increasing in k", ok, {"gamma1p": values}))
    return checks


def suite_census(primes: Sequence[int] = DEFAULT_PRIMES, **_) -> List[Check]:
    return [
        Check(f"census p={p_val} = 2p^2+4", divisor_census(p_val) == 2 * p_val**2 + 4, {"count": divisor_census(p_val)})
        for p_val in primes
    ]


def root_sum_float_checks(n_max: int = 200, tol: float = 1e-9, prec: int = 200) -> List[Check]:
    worst = {"simple": 0.0, "double_pole": 0.0}
    with mpmath.workprec(prec):
        for n in range(2, n_max + 1):
            su = sv = mpmath.mpc(0)
            for j in range(1, n):
                x = mpmath.expjpi(mpmath.mpf(2 * j) / n)
                su += 1 / (1 - x)
                sv += x / (1 - x) ** 2
            for kind, approx in (("simple", su), ("double_pole", sv)):
                exact = lemma7_sum(kind, n)
                err = abs(approx - mpmath.mpf(exact.numerator) / exact.denominator) / abs(
                    mpmath.mpf(exact.numerator) / exact.denominator
                )
                worst[kind] = max(worst[kind], float(err))
    return [
        Check(f"root-of-unity sum {kind}, n=2..{n_max}", err < tol, {"max_rel_err": err, "tol": tol})
        for kind, err in worst.items()
    ]


# ---------------------------------------------------------------------------
# theta


def theta_check(test: str, samples: int = 20, tol: Optional[float] = None, seed: int = 0, eps: float = 1e-14) -> Check:
    """Randomized numeric certification; ``samples`` words x ``samples`` points for modularity."""
    rng = np.random.default_rng(seed)
    if test == "modularity":
        tol = 1e-7 if tol is None else tol
        worst = 0.0
        for _ in range(samples):
            g = siegel.random_word(rng, 5)
            for _ in range(samples):
                worst = max(worst, siegel.modular_residual(g, siegel.random_point(rng), 10, eps))
    elif test == "omega":
        tol = 1e-6 if tol is None else tol
        worst = 0.0
        for _ in range(samples):
            g = siegel.random_word(rng, 5)
            worst = max(worst, siegel.modular_residual(g, siegel.random_point(rng), 60, eps))
    elif test == "vanishing":
        tol = 1e-8 if tol is None else tol
        worst = 0.0
        for _ in range(samples):
            t = siegel.random_point(rng)
            t1, _, t3 = t.entries
            diag = siegel.SiegelPoint.from_entries(t1, 0, t3)
            worst = max(worst, siegel.vanishing_ratio(diag, eps))
    elif test == "odd":
        tol = 1e-12 if tol is None else tol
        worst = 0.0
        for _ in range(samples):
            t = siegel.random_point(rng)
            for m in siegel.ODD_CHARACTERISTICS:
                worst = max(worst, abs(siegel.theta_constant(m, t, eps)))
    else:
        raise ValueError(f"unknown theta test {test!r}")
    return Check(
        f"theta {test}",
        worst < tol,
        {"max_residual": worst, "tol": tol, "samples": samples, "seed": seed},
    )


def suite_theta(samples: int = 5, seed: int = 0, **_) -> List[Check]:
    return [theta_check(t, samples=samples, seed=seed) for t in ("odd", "vanishing", "modularity", "omega")]


SUITES: Dict[str, Callable[..., List[Check]]] = {
    "tables": suite_tables,
    "intersections": suite_intersections,
    "trace": suite_trace,
    "star": suite_star,
    "chern": suite_chern,
    "dims": suite_dims,
    "census": suite_census,
    "roots": lambda **_: root_sum_float_checks(),
    "theta": suite_theta,
}


def run_suite(
    name: str,
    form: TrilinearForm,
    primes: Sequence[int] = DEFAULT_PRIMES,
    printed_comparison: bool = False,
) -> List[Check]:
    names = list(SUITES) if name == "all" else [name]
    checks: List[Check] = []
    for n in names:
        if n not in SUITES:
            raise KeyError(f"unknown suite {n!r}; expected one of {', '.join(SUITES)} or all")
        kwargs = dict(form=form, primes=primes, printed_comparison=printed_comparison)
        if n == "trace":
            kwargs["primes"] = [p for p in primes if p <= 13] or [5]
        for c in SUITES[n](**kwargs):
            c.name = f"{n}: {c.name}"
            checks.append(c)
    return checks
