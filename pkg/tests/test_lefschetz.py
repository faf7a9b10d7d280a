from fractions import Fraction

import mpmath
import pytest
import sympy

from abelian_moduli import lefschetz
from abelian_moduli.cyclotomic import RootOfUnity
from abelian_moduli.lefschetz import (
    CASE_IDS,
    CyclicElements,
    ExplicitElements,
    FixedSetRecord,
    TracePoly,
    all_traces,
    component_count_derivations,
    fixed_set,
    total_trace_sum,
    trace_codim1,
    trace_codim2,
)
from abelian_moduli.poly import KAPPA, P, Poly, parse_poly

from _oracles import sym

UNIT = KAPPA**2 / 34560
TRACES = all_traces()

# normalized brackets (k^2, k^1), typed in independently of the library
DISPLAYED = {
    "1a": ("30*p^14", "-90*p^14 - 360*p^12"),
    "1b": ("180*p^14", "-540*p^14 - 1080*p^12"),
    "1c": ("0", "-120*p^10*(p^5 + p^3 - p^2 - 1)"),
    "2c_B1": ("0", "-180*(p^14 + p^13 - 2*p^12)"),
    "2c_B2": ("0", "-540*(p^14 + p^13 - 2*p^12)"),
}


@pytest.mark.parametrize("case", sorted(DISPLAYED))
def test_displayed_brackets(case):
    k2, k1 = DISPLAYED[case]
    assert TRACES[case].k2 == UNIT * parse_poly(k2)
    assert TRACES[case].k1 == UNIT * parse_poly(k1)


def test_codim2_displays():
    t4, t5 = TRACES["2a"].k1, TRACES["2b"].k1
    assert t4 == P**14 * KAPPA**2 / 192
    assert t5 == P**14 * KAPPA**2 / 216
    assert (t4 + t5).divexact(UNIT) == 340 * P**14


def test_relations_between_cases():
    t1, t2 = TRACES["1a"], TRACES["1b"]
    assert t2.k2 == 6 * t1.k2
    # the L^2.X part scales by 6, the L.D.X part only by 3
    assert t2.k1 - 6 * t1.k1 == UNIT * 1080 * P**12
    assert TRACES["2c_B2"].k1 == 3 * TRACES["2c_B1"].k1


def test_no_k_cubed_or_constant_term():
    for t in TRACES.values():
        poly = t.as_poly()
        assert poly.degree("k") <= 2
        assert poly.coeff_k(0).is_zero()
        assert poly.coeff_k(3).is_zero()


def test_total():
    total = total_trace_sum()
    assert total.k2 == UNIT * 210 * P**14
    expected_k1 = parse_poly("-120*p^15 - 1010*p^14 - 840*p^13 + 120*p^12 + 120*p^10")
    assert total.k1 == UNIT * expected_k1


def test_h1_terms_cancel_in_k1():
    """On H1 the normal class is -L, so X^2.L = -L^2.X and both pole sums enter."""
    rec = fixed_set("1a")
    l2x = rec.per_component["L2X"]
    u, v = lefschetz.pole_sums(rec)
    assert (u, v) == (Fraction(1, 2), Fraction(-1, 4))
    expected = (-Fraction(3, 2) * l2x - rec.per_component["LDX"] / 2 + l2x / 2) * u + l2x * v
    assert TRACES["1a"].k1 == expected * rec.component_count


@pytest.mark.parametrize("case", ["1c", "2c_B1"])
def test_cyclic_closed_forms_against_expanded_sums(case):
    rec = fixed_set(case)
    for p_val in (5, 7):
        elements = rec.elements.expand(p_val)
        assert len(elements) == p_val**2 - 1
        if rec.codim == 1:
            u, v = lefschetz.pole_sums(rec)
            with mpmath.workdps(100):
                su = sum(1 / (1 - 1 / mpmath.expjpi(mpmath.mpf(2 * e.exponent) / e.order)) for (e,) in elements)
            assert abs(complex(su) - float(u(p_val))) < 1e-9
        else:
            with mpmath.workdps(100):
                s = mpmath.mpc(0)
                for a, b in elements:
                    za = mpmath.expjpi(mpmath.mpf(-2 * a.exponent) / a.order)
                    zb = mpmath.expjpi(mpmath.mpf(-2 * b.exponent) / b.order)
                    s += 1 / ((1 - za) * (1 - zb))
            assert abs(complex(s) - float(lefschetz.pair_sum(rec)(p_val))) < 1e-9


def _float_codim1_trace(rec, p_val):
    """Whole trace at a prime from 100-digit angle sums."""
    with mpmath.workdps(100):
        su = sv = mpmath.mpc(0)
        for (a,) in rec.elements.expand(p_val):
            x = mpmath.expjpi(mpmath.mpf(-2 * a.exponent) / a.order)
            su += 1 / (1 - x)
            sv += x / (1 - x) ** 2
        vals = {key: mpmath.mpf(float(v(p_val))) for key, v in rec.per_component.items()}
        k2 = vals["L2X"] * su / 2
        k1 = (-1.5 * vals["L2X"] - vals["LDX"] / 2 - vals["LX2"] / 2) * su - vals["LX2"] * sv
        scale = float(rec.component_count(p_val)) * float(rec.extra_factor) * rec.chi_sign
        return complex(k2 * scale), complex(k1 * scale)


@pytest.mark.parametrize("case", ["1a", "1b", "1c"])
@pytest.mark.parametrize("p_val", [5, 7])
def test_codim1_traces_against_float_oracle(case, p_val):
    rec = fixed_set(case)
    k2, k1 = _float_codim1_trace(rec, p_val)
    e2, e1 = TRACES[case].evaluate(p_val)
    for approx, exact in ((k2, e2), (k1, e1)):
        assert abs(approx - float(exact)) <= 1e-9 * max(1.0, abs(float(exact)))


def test_component_counts():
    derived = component_count_derivations()
    assert derived["1a"][0] == P**6
    assert derived["1c"][0] == P**4 * (P**3 - 1) / 2
    assert derived["2c_B1"][0] == P**8 * (P**2 + P - 2) / 2
    for got, recorded in derived.values():
        assert got == recorded


def test_normalized_and_dict():
    k2, k1 = TRACES["1a"].normalized()
    assert k2 == 30 * P**14
    d = TRACES["1c"].as_dict("1c", normalized=True)
    assert d["case"] == "1c" and d["k2"] == "0" and d["unit"] == "(p^2-1)^2/34560"
    assert sympy.expand(sym(d["k1"]) - sym("-120*p^10*(p^5 + p^3 - p^2 - 1)")) == 0


def test_t3_at_five():
    assert TRACES["1c"].evaluate(5) == (0, -62968750000)


def test_records_validated():
    minus_one = RootOfUnity(2, 1)
    with pytest.raises(ValueError):
        FixedSetRecord("x", 3, ExplicitElements(((minus_one,),)), P)
    with pytest.raises(ValueError):
        FixedSetRecord("x", 2, ExplicitElements(((minus_one,),)), P)
    with pytest.raises(ValueError):
        FixedSetRecord("x", 1, CyclicElements(P, (minus_one,)), P)
    with pytest.raises(ValueError):
        FixedSetRecord("x", 1, CyclicElements(P), P, chi_sign=2)


def test_codim_mismatch():
    with pytest.raises(ValueError):
        trace_codim2(fixed_set("1a"))
    with pytest.raises(ValueError):
        trace_codim1(fixed_set("2a"))


def test_unknown_case():
    with pytest.raises(KeyError, match="unknown case"):
        fixed_set("9z")
    assert CASE_IDS == ("1a", "1b", "1c", "2a", "2b", "2c_B1", "2c_B2")


def test_trace_poly_algebra():
    t = TracePoly(P, Poly.const(2))
    assert (t + t).k1 == 4
    assert (3 * t).k2 == 3 * P
