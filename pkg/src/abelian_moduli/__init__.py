"""Exact intersection theory on the moduli space of (1,p)-polarized abelian surfaces.

Polynomials in the prime p (and the weight k) are handled exactly with
:class:`Poly`; the genus-2 theta routines in :mod:`abelian_moduli.siegel`
are the only floating-point part.
"""

from .chern import arithmetic_genus, c1_c2, c1_cubed, c2_dot_L, chern_numbers
from .cyclotomic import CyclotomicSum, RootOfUnity, lemma7_sum
from .dimensions import dim_cusp_gamma1p, dim_cusp_gamma2, verify_star_identity
from .divisors import (
    DivisorClass,
    TrilinearForm,
    canonical_class,
    divisor_census,
    k_cubed,
    load_table,
    load_table_file,
    rr_cubic,
    shipped_form,
    triple_product,
)
from .dsl import intersect, parse_divisor_expr
from .errors import DegreeError, DomainError, NotRationalError, OrderOverflowError, ParseError, TableError
from .lefschetz import all_traces, total_trace_sum
from .poly import KAPPA, Poly, parse_poly

__all__ = [
    "CyclotomicSum",
    "DegreeError",
    "DivisorClass",
    "DomainError",
    "KAPPA",
    "NotRationalError",
    "OrderOverflowError",
    "ParseError",
    "Poly",
    "RootOfUnity",
    "TableError",
    "TrilinearForm",
    "all_traces",
    "arithmetic_genus",
    "c1_c2",
    "c1_cubed",
    "c2_dot_L",
    "canonical_class",
    "chern_numbers",
    "dim_cusp_gamma1p",
    "dim_cusp_gamma2",
    "divisor_census",
    "intersect",
    "k_cubed",
    "lemma7_sum",
    "load_table",
    "load_table_file",
    "parse_divisor_expr",
    "parse_poly",
    "rr_cubic",
    "shipped_form",
    "total_trace_sum",
    "triple_product",
    "verify_star_identity",
]
