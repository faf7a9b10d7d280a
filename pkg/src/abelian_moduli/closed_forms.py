"""Reference closed forms, kept as the expected side of every check.

Nothing in here is computed; these are transcriptions against which the
computed results (K^3, traces, c2.L, c1.c2, ...) are compared.
"""

from fractions import Fraction

from .poly import KAPPA, P, Poly, parse_poly

# kappa^2 / (2^8 3^3 5): the normalization used by the dimension and trace displays
TRACE_UNIT = KAPPA**2 / 34560
DIM_UNIT = KAPPA / 34560

K_CUBED = KAPPA / 960 * parse_poly("9*p^3 - 360*p^2 + 1519*p + 3000")
C1_CUBED = -K_CUBED
C1_C2 = -KAPPA / 240 * parse_poly("(p - 13)*(p^2 - 17*p + 90)")
C3 = -KAPPA / 1440 * parse_poly("p^3 + 431*p - 8760")
C2_DOT_L = KAPPA / 720 * parse_poly("p^3 + 121*p + 60")
C2_DOT_D0 = KAPPA / 24 * parse_poly("3*p^2 - 10*p - 3")
ARITHMETIC_GENUS = 1 + KAPPA / 5760 * parse_poly("(p - 13)*(p^2 - 17*p + 90)")
L_CUBED = parse_poly("p*(p^4 - 1)/2880")

# the bracket of (1/12)(kL-D)(kL-D-K)(2kL-2D-K), in units of kappa/34560
RR_BRACKET = {
    3: parse_poly("2*p^3 + 2*p"),
    2: parse_poly("-9*p^3 + 201*p"),
    1: parse_poly("9*p^3 - 120*p^2 - 1481*p - 1080"),
}

# dim S_k(Gamma_{1,p}), in units of kappa/34560
GAMMA1P_BRACKET = {
    3: parse_poly("2*p^3 + 2*p"),
    2: parse_poly("-9*p^3 + 201*p"),
    1: parse_poly("13*p^3 - 120*p^2 - 997*p - 840"),
    0: parse_poly("-6*(p - 35)*(p + 2)*(p + 3)"),
}

# dim S_k(Gamma_2(p^2)), in units of kappa^2/34560
GAMMA2_BRACKET = {
    3: parse_poly("2*p^16 + 2*p^14"),
    2: parse_poly("-9*p^16 - 9*p^14"),
    1: parse_poly("13*p^16 + 13*p^14 - 120*p^12 - 120*p^10"),
    0: parse_poly("-6*p^16 - 6*p^14 + 180*p^12 + 540*p^10 + 360*p^8"),
}

# trace contributions (k^2 bracket, k^1 bracket) in units of kappa^2/34560
TRACE_BRACKETS = {
    "1a": (parse_poly("30*p^14"), parse_poly("-90*p^14 - 360*p^12")),
    "1b": (parse_poly("180*p^14"), parse_poly("-540*p^14 - 1080*p^12")),
    "1c": (Poly(), parse_poly("-120*p^10*(p^5 + p^3 - p^2 - 1)")),
    "2a": (Poly(), parse_poly("180*p^14")),
    "2b": (Poly(), parse_poly("160*p^14")),
    "2c_B1": (Poly(), parse_poly("-180*(p^14 + p^13 - 2*p^12)")),
    "2c_B2": (Poly(), parse_poly("-540*(p^14 + p^13 - 2*p^12)")),
}
# t4 and t5 as displayed, before normalization
T4_DISPLAY = Fraction(1, 2) * (P**4 * KAPPA / 24) * (P**10 * KAPPA / 4)
T5_DISPLAY = Fraction(2, 3) * (P**4 * KAPPA / 24) * (P**10 * KAPPA / 6)
T4_PLUS_T5_BRACKET = parse_poly("340*p^14")
TRACE_TOTAL_BRACKET = (
    parse_poly("210*p^14"),
    parse_poly("-120*p^15 - 1010*p^14 - 840*p^13 + 120*p^12 + 120*p^10"),
)

# The k^1 bracket printed on the Riemann-Roch side of the comparison. Direct
# subtraction of the Gamma_2(p^2) formula from d * rr_cubic gives
# -4p^16 - 120p^15 - 1494p^14 - 1080p^13 + 120p^12 + 120p^10 instead.
PRINTED_COMPARISON_K1 = parse_poly(
    "-4*p^16 - 120*p^15 - 1010*p^14 + 120*p^13 + 120*p^12 + 120*p^10"
)

# monomials listed in both the C = R and the C = E sections of the table file
TABLE_OVERLAPS = {
    ("L", "R", "E"): P * KAPPA / 16,
    ("R", "D", "E"): KAPPA,
    ("R", "R", "E"): -(P - 2) / 8 * KAPPA,
    ("R", "E", "E"): -KAPPA / 4,
}
