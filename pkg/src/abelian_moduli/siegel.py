"""Genus-2 theta constants and the symplectic action on Siegel space.

Double precision throughout. Lattice sums are truncated to a box whose
radius is chosen from a Gaussian tail bound, so every reported value is
within ``eps`` of the full series (up to rounding).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ._util import require_prime
from .errors import DomainError

PD_TOL = 1e-12
MIN_EIGENVALUE = 1e-6
MAX_CONDITION = 1e12

Characteristic = Tuple[int, int, int, int]  # (m'_1, m'_2, m''_1, m''_2)


@dataclass(frozen=True, eq=False)
class SiegelPoint:
    """Symmetric complex 2x2 matrix with positive definite imaginary part."""

    tau: np.ndarray

    def __post_init__(self):
        t = np.array(self.tau, dtype=complex).reshape(2, 2)
        scale = max(1.0, float(np.abs(t).max()))
        if abs(t[0, 1] - t[1, 0]) > 1e-9 * scale:
            raise DomainError("tau must be symmetric")
        t = (t + t.T) / 2
        y = t.imag
        if y[0, 0] <= PD_TOL or np.linalg.det(y) <= PD_TOL:
            raise DomainError("Im(tau) must be positive definite")
        t.setflags(write=False)
        object.__setattr__(self, "tau", t)

    @classmethod
    def from_entries(cls, t1: complex, t2: complex, t3: complex) -> "SiegelPoint":
        return cls(np.array([[t1, t2], [t2, t3]], dtype=complex))

    @property
    def entries(self) -> Tuple[complex, complex, complex]:
        return complex(self.tau[0, 0]), complex(self.tau[0, 1]), complex(self.tau[1, 1])

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.tau.imag)[0])

    def __repr__(self):
        t1, t2, t3 = self.entries
        return f"SiegelPoint({t1}, {t2}, {t3})"


_I2 = np.eye(2, dtype=np.int64)
_Z2 = np.zeros((2, 2), dtype=np.int64)
J4 = np.block([[_Z2, _I2], [-_I2, _Z2]])


@dataclass(frozen=True, eq=False)
class SymplecticMatrix:
    """Integer 4x4 matrix (A B; C D) with m^T J m = J."""

    m: np.ndarray

    def __post_init__(self):
        m = np.array(self.m)
        if m.shape != (4, 4):
            raise DomainError("symplectic matrix must be 4x4")
        if not np.all(np.equal(np.mod(m, 1), 0)):
            raise DomainError("symplectic matrix must have integer entries")
        m = m.astype(np.int64)
        if not np.array_equal(m.T @ J4 @ m, J4):
            raise DomainError("matrix is not symplectic")
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    @property
    def blocks(self):
        m = self.m
        return m[:2, :2], m[:2, 2:], m[2:, :2], m[2:, 2:]

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        return SymplecticMatrix(self.m @ other.m)

    def __eq__(self, other):
        return isinstance(other, SymplecticMatrix) and np.array_equal(self.m, other.m)

    def __hash__(self):
        return hash(self.m.tobytes())

    @classmethod
    def identity(cls) -> "SymplecticMatrix":
        return cls(np.eye(4, dtype=np.int64))

    @classmethod
    def translation(cls, b) -> "SymplecticMatrix":
        b = np.array(b, dtype=np.int64)
        return cls(np.block([[_I2, b], [_Z2, _I2]]))

    @classmethod
    def rotation(cls, u) -> "SymplecticMatrix":
        """(U, U^{-T}) for U in GL_2(Z)."""
        u = np.array(u, dtype=np.int64)
        det = round(np.linalg.det(u))
        if det not in (1, -1):
            raise DomainError("U must be invertible over Z")
        adj = np.array([[u[1, 1], -u[0, 1]], [-u[1, 0], u[0, 0]]], dtype=np.int64)
        u_inv_t = (adj * det).T  # U^{-1} = adj/det and det = +-1
        return cls(np.block([[u, _Z2], [_Z2, u_inv_t]]))


J = SymplecticMatrix(J4)


def generators() -> List[SymplecticMatrix]:
    """J, the elementary symmetric translations, and (U, U^{-T}) for GL_2(Z) generators."""
    gens = [J]
    for b in itertools.product((-1, 0, 1), repeat=3):
        if any(b):
            gens.append(SymplecticMatrix.translation([[b[0], b[1]], [b[1], b[2]]]))
    for u in ([[0, 1], [1, 0]], [[1, 1], [0, 1]], [[1, -1], [0, 1]], [[-1, 0], [0, 1]]):
        gens.append(SymplecticMatrix.rotation(u))
    return gens


# moduli for the entries of g - 1 (0 means unconstrained)
def _gamma1p_moduli(p: int) -> np.ndarray:
    return np.array(
        [
            [1, 1, 1, p],
            [p, p, p, p * p],
            [1, 1, 1, p],
            [1, 1, 1, p],
        ],
        dtype=np.int64,
    )


def is_in_gamma1p(g: SymplecticMatrix, p_val: int) -> bool:
    p_val = require_prime(p_val)
    diff = g.m - np.eye(4, dtype=np.int64)
    return bool(np.all(np.mod(diff, _gamma1p_moduli(p_val)) == 0))


def automorphy_factor(g: SymplecticMatrix, tau: SiegelPoint) -> complex:
    _, _, c, d = g.blocks
    return complex(np.linalg.det(c @ tau.tau + d))


def act(g: SymplecticMatrix, tau: SiegelPoint) -> SiegelPoint:
    """(A tau + B)(C tau + D)^{-1}."""
    a, b, c, d = g.blocks
    t = tau.tau
    denom = c @ t + d
    if np.linalg.cond(denom) > MAX_CONDITION:
        raise DomainError("C tau + D is numerically singular")
    out = (a @ t + b) @ np.linalg.inv(denom)
    return SiegelPoint((out + out.T) / 2)


# ---------------------------------------------------------------------------
# theta constants

ALL_CHARACTERISTICS: Tuple[Characteristic, ...] = tuple(itertools.product((0, 1), repeat=4))


def is_even(m: Characteristic) -> bool:
    return (m[0] * m[2] + m[1] * m[3]) % 2 == 0


EVEN_CHARACTERISTICS = tuple(m for m in ALL_CHARACTERISTICS if is_even(m))
ODD_CHARACTERISTICS = tuple(m for m in ALL_CHARACTERISTICS if not is_even(m))
DIAGONAL_VANISHING = (1, 1, 1, 1)  # the even theta that vanishes when tau_2 = 0


def tail_bound(lam: float, radius: float) -> float:
    """Upper bound for the terms of a shifted 2-D lattice sum outside the box |x|_inf <= radius.

    With |term| <= exp(-pi lam |x|^2) the sum factorizes; each half-line is
    bounded by its first term plus the integral beyond it.
    """
    root = math.sqrt(lam)
    one_side = math.exp(-math.pi * lam * radius * radius) + math.erfc(
        radius * math.sqrt(math.pi * lam)
    ) / (2 * root)
    outside = 2 * one_side
    full = 2 + 1 / root
    return 2 * outside * full


def truncation_radius(lam: float, eps: float) -> float:
    if eps <= 0:
        raise DomainError("eps must be positive")
    if lam < MIN_EIGENVALUE:
        raise DomainError(f"smallest eigenvalue of Im(tau) is {lam:.3g} < {MIN_EIGENVALUE}")
    radius = 1.0
    while tail_bound(lam, radius) >= eps:
        radius += 0.5
    return radius


def _check_char(m: Sequence[int]) -> Characteristic:
    m = tuple(int(x) for x in m)
    if len(m) != 4 or any(x not in (0, 1) for x in m):
        raise DomainError(f"characteristic must be four entries in {{0, 1}}, got {m}")
    return m


def theta_constant(m: Sequence[int], tau: SiegelPoint, eps: float = 1e-14) -> complex:
    """Theta null with characteristic m = (m', m'') at tau."""
    m = _check_char(m)
    lam = tau.min_eigenvalue()
    radius = truncation_radius(lam, eps)
    shift = np.array(m[:2], dtype=float) / 2
    axes = []
    for s in shift:
        lo, hi = math.ceil(-radius - s), math.floor(radius - s)
        axes.append(np.arange(lo, hi + 1, dtype=float) + s)
    # lexicographic order: first coordinate outer
    x1, x2 = np.meshgrid(axes[0], axes[1], indexing="ij")
    t1, t2, t3 = tau.entries
    quad = x1 * x1 * t1 + 2 * x1 * x2 * t2 + x2 * x2 * t3
    lin = (x1 * m[2] + x2 * m[3]) / 2
    terms = np.exp(1j * math.pi * (quad + 2 * lin))
    return complex(np.sum(terms.ravel()))


def even_thetas(tau: SiegelPoint, eps: float = 1e-14) -> dict:
    return {m: theta_constant(m, tau, eps) for m in EVEN_CHARACTERISTICS}


def theta_squared_product(tau: SiegelPoint, eps: float = 1e-14) -> complex:
    """Product of the squares of the ten even theta constants (weight 10)."""
    out = 1 + 0j
    for value in even_thetas(tau, eps).values():
        out *= value * value
    return out


def modular_residual(g: SymplecticMatrix, tau: SiegelPoint, weight: int = 10, eps: float = 1e-14) -> float:
    """|F(g tau) - det(C tau + D)^w F(tau)| / |det(C tau + D)^w F(tau)|.

    F is the weight-10 product for w = 10 and its sixth power for w = 60.
    """
    if weight == 10:
        power = 1
    elif weight == 60:
        power = 6
    else:
        raise DomainError("weight must be 10 or 60")
    f_tau = theta_squared_product(tau, eps) ** power
    f_gtau = theta_squared_product(act(g, tau), eps) ** power
    expected = automorphy_factor(g, tau) ** weight * f_tau
    return abs(f_gtau - expected) / abs(expected)


check_modularity = modular_residual


def vanishing_ratio(tau: SiegelPoint, eps: float = 1e-14) -> float:
    """|Theta^2(tau)| relative to the product of the nine other squared factors."""
    values = even_thetas(tau, eps)
    scale = 1.0
    for m, v in values.items():
        if m != DIAGONAL_VANISHING:
            scale *= abs(v) ** 2
    total = 1.0
    for v in values.values():
        total *= abs(v) ** 2
    return total / scale


# ---------------------------------------------------------------------------
# sampling for the property checks


def random_point(rng: np.random.Generator, min_eig: float = 0.6) -> SiegelPoint:
    x = rng.uniform(-0.5, 0.5, size=3)
    a = rng.uniform(-0.5, 0.5, size=(2, 2))
    y = a @ a.T + min_eig * np.eye(2)
    re = np.array([[x[0], x[1]], [x[1], x[2]]])
    return SiegelPoint(re + 1j * y)


def random_word(rng: np.random.Generator, length: int = 5, gens: Sequence[SymplecticMatrix] = None) -> SymplecticMatrix:
    gens = list(gens or generators())
    g = SymplecticMatrix.identity()
    for idx in rng.integers(0, len(gens), size=length):
        g = g @ gens[idx]
    return g
