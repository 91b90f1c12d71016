"""Explicit polynomial families with closed-form critical points."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidK, InvalidN, SlackNonpositive, ZetaZero
from .poly import Poly, antiderivative_from, linear_factor_power, multiply

COT_MATCH_TOL = 1e-12


class Family(str, Enum):
    LEMMA2 = "LEMMA2"
    CUBIC = "CUBIC"
    PROP5 = "PROP5"


@dataclass(frozen=True)
class FamilyPolynomial:
    poly: Poly
    known_critical_points: tuple[tuple[complex, int], ...]
    family_tag: Family
    params: tuple = ()


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float
    epsilon: float = 0.0

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.epsilon < 0:
            raise ValueError("epsilon must be nonnegative")

    def inside(self, z: complex) -> bool:
        return abs(z - self.center) < self.radius

    def outside(self, z: complex) -> bool:
        return abs(z - self.center) > self.radius


def cot_pi_fraction(k: int, n: int) -> float:
    """``cot(k*pi/n)`` for ``0 < k < n``, reduced to the first quadrant."""
    if 2 * k == n:
        return 0.0
    if 2 * k > n:
        return -cot_pi_fraction(n - k, n)
    x = math.pi * k / n
    return math.cos(x) / math.sin(x)


def cot_points(n: int) -> list[complex]:
    """The points ``i*cot(k*pi/n)`` for ``k = 1 .. n-1``."""
    if n < 2:
        raise InvalidN(f"n must be >= 2, got {n}")
    return [complex(0.0, cot_pi_fraction(k, n)) for k in range(1, n)]


def lemma2_family(n: int, k: int) -> FamilyPolynomial:
    """``P(z) = integral from -1 to z of (w - zeta)^(n-1)`` with ``zeta = i cot(k pi/n)``.

    ``P(1) == P(-1)`` holds because zeta is a root of the integral over
    [-1, 1]; the only critical point is zeta, with multiplicity n-1.
    """
    if n < 2:
        raise InvalidN(f"n must be >= 2, got {n}")
    if not 1 <= k < n:
        raise InvalidK(f"k must satisfy 1 <= k < n, got k={k}, n={n}")
    zeta = complex(0.0, cot_pi_fraction(k, n))
    P = antiderivative_from(linear_factor_power(zeta, n - 1), -1.0)
    return FamilyPolynomial(P, ((zeta, n - 1),), Family.LEMMA2, (n, k))


def theorem1_cubic(zeta: complex) -> FamilyPolynomial:
    """``2 zeta z^3 + (1 - 3 zeta^2) z^2 - 2 zeta z``, critical at zeta and -1/(3 zeta)."""
    zeta = complex(zeta)
    if zeta == 0:
        raise ZetaZero("zeta = 0 collapses the cubic to z**2")
    P = Poly([0, -2 * zeta, 1 - 3 * zeta * zeta, 2 * zeta])
    return FamilyPolynomial(P, ((zeta, 1), (-1 / (3 * zeta), 1)), Family.CUBIC, (zeta,))


def prop5_polynomial(n: int, zeta: complex) -> FamilyPolynomial:
    """``integral from -1 to z of (w+1)^n (w - zeta)^5``; critical at -1 (mult n) and zeta (mult 5).

    Lies in the P(-1) == P(1) class only when (n, zeta) solves the
    orthogonality condition, see :mod:`rolle.prop5`.
    """
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    zeta = complex(zeta)
    integrand = multiply(linear_factor_power(-1.0, n), linear_factor_power(zeta, 5))
    P = antiderivative_from(integrand, -1.0)
    return FamilyPolynomial(P, ((-1 + 0j, n), (zeta, 5)), Family.PROP5, (n, zeta))


def grace_heawood_disk(zeta: complex, m: int, n: int) -> Disk:
    """Disk centred at ``zeta - m`` with every point of I_n strictly outside.

    The slack ``epsilon`` is half the gap between the radius ``m`` and the
    nearest point of I_n.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    zeta = complex(zeta)
    pts = cot_points(n)
    for p in pts:
        if abs(p - zeta) <= COT_MATCH_TOL:
            raise SlackNonpositive(f"zeta={zeta} coincides with a point of I_{n}")
    center = zeta - m
    gap = min(abs(p - center) for p in pts) - m
    if gap <= 0:
        raise SlackNonpositive(f"a point of I_{n} lies within distance {m} of {center}")
    eps = gap / 2
    return Disk(center, m + eps, eps)
