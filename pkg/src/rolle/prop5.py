"""Exact Lemma-4 sums and the (n, zeta) solver for the orthogonality condition

    integral over [-1, 1] of (w+1)^n (w - zeta)^5 dw = 0.

Every identity is checked in :class:`fractions.Fraction`; the bracketed sums
cancel down to size O(n^(i-6)) from terms of size O(1/n), which floating
point cannot resolve once n is in the hundreds.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstraintViolated, ExhaustedN
from .poly import Poly, definite_integral_unit, linear_factor_power, multiply
from .roots import find_roots, polish_root

LIMIT_ROOT_GUESS = complex(-0.24, 3.13)
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class Prop5Solution:
    n: int
    w0: complex
    zeta: complex
    residual: float
    epsilon: float


def binomial_reciprocal_identity(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of ``sum_j C(m,j) (-1)^j / (n+1+j) = m! / prod_{k=1}^{m+1} (n+k)``."""
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    lhs = sum((Fraction((-1) ** j * math.comb(m, j), n + 1 + j) for j in range(m + 1)), Fraction(0))
    rhs = Fraction(math.factorial(m), math.prod(n + k for k in range(1, m + 2)))
    return lhs, rhs


def _bracket(n: int, i: int) -> Fraction:
    return n ** (6 - i) * sum(
        (Fraction((-1) ** k * math.comb(5, k) * math.comb(k, i), n + 6 - k) for k in range(i, 6)),
        Fraction(0),
    )


def lemma4_sum(n: int, i: int) -> tuple[Fraction, Fraction]:
    """The sum ``n^(6-i) sum_{k=i}^5 C(5,k) C(k,i) (-1)^k / (n+6-k)`` and its closed form."""
    if not 0 <= i <= 5 or n < 1:
        raise ValueError("need 0 <= i <= 5 and n >= 1")
    closed = -Fraction(math.factorial(5), math.factorial(i)) * Fraction(
        n ** (6 - i), math.prod(n + k for k in range(1, 7 - i))
    )
    return _bracket(n, i), closed


def g_coefficients(n: int) -> list[Fraction]:
    """Exact ascending coefficients of the rescaled polynomial ``g``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [(-1) ** i * _bracket(n, i) for i in range(6)]


def g_polynomial(n: int) -> Poly:
    return Poly([float(c) for c in g_coefficients(n)])


def limit_polynomial() -> Poly:
    """``120 * sum_{i=0}^5 (-1)^(i+1) w^i / i!``."""
    return Poly([(-1) ** (i + 1) * 120 // math.factorial(i) for i in range(6)])


# -- exact complex arithmetic on (re, im) Fraction pairs ---------------------

def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cdiv(a, b):
    d = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d)


def _eq1_terms(n: int, zeta: complex):
    """Exact value and zeta-derivative of the normalized endpoint-integral sum at a float zeta."""
    x = ((Fraction(zeta.real) + 1) / 2, Fraction(zeta.imag) / 2)
    val = (Fraction(0), Fraction(0))
    der = (Fraction(0), Fraction(0))
    xp = (Fraction(1), Fraction(0))
    for k in range(6):
        a = Fraction((-1) ** k * math.comb(5, k), n + 6 - k)
        if k < 5:
            # d/dzeta of a_{k+1} x^{k+1} = a_{k+1} (k+1) x^k / 2
            b = Fraction((-1) ** (k + 1) * math.comb(5, k + 1) * (k + 1), 2 * (n + 5 - k))
            der = (der[0] + b * xp[0], der[1] + b * xp[1])
        val = (val[0] + a * xp[0], val[1] + a * xp[1])
        xp = _cmul(xp, x)
    return val, der


def eq1_value(n: int, zeta: complex) -> complex:
    """The endpoint integral int_{-1}^1 (w+1)^n (w-zeta)^5 dw divided by ``2^(n+6)``, evaluated exactly then rounded."""
    val, _ = _eq1_terms(n, complex(zeta))
    return complex(float(val[0]), float(val[1]))


def eq1_residual(n: int, zeta: complex) -> float:
    if n < 1:
        raise ValueError("n must be >= 1")
    v = eq1_value(n, zeta)
    return math.hypot(v.real, v.imag)


def eq1_residual_direct(n: int, zeta: complex) -> float:
    """Same quantity by expanding and integrating the polynomial in floating point.

    Only usable while ``2^(n+6)`` and the binomials stay in double range.
    """
    integrand = multiply(linear_factor_power(-1.0, n), linear_factor_power(zeta, 5))
    return abs(definite_integral_unit(integrand)) / 2.0 ** (n + 6)


def polish_zeta(n: int, zeta: complex, max_iter: int = 60) -> complex:
    """Newton on the exact endpoint-integral sum; stops when the rounded iterate repeats."""
    z = complex(zeta)
    seen = {z}
    for _ in range(max_iter):
        val, der = _eq1_terms(n, z)
        if der == (0, 0):
            break
        step = _cdiv(val, der)
        nxt = complex(float(Fraction(z.real) - step[0]), float(Fraction(z.imag) - step[1]))
        if nxt in seen:
            # pick the better of the two floats at a rounding-level cycle
            return min((z, nxt), key=lambda c: eq1_residual(n, c))
        seen.add(nxt)
        z = nxt
    return z


@functools.cache
def limit_root() -> complex:
    """The limit-polynomial root near ``-0.24 + 3.13i``, Newton-polished."""
    L = limit_polynomial()
    start = find_roots(L).nearest(LIMIT_ROOT_GUESS).location
    return polish_root(L, start)


def default_n_max(epsilon: float) -> int:
    return 10 * math.ceil(8 / epsilon) + 100


def _pick_w0(n: int, target: complex):
    g = g_polynomial(n)
    cands = [r.location for r in find_roots(g) if r.location.real < 0 and 0 < r.location.imag < 4]
    if not cands:
        return None
    w = min(cands, key=lambda c: (abs(c - target), -c.imag))
    return polish_root(g, w)


def solve_prop5(epsilon: float, n_max: int | None = None) -> Prop5Solution:
    """Smallest ``n > 8/epsilon`` admitting zeta with Re(zeta) > 1, |Im(zeta)| < epsilon."""
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    if n_max is None:
        n_max = default_n_max(epsilon)
    target = limit_root()
    for n in range(math.ceil(8 / epsilon) + 1, n_max + 1):
        w0 = _pick_w0(n, target)
        if w0 is None or not (w0.real < 0 and 0 < w0.imag < 4):
            continue
        zeta = polish_zeta(n, 1 - 2 * w0 / n)
        w0 = n * (1 - zeta) / 2
        if abs(zeta - (1 - 2 * w0 / n)) > 1e-12 * abs(zeta):
            raise ConstraintViolated(f"zeta = 1 - 2 w0/n broken at n={n}")
        res = eq1_residual(n, zeta)
        if zeta.real > 1 and abs(zeta.imag) < epsilon and res <= RESIDUAL_TOL:
            return Prop5Solution(n, w0, zeta, res, epsilon)
    raise ExhaustedN(f"no n in [{math.ceil(8 / epsilon) + 1}, {n_max}] satisfied the constraints")
