"""Dense complex polynomials and the plain-text complex number format.

Coefficients are stored in ascending degree order as a read-only
``complex128`` array.  Trailing zeros are trimmed once, at construction,
so every value handed out by this module is canonical.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

import numpy as np

from .errors import ParseError

__all__ = [
    "Poly",
    "evaluate",
    "derivative",
    "antiderivative_from",
    "definite_integral_unit",
    "linear_factor_power",
    "multiply",
    "in_P",
    "endpoint_gap",
    "coefficient_scale",
    "from_roots",
    "parse_complex",
    "format_complex",
]


class Poly:
    """Immutable polynomial ``c[0] + c[1] z + ... + c[d] z^d``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[complex]):
        c = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                     dtype=np.complex128).ravel()
        if c.size and not np.all(np.isfinite(c)):
            raise ValueError("polynomial coefficients must be finite")
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1].copy() if nz.size else np.zeros(1, dtype=np.complex128)
        c.flags.writeable = False
        self._c = c

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        # the zero polynomial reports degree 0, like a nonzero constant
        return self._c.size - 1

    @property
    def lead(self) -> complex:
        return complex(self._c[-1])

    def is_zero(self) -> bool:
        return self._c.size == 1 and self._c[0] == 0

    def __call__(self, z):
        return evaluate(self, z)

    def __mul__(self, other: "Poly") -> "Poly":
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return np.array_equal(self._c, other._c)

    def __hash__(self):
        return hash(self._c.tobytes())

    def __len__(self):
        return self._c.size

    def __repr__(self):
        return f"Poly({[complex(c) for c in self._c]!r})"

    def allclose(self, other: "Poly", rtol: float = 1e-12) -> bool:
        """Coefficientwise agreement relative to the larger coefficient 1-norm."""
        n = max(len(self), len(other))
        a = np.zeros(n, complex)
        b = np.zeros(n, complex)
        a[: len(self)] = self._c
        b[: len(other)] = other._c
        scale = max(coefficient_scale(self), coefficient_scale(other), 1e-300)
        return bool(np.max(np.abs(a - b)) <= rtol * scale)


def coefficient_scale(p: Poly) -> float:
    """The coefficient 1-norm."""
    return float(np.sum(np.abs(p.coeffs)))


def evaluate(p: Poly, z):
    """Horner evaluation; accepts a scalar or a numpy array of points."""
    c = p.coeffs
    if np.ndim(z) == 0:
        z = complex(z)
        acc = complex(c[-1])
        for ck in c[-2::-1]:
            acc = acc * z + complex(ck)
        return acc
    z = np.asarray(z, dtype=np.complex128)
    acc = np.full(z.shape, c[-1], dtype=np.complex128)
    for ck in c[-2::-1]:
        acc = acc * z + ck
    return acc


def derivative(p: Poly) -> Poly:
    c = p.coeffs
    if c.size == 1:
        return Poly([0])
    return Poly(c[1:] * np.arange(1, c.size))


def antiderivative_from(p: Poly, a: complex) -> Poly:
    """The antiderivative of ``p`` that vanishes at ``a``."""
    if p.is_zero():
        return Poly([0])
    c = p.coeffs
    integ = np.empty(c.size + 1, dtype=np.complex128)
    integ[0] = 0
    integ[1:] = c / np.arange(1, c.size + 1)
    integ[0] = -evaluate(Poly(integ), a)
    return Poly(integ)


def definite_integral_unit(p: Poly) -> complex:
    """Integral of ``p`` over [-1, 1]."""
    F = antiderivative_from(p, 0)
    return evaluate(F, 1.0) - evaluate(F, -1.0)


def linear_factor_power(a: complex, m: int) -> Poly:
    """Dense expansion of ``(w - a)**m`` with exact integer binomials."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    neg = -complex(a)
    powers = [1 + 0j]
    for _ in range(m):
        powers.append(powers[-1] * neg)
    coeffs = []
    for j in range(m + 1):
        b = math.comb(m, j)
        try:
            fb = float(b)
        except OverflowError:
            from .errors import ScaleOverflow

            raise ScaleOverflow(f"C({m}, {j}) exceeds double range") from None
        coeffs.append(fb * powers[m - j])
    return Poly(coeffs)


def multiply(p: Poly, q: Poly) -> Poly:
    if p.is_zero() or q.is_zero():
        return Poly([0])
    return Poly(np.convolve(p.coeffs, q.coeffs))


def endpoint_gap(p: Poly) -> float:
    """``|p(1) - p(-1)|`` divided by ``max(1, coefficient 1-norm)``."""
    return abs(evaluate(p, 1.0) - evaluate(p, -1.0)) / max(1.0, coefficient_scale(p))


def in_P(p: Poly, tol: float) -> bool:
    """Membership in the class of polynomials with ``p(-1) == p(1)``."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    return endpoint_gap(p) <= tol


def from_roots(roots: Sequence[complex], lead: complex = 1.0) -> Poly:
    p = Poly([lead])
    for r in roots:
        p = multiply(p, Poly([-complex(r), 1.0]))
    return p


# -- text format -------------------------------------------------------------

_REAL = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"""^\s*
    (?:
        (?P<re>[+-]?\s*{_REAL})
        (?:\s*(?P<isign>[+-])\s*(?P<im>{_REAL})?\s*[ij])?
      |
        (?P<only_sign>[+-]?)\s*(?P<only_im>{_REAL})?\s*[ij]
    )\s*$""",
    re.VERBOSE,
)


def parse_complex(text: str) -> complex:
    """Parse ``"a"``, ``"bi"`` or ``"a+bi"`` / ``"a-bi"`` with decimal reals.

    A bare ``i`` stands for the imaginary unit; ``j`` is accepted as a
    synonym.
    """
    m = _COMPLEX_RE.match(text)
    if m is None:
        raise ParseError("malformed complex number", text, _error_position(text))
    if m.group("re") is not None:
        re_part = float(m.group("re").replace(" ", ""))
        im_part = 0.0
        if m.group("isign"):
            im_part = float(m.group("im") or 1.0)
            if m.group("isign") == "-":
                im_part = -im_part
    else:
        re_part = 0.0
        im_part = float(m.group("only_im") or 1.0)
        if m.group("only_sign") == "-":
            im_part = -im_part
    return complex(re_part, im_part)


def _error_position(text: str) -> int:
    # longest prefix that still parses or could be extended into a valid number
    partial = re.compile(rf"^\s*[+-]?\s*(?:{_REAL})?\s*(?:[+-]\s*(?:{_REAL})?\s*)?[ij]?")
    m = partial.match(text)
    pos = m.end() if m else 0
    return min(pos, len(text))


def format_complex(z: complex, digits: int = 17) -> str:
    """Inverse of :func:`parse_complex`; ``digits`` significant digits per part."""
    z = complex(z)
    re_s = f"{z.real + 0.0:.{digits}g}"
    im = z.imag + 0.0
    if im == 0:
        return re_s
    im_s = f"{abs(im):.{digits}g}"
    if z.real == 0:
        return f"-{im_s}i" if im < 0 else f"{im_s}i"
    return f"{re_s}{'-' if im < 0 else '+'}{im_s}i"
