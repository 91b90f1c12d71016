"""Simultaneous root finding (Aberth-Ehrlich) and critical points."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegreeTooLow, DerivativeVanishes, NonConvergence
from .poly import Poly, derivative, evaluate

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 200
# rotation applied to the starting circle so no guess sits on a symmetry axis
START_ANGLE = 0.4


@dataclass(frozen=True)
class RootEntry:
    location: complex
    multiplicity: int
    residual: float


@dataclass(frozen=True)
class RootSet:
    entries: tuple[RootEntry, ...]
    converged: bool = True
    iterations: int = 0
    max_correction: float = 0.0

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def locations(self) -> list[complex]:
        return [e.location for e in self.entries]

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def expanded(self) -> list[complex]:
        """Locations repeated according to multiplicity."""
        return [e.location for e in self.entries for _ in range(e.multiplicity)]

    def nearest(self, z: complex) -> RootEntry:
        return min(self.entries, key=lambda e: abs(e.location - z))


def relative_residual(p: Poly, z: complex) -> float:
    """``|p(z)|`` over the evaluation scale ``sum |c_k| |z|^k``."""
    c = p.coeffs
    scale = float(evaluate(Poly(np.abs(c)), abs(z)).real)
    return abs(evaluate(p, z)) / scale if scale > 0 else 0.0


def _aberth(c: np.ndarray, tol: float, max_iter: int):
    n = c.size - 1
    lead = c[-1]
    radius = 1.0 + float(np.max(np.abs(c[:-1] / lead)))
    angles = 2.0 * np.pi * np.arange(n) / n + START_ANGLE
    z = radius * np.exp(1j * angles)
    dc = c[1:] * np.arange(1, n + 1)
    ac = np.abs(c)
    # a residual this small is indistinguishable from rounding in Horner's rule
    noise = 4.0 * (n + 1) * np.finfo(float).eps
    active = np.ones(n, dtype=bool)
    eye = np.eye(n, dtype=bool)
    corr = np.full(n, np.inf)
    it = 0
    for it in range(1, max_iter + 1):
        pv = np.full(n, c[-1], dtype=np.complex128)
        for ck in c[-2::-1]:
            pv = pv * z + ck
        dv = np.full(n, dc[-1], dtype=np.complex128)
        for ck in dc[-2::-1]:
            dv = dv * z + ck
        diff = z[:, None] - z[None, :]
        diff[eye] = 1.0
        inv = 1.0 / diff
        inv[eye] = 0.0
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dv
            w = ratio / (1.0 - ratio * inv.sum(axis=1))
        w = np.where(pv == 0, 0, w)
        w = np.where(np.isfinite(w), w, 0)
        w[~active] = 0
        az = np.abs(z)
        s = np.full(n, ac[-1])
        for ck in ac[-2::-1]:
            s = s * az + ck
        at_noise = np.abs(pv) <= noise * s
        z = z - w
        corr = np.where(active, np.where(at_noise, 0.0, np.abs(w)), corr)
        active &= (np.abs(w) > tol * np.maximum(1.0, np.abs(z))) & ~at_noise
        if not active.any():
            break
    return z, it, not active.any(), float(np.max(corr))


def _cluster(z: np.ndarray, tol: float):
    """Group roots into multiplicity clusters.

    An m-member cluster is accepted when its m members lie within
    ``tol**(1/m) * max(1, |centroid|)`` of their centroid; the largest such
    m wins.
    """
    remaining = list(range(z.size))
    groups = []
    while remaining:
        i = remaining[0]
        d = sorted(remaining, key=lambda j: (abs(z[j] - z[i]), j))
        chosen = [i]
        for m in range(len(d), 1, -1):
            members = d[:m]
            centroid = z[members].mean()
            radius = float(np.max(np.abs(z[members] - centroid)))
            if radius <= tol ** (1.0 / m) * max(1.0, abs(centroid)):
                chosen = members
                break
        groups.append(chosen)
        remaining = [j for j in remaining if j not in chosen]
    return groups


def find_roots(p: Poly, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> RootSet:
    """Locate every root of ``p`` with multiplicities.

    Raises NonConvergence (carrying the partial RootSet) if some correction
    is still above ``tol`` after ``max_iter`` sweeps.
    """
    if p.degree < 1:
        raise DegreeTooLow("find_roots needs degree >= 1")
    c = p.coeffs
    # exact zero roots are factored out first
    nz = int(np.flatnonzero(c)[0])
    c = c[nz:]
    locs = [0j] * nz
    if c.size == 2:
        locs.append(complex(-c[0] / c[1]))
        it, ok, corr = 0, True, 0.0
    elif c.size > 2:
        z, it, ok, corr = _aberth(c, tol, max_iter)
        locs.extend(complex(v) for v in z)
    else:
        it, ok, corr = 0, True, 0.0
    z = np.array(locs, dtype=np.complex128)
    entries = []
    for g in _cluster(z, tol):
        loc = complex(z[g].mean())
        entries.append(RootEntry(loc, len(g), relative_residual(p, loc)))
    entries.sort(key=lambda e: (e.location.real, e.location.imag))
    rs = RootSet(tuple(entries), converged=ok, iterations=it, max_correction=corr)
    if not ok:
        raise NonConvergence(
            f"max correction {corr:.3g} above tol {tol:g} after {max_iter} iterations", rs
        )
    return rs


def polish_root(p: Poly, z0: complex, tol: float = 1e-15, max_iter: int = 100) -> complex:
    """Newton refinement of a simple root starting from ``z0``."""
    dp = derivative(p)
    scale = float(np.sum(np.abs(dp.coeffs)))
    z = complex(z0)
    if abs(evaluate(dp, z)) <= 1e-14 * scale:
        raise DerivativeVanishes(f"|p'(z0)| is negligible at z0={z}")
    for _ in range(max_iter):
        d = evaluate(dp, z)
        if d == 0:
            raise DerivativeVanishes(f"p' vanished during iteration at {z}")
        step = evaluate(p, z) / d
        z -= step
        if abs(step) <= tol * max(1.0, abs(z)):
            return z
    raise NonConvergence(f"Newton did not settle from {z0}", z)


def critical_points(p: Poly, tol: float = DEFAULT_TOL) -> RootSet:
    if p.degree < 2:
        raise DegreeTooLow("critical points need degree >= 2")
    return find_roots(derivative(p), tol)


def cauchy_bound(p: Poly) -> float:
    c = p.coeffs
    return 1.0 + float(np.max(np.abs(c[:-1] / c[-1]))) if c.size > 1 else 0.0


__all__ = [
    "RootEntry",
    "RootSet",
    "find_roots",
    "polish_root",
    "critical_points",
    "relative_residual",
    "cauchy_bound",
    "DEFAULT_TOL",
    "DEFAULT_MAX_ITER",
]
