"""Refutation certificates, Rolle witnesses and Monte Carlo corroboration.

Random polynomials come from :func:`numpy.random.default_rng` (PCG64).  Trial
``t`` of a run with seed ``s`` draws from ``default_rng([s, t])``, so every
trial is reproducible on its own and results do not depend on trial order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from .constructions import FamilyPolynomial, cot_pi_fraction, prop5_polynomial
from .errors import CapExceeded, EpsilonTooLarge, NonConvergence, NotInP
from .poly import Poly, endpoint_gap, in_P
from .prop5 import Prop5Solution, solve_prop5
from .regions import Region, boundary_distance, sendov_union
from .roots import critical_points

MEMBERSHIP_TOL = 1e-9
FRAGILE_DISTANCE = 1e-9


class Verdict(str, Enum):
    REFUTES = "REFUTES"
    CONSISTENT = "CONSISTENT"


class Provenance(str, Enum):
    CLOSED_FORM = "CLOSED_FORM"
    COMPUTED = "COMPUTED"


@dataclass(frozen=True)
class CriticalPoint:
    location: complex
    multiplicity: int
    provenance: Provenance


@dataclass(frozen=True)
class Certificate:
    polynomial: Poly
    p_membership_residual: float
    critical_points: tuple[CriticalPoint, ...]
    region: Region
    verdict: Verdict
    per_point_membership: tuple[bool, ...]
    solution: Prop5Solution | None = None
    diagnostics: tuple[str, ...] = field(default=())


def expected_verdict(cert: Certificate) -> Verdict:
    """Re-derive the verdict from the certificate's own fields."""
    outside = all(not cert.region.contains(cp.location) for cp in cert.critical_points)
    if outside and cert.p_membership_residual <= MEMBERSHIP_TOL:
        return Verdict.REFUTES
    return Verdict.CONSISTENT


def is_consistent(cert: Certificate) -> bool:
    fresh = tuple(cert.region.contains(cp.location) for cp in cert.critical_points)
    return fresh == cert.per_point_membership and cert.verdict == expected_verdict(cert)


def _critical_set(p, tol):
    if isinstance(p, FamilyPolynomial):
        return p.poly, [CriticalPoint(z, m, Provenance.CLOSED_FORM) for z, m in p.known_critical_points]
    try:
        rs = critical_points(p, tol=1e-12)
    except NonConvergence as err:
        rs = err.partial
    return p, [CriticalPoint(e.location, e.multiplicity, Provenance.COMPUTED) for e in rs]


def certify(p, region: Region) -> Certificate:
    """Assemble a certificate for any polynomial against ``region``."""
    poly, cps = _critical_set(p, MEMBERSHIP_TOL)
    member = tuple(region.contains(cp.location) for cp in cps)
    notes = tuple(
        f"critical point {cp.location} lies within {FRAGILE_DISTANCE:g} of a region boundary"
        for cp in cps
        if boundary_distance(region, cp.location) < FRAGILE_DISTANCE
    )
    cert = Certificate(poly, endpoint_gap(poly), tuple(cps), region, Verdict.CONSISTENT, member,
                       diagnostics=notes)
    return _replace_verdict(cert, expected_verdict(cert))


def _replace_verdict(cert, verdict):
    from dataclasses import replace

    return replace(cert, verdict=verdict)


def rolle_witness(r: Region, p, tol: float = MEMBERSHIP_TOL) -> complex | None:
    """First critical point of ``p`` lying in ``r``, or None.

    ``p`` may be a FamilyPolynomial, whose closed-form critical points are used
    in their stated order, or a bare Poly whose critical points are computed.
    """
    poly = p.poly if isinstance(p, FamilyPolynomial) else p
    if poly.degree < 2:
        raise NotInP("a Rolle witness needs degree >= 2")
    if not in_P(poly, tol):
        raise NotInP(f"p(1) != p(-1): normalized gap {endpoint_gap(poly):.3g} exceeds {tol:g}")
    _, cps = _critical_set(p, tol)
    for cp in cps:
        if r.contains(cp.location):
            return cp.location
    return None


def theorem3_certificate(c: float, epsilon: float, n_max: int | None = None) -> Certificate:
    """Refute ``{|Im z| > c} U {|z| < 1}`` as a Rolle's domain."""
    if not c > 0:
        raise ValueError("c must be positive")
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    if epsilon > c:
        raise EpsilonTooLarge(f"epsilon={epsilon} exceeds c={c}; |Im zeta| < epsilon would not exclude zeta")
    sol = solve_prop5(epsilon, n_max)
    fam = prop5_polynomial(sol.n, sol.zeta)
    cert = certify(fam, sendov_union(c))
    from dataclasses import replace

    return replace(cert, solution=sol)


# -- density of the cotangent points ----------------------------------------

def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Fraction of least denominator in the open interval (lo, hi); hi may be None for +inf."""
    a = math.floor(lo)
    if hi is None or a + 1 < hi:
        return Fraction(a + 1)
    # both ends lie in [a, a+1]
    inv_hi = None if lo == a else 1 / (lo - a)
    return a + 1 / _simplest_between(1 / (hi - a), inv_hi)


def nearest_cot_approx(y: float, delta: float, n_cap: int = 10**8) -> tuple[int, int]:
    """Smallest ``n`` (with its ``k``) such that ``|cot(k pi/n) - y| < delta``.

    ``t -> cot(pi t)`` is decreasing on (0, 1), so the admissible ``k/n`` fill
    an open interval of ``t``; its least-denominator fraction comes from the
    continued-fraction expansion of the endpoints.
    """
    if not delta > 0:
        raise ValueError("delta must be positive")
    lo = math.atan2(1.0, y + delta) / math.pi
    hi = math.atan2(1.0, y - delta) / math.pi
    shrink = 0.0
    for _ in range(60):
        w = (hi - lo) * shrink
        f = _simplest_between(Fraction(lo + w), Fraction(hi - w))
        k, n = f.numerator, f.denominator
        if n > n_cap:
            raise CapExceeded(f"smallest admissible n={n} exceeds cap {n_cap}")
        if 0 < k < n and abs(cot_pi_fraction(k, n) - y) < delta:
            return k, n
        # endpoint rounding admitted a fraction just outside; tighten and retry
        shrink = shrink * 2 if shrink else 1e-12
    raise CapExceeded(f"no admissible fraction found for y={y}, delta={delta}")


# -- sampling ----------------------------------------------------------------

def balance_endpoints(q: Poly) -> Poly:
    """``q(z) - ((q(1) - q(-1)) / 2) z``, which has equal values at -1 and 1."""
    c = np.array(q.coeffs, dtype=np.complex128)
    if c.size < 2:
        return q
    # (q(1) - q(-1)) / 2 is the sum of the odd-degree coefficients
    c[1] -= c[1::2].sum()
    return Poly(c)


def sample_in_P(degree: int, seed) -> Poly:
    """Random polynomial of the given degree with ``P(1) == P(-1)``.

    Coefficients of the raw draw are uniform on ``[-1, 1] x [-1, 1]``.
    ``seed`` is anything :func:`numpy.random.default_rng` accepts.
    """
    if degree < 2:
        raise ValueError("degree must be >= 2")
    rng = np.random.default_rng(seed)
    while True:
        c = rng.uniform(-1, 1, degree + 1) + 1j * rng.uniform(-1, 1, degree + 1)
        p = balance_endpoints(Poly(c))
        if p.degree == degree:
            return p


@dataclass
class RolleCheckReport:
    region: Region
    trials: int
    max_degree: int
    seed: int
    violations: list[Poly] = field(default_factory=list)
    nonconverged: list[int] = field(default_factory=list)
    fragile: int = 0

    @property
    def count(self) -> int:
        return len(self.violations)


def empirical_rolle_check(r: Region, trials: int, max_degree: int, seed: int) -> RolleCheckReport:
    """Sample ``trials`` polynomials and collect those with no critical point in ``r``.

    Degrees cycle through 2..max_degree.  Trials whose root finder does not
    converge are listed in ``nonconverged`` and never counted as violations.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if max_degree < 2:
        raise ValueError("max_degree must be >= 2")
    rep = RolleCheckReport(r, trials, max_degree, seed)
    span = max_degree - 1
    for t in range(trials):
        p = sample_in_P(2 + t % span, [seed, t])
        try:
            cps = critical_points(p).locations
        except NonConvergence:
            rep.nonconverged.append(t)
            continue
        if any(boundary_distance(r, z) < FRAGILE_DISTANCE for z in cps):
            rep.fragile += 1
        if not any(r.contains(z) for z in cps):
            rep.violations.append(p)
    return rep
