"""Exit criteria, one marked group per criterion.

Run ``pytest tests/test_acceptance.py`` for the per-criterion PASS/FAIL
summary printed at the end of the session.
"""

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from rolle.constructions import prop5_polynomial, theorem1_cubic
from rolle.poly import (
    coefficient_scale,
    definite_integral_unit,
    from_roots,
    in_P,
    linear_factor_power,
    Poly,
)
from rolle.prop5 import (
    binomial_reciprocal_identity,
    eq1_residual,
    eq1_residual_direct,
    lemma4_sum,
    limit_polynomial,
    solve_prop5,
)
from rolle.regions import ClosedRightHalfPlane, SetMinus, contains, sendov_union, theorem6_region
from rolle.roots import critical_points, find_roots
from rolle.verify import (
    Verdict,
    empirical_rolle_check,
    is_consistent,
    nearest_cot_approx,
    rolle_witness,
    theorem3_certificate,
)
from rolle.constructions import cot_pi_fraction


@pytest.mark.acceptance(1, "limit polynomial root near -0.24+3.13i within 0.02, < 1 s")
def test_c01_limit_root():
    t0 = time.perf_counter()
    rs = find_roots(limit_polynomial())
    elapsed = time.perf_counter() - t0
    target = complex(-0.24, 3.13)
    assert min(abs(z - target) for z in rs.locations) < 0.02
    assert elapsed < 1.0


@pytest.mark.acceptance(2, "Lemma 4 and reciprocal identity exact, < 5 s")
def test_c02_lemma4_exact():
    t0 = time.perf_counter()
    for n in range(1, 201):
        for i in range(6):
            exact, closed = lemma4_sum(n, i)
            assert exact == closed, (n, i)
    for m in range(13):
        for n in range(1, 101):
            lhs, rhs = binomial_reciprocal_identity(m, n)
            assert lhs == rhs, (m, n)
    assert time.perf_counter() - t0 < 5.0


@pytest.mark.acceptance(3, "Lemma 4 limit at n=1e4 within 1e-3 relative for each i")
@pytest.mark.parametrize("i", range(6))
def test_c03_lemma4_limit(i):
    _, closed = lemma4_sum(10**4, i)
    limit = Fraction(-120, math.factorial(i))
    rel = float(abs(closed - limit) / abs(limit))
    assert rel < 1e-3, f"relative gap {rel:.6g}"


@pytest.mark.acceptance(4, "Lemma 2 integrals vanish for n in [2,64], < 10 s")
def test_c04_lemma2():
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(2, 65):
        for k in range(1, n):
            p = linear_factor_power(complex(0, cot_pi_fraction(k, n)), n - 1)
            val = abs(definite_integral_unit(p)) / max(1.0, coefficient_scale(p))
            worst = max(worst, val)
    assert worst <= 1e-8
    assert time.perf_counter() - t0 < 10.0


@pytest.mark.acceptance(5, "Proposition 5 solutions for eps=0.1 and eps=0.01")
def test_c05_prop5():
    s = solve_prop5(0.1)
    assert s.n <= 2000
    assert s.zeta.real > 1 and abs(s.zeta.imag) < 0.1
    assert eq1_residual(s.n, s.zeta) <= 1e-10
    assert in_P(prop5_polynomial(s.n, s.zeta).poly, 1e-9)
    s = solve_prop5(0.01)
    assert s.zeta.real > 1 and abs(s.zeta.imag) < 0.01
    assert eq1_residual(s.n, s.zeta) <= 1e-10


@pytest.mark.acceptance(6, "Conjecture 2 refuted at c=1/pi, eps=0.3, < 5 s")
def test_c06_sendov_refutation():
    t0 = time.perf_counter()
    cert = theorem3_certificate(1 / math.pi, 0.3)
    elapsed = time.perf_counter() - t0
    region = sendov_union(1 / math.pi)
    assert cert.verdict is Verdict.REFUTES
    assert not contains(region, -1)
    assert not contains(region, cert.solution.zeta)
    assert is_consistent(cert)
    assert elapsed < 5.0


@pytest.mark.acceptance(7, "Theorem 6 region 1e4 trials and H 1e3 trials: 0 violations")
def test_c07_empirical_rolle():
    t0 = time.perf_counter()
    rep = empirical_rolle_check(theorem6_region(), 10**4, 12, 42)
    elapsed = time.perf_counter() - t0
    assert rep.count == 0
    assert elapsed < 60.0
    rep = empirical_rolle_check(ClosedRightHalfPlane(), 10**3, 12, 42)
    assert rep.count == 0


@pytest.mark.acceptance(8, "Theorem 1 cubic: 1000 random zeta")
def test_c08_theorem1_cubic():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        zeta = complex(rng.uniform(0.01, 3), rng.uniform(-3, 3))
        fam = theorem1_cubic(zeta)
        assert in_P(fam.poly, 1e-12)
        expected = [zeta, -1 / (3 * zeta)]
        got = critical_points(fam.poly).expanded()
        for e in expected:
            assert min(abs(g - e) for g in got) <= 1e-9 * max(1.0, abs(e))
        region = SetMinus(ClosedRightHalfPlane(), (expected[1],))
        assert rolle_witness(region, fam) == zeta
        assert abs(rolle_witness(region, fam.poly) - zeta) <= 1e-9 * max(1.0, abs(zeta))


@pytest.mark.acceptance(9, "density witness at delta=1e-3, n <= 1e8, < 0.1 s each")
@pytest.mark.parametrize("y", [0.1, 1, 10, 100])
def test_c09_density(y):
    t0 = time.perf_counter()
    k, n = nearest_cot_approx(y, 1e-3, 10**8)
    elapsed = time.perf_counter() - t0
    assert 2 <= n <= 10**8 and 1 <= k < n
    assert abs(1 / math.tan(k * math.pi / n) - y) < 1e-3
    assert elapsed < 0.1


@pytest.mark.acceptance(10, "root finder recovers 1000 known-root polynomials within 1e-8")
def test_c10_root_oracle():
    rng = np.random.default_rng(10)
    for _ in range(1000):
        deg = int(rng.integers(1, 21))
        while True:
            r = rng.uniform(-2, 2, deg) + 1j * rng.uniform(-2, 2, deg)
            if deg == 1 or (np.abs(r[:, None] - r[None, :]) + 10 * np.eye(deg)).min() >= 0.1:
                break
        p = from_roots(r, lead=complex(*rng.uniform(0.5, 2, 2)))
        rs = find_roots(p)
        got = rs.expanded()
        assert len(got) == deg
        assert max(min(abs(g - t) for g in got) for t in r) < 1e-8
        rebuilt = from_roots(got)
        assert rebuilt.allclose(Poly(p.coeffs / p.lead), 1e-6)


@pytest.mark.acceptance(11, "endpoint-integral residual agrees with direct integral for n <= 12")
def test_c11_eq1_two_routes():
    rng = np.random.default_rng(11)
    for n in range(1, 13):
        for _ in range(20):
            zeta = complex(*rng.normal(scale=2, size=2))
            a = eq1_residual(n, zeta)
            b = eq1_residual_direct(n, zeta)
            assert abs(a - b) <= 1e-12 * max(a, b)
