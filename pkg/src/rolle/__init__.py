"""Rolle's domains for complex polynomials with equal values at -1 and 1."""

__version__ = "0.1.0"

from .constructions import (  # noqa: E402
    cot_points,
    grace_heawood_disk,
    lemma2_family,
    prop5_polynomial,
    theorem1_cubic,
)
from .poly import Poly, format_complex, in_P, parse_complex  # noqa: E402
from .prop5 import eq1_residual, g_polynomial, limit_polynomial, solve_prop5  # noqa: E402
from .regions import parse_region, sendov_union, theorem6_region  # noqa: E402
from .roots import critical_points, find_roots, polish_root  # noqa: E402
from .verify import empirical_rolle_check, nearest_cot_approx, rolle_witness, theorem3_certificate  # noqa: E402
