import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rolle.constructions import cot_points
from rolle.errors import ParseError
from rolle.regions import (
    ClosedRightHalfPlane,
    CotSet,
    OffRealAxis,
    OpenDisk,
    OpenHalfPlane,
    SetMinus,
    StripExterior,
    Union,
    boundary_distance,
    contains,
    parse_region,
    sendov_union,
    theorem6_region,
)

COORD = st.floats(min_value=-5, max_value=5, allow_nan=False)
POINT = st.builds(complex, COORD, COORD)

LEAVES = [
    ClosedRightHalfPlane(),
    OpenHalfPlane(),
    OpenDisk(0.5 - 1j, 2.0),
    StripExterior(0.25),
    OffRealAxis(),
    CotSet(6),
]


def test_boundary_semantics():
    assert contains(ClosedRightHalfPlane(), 0)
    assert not contains(OpenHalfPlane(), 0)
    assert not contains(OpenDisk(0, 1), 1)
    assert not contains(StripExterior(0.5), 0.5j)
    assert contains(StripExterior(0.5), 0.5000001j)


def test_sendov_union_examples():
    r = sendov_union(1 / math.pi)
    assert contains(r, 2j)
    assert not contains(r, -1)
    assert not contains(r, 1.2 + 0.1j)
    assert contains(r, 0.5)
    r0 = sendov_union(0)
    for z in (1e-300j, 5 - 1e-9j, -3 + 2j):
        assert contains(r0, z)
    assert not contains(r0, 3)


def test_theorem6_examples():
    r = theorem6_region()
    assert contains(r, 1e-15j)
    assert not contains(r, -1)
    assert not contains(r, 1)
    assert contains(r, 0.999)


def test_cot_set_membership():
    r = CotSet(8)
    for n in range(2, 9):
        for p in cot_points(n):
            assert contains(r, p)
    assert contains(r, 1j + 5e-13)
    assert not contains(r, 1j + 1e-11)
    assert not contains(r, 0.3j)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(LEAVES), st.sampled_from(LEAVES), POINT)
def test_union_is_or(a, b, z):
    assert contains(Union((a, b)), z) == (contains(a, z) or contains(b, z))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(LEAVES), st.lists(POINT, max_size=4), POINT)
def test_setminus_excludes_exactly_listed(r, pts, z):
    m = SetMinus(r, tuple(pts))
    for p in pts:
        assert not contains(m, p)
    if all(abs(z - p) > 1e-12 for p in pts):
        assert contains(m, z) == contains(r, z)


def test_sendov_union_monotone_in_c():
    rng = np.random.default_rng(0)
    pts = rng.uniform(-3, 3, 10**4) + 1j * rng.uniform(-1.5, 1.5, 10**4)
    cs = [0, 0.05, 1 / math.pi, 0.5, 1.2]
    for c1, c2 in zip(cs, cs[1:]):
        small, big = sendov_union(c2), sendov_union(c1)
        for z in pts:
            if contains(small, z):
                assert contains(big, z)


@pytest.mark.parametrize(
    "text",
    [
        "closed_right_half_plane",
        "open_right_half_plane",
        "disk(1-2i, 0.5)",
        "strip_exterior(0.3183098861837907)",
        "off_real_axis",
        "cot_set(7)",
        "union(off_real_axis, disk(0, 1))",
        "minus(closed_right_half_plane, [-0.25+0.5i, 3i])",
        "union(minus(H, []), cot_set(3), sendov(0.1))",
    ],
)
def test_region_text_roundtrip(text):
    r = parse_region(text)
    assert parse_region(r.to_spec()) == r
    assert parse_region(r.to_spec()).to_spec() == r.to_spec()


def test_region_shorthands():
    assert parse_region("sendov(0.5)") == sendov_union(0.5)
    assert parse_region("theorem6") == theorem6_region()
    assert parse_region("H") == ClosedRightHalfPlane()


@pytest.mark.parametrize(
    "text", ["", "union(H", "disk(0)", "bogus", "disk(0, 1) extra", "strip_exterior(i)",
             "minus(H, [1+])", "disk(0, -1)", "cot_set(2.5)"]
)
def test_region_parse_errors(text):
    with pytest.raises(ParseError):
        parse_region(text)


def test_boundary_distance_flags_fragile_points():
    r = sendov_union(1 / math.pi)
    assert boundary_distance(r, -1) == 0
    assert boundary_distance(r, 0) == 1
    assert boundary_distance(r, 0.5 + 0.9j) == pytest.approx(0.9 - 1 / math.pi)
    # deep inside the disk, so not fragile even though it sits on the real axis
    assert boundary_distance(theorem6_region(), 0) == 1
