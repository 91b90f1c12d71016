"""Point-set algebra for candidate Rolle's domains.

Membership is evaluated literally on the floating input: open and closed
boundaries are honoured exactly, with no tolerance.  Use
:func:`boundary_distance` to flag memberships that sit within rounding of a
boundary.

Text grammar (used by ``--region`` on the command line)::

    region  := NAME [ "(" arg { "," arg } ")" ]
    arg     := region | COMPLEX | "[" [ COMPLEX { "," COMPLEX } ] "]"

    closed_right_half_plane          Re z >= 0
    open_right_half_plane            Re z > 0
    disk(center, radius)             |z - center| < radius
    strip_exterior(c)                |Im z| > c
    off_real_axis                    Im z != 0
    cot_set(n_max)                   i cot(k pi/n), 2 <= n <= n_max
    union(r1, r2, ...)
    minus(r, [z1, z2, ...])          r without the listed points
    sendov(c)                        union(strip_exterior(c), disk(0, 1))
    theorem6                         union(off_real_axis, disk(0, 1))

COMPLEX uses the ``a+bi`` text format of :func:`rolle.poly.parse_complex`.
"""

from __future__ import annotations

import bisect
import functools
import re
from dataclasses import dataclass

from .constructions import cot_pi_fraction
from .errors import ParseError
from .poly import format_complex, parse_complex

POINT_TOL = 1e-12


class Region:
    def contains(self, z: complex) -> bool:
        raise NotImplementedError

    def boundary_distance(self, z: complex) -> float:
        raise NotImplementedError

    def to_spec(self) -> str:
        raise NotImplementedError

    def __contains__(self, z):
        return self.contains(complex(z))

    def __str__(self):
        return self.to_spec()


@dataclass(frozen=True)
class ClosedRightHalfPlane(Region):
    def contains(self, z):
        return z.real >= 0

    def boundary_distance(self, z):
        return abs(z.real)

    def to_spec(self):
        return "closed_right_half_plane"


@dataclass(frozen=True)
class OpenHalfPlane(Region):
    """Re z > 0."""

    def contains(self, z):
        return z.real > 0

    def boundary_distance(self, z):
        return abs(z.real)

    def to_spec(self):
        return "open_right_half_plane"


@dataclass(frozen=True)
class OpenDisk(Region):
    center: complex = 0j
    radius: float = 1.0

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("disk radius must be positive")

    def contains(self, z):
        return abs(z - self.center) < self.radius

    def boundary_distance(self, z):
        return abs(abs(z - self.center) - self.radius)

    def to_spec(self):
        return f"disk({format_complex(self.center)}, {format_complex(self.radius)})"


@dataclass(frozen=True)
class StripExterior(Region):
    """|Im z| > c."""

    c: float

    def __post_init__(self):
        if self.c < 0:
            raise ValueError("strip half-width must be nonnegative")

    def contains(self, z):
        return abs(z.imag) > self.c

    def boundary_distance(self, z):
        return abs(abs(z.imag) - self.c)

    def to_spec(self):
        return f"strip_exterior({format_complex(self.c)})"


@dataclass(frozen=True)
class OffRealAxis(Region):
    def contains(self, z):
        return z.imag != 0

    def boundary_distance(self, z):
        return abs(z.imag)

    def to_spec(self):
        return "off_real_axis"


@functools.lru_cache(maxsize=32)
def _cot_values(n_max: int) -> tuple[float, ...]:
    vals = {cot_pi_fraction(k, n) for n in range(2, n_max + 1) for k in range(1, n)}
    return tuple(sorted(vals))


@dataclass(frozen=True)
class CotSet(Region):
    """Finite truncation of the points i cot(k pi/n) to n <= n_max."""

    n_max: int

    def __post_init__(self):
        if self.n_max < 2:
            raise ValueError("n_max must be >= 2")

    @property
    def points(self) -> list[complex]:
        return [complex(0, v) for v in _cot_values(self.n_max)]

    def _nearest_gap(self, z):
        vals = _cot_values(self.n_max)
        j = bisect.bisect_left(vals, z.imag)
        near = [vals[t] for t in (j - 1, j) if 0 <= t < len(vals)]
        return min(abs(z - complex(0, v)) for v in near)

    def contains(self, z):
        return self._nearest_gap(z) <= POINT_TOL

    def boundary_distance(self, z):
        return self._nearest_gap(z)

    def to_spec(self):
        return f"cot_set({self.n_max})"


@dataclass(frozen=True)
class Union(Region):
    parts: tuple[Region, ...]

    def contains(self, z):
        return any(p.contains(z) for p in self.parts)

    def boundary_distance(self, z):
        # a member is only as fragile as its most robust containing part
        inside = [p.boundary_distance(z) for p in self.parts if p.contains(z)]
        if inside:
            return max(inside)
        return min(p.boundary_distance(z) for p in self.parts)

    def to_spec(self):
        return f"union({', '.join(p.to_spec() for p in self.parts)})"


@dataclass(frozen=True)
class SetMinus(Region):
    region: Region
    points: tuple[complex, ...]

    def contains(self, z):
        if any(abs(z - p) <= POINT_TOL for p in self.points):
            return False
        return self.region.contains(z)

    def boundary_distance(self, z):
        return min([self.region.boundary_distance(z)] + [abs(z - p) for p in self.points])

    def to_spec(self):
        pts = ", ".join(format_complex(p) for p in self.points)
        return f"minus({self.region.to_spec()}, [{pts}])"


def contains(r: Region, z: complex) -> bool:
    return r.contains(complex(z))


def boundary_distance(r: Region, z: complex) -> float:
    return r.boundary_distance(complex(z))


def sendov_union(c: float) -> Region:
    """``{|Im z| > c} U {|z| < 1}``."""
    if c < 0:
        raise ValueError("c must be nonnegative")
    return Union((StripExterior(float(c)), OpenDisk(0j, 1.0)))


def theorem6_region() -> Region:
    """``{Im z != 0} U {|z| < 1}``."""
    return Union((OffRealAxis(), OpenDisk(0j, 1.0)))


def primitives(r: Region):
    """Leaf regions of ``r`` in tree order."""
    if isinstance(r, Union):
        for p in r.parts:
            yield from primitives(p)
    elif isinstance(r, SetMinus):
        yield from primitives(r.region)
    else:
        yield r


# -- parsing -----------------------------------------------------------------

_NAME = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def fail(self, msg):
        raise ParseError(msg, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def scalar_token(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",)]":
            self.pos += 1
        tok = self.text[start:self.pos]
        try:
            return parse_complex(tok)
        except ParseError:
            self.pos = start
            self.fail("malformed number")

    def real(self):
        v = self.scalar_token()
        if v.imag != 0:
            self.fail("expected a real number")
        return v.real

    def point_list(self):
        self.expect("[")
        pts = []
        if self.peek() == "]":
            self.pos += 1
            return tuple(pts)
        while True:
            pts.append(self.scalar_token())
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("]")
            return tuple(pts)

    def region(self):
        self.skip()
        m = _NAME.match(self.text, self.pos)
        if not m:
            self.fail("expected a region name")
        name = m.group(1)
        self.pos = m.end()
        has_args = self.peek() == "("
        if has_args:
            self.pos += 1

        def done():
            if has_args:
                self.expect(")")

        if name in ("closed_right_half_plane", "H"):
            r = ClosedRightHalfPlane()
        elif name == "open_right_half_plane":
            r = OpenHalfPlane()
        elif name == "off_real_axis":
            r = OffRealAxis()
        elif name == "theorem6":
            r = theorem6_region()
        elif name in ("disk", "strip_exterior", "cot_set", "sendov", "union", "minus"):
            if not has_args:
                self.fail(f"{name} needs arguments")
            if name == "disk":
                center = self.scalar_token()
                self.expect(",")
                r = OpenDisk(center, self.real())
            elif name == "strip_exterior":
                r = StripExterior(self.real())
            elif name == "sendov":
                r = sendov_union(self.real())
            elif name == "cot_set":
                v = self.real()
                if v != int(v):
                    self.fail("cot_set needs an integer")
                r = CotSet(int(v))
            elif name == "union":
                parts = [self.region()]
                while self.peek() == ",":
                    self.pos += 1
                    parts.append(self.region())
                r = Union(tuple(parts))
            else:
                base = self.region()
                self.expect(",")
                r = SetMinus(base, self.point_list())
        else:
            self.pos = m.start(1)
            self.fail(f"unknown region {name!r}")
        done()
        return r


def parse_region(text: str) -> Region:
    p = _Parser(text)
    try:
        r = p.region()
    except ValueError as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(str(e), text, p.pos) from None
    if p.peek():
        p.fail("trailing input")
    return r


__all__ = [
    "Region",
    "ClosedRightHalfPlane",
    "OpenHalfPlane",
    "OpenDisk",
    "StripExterior",
    "OffRealAxis",
    "CotSet",
    "Union",
    "SetMinus",
    "contains",
    "boundary_distance",
    "sendov_union",
    "theorem6_region",
    "primitives",
    "parse_region",
    "POINT_TOL",
]

