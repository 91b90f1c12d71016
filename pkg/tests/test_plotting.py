import math
import xml.etree.ElementTree as ET

from rolle.constructions import cot_points
from rolle.plotting import render_plot
from rolle.regions import contains, parse_region, sendov_union
from rolle.verify import theorem3_certificate

SVG = "{http://www.w3.org/2000/svg}"


def scatter_counts(path):
    tree = ET.parse(path)
    return [
        len(list(g.iter(SVG + "use")))
        for g in tree.iter(SVG + "g")
        if g.get("id", "").startswith("PathCollection")
    ]


def test_cot_points_plot(tmp_path):
    pts = cot_points(12)
    assert sorted(z.imag for z in pts) == sorted(-z.imag for z in pts)
    out = render_plot(None, [("I_12", pts)], tmp_path / "cot.svg")
    assert scatter_counts(out)[0] == 11


def test_empty_plot_is_valid_svg(tmp_path):
    out = render_plot(None, [], tmp_path / "empty.svg")
    root = ET.parse(out).getroot()
    assert root.tag == SVG + "svg"
    assert scatter_counts(out) == []


def test_certificate_plot_points_outside(tmp_path):
    cert = theorem3_certificate(1 / math.pi, 0.3)
    locs = [cp.location for cp in cert.critical_points]
    assert not any(contains(cert.region, z) for z in locs)
    out = render_plot(cert.region, [("critical points", locs)], tmp_path / "cert.svg")
    assert scatter_counts(out)[0] == 2


def test_plot_bytes_deterministic(tmp_path):
    region = parse_region("minus(union(sendov(0.2), cot_set(4)), [0.5])")
    a = render_plot(region, [("p", [1 + 1j])], tmp_path / "a.svg", title="x")
    b = render_plot(region, [("p", [1 + 1j])], tmp_path / "b.svg", title="x")
    assert a.read_bytes() == b.read_bytes()
    assert sendov_union(0.2) is not None
