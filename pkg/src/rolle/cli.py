"""Command-line entry point.

Exit status: 0 on success, 1 when the library rejects the request (the
error class name is reported verbatim), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .constructions import cot_points, lemma2_family, theorem1_cubic
from .errors import NonConvergence, ParseError, RolleError
from .poly import endpoint_gap, evaluate, in_P, parse_complex
from .prop5 import default_n_max, solve_prop5
from .regions import parse_region
from .report import Report
from .roots import critical_points
from .verify import empirical_rolle_check, theorem3_certificate

IN_P_TOL = 1e-9


def _complex_arg(text):
    try:
        return parse_complex(text)
    except ParseError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _real_arg(text):
    z = _complex_arg(text)
    if z.imag != 0:
        raise argparse.ArgumentTypeError(f"expected a real number, got {text!r}")
    return z.real


def _region_arg(text):
    try:
        return parse_region(text)
    except ParseError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rolle", description="Constructions and certificates for Rolle's domains."
    )
    parser.add_argument("--json", action="store_true", help="emit the structured JSON report")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cot-points", help="list i*cot(k*pi/n) for 1 <= k < n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--plot", metavar="PATH", help="also write an SVG figure")

    p = sub.add_parser("lemma2", help="polynomial with a single critical point i*cot(k*pi/n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("cubic", help="cubic with critical points zeta and -1/(3 zeta)")
    p.add_argument("--zeta", type=_complex_arg, required=True)

    p = sub.add_parser("prop5", help="solve for (n, zeta) with Re zeta > 1, |Im zeta| < epsilon")
    p.add_argument("--epsilon", type=_real_arg, required=True)
    p.add_argument("--n-max", type=int, default=None)

    p = sub.add_parser("refute", help="certificate refuting {|Im z| > c} U {|z| < 1}")
    p.add_argument("--c", type=_real_arg, required=True)
    p.add_argument("--epsilon", type=_real_arg, default=None, help="default: min(c, 0.3)")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--plot", metavar="PATH", help="also write an SVG figure")

    p = sub.add_parser("check", help="Monte Carlo search for polynomials avoiding a region")
    p.add_argument("--region", type=_region_arg, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--plot", metavar="PATH", help="also write an SVG figure of the violations")

    p = sub.add_parser("plot", help="draw a region and optional points to SVG")
    p.add_argument("--region", type=_region_arg, required=True)
    p.add_argument("--points", metavar="FILE", help="complex numbers one per line, or a JSON report")
    p.add_argument("--out", metavar="PATH", required=True)
    return parser


def _cp_list(cps):
    return [{"location": z, "multiplicity": m} for z, m in cps]


def cmd_cot_points(args, diag):
    pts = cot_points(args.n)
    out = {"n": args.n, "points": pts}
    if args.plot:
        from .plotting import render_plot

        render_plot(None, [(f"I_{args.n}", pts)], args.plot, title=f"cot points, n={args.n}")
        out["figure"] = str(args.plot)
    return {"n": args.n}, out


def cmd_lemma2(args, diag):
    fam = lemma2_family(args.n, args.k)
    gap = endpoint_gap(fam.poly)
    return {"n": args.n, "k": args.k}, {
        "zeta": fam.known_critical_points[0][0],
        "critical_points": _cp_list(fam.known_critical_points),
        "polynomial": fam.poly,
        "endpoint_gap": gap,
        "in_P": in_P(fam.poly, IN_P_TOL),
    }


def cmd_cubic(args, diag):
    fam = theorem1_cubic(args.zeta)
    computed = critical_points(fam.poly)
    return {"zeta": args.zeta}, {
        "polynomial": fam.poly,
        "critical_points": _cp_list(fam.known_critical_points),
        "computed_critical_points": [
            {"location": e.location, "multiplicity": e.multiplicity, "residual": e.residual}
            for e in computed
        ],
        "value_at_minus_one": evaluate(fam.poly, -1.0),
        "value_at_one": evaluate(fam.poly, 1.0),
        "endpoint_gap": endpoint_gap(fam.poly),
        "in_P": in_P(fam.poly, IN_P_TOL),
    }


def cmd_prop5(args, diag):
    n_max = args.n_max if args.n_max is not None else default_n_max(args.epsilon)
    sol = solve_prop5(args.epsilon, n_max)
    return {"epsilon": args.epsilon, "n_max": n_max}, {
        "solution": sol,
        "checks": {
            "re_zeta_above_1": sol.zeta.real > 1,
            "im_zeta_below_epsilon": abs(sol.zeta.imag) < args.epsilon,
            "residual_below_1e-10": sol.residual <= 1e-10,
        },
    }


def cmd_refute(args, diag):
    eps = args.epsilon if args.epsilon is not None else min(args.c, 0.3)
    cert = theorem3_certificate(args.c, eps, args.n_max)
    diag.extend(cert.diagnostics)
    out = {
        "verdict": cert.verdict,
        "region": cert.region,
        "solution": cert.solution,
        "p_membership_residual": cert.p_membership_residual,
        "critical_points": [
            {"location": cp.location, "multiplicity": cp.multiplicity,
             "provenance": cp.provenance, "in_region": inside}
            for cp, inside in zip(cert.critical_points, cert.per_point_membership)
        ],
        "polynomial": cert.polynomial,
    }
    if args.plot:
        from .plotting import render_plot

        render_plot(cert.region, [("critical points", [cp.location for cp in cert.critical_points])],
                    args.plot, title=f"c = {args.c:.6g}: {cert.verdict.value}")
        out["figure"] = str(args.plot)
    return {"c": args.c, "epsilon": eps, "n_max": args.n_max}, out


def cmd_check(args, diag):
    rep = empirical_rolle_check(args.region, args.trials, args.max_degree, args.seed)
    if rep.nonconverged:
        diag.append(f"{len(rep.nonconverged)} trials did not converge and were skipped")
    if rep.fragile:
        diag.append(f"{rep.fragile} trials had a critical point within 1e-9 of a region boundary")
    out = {
        "violation_count": rep.count,
        "violations": rep.violations,
        "nonconverged_trials": rep.nonconverged,
    }
    if args.plot:
        from .plotting import render_plot

        pts = []
        for p in rep.violations[:20]:
            pts.extend(critical_points(p).locations)
        render_plot(args.region, [("critical points of violations", pts)], args.plot)
        out["figure"] = str(args.plot)
    inputs = {"region": args.region, "trials": args.trials, "max_degree": args.max_degree,
              "seed": args.seed}
    return inputs, out


def _read_points(path):
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        rep = Report.from_json(text)
        pts = []
        _collect(rep.outputs, pts)
        return pts
    pts = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            pts.append(parse_complex(line))
    return pts


def _collect(node, acc):
    if isinstance(node, dict):
        for k, v in node.items():
            if k == "location" and isinstance(v, complex):
                acc.append(v)
            elif k == "points" and isinstance(v, list):
                acc.extend(x for x in v if isinstance(x, complex))
            else:
                _collect(v, acc)
    elif isinstance(node, list):
        for v in node:
            _collect(v, acc)


def cmd_plot(args, diag):
    from .plotting import render_plot

    pts = _read_points(args.points) if args.points else []
    render_plot(args.region, [("points", pts)] if pts else [], args.out)
    outside = [z for z in pts if not args.region.contains(z)]
    return {"region": args.region, "points": args.points}, {
        "figure": str(args.out),
        "point_count": len(pts),
        "points_outside": outside,
    }


COMMANDS = {
    "cot-points": cmd_cot_points,
    "lemma2": cmd_lemma2,
    "cubic": cmd_cubic,
    "prop5": cmd_prop5,
    "refute": cmd_refute,
    "check": cmd_check,
    "plot": cmd_plot,
}


def dispatch(argv=None, stdout=None, stderr=None):
    """Run one command; returns ``(exit_code, report)`` and writes the report."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else 2), None
    diag: list[str] = []
    try:
        inputs, outputs = COMMANDS[args.command](args, diag)
        code = 0
    except (RolleError, ValueError, OverflowError) as err:
        partial = getattr(err, "partial", None)
        inputs = {k: v for k, v in vars(args).items() if k not in ("command", "json")}
        outputs = {"error": {"name": type(err).__name__, "message": str(err)}}
        if isinstance(err, NonConvergence) and partial is not None:
            diag.append("partial result available")
        code = 1
    report = Report(args.command, inputs, outputs, diag, __version__)
    if args.json:
        stdout.write(report.to_json() + "\n")
    elif code == 0:
        stdout.write(report.to_text() + "\n")
    else:
        stderr.write(f"error: {outputs['error']['name']}: {outputs['error']['message']}\n")
    return code, report


def main(argv=None):
    code, _ = dispatch(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
