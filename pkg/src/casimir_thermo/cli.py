"""``casimir-thermo`` command line.

Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 a g_p row
flagged FAIL.
"""
import argparse
import sys

import numpy as np

from . import __version__
from .core import SeriesControl, SeriesConvergenceError, curve, eps_c, eps_c_zero
from .modesum import kirchhoff_extract
from .output import render_svg, to_csv, to_json
from .physical import PlateConfig, report
from .regular import (
    P_MAX,
    correction_orders,
    g_p_deriv_form,
    g_p_exact,
    g_p_numeric,
    richardson_limit,
)

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_PROPERTY = 0, 2, 3, 4
GP_FAIL_THRESHOLD = 1e-6


class UsageError(Exception):
    pass


def _alpha_list(text):
    try:
        values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of reals: {text!r}")
    if len(values) < 2:
        raise argparse.ArgumentTypeError("need at least two cutoffs")
    return values


def _alpha_tag(a):
    return f"{a:g}".replace(".", "p").replace("-", "m")


def _figure1(args, ctl):
    if not args.t_max > 0:
        raise UsageError(f"--t-max must be positive, got {args.t_max}")
    if args.steps < 2:
        raise UsageError(f"--steps must be >= 2, got {args.steps}")
    pts = curve(0.0, args.t_max, args.steps, ctl)
    rows = [dict(t=p.t, eps_c=p.eps_c, phi_c=p.phi_c, neg_sigma_c=-p.sigma_c) for p in pts]
    if args.svg:
        svg = render_svg(
            [r["t"] for r in rows],
            [("(a) eps_c", [r["eps_c"] for r in rows]),
             ("(b) phi_c", [r["phi_c"] for r in rows]),
             ("(c) -sigma_c", [r["neg_sigma_c"] for r in rows])],
            title="Casimir energy, free energy and entropy between plates")
        with open(args.svg, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    meta = {"command": "figure1", "t_max": args.t_max, "steps": args.steps}
    return ["t", "eps_c", "phi_c", "neg_sigma_c"], rows, meta, EXIT_OK


def _physical(args, ctl):
    if args.d is None or args.plate_size is None:
        raise UsageError("--d and --plate-size are required")
    try:
        cfg = PlateConfig(args.d, args.plate_size, args.temp)
    except ValueError as exc:
        raise UsageError(str(exc))
    r = report(cfg, ctl)
    row = dict(separation=cfg.d, plate_size=cfg.L, temperature=cfg.T, t_c=r.T_c, t=r.t,
               energy_scale=r.D, e_c=r.E_c, f_c=r.F_c, s_c=r.S_c, pressure=r.pressure)
    meta = {"command": "physical", "units": {
        "separation": "m", "plate_size": "m", "temperature": "K", "t_c": "K", "t": "1",
        "energy_scale": "J/m^3", "e_c": "J", "f_c": "J", "s_c": "J/K", "pressure": "Pa"}}
    return list(row), [row], meta, EXIT_OK


def _kirchhoff(args, ctl):
    if not args.t >= 3.0:
        raise UsageError(f"--t must be >= 3 (exponential regime), got {args.t}")
    estimate = kirchhoff_extract(args.t, ctl)
    reference = eps_c_zero()
    row = dict(t=args.t, estimate=estimate, reference=reference,
               difference=estimate - reference, residual_bound=abs(eps_c(args.t, ctl)))
    meta = {"command": "kirchhoff", "reference_exact": "-1/360"}
    return list(row), [row], meta, EXIT_OK


def _gp(args, ctl):
    if not 0 <= args.p_max <= P_MAX:
        raise UsageError(f"--p-max must lie in [0, {P_MAX}], got {args.p_max}")
    alphas = args.alphas
    if any(not 0.0 < a <= 1.0 for a in alphas):
        raise UsageError(f"all alphas must lie in (0, 1], got {alphas}")
    if len(set(alphas)) != len(alphas):
        raise UsageError("alphas must be distinct")
    tags = [_alpha_tag(a) for a in alphas]
    columns = (["p", "exact"] + [f"numeric_at_{t}" for t in tags]
               + [f"deriv_at_{t}" for t in tags] + ["extrapolated", "check"])
    rows = []
    status = EXIT_OK
    for p in range(args.p_max + 1):
        numeric = [g_p_numeric(p, a, ctl) for a in alphas]
        deriv = [g_p_deriv_form(p, a) for a in alphas]
        limit = richardson_limit(alphas, numeric, correction_orders(p, len(alphas) - 1))
        if p % 2 == 0:
            check = "PASS" if abs(limit) <= GP_FAIL_THRESHOLD else "FAIL"
            if check == "FAIL":
                status = EXIT_PROPERTY
        else:
            check = "-"
        row = {"p": p, "exact": str(g_p_exact(p)), "extrapolated": limit, "check": check}
        row.update({f"numeric_at_{t}": v for t, v in zip(tags, numeric)})
        row.update({f"deriv_at_{t}": v for t, v in zip(tags, deriv)})
        rows.append(row)
    meta = {"command": "gp", "alphas": list(alphas),
            "fail_threshold": GP_FAIL_THRESHOLD}
    return columns, rows, meta, status


COMMANDS = {"figure1": _figure1, "physical": _physical, "kirchhoff": _kirchhoff, "gp": _gp}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=SeriesControl.tol,
                        help="absolute truncation tolerance for series")
    common.add_argument("--max-terms", type=int, default=SeriesControl.max_terms)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default="-", help="output path, '-' for stdout")
    common.add_argument("--provenance", action="store_true",
                        help="prepend a '#' line naming the tool version and command")

    parser = argparse.ArgumentParser(
        prog="casimir-thermo",
        description="Thermodynamics of the Casimir effect between parallel plates.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("figure1", parents=[common], help="eps_c, phi_c, -sigma_c versus t")
    p.add_argument("--t-max", type=float, default=3.0)
    p.add_argument("--steps", type=int, default=301)
    p.add_argument("--svg", default=None, help="also render the curves to this SVG file")

    p = sub.add_parser("physical", parents=[common], help="SI report for one plate geometry")
    p.add_argument("--d", type=float, required=True, help="plate separation [m]")
    p.add_argument("--plate-size", type=float, required=True, help="plate edge length [m]")
    p.add_argument("--temp", type=float, default=0.0, help="temperature [K]")

    p = sub.add_parser("kirchhoff", parents=[common],
                       help="zero-temperature energy from high-temperature thermal sums")
    p.add_argument("--t", type=float, default=5.0)

    p = sub.add_parser("gp", parents=[common], help="regularised g_p table")
    p.add_argument("--p-max", type=int, default=P_MAX)
    p.add_argument("--alphas", type=_alpha_list, default=[0.5, 0.25, 0.125])
    return parser


def _provenance(argv):
    return " ".join(["casimir-thermo", __version__] + list(argv))


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ctl = SeriesControl(args.tol, args.max_terms)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        columns, rows, meta, status = COMMANDS[args.command](args, ctl)
    except UsageError as exc:
        parser.error(str(exc))
    except (SeriesConvergenceError, ArithmeticError) as exc:
        print(f"casimir-thermo: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC

    meta["tol"] = ctl.tol
    meta["max_terms"] = ctl.max_terms
    if args.format == "csv":
        text = to_csv(columns, rows, _provenance(argv) if args.provenance else None)
    else:
        if args.provenance:
            meta["provenance"] = _provenance(argv)
        text = to_json(columns, rows, meta)

    if args.out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if status == EXIT_PROPERTY:
        failed = [r["p"] for r in rows if r.get("check") == "FAIL"]
        print(f"casimir-thermo: g_p extrapolation exceeds {GP_FAIL_THRESHOLD:g} for p={failed}",
              file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
