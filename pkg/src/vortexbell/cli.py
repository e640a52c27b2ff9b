"""Command-line front end: scans and maximizations as CSV/JSON tables.

Subcommands
-----------
bell-max            maximize |B| for an LG mode (restricted or general settings)
bell-scan           restricted Bell-sum table over x (diagonal or fixed py)
corr                correlation coefficient: --max scalar or a (theta, phi) grid
schmidt             HG expansion coefficients of an LG mode
wigner              closed-form (or --numeric) Wigner tables on a 4D grid
elliptical-profile  per-t Bell maxima of the squeezed elliptical beam

Scalar results are JSON on stdout (with an embedded run manifest); tables are
CSV with one header row, written to stdout or --out (file outputs get a
sidecar <out>.manifest.json). All numbers carry 17 significant digits.

Exit codes: 0 success, 2 argument error, 3 optimizer non-convergence,
4 I/O error.
"""

import argparse
import json
import math
import sys
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .bell import (
    GENERAL,
    RESTRICTED,
    OptimizerConfig,
    bell_scan,
    elliptical_profile,
    maximize_bell,
)
from .correlation import correlation_scan, max_correlation
from .modes import ModeIndex, lg_amplitude, schmidt_coefficients
from .quadrature import InsufficientOrderError, QuadratureConfig
from .wigner import (
    EllipticalParams,
    NumericWignerPlan,
    elliptical_field,
    lg_transform_evaluator,
    wigner_elliptical,
    wigner_lg,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_CONVERGED = 3
EXIT_IO = 4


class _UsageError(Exception):
    pass


def _fmt(value):
    return format(float(value), ".17g")


def _manifest(command, args, skip=("func", "out", "command")):
    parameters = {
        key: value for key, value in sorted(vars(args).items()) if key not in skip
    }
    return {
        "command": command,
        "parameters": parameters,
        "artifact_version": __version__,
        "seed": getattr(args, "seed", None),
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def _emit_json(payload, out):
    text = json.dumps(payload, indent=2)
    if out is None:
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _emit_csv(header, rows, out, manifest):
    lines = [header]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        with open(f"{out}.manifest.json", "w", encoding="utf-8") as handle:
            handle.write(json.dumps(manifest, indent=2) + "\n")


def _mode_from(args):
    try:
        return ModeIndex(args.n, args.m)
    except (TypeError, ValueError) as exc:
        raise _UsageError(str(exc)) from exc


def _optimizer_config(args):
    try:
        return OptimizerConfig(
            grid_bounds=args.grid_bounds,
            grid_points=args.grid_points,
            restarts=args.restarts,
            simplex_tol=args.simplex_tol,
            max_iters=args.max_iters,
            seed=args.seed,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


def _add_mode_flags(parser):
    parser.add_argument("--n", type=int, required=True, help="first mode index (n >= 0)")
    parser.add_argument("--m", type=int, required=True, help="second mode index (m >= 0)")


def _add_optimizer_flags(parser):
    parser.add_argument("--grid-bounds", type=float, default=2.0,
                        help="half-width of the seeding box per parameter")
    parser.add_argument("--grid-points", type=int, default=21,
                        help="grid points per axis for restricted seeding")
    parser.add_argument("--restarts", type=int, default=8,
                        help="number of seeds refined by the simplex")
    parser.add_argument("--simplex-tol", type=float, default=1e-9,
                        help="simplex diameter at which refinement stops")
    parser.add_argument("--max-iters", type=int, default=4000,
                        help="simplex iteration cap per restart")


def _cmd_bell_max(args):
    mode = _mode_from(args)
    cfg = _optimizer_config(args)
    kind = RESTRICTED if args.settings == "restricted" else GENERAL
    result = maximize_bell(lg_transform_evaluator(mode), kind, cfg)
    payload = {
        "best_value": result.best_value,
        "argmax": list(result.argmax),
        "evaluations": result.evaluations,
        "converged": result.converged,
        "manifest": _manifest("bell-max", args),
    }
    _emit_json(payload, args.out)
    return EXIT_OK if result.converged else EXIT_NOT_CONVERGED


def _cmd_bell_scan(args):
    mode = _mode_from(args)
    if args.samples < 2:
        raise _UsageError(f"--samples must be >= 2, got {args.samples}")
    if not (math.isfinite(args.x_min) and math.isfinite(args.x_max)) or args.x_max < args.x_min:
        raise _UsageError(f"bad scan range [{args.x_min}, {args.x_max}]")
    py = None if args.py is None else float(args.py)
    rows = bell_scan(mode, (args.x_min, args.x_max), args.samples, py=py)
    _emit_csv("x,py,abs_B", rows, args.out, _manifest("bell-scan", args))
    return EXIT_OK


def _cmd_corr(args):
    mode = _mode_from(args)
    quad = None
    if args.order is not None:
        try:
            quad = QuadratureConfig(order=args.order)
        except ValueError as exc:
            raise _UsageError(str(exc)) from exc
    try:
        if args.max:
            payload = {
                "n": mode.n,
                "m": mode.m,
                "c_max": max_correlation(mode, quad),
                "manifest": _manifest("corr", args),
            }
            _emit_json(payload, args.out)
            return EXIT_OK
        for name in ("theta_samples", "phi_samples"):
            if getattr(args, name) < 1:
                raise _UsageError(f"--{name.replace('_', '-')} must be >= 1")
        thetas = np.linspace(args.theta_min, args.theta_max, args.theta_samples,
                             endpoint=False)
        phis = np.linspace(args.phi_min, args.phi_max, args.phi_samples, endpoint=False)
        rows = correlation_scan(mode, thetas, phis, quad)
    except InsufficientOrderError as exc:
        raise _UsageError(str(exc)) from exc
    _emit_csv("theta,phi,c", rows, args.out, _manifest("corr", args))
    return EXIT_OK


def _cmd_schmidt(args):
    mode = _mode_from(args)
    terms = []
    total = 0.0
    for k, term in enumerate(schmidt_coefficients(mode)):
        abs2 = abs(term.coefficient) ** 2
        total += abs2
        terms.append(
            {
                "k": k,
                "hg": [term.hg_index.n, term.hg_index.m],
                "re": term.coefficient.real,
                "im": term.coefficient.imag,
                "abs2": abs2,
            }
        )
    payload = {
        "n": mode.n,
        "m": mode.m,
        "terms": terms,
        "sum_abs2": total,
        "manifest": _manifest("schmidt", args),
    }
    _emit_json(payload, args.out)
    return EXIT_OK


def _cmd_wigner(args):
    elliptical = args.elliptical_t is not None
    if elliptical and (args.n is not None or args.m is not None):
        raise _UsageError("give either --n/--m or --elliptical-t, not both")
    if not elliptical and (args.n is None or args.m is None):
        raise _UsageError("a mode needs both --n and --m (or use --elliptical-t)")
    if args.grid_samples < 1:
        raise _UsageError(f"--grid-samples must be >= 1, got {args.grid_samples}")
    if args.grid_max < args.grid_min:
        raise _UsageError(f"bad grid range [{args.grid_min}, {args.grid_max}]")

    if elliptical:
        try:
            params = EllipticalParams(args.elliptical_t, args.sign)
        except ValueError as exc:
            raise _UsageError(str(exc)) from exc
        closed = lambda pt: wigner_elliptical(params, pt)
        numeric_field = lambda X, Y: elliptical_field(params, X, Y)
        half_width = 8.0
    else:
        mode = _mode_from(args)
        closed = lambda pt: wigner_lg(mode, pt)
        numeric_field = lambda X, Y: lg_amplitude(mode, X, Y)
        half_width = 4.0 + math.sqrt(2.0 * mode.total + 1.0)

    if args.numeric:
        try:
            config = QuadratureConfig(order=args.order or 96, half_width=half_width,
                                      rule="gauss_legendre")
            evaluate = NumericWignerPlan(numeric_field, config)
        except ValueError as exc:
            raise _UsageError(str(exc)) from exc
    else:
        evaluate = closed

    axis = np.linspace(args.grid_min, args.grid_max, args.grid_samples)
    rows = []
    for x in axis:
        for px in axis:
            for y in axis:
                for py in axis:
                    w = evaluate((x, px, y, py))
                    rows.append((x, px, y, py, w, math.pi**2 * w))
    _emit_csv("x,px,y,py,w,pi", rows, args.out, _manifest("wigner", args))
    return EXIT_OK


def _cmd_elliptical_profile(args):
    if not (0.0 <= args.t_min <= args.t_max <= 2.0):
        raise _UsageError(
            f"t range [{args.t_min}, {args.t_max}] must sit inside [0, 2]"
        )
    if args.t_samples < 1:
        raise _UsageError(f"--t-samples must be >= 1, got {args.t_samples}")
    if args.sign not in (1, -1):
        raise _UsageError(f"--sign must be 1 or -1, got {args.sign}")
    cfg = _optimizer_config(args)
    kind = RESTRICTED if args.settings == "restricted" else GENERAL
    ts = np.linspace(args.t_min, args.t_max, args.t_samples)
    profile = elliptical_profile(ts, kind=kind, sign=args.sign, config=cfg)
    _emit_csv("t,best_abs_B", profile.rows, args.out,
              _manifest("elliptical-profile", args))
    footer = {
        "sup_t": profile.sup_t,
        "sup_best_abs_B": profile.sup_value,
        "converged": profile.all_converged,
        "manifest": _manifest("elliptical-profile", args),
    }
    print(json.dumps(footer, indent=2))
    return EXIT_OK if profile.all_converged else EXIT_NOT_CONVERGED


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="vortexbell",
        description="Bell-CHSH and correlation analysis of vortex beams",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bell-max", help="maximize |B| for an LG mode")
    _add_mode_flags(p)
    p.add_argument("--settings", choices=("restricted", "general"), default="restricted")
    _add_optimizer_flags(p)
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_bell_max)

    p = sub.add_parser("bell-scan", help="restricted Bell-sum scan table")
    _add_mode_flags(p)
    p.add_argument("--x-min", type=float, default=0.0)
    p.add_argument("--x-max", type=float, default=2.0)
    p.add_argument("--samples", type=int, default=201)
    p.add_argument("--py", type=float, default=None,
                   help="fix py at this value; default scans the diagonal py = x")
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_bell_scan)

    p = sub.add_parser("corr", help="quadrature correlation coefficient")
    _add_mode_flags(p)
    p.add_argument("--max", action="store_true", help="emit the scalar maximum only")
    p.add_argument("--theta-min", type=float, default=0.0)
    p.add_argument("--theta-max", type=float, default=2.0 * math.pi)
    p.add_argument("--theta-samples", type=int, default=24)
    p.add_argument("--phi-min", type=float, default=0.0)
    p.add_argument("--phi-max", type=float, default=2.0 * math.pi)
    p.add_argument("--phi-samples", type=int, default=24)
    p.add_argument("--order", type=int, default=None, help="quadrature order override")
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_corr)

    p = sub.add_parser("schmidt", help="HG expansion of an LG mode")
    _add_mode_flags(p)
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_schmidt)

    p = sub.add_parser("wigner", help="Wigner function table on a 4D grid")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--elliptical-t", type=float, default=None,
                   help="tabulate the elliptical beam at this squeeze instead of a mode")
    p.add_argument("--sign", type=int, default=1, choices=(1, -1))
    p.add_argument("--grid-min", type=float, default=-1.0)
    p.add_argument("--grid-max", type=float, default=1.0)
    p.add_argument("--grid-samples", type=int, default=3)
    p.add_argument("--numeric", action="store_true",
                   help="use the Fourier-integral engine instead of the closed form")
    p.add_argument("--order", type=int, default=None,
                   help="Gauss-Legendre order for --numeric")
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_wigner)

    p = sub.add_parser("elliptical-profile",
                       help="Bell maxima of the elliptical beam over a t grid")
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float, default=2.0)
    p.add_argument("--t-samples", type=int, default=21)
    p.add_argument("--settings", choices=("restricted", "general"), default="general")
    p.add_argument("--sign", type=int, default=1, choices=(1, -1))
    _add_optimizer_flags(p)
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_elliptical_profile)

    return parser


def main(argv=None):
    """Run one subcommand; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(parser.format_usage(), file=sys.stderr, end="")
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry():
    sys.exit(main())
