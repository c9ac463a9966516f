"""Command-line front end: entropy, evolve, verify, sweep."""
import argparse
import sys

import numpy as np

from . import claims
from .expr import ExprParseError, parse_operator_expr
from .mesons import decompose
from .states import (MixingAmplitudes, entanglement_degree, entanglement_degree_closed_form,
                     initial_state, unnormalized_degree)
from .sweeps import DEFAULT_LAMBDA_RANGE, DEFAULT_NU_RANGE, fmt, sweep
from .yangian import YangianParams, ZeroFinalState, apply, convention_from_name, realize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ZERO_STATE, EXIT_CALIBRATION, EXIT_IO = 0, 1, 2, 3, 4, 5
ALPHA_TOL = 1e-6
CALIBRATION_SEED = 0


class UsageError(Exception):
    pass


def parse_alpha(text):
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"--alpha expects three comma-separated numbers, got {text!r}")
    if len(vals) != 3 or not all(np.isfinite(vals)):
        raise UsageError(f"--alpha expects three finite comma-separated numbers, got {text!r}")
    sq = sum(v * v for v in vals)
    if abs(sq - 1.0) > ALPHA_TOL:
        raise UsageError(
            f"--alpha must satisfy alpha1^2 + alpha2^2 + alpha3^2 = 1 (within {ALPHA_TOL:g}); "
            f"got {sq:.12g}")
    return MixingAmplitudes.normalized(*vals)


def parse_range(text, flag):
    try:
        lo, hi = (float(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} expects lo,hi, got {text!r}")
    if not (np.isfinite(lo) and np.isfinite(hi) and hi > lo):
        raise UsageError(f"{flag} needs finite lo < hi, got {text!r}")
    return lo, hi


def resolve_convention(name):
    """'calibrated' runs the calibration; anything else is a convention name."""
    if name in (None, "calibrated"):
        try:
            conv, _ = claims.calibrate_conventions(seed=CALIBRATION_SEED)
        except claims.CalibrationFailed as exc:
            print(f"warning: calibration failed, using {exc.convention.name}", file=sys.stderr)
            conv = exc.convention
        return conv
    try:
        return convention_from_name(name)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_entropy(args):
    alpha = parse_alpha(args.alpha)
    print(fmt(entanglement_degree_closed_form(alpha)))
    return EXIT_OK


def cmd_evolve(args):
    alpha = parse_alpha(args.alpha)
    try:
        expr = parse_operator_expr(args.op)
    except ExprParseError as exc:
        raise UsageError(f"--op: {exc}")
    conv = resolve_convention(args.convention)
    params = YangianParams(args.mu, args.nu, args.lam)
    op = realize(expr, params, conv)
    phi = initial_state(alpha)
    try:
        out = apply(op, phi, normalize=args.normalize)
        if args.mode == "physical":
            degree = entanglement_degree(apply(op, phi, normalize=True))
        else:
            degree = unnormalized_degree(out)
    except ZeroFinalState as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO_STATE
    print(f"# P = {expr}; mu={fmt(args.mu)} nu={fmt(args.nu)} lambda={fmt(args.lam)}; "
          f"convention {conv.name}; mode {args.mode}")
    print("meson,real,imag")
    for meson, c in decompose(out):
        if abs(c) > 1e-12:
            print(f"{meson},{fmt(c.real)},{fmt(c.imag)}")
    print(f"C,{fmt(degree)}")
    return EXIT_OK


def cmd_verify(args):
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    conv = None if args.convention in (None, "calibrated") else resolve_convention(args.convention)
    reports, failed_cal = claims.verify(args.claim, args.trials, args.seed, args.tol, conv)
    text = claims.reports_to_json(reports)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    for rep in reports:
        print(f"{rep.claim_id}: {rep.status} (max error {rep.max_abs_error:.3e})", file=sys.stderr)
    if failed_cal:
        return EXIT_CALIBRATION
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_sweep(args):
    if args.grid < 2:
        raise UsageError("--grid must be at least 2")
    kwargs = {}
    if args.figure in (3, 5):
        kwargs["nu_range"] = parse_range(args.range_nu, "--range-nu")
        kwargs["lam_range"] = parse_range(args.range_lambda, "--range-lambda")
        kwargs["mode"] = args.mode
        if args.mode == "physical":
            kwargs["conv"] = resolve_convention(args.convention)
    grid = sweep(args.figure, args.grid, **kwargs)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            grid.to_csv(fh)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="yangmix",
                     description="Yangian transition operators on the eta-pi0-eta' mixing state")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("entropy", help="entanglement degree of the initial state")
    p.add_argument("--alpha", required=True, help="a1,a2,a3 with unit sum of squares")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("evolve", help="apply a transition operator to the initial state")
    p.add_argument("--alpha", required=True)
    p.add_argument("--op", required=True, help='e.g. "V+ + V-" or "2*I8 - 0.5*I3"')
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--convention", default="calibrated",
                   help="calibrated (default), fundamental, conjugate, or a full convention name")
    p.add_argument("--normalize", action="store_true", help="normalize the printed final state")
    p.add_argument("--mode", choices=("physical", "paper"), default="physical")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("verify", help="check the closed-form statements, write JSON reports")
    p.add_argument("--claim", default="all", choices=("all",) + claims.CLAIM_GROUPS)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=claims.DEFAULT_TOL)
    p.add_argument("--convention", default="calibrated")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="write a figure grid as CSV")
    p.add_argument("--figure", type=int, required=True, choices=(1, 3, 5))
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--range-nu", default="%g,%g" % DEFAULT_NU_RANGE)
    p.add_argument("--range-lambda", default="%g,%g" % DEFAULT_LAMBDA_RANGE)
    p.add_argument("--mode", choices=("paper", "physical"), default="paper")
    p.add_argument("--convention", default="calibrated")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
