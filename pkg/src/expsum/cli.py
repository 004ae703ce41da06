"""Command-line interface: point evaluations, verification, figure data.

Exit codes: 0 success, 1 verification failure, 2 argument error,
3 quadrature convergence failure, 4 output I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import entropy as entropy_mod
from . import oracle
from .dist import HypoexpTwo, RatePair
from .specfun import EULER_GAMMA, digamma

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_CONVERGENCE = 3
EXIT_IO = 4


def _fmt17(x: float) -> str:
    """Render a float with 17 significant digits (round-trip exact)."""
    return np.format_float_positional(
        float(x), precision=17, unique=False, fractional=False, trim="k"
    )


def _rate_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not math.isfinite(value) or value <= 0.0:
        raise argparse.ArgumentTypeError(f"must be a positive finite rate, got {text!r}")
    return value


def _probability_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not math.isfinite(value) or not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {text!r}")
    return value


def _tol_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not math.isfinite(value) or value <= 0.0:
        raise argparse.ArgumentTypeError(f"must be a positive tolerance, got {text!r}")
    return value


def _count_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be at least 2, got {text!r}")
    return value


def _seed_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text!r}")
    return value


@dataclass(frozen=True)
class SweepSpec:
    """Which figure data set to generate, at what resolution, to where."""

    figure_id: str
    grid_points: int = 200
    output_path: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.figure_id not in ("fig1", "fig2"):
            raise ValueError(f"figure_id must be fig1 or fig2, got {self.figure_id!r}")
        if int(self.grid_points) < 2:
            raise ValueError(f"grid_points must be at least 2, got {self.grid_points!r}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")


def cmd_entropy(args) -> int:
    rates = RatePair(args.lambda_w, args.lambda_x)
    if args.method == "mc":
        if args.n is None or args.seed is None:
            print("error: --method mc requires both --n and --seed", file=sys.stderr)
            return EXIT_USAGE
        d = HypoexpTwo(rates)
        est = oracle.entropy_monte_carlo(d, args.n, args.seed)
        print(f"entropy_nats {_fmt17(est.estimate)}")
        print(f"std_error {_fmt17(est.std_error)}")
        print(f"n_samples {est.n_samples}")
        return EXIT_OK
    if args.method == "quad":
        cfg = oracle.QuadratureConfig(abs_tol=args.tol)
        value = oracle.entropy_quadrature(HypoexpTwo(rates), cfg)
    else:
        value = entropy_mod.hypoexp_entropy(rates)
    print(f"entropy_nats {_fmt17(value)}")
    return EXIT_OK


def cmd_mi(args) -> int:
    value = entropy_mod.mutual_info_aen(args.signal_rate, args.noise_rate)
    print(f"mutual_information {_fmt17(value)} nats per server request")
    return EXIT_OK


def cmd_cond_entropy(args) -> int:
    model = entropy_mod.LightGatedModel(
        lambda_x=args.lambda_x,
        lambda_w_on=args.lambda_w_on,
        lambda_w_off=args.lambda_w_off,
        p_on=args.p_on,
    )
    value = entropy_mod.cond_entropy_light(model)
    branch_on = entropy_mod.hypoexp_entropy(RatePair(model.lambda_x, model.lambda_w_on))
    branch_off = entropy_mod.hypoexp_entropy(RatePair(model.lambda_x, model.lambda_w_off))
    print(f"cond_entropy_nats {_fmt17(value)}")
    print(f"branch_on_nats {_fmt17(branch_on)}")
    print(f"branch_off_nats {_fmt17(branch_off)}")
    return EXIT_OK


def _fig1_rows(grid_points: int):
    """Long-format rows (curve, lambda_w, lambda_x, entropy_nats).

    Ten fixed-noise curves with lambda_w stepping 0.2 .. 2.0 in increments
    of 0.2 and lambda_x sweeping up to just below lambda_w, plus the
    equal-rate Erlang-2 curve and the single-exponential curve over a
    shared grid.
    """
    rows = []
    for k in range(1, 11):
        lw = round(0.2 * k, 1)
        for lx in np.geomspace(0.01, lw * (1.0 - 1e-3), grid_points):
            lx = float(lx)
            h = entropy_mod.hypoexp_entropy(RatePair(lw, lx))
            rows.append(("hypoexp", lw, lx, h))
    shared = [float(x) for x in np.geomspace(0.01, 2.0, grid_points)]
    for x in shared:
        rows.append(("erlang2", x, x, entropy_mod.erlang2_entropy(x)))
    for x in shared:
        rows.append(("single", None, x, entropy_mod.exp_entropy(x)))
    return ["curve", "lambda_w", "lambda_x", "entropy_nats"], rows


def _fig2_rows(grid_points: int):
    """Rows (lambda, lambda_x, lambda_w, entropy_nats, reference lines).

    lambda runs log-spaced over [1.01, 100]; 2.0, the equal-rate point
    where the curve touches the Erlang-2 line, is appended so the contact
    appears exactly in the data.
    """
    grid = {float(g) for g in np.geomspace(1.01, 100.0, grid_points)}
    grid.add(2.0)
    ref_exp = entropy_mod.exp_entropy(1.0)
    ref_erlang2 = entropy_mod.erlang2_entropy(2.0)
    rows = []
    for lam in sorted(grid):
        pair = entropy_mod.mean_constrained_rates(lam)
        h = entropy_mod.hypoexp_entropy(pair)
        rows.append((lam, pair.lambda_lo, pair.lambda_hi, h, ref_exp, ref_erlang2))
    header = [
        "lambda",
        "lambda_x",
        "lambda_w",
        "entropy_nats",
        "reference_exp",
        "reference_erlang2",
    ]
    return header, rows


def _render_csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for value in row:
            if value is None:
                cells.append("")
            elif isinstance(value, str):
                cells.append(value)
            else:
                cells.append(_fmt17(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _render_json(header, rows) -> str:
    records = [dict(zip(header, row)) for row in rows]
    return json.dumps(records, indent=2) + "\n"


def cmd_figure(args) -> int:
    spec = SweepSpec(
        figure_id=args.figure_id,
        grid_points=args.grid_points,
        output_path=args.out,
        format=args.format,
    )
    header, rows = (
        _fig1_rows(spec.grid_points)
        if spec.figure_id == "fig1"
        else _fig2_rows(spec.grid_points)
    )
    content = (
        _render_csv(header, rows) if spec.format == "csv" else _render_json(header, rows)
    )
    if spec.output_path is None:
        sys.stdout.write(content)
    else:
        with open(spec.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(content)
    return EXIT_OK


def _verify_checks(seed: int, samples: int, abs_tol: float):
    """Run the oracle agreement suite; yields (name, measured, limit) rows."""
    cfg = oracle.QuadratureConfig(abs_tol=abs_tol)
    grid = [float(g) for g in np.geomspace(0.1, 10.0, 7)]

    closed_dev = 0.0
    norm_dev = 0.0
    for i, a in enumerate(grid):
        for j, b in enumerate(grid):
            d = HypoexpTwo(RatePair(a, b))
            if i != j:
                quad = oracle.entropy_quadrature(d, cfg)
                closed = entropy_mod.hypoexp_entropy(d.rates)
                closed_dev = max(closed_dev, abs(quad - closed))
            if i <= j:
                norm_dev = max(norm_dev, abs(oracle.normalization_quadrature(d, cfg) - 1.0))
    yield "closed form vs quadrature (42 pairs)", closed_dev, 1e-8
    yield "density normalization (28 pairs)", norm_dev, 1e-10

    ident_dev = 0.0
    for u in (0.5, 1.0, 2.0, 5.0):
        for v in (0.5, 1.0, 2.0, 5.0):
            numeric = oracle.gr_log_integral(u, v, cfg)
            closed = -(EULER_GAMMA + digamma(u / v + 1.0)) / u
            ident_dev = max(ident_dev, abs(numeric - closed))
    yield "log-integral identity (16 pairs)", ident_dev, 1e-8

    z_max = 0.0
    for a, b in ((2.0, 1.0), (10.0, 0.3), (1.01, 1.0)):
        d = HypoexpTwo(RatePair(a, b))
        closed = entropy_mod.hypoexp_entropy(d.rates)
        for i in range(5):
            est = oracle.entropy_monte_carlo(d, samples, seed + i)
            z_max = max(z_max, abs(est.estimate - closed) / est.std_error)
    yield "Monte-Carlo |z| (3 pairs x 5 seeds)", z_max, 5.0


def cmd_verify(args) -> int:
    print(f"verification report (seed {args.seed}, samples {args.samples})")
    all_ok = True
    for name, measured, limit in _verify_checks(args.seed, args.samples, args.tol):
        ok = measured <= limit
        all_ok = all_ok and ok
        status = "PASS" if ok else "FAIL"
        print(f"  {name:42s} max {measured:.3e}  limit {limit:.1e}  {status}")
    print(f"overall {'PASS' if all_ok else 'FAIL'}")
    return EXIT_OK if all_ok else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expsum",
        description=(
            "Differential entropy of sums of two independent exponentials: "
            "closed forms, numerical oracles, and figure data."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="entropy of the sum at two rates")
    p.add_argument("--lambda-w", type=_rate_arg, required=True)
    p.add_argument("--lambda-x", type=_rate_arg, required=True)
    p.add_argument("--method", choices=("closed", "quad", "mc"), default="closed")
    p.add_argument("--n", type=_count_arg, help="sample count (mc only)")
    p.add_argument("--seed", type=_seed_arg, help="generator seed (mc only)")
    p.add_argument("--tol", type=_tol_arg, default=1e-10, help="quadrature tolerance")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("mi", help="additive exponential noise mutual information")
    p.add_argument("--signal-rate", type=_rate_arg, required=True)
    p.add_argument("--noise-rate", type=_rate_arg, required=True)
    p.set_defaults(func=cmd_mi)

    p = sub.add_parser("cond-entropy", help="gate-conditioned dwell-time entropy")
    p.add_argument("--lambda-x", type=_rate_arg, required=True)
    p.add_argument("--lambda-w-on", type=_rate_arg, required=True)
    p.add_argument("--lambda-w-off", type=_rate_arg, required=True)
    p.add_argument("--p-on", type=_probability_arg, required=True)
    p.set_defaults(func=cmd_cond_entropy)

    p = sub.add_parser("figure", help="emit the data behind the two figures")
    p.add_argument("figure_id", choices=("fig1", "fig2"))
    p.add_argument("--grid-points", type=_count_arg, default=200)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="closed forms vs independent oracles")
    p.add_argument("--seed", type=_seed_arg, default=42)
    p.add_argument("--samples", type=_count_arg, default=100000)
    p.add_argument("--tol", type=_tol_arg, default=1e-10, help="quadrature tolerance")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code is None else int(exc.code)
    try:
        return args.func(args)
    except oracle.ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
