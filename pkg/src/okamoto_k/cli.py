"""Command-line front end: evaluate, construct, classify, experiment.

All output is assembled in memory and written in one shot, so a failed
run never leaves a partial file, and identical configs (plus seed) give
byte-identical output.  Exit codes: 0 success, 2 usage, 3 domain error,
4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .derivative import classification_report, sigma_fuzz
from .dimension import (
    box_dimension_estimate,
    box_dimension_formula,
    walk_monte_carlo,
)
from .errors import DomainError, RangeError, ResourceLimitError
from .functions import (
    hata_yamaguti_residual,
    k_series_phi,
    lebesgue_L,
    okamoto_iterative,
    okamoto_series,
    sample_grid,
    takagi,
    ternary_truncation,
)

SCHEMA_VERSION = 1
OUTDIR_ENV = "OKAMOTO_K_OUTDIR"

_EVAL_FNS = ("takagi", "lebesgue", "okamoto", "K", "Kn")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse rational {text!r}") from exc


def _resolve_output(path: str | None) -> str | None:
    if path is None:
        return None
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not os.path.isabs(path):
        return os.path.join(outdir, path)
    return path


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _csv_points(points: list[tuple[float, float]]) -> str:
    lines = ["x,value"]
    lines.extend(f"{x:.12g},{v:.12g}" for x, v in points)
    return "\n".join(lines) + "\n"


def _svg_points(points: list[tuple[float, float]], ylo: float, yhi: float) -> str:
    # fixed 800x800 viewport; graph area inset by a 40px margin
    size, margin = 800, 40
    span = size - 2 * margin

    def sx(x: float) -> float:
        return margin + x * span

    def sy(y: float) -> float:
        return margin + (yhi - y) / (yhi - ylo) * span

    pts = " ".join(f"{sx(x):.2f},{sy(v):.2f}" for x, v in points)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect x="{margin}" y="{margin}" width="{span}" height="{span}" '
        'fill="none" stroke="#999" stroke-width="1"/>',
    ]
    if ylo < 0 < yhi:
        y0 = sy(0.0)
        parts.append(
            f'<line x1="{margin}" y1="{y0:.2f}" x2="{size - margin}" y2="{y0:.2f}" '
            'stroke="#ccc" stroke-width="1"/>'
        )
    parts.append(
        f'<polyline points="{pts}" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _json_doc(payload: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(payload)
    return json.dumps(doc, indent=2) + "\n"


def _cmd_eval(args) -> int:
    if args.samples < 2:
        raise DomainError("need --samples >= 2")
    a = args.a
    if args.fn in ("lebesgue", "okamoto") and not 0 < a < 1:
        raise DomainError(f"parameter a={a} outside (0, 1)")
    xs = sample_grid(args.samples)
    if args.fn == "takagi":
        values = [takagi(x) for x in xs]
    elif args.fn == "lebesgue":
        values = [lebesgue_L(a, x) for x in xs]
    elif args.fn == "okamoto":
        values = [okamoto_series(a, x) for x in xs]
    elif args.fn == "K":
        trunc = ternary_truncation(args.terms) if args.terms else None
        values = [k_series_phi(x, trunc) for x in xs]
    else:  # Kn: partial sum through level n
        trunc = ternary_truncation(args.level + 1)
        values = [k_series_phi(x, trunc) for x in xs]
    points = list(zip(xs, values))

    if args.format == "csv":
        text = _csv_points(points)
    elif args.format == "json":
        text = _json_doc(
            {
                "command": "eval",
                "fn": args.fn,
                "a": a,
                "samples": args.samples,
                "points": [[x, v] for x, v in points],
            }
        )
    else:
        ylo, yhi = (-1.5, 1.5) if args.fn in ("K", "Kn") else (0.0, 1.0)
        text = _svg_points(points, ylo, yhi)
    _emit(text, _resolve_output(args.output))
    return 0


def _cmd_construct(args) -> int:
    a = _parse_rational(args.a)
    if not 0 < a < 1:
        raise DomainError(f"parameter a={a} outside (0, 1)")
    pl = okamoto_iterative(a, args.level)
    denom = 3**args.level
    if args.format == "csv":
        points = [(k / denom, float(y)) for k, y in enumerate(pl.ordinates)]
        text = _csv_points(points)
    elif args.format == "json":
        text = _json_doc(
            {
                "command": "construct",
                "a": str(a),
                "level": args.level,
                "breakpoints": [f"{k}/{denom}" for k in range(denom + 1)],
                "ordinates": [
                    f"{y.numerator}/{y.denominator}" for y in pl.ordinates
                ],
            }
        )
    else:
        points = [(k / denom, float(y)) for k, y in enumerate(pl.ordinates)]
        text = _svg_points(points, 0.0, 1.0)
    _emit(text, _resolve_output(args.output))
    return 0


def _cmd_classify(args) -> int:
    x = _parse_rational(args.x)
    if not 0 <= x <= 1:
        raise DomainError(f"{x} outside [0, 1]")
    text = _json_doc(classification_report(x))
    _emit(text, _resolve_output(args.output))
    return 0


def _cmd_experiment(args) -> int:
    name = args.name
    if name == "box-dim":
        a = _parse_rational(args.a)
        result = box_dimension_estimate(a, args.levels)
        payload = {
            "experiment": name,
            "params": {"a": str(a), "levels": args.levels},
            "results": {
                "scales": list(result.scales),
                "counts": list(result.counts),
                "fitted_dimension": result.fitted_dimension,
                "residual": result.residual,
                "fit_levels": list(result.fit_levels),
                "closed_form": box_dimension_formula(float(a)),
            },
        }
    elif name == "walk-mc":
        exp = walk_monte_carlo(args.samples, args.horizon, args.seed)
        payload = {
            "experiment": name,
            "params": {
                "samples": args.samples,
                "horizon": args.horizon,
                "seed": args.seed,
            },
            "results": {
                "crossing_fraction": exp.crossing_fraction,
                "mean_step_estimate": exp.mean_step_estimate,
            },
        }
    elif name == "sigma-fuzz":
        report = sigma_fuzz(args.trials, args.seed)
        payload = {
            "experiment": name,
            "params": {"trials": args.trials, "seed": args.seed},
            "results": report,
        }
    elif name == "hata-yamaguti":
        worst = hata_yamaguti_residual(grid=args.grid, h=args.step)
        payload = {
            "experiment": name,
            "params": {"grid": args.grid, "h": args.step},
            "results": {"max_abs_residual": worst},
        }
    else:
        raise DomainError(f"unknown experiment {name!r}")
    _emit(_json_doc(payload), _resolve_output(args.output))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="okamoto-k",
        description="Evaluate the self-affine family, its parameter derivative K, "
        "classify infinite-derivative points, and run the dimension/measure "
        "experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="sample a function on a uniform grid")
    p_eval.add_argument("--fn", choices=_EVAL_FNS, required=True)
    p_eval.add_argument("--a", type=float, default=1 / 3)
    p_eval.add_argument("--samples", type=int, default=1001)
    p_eval.add_argument("--terms", type=int, default=None)
    p_eval.add_argument("--level", type=int, default=10, help="partial-sum level for Kn")
    p_eval.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p_eval.add_argument("--output", default=None)
    p_eval.set_defaults(func=_cmd_eval)

    p_con = sub.add_parser("construct", help="exact subdivision approximant f_n")
    p_con.add_argument("--a", required=True, help='rational parameter, e.g. "2/5"')
    p_con.add_argument("--level", type=int, required=True)
    p_con.add_argument("--format", choices=("csv", "json", "svg"), default="json")
    p_con.add_argument("--output", default=None)
    p_con.set_defaults(func=_cmd_construct)

    p_cls = sub.add_parser("classify", help="infinite-derivative verdict for p/q")
    p_cls.add_argument("x", help='rational point, e.g. "1/4"')
    p_cls.add_argument("--output", default=None)
    p_cls.set_defaults(func=_cmd_classify)

    p_exp = sub.add_parser("experiment", help="run a reproducible experiment")
    p_exp.add_argument(
        "name", choices=("box-dim", "walk-mc", "sigma-fuzz", "hata-yamaguti")
    )
    p_exp.add_argument("--a", default="2/3")
    p_exp.add_argument("--levels", type=int, default=8)
    p_exp.add_argument("--samples", type=int, default=10000)
    p_exp.add_argument("--horizon", type=int, default=10000)
    p_exp.add_argument("--trials", type=int, default=10000)
    p_exp.add_argument("--seed", type=int, default=0)
    p_exp.add_argument("--grid", type=int, default=100)
    p_exp.add_argument("--step", type=float, default=1e-6)
    p_exp.add_argument("--output", default=None)
    p_exp.set_defaults(func=_cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, RangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
