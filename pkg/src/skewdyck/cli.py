"""Command-line front end.

Subcommands: count, series, bivariate, levels, verify, asympt, render.
Output is byte-stable for fixed flags; JSON payloads follow the schema
{"sequence": [...decimal strings...], "variable": "z"|"z(half)",
"t_mode": <track|zero|one|rational>}.  Exit codes: 0 success, 1 failed
verification, 2 flag errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import asymptotics, automaton, cubics, holonomic, kernel, paths, verify
from .rings import TPoly

DEFAULT_ORDER = 16
ASYMPT_NS = (50, 100, 200, 400, 800, 1600)


def _parse_t_eval(value: str):
    if value in ("track", "zero", "one"):
        return value
    try:
        return Fraction(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"--t-eval must be track, zero, one, or a rational, not {value!r}"
        )


def _coeff_str(c) -> str:
    if isinstance(c, TPoly):
        if not c.coeffs:
            return "[0]"
        return "[" + " ".join(str(x) for x in c.coeffs) + "]"
    return str(c)


def _emit_sequence(args, coeffs, variable: str, t_mode: str) -> None:
    if args.format == "json":
        payload = {
            "sequence": [_coeff_str(c) for c in coeffs],
            "variable": variable,
            "t_mode": t_mode,
        }
        print(json.dumps(payload))
    else:
        sep = "\t" if args.format == "tsv" else " "
        print(sep.join(_coeff_str(c) for c in coeffs))


def _t_mode_name(t_eval) -> str:
    return t_eval if isinstance(t_eval, str) else str(t_eval)


def _eval_tpoly(poly: TPoly, t_eval):
    if t_eval == "track":
        return poly
    if t_eval == "zero":
        return poly.coefficient(0)
    if t_eval == "one":
        return poly(1)
    return poly(t_eval)


def cmd_count(args) -> int:
    result = _eval_tpoly(automaton.count(args.length, args.level), args.t_eval)
    if args.format == "json":
        print(json.dumps({"count": _coeff_str(result), "t_mode": _t_mode_name(args.t_eval)}))
    else:
        print(_coeff_str(result))
    return 0


def cmd_series(args) -> int:
    order = args.order
    if args.half_length:
        coeffs = cubics.avoidance_series(order).integer_coefficients()
        _emit_sequence(args, coeffs, "z(half)", "zero")
    else:
        gf = kernel.level_gf(0, order, kernel.GFMode.UNIVARIATE)
        _emit_sequence(args, gf.integer_coefficients(), "z", "zero")
    return 0


def cmd_bivariate(args) -> int:
    rows = cubics.marker_series(args.order).integer_coefficients()
    if args.format == "json":
        payload = {
            "sequence": [[str(x) for x in (r.coeffs or (0,))] for r in rows],
            "variable": "z(half)",
            "t_mode": "track",
        }
        print(json.dumps(payload))
    else:
        sep = "\t" if args.format == "tsv" else " "
        for n, row in enumerate(rows):
            cells = sep.join(str(x) for x in (row.coeffs or (0,)))
            print(f"{n}:{sep}{cells}")
    return 0


def cmd_levels(args) -> int:
    mode = kernel.GFMode.UNIVARIATE if args.t_eval == "zero" else kernel.GFMode.BIVARIATE
    gf = kernel.level_gf(args.level, args.order, mode)
    if mode is kernel.GFMode.BIVARIATE:
        coeffs = [_eval_tpoly(c, args.t_eval) for c in gf.integer_coefficients()]
    else:
        coeffs = gf.integer_coefficients()
    if args.half_length:
        if args.level % 2 != 0:
            print("--half-length requires an even level", file=sys.stderr)
            return 2
        coeffs = coeffs[0::2]
    variable = "z(half)" if args.half_length else "z"
    _emit_sequence(args, coeffs, variable, _t_mode_name(args.t_eval))
    return 0


def cmd_verify(args) -> int:
    depth = min(args.order, paths.ORACLE_CAP)
    results = verify.run_all(oracle_depth=depth)
    failed = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        detail = f"  ({r.detail})" if r.detail else ""
        print(f"{status} {r.name}{detail}")
        if not r.ok:
            failed += 1
    if failed:
        print(f"{failed} check(s) failed", file=sys.stderr)
        return 1
    return 0


def cmd_asympt(args) -> int:
    ns = args.n or list(ASYMPT_NS)
    coeffs = holonomic.extend([1, 1, 2, 6], max(ns))
    try:
        rows = asymptotics.convergence_report(ns, coeffs)
    except asymptotics.MissingCoefficient as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.format == "json":
        payload = [
            {"n": n, "exact": str(s), "estimate": est, "ratio": ratio}
            for n, s, est, ratio in rows
        ]
        print(json.dumps(payload))
    else:
        sep = "\t" if args.format == "tsv" else "  "
        print(sep.join(("n", "exact", "estimate", "ratio")))
        for n, s, est, ratio in rows:
            est_s = f"{est:.6e}" if est is not None else "overflow"
            print(sep.join((str(n), str(s), est_s, f"{ratio:.9f}")))
    return 0


def cmd_render(args) -> int:
    try:
        path = paths.SkewPath.from_word(args.word)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    svg = paths.render_svg(path, unit_px=args.unit_px)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewdyck",
        description="Exact enumeration of skew Dyck paths with the up-down-red pattern forbidden or counted.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order=True):
        if order:
            p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="truncation order / number of terms")
        p.add_argument("--format", choices=("json", "text", "tsv"), default="text")

    p = sub.add_parser("count", help="paths of a given length and end level")
    p.add_argument("length", type=int)
    p.add_argument("level", type=int)
    p.add_argument("--t-eval", type=_parse_t_eval, default="track")
    common(p, order=False)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("series", help="avoidance series at level 0")
    common(p)
    p.add_argument("--half-length", action="store_true")
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("bivariate", help="marker triangle rows at half-length")
    common(p)
    p.set_defaults(fn=cmd_bivariate)

    p = sub.add_parser("levels", help="generating series of paths ending at a level")
    p.add_argument("level", type=int)
    p.add_argument("--t-eval", type=_parse_t_eval, default="track")
    p.add_argument("--half-length", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_levels)

    p = sub.add_parser("verify", help="run the full cross-check suite")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("asympt", help="convergence report of exact vs asymptotic counts")
    p.add_argument("--n", type=int, action="append", help="half-length to report (repeatable)")
    common(p, order=False)
    p.set_defaults(fn=cmd_asympt)

    p = sub.add_parser("render", help="render a path word (letters U, D, R) as SVG")
    p.add_argument("word")
    p.add_argument("--unit-px", type=int, default=24)
    p.add_argument("-o", "--output", default=None)
    common(p, order=False)
    p.set_defaults(fn=cmd_render)

    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
