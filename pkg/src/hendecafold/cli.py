"""Command-line surface: classify, poly, solve, construct, verify."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .construction import StepFailed, UnknownLandmark, hendecagon_script, run_script, verify_hendecagon
from .cyclotomic import InvalidN, classify_constructible, halved_cyclotomic
from .folds import TwoFoldConfig, solve_two_fold
from .geometry import Line, Point
from .render import DiagramSpec, IoFailure, emit_svg, write_svgs
from .scriptio import FormatError, decode_script, decode_two_fold_config, encode_number
from .verification import run_all


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _fmt_line(l: Line) -> str:
    if l.mode == "exact":
        return f"[{encode_number(l.a)}, {encode_number(l.b)}, {encode_number(l.c)}]"
    return f"[{_fmt(l.a)}, {_fmt(l.b)}, {_fmt(l.c)}]"


def _fmt_point(p: Point) -> str:
    if p.mode == "exact":
        return f"({encode_number(p.x)}, {encode_number(p.y)})"
    return f"({_fmt(p.x)}, {_fmt(p.y)})"


def _cmd_classify(args) -> int:
    try:
        report = classify_constructible(args.n)
    except InvalidN as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"n: {report.n}")
    print(f"single_fold_constructible: {str(report.single_fold_constructible).lower()}")
    print(f"r: {report.r}")
    print(f"s: {report.s}")
    if report.pierpont_primes:
        for w in report.pierpont_primes:
            print(f"pierpont_prime: {w.prime} = 2^{w.two_exp} * 3^{w.three_exp} + 1")
    else:
        print("pierpont_prime: (none)")
    for reason in report.obstructions:
        print(f"obstruction: {reason}")
    return 0


def _cmd_poly(args) -> int:
    try:
        ngon = halved_cyclotomic(args.n)
    except InvalidN as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    # descending order: the t^degree coefficient first
    print(" ".join(encode_number(c) for c in reversed(ngon.poly.coeffs)))
    return 0


def _sheet_note(solution, sheet) -> str:
    notes = []
    for name, point in (("Q'", solution.Qp), ("P'", solution.Pp),
                        ("R", solution.R), ("S", solution.S), ("T", solution.T)):
        if not sheet.contains(point):
            notes.append(f"{name} leaves the sheet at {_fmt_point(point)}")
    return "; ".join(notes) if notes else "all auxiliary points on the sheet"


def _cmd_solve(args) -> int:
    if args.config:
        try:
            config = decode_two_fold_config(Path(args.config).read_text())
        except (OSError, FormatError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        config = TwoFoldConfig.hendecagon()
    sheet = hendecagon_script().frame
    try:
        solutions = solve_two_fold(config, args.tol)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"solutions: {len(solutions)}")
    for k, sol in enumerate(solutions):
        print(f"solution {k}:")
        print(f"  t: {_fmt(sol.t)}")
        print(f"  s: {_fmt(sol.s)}")
        print(f"  gamma: {_fmt_line(sol.gamma)}")
        print(f"  delta: {_fmt_line(sol.delta)}")
        print(f"  Q': {_fmt_point(sol.Qp)}  P': {_fmt_point(sol.Pp)}")
        print(f"  R: {_fmt_point(sol.R)}  S: {_fmt_point(sol.S)}  T: {_fmt_point(sol.T)}")
        for name in sorted(sol.residuals):
            print(f"  residual {name}: {_fmt(sol.residuals[name])}")
        print(f"  sheet: {_sheet_note(sol, sheet)}")
    return 0


def _cmd_construct(args) -> int:
    if args.script:
        try:
            script = decode_script(Path(args.script).read_text())
        except (OSError, FormatError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        script = hendecagon_script()
    try:
        state = run_script(script, args.tol)
    except (StepFailed, UnknownLandmark) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out_dir = Path(args.out)
    try:
        paths = write_svgs(emit_svg(state, DiagramSpec()), out_dir)
        report_lines = [f"{name} {residual:.6e}" for name, residual in state.residual_log]
        report_lines.append(f"max_residual {state.max_residual():.6e}")
        (out_dir / "residuals.txt").write_text("\n".join(report_lines) + "\n")
    except IoFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"steps executed: {len(script.steps)}")
    print(f"max residual: {_fmt(state.max_residual())}")
    print(f"diagrams written: {len(paths)} to {out_dir}")
    if all(v in state.landmarks for v in
           (f"z{k}" for k in range(11))):
        report = verify_hendecagon(state, args.tol)
        for check in report.checks:
            status = "ok" if check.passed else "FAILED"
            print(f"check {check.name}: {status} (worst {check.worst:.3e}, "
                  f"tol {check.tol:.1e})")
        if not report.passed:
            return 1
    return 0


def _cmd_verify(_args) -> int:
    results = run_all()
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}: {result.detail}")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hendecafold",
        description="Origami fold constructions: quintic-solving double folds, "
                    "single-fold axioms, and the verified hendecagon script.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="single-fold constructibility of the regular n-gon")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser(
        "poly",
        help="cosine polynomial of the regular n-gon (odd n); prints exact "
             "coefficients in descending order, leading term first")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("solve", help="solve the two-simultaneous-fold alignment")
    p.add_argument("--config", help="two-fold-config file (default: built-in instance)")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("construct", help="run a fold script and render SVG diagrams")
    p.add_argument("--script", help="fold-script file (default: built-in hendecagon)")
    p.add_argument("--out", default="out", help="output directory (default: ./out)")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
