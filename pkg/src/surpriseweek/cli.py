"""Command-line front-end.

Subcommands: eval (formula at a run or a model world), analyze (law-set
report), verify (the full check suite), export (built-in models as JSON
or DOT), enumerate (the 64-system table). Results go to stdout,
diagnostics to stderr; identical flags and seed give identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import EmptyLawError, analyze_law, enumerate_axiom_systems
from .formula import Box, Formula, Implies, render
from .knowledge import ModalContextError, eval_run
from .kripke import (
    KripkeModel,
    ModelFormatError,
    UnknownWorldError,
    eval_world,
    model_from_json,
    model_to_dot,
    model_to_json,
    standard_models,
)
from .parser import ParseError, parse
from .runs import DAYS, Run, RunSet, format_runs, parse_run_set
from .s5 import example_announcements, sigma, sigma_d, universal_model
from .verification import run_all


def _macros() -> dict[str, Formula]:
    table = {"sigma": sigma()}
    for d in DAYS:
        table[f"sigma_{d.label}"] = sigma_d(d)
    table.update(example_announcements())
    return table


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _labels(runs: RunSet) -> list[str]:
    return [r.label for r in sorted(runs)]


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _explain_run(phi: Formula, run: Run, depth: int, lines: list[str]) -> None:
    lines.append(f"{'  ' * depth}{_bool(eval_run(phi, run)):5} {render(phi)}")
    if isinstance(phi, Implies):
        _explain_run(phi.lhs, run, depth + 1, lines)
        _explain_run(phi.rhs, run, depth + 1, lines)


def _explain_world(m: KripkeModel, wid: str, phi: Formula, depth: int,
                   lines: list[str]) -> None:
    lines.append(
        f"{'  ' * depth}{_bool(eval_world(m, wid, phi)):5} {render(phi)}"
        f"  @ {wid}")
    if isinstance(phi, Implies):
        _explain_world(m, wid, phi.lhs, depth + 1, lines)
        _explain_world(m, wid, phi.rhs, depth + 1, lines)
    elif isinstance(phi, Box):
        for succ in m.successors(wid):
            _explain_world(m, succ, phi.body, depth + 1, lines)


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        phi = parse(args.formula, _macros())
    except ParseError as exc:
        return _fail(str(exc))

    if args.run is not None and (args.model or args.world):
        return _fail("choose either --run or --model/--world, not both")

    if args.run is not None:
        try:
            run = Run.from_label(args.run)
        except ValueError as exc:
            return _fail(str(exc))
        try:
            value = eval_run(phi, run)
        except ModalContextError as exc:
            return _fail(str(exc))
        print(_bool(value))
        if args.explain:
            lines: list[str] = []
            _explain_run(phi, run, 0, lines)
            print("\n".join(lines))
        return 0

    if args.model is None or args.world is None:
        return _fail("need --run RUN, or --model FILE with --world ID")
    try:
        with open(args.model, encoding="utf-8") as handle:
            m = model_from_json(json.load(handle))
    except OSError as exc:
        return _fail(str(exc))
    except (json.JSONDecodeError, ModelFormatError) as exc:
        return _fail(f"bad model file: {exc}")
    try:
        value = eval_world(m, args.world, phi)
    except UnknownWorldError as exc:
        return _fail(str(exc.args[0]))
    print(_bool(value))
    if args.explain:
        lines = []
        _explain_world(m, args.world, phi, 0, lines)
        print("\n".join(lines))
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        law = parse_run_set(args.law)
        report = analyze_law(law)
    except (ValueError, EmptyLawError) as exc:
        return _fail(str(exc))

    if args.json:
        print(json.dumps({
            "law": _labels(report.law),
            "case": report.case_tag.value,
            "fixed_points": [_labels(k) for k in report.fixed_points],
            "surprising": _labels(report.surprising),
            "rational_choices": _labels(report.rational_choices),
        }, indent=2))
    else:
        fixed = " ".join(format_runs(k) for k in report.fixed_points)
        print(f"law\t{format_runs(report.law)}")
        print(f"case\t{report.case_tag.value}")
        print(f"fixed_points\t{fixed}")
        print(f"surprising\t{format_runs(report.surprising)}")
        print(f"rational_choices\t{format_runs(report.rational_choices)}")

    if args.figure:
        from .figures import save_law_figure

        save_law_figure(report, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if not 1 <= args.bound <= 4:
        return _fail("--bound must be between 1 and 4")
    if args.samples < 0:
        return _fail("--samples must be nonnegative")
    report = run_all(bound=args.bound, samples=args.samples, seed=args.seed)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print("\n".join(report.format_lines()))
    print(f"elapsed: {report.elapsed_ms} ms", file=sys.stderr)
    if args.figure:
        from .figures import save_verification_figure

        save_verification_figure(report, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_export(args: argparse.Namespace) -> int:
    mg, mgplus = standard_models()
    model = {"mg": mg, "mgplus": mgplus, "universal": universal_model()}[args.target]
    if args.format == "json":
        print(json.dumps(model_to_json(model), indent=2))
    else:
        print(model_to_dot(model), end="")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    records = enumerate_axiom_systems()
    if args.json:
        print(json.dumps([
            {
                "knowledge": _labels(r.knowledge),
                "case": r.case_tag.value,
                "tau": r.tau,
                "surprising": _labels(r.surprising),
            }
            for r in records
        ], indent=2))
    else:
        print("knowledge\tcase\ttau\tsurprising")
        for r in records:
            print(f"{format_runs(r.knowledge)}\t{r.case_tag.value}"
                  f"\t{_bool(r.tau)}\t{format_runs(r.surprising)}")
    if args.figure:
        from .figures import save_enumeration_figure

        save_enumeration_figure(records, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surpriseweek",
        description="Knowledge sets, surprising days, and S5 model checking "
                    "for the week of an announced surprise test.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser(
        "eval", help="evaluate a formula at a run or at a model world")
    p_eval.add_argument("formula", help="formula text; macros: sigma, "
                        "sigma_Mo..sigma_Fr, exA..exE")
    p_eval.add_argument("--run", help="run context (Mo..Fr or none)")
    p_eval.add_argument("--model", help="JSON model file")
    p_eval.add_argument("--world", help="world id inside --model")
    p_eval.add_argument("--explain", action="store_true",
                        help="print the evaluation tree")
    p_eval.set_defaults(handler=cmd_eval)

    p_analyze = sub.add_parser(
        "analyze", help="solve the announcement for a law set")
    p_analyze.add_argument("--law", required=True,
                           help="law set: R, D, or {Mo,We,none}")
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.add_argument("--figure", help="write a PNG summary here")
    p_analyze.set_defaults(handler=cmd_analyze)

    p_verify = sub.add_parser("verify", help="run the full check suite")
    p_verify.add_argument("--bound", type=int, default=3,
                          help="world bound for the frame enumeration (1..4)")
    p_verify.add_argument("--samples", type=int, default=500,
                          help="random samples per sampling check")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--figure", help="write a PNG summary here")
    p_verify.set_defaults(handler=cmd_verify)

    p_export = sub.add_parser("export", help="emit a built-in model")
    p_export.add_argument("target", choices=("mg", "mgplus", "universal"))
    p_export.add_argument("--format", choices=("json", "dot"), default="json")
    p_export.set_defaults(handler=cmd_export)

    p_enum = sub.add_parser(
        "enumerate", help="table of all 64 axiom systems")
    p_enum.add_argument("--json", action="store_true")
    p_enum.add_argument("--figure", help="write a PNG summary here")
    p_enum.set_defaults(handler=cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
