"""Command line front end.

Exit codes: 0 success, 1 failed verification or arithmetic error,
2 usage or parse error.  Negative values may follow their flag directly
(``--lambda -1/2``, ``--window -3..3``).
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from ..enveloping import DEFAULT_ORDER, GeneratorOrder, reduce_mod_left_ideal
from ..errors import ParseError, TwistedHVError, UsageError
from ..modules import (
    IntermediateSeriesParams,
    VermaParams,
    check_module_axioms,
    intseries_new,
    support,
    verma_new,
)
from ..structure import Generator, verify_jacobi
from ..verify import verify_all
from .evaluate import evaluate
from .serialize import SCHEMA, dumps, element_to_json, format_element, format_rational

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")
_RANGE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")
_ATOM = re.compile(r"([LI])\[(-?\d+)\]")


@dataclass
class CommandResult:
    status: int
    text: str
    document: dict[str, Any] | None = None


class _ArgumentParser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # every option is long-form apart from -h, so any other single-dash
        # token is a value: -3..1, -1/2, -L[1]*L[2]
        self._negative_number_matcher = re.compile(r"^-(?!-)(?!h$)")

    def error(self, message):
        raise UsageError(message)


def rational(text: str) -> Fraction:
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"{text!r} is not an exact rational like 3 or -2/5")
    value = Fraction(text.strip())
    return value


def int_range(text: str) -> tuple[int, int]:
    m = _RANGE.match(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"{text!r} is not a range like -3..3")
    return int(m.group(1)), int(m.group(2))


def atom_list(text: str) -> list[Generator]:
    gens = [Generator(k, int(i)) for k, i in _ATOM.findall(text)]
    if not gens or _ATOM.sub("", text).strip(" ,") != "":
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list like L[1],I[1]")
    return gens


def order_arg(text: str) -> GeneratorOrder:
    if text == "default":
        return DEFAULT_ORDER
    if text.startswith("ideal-last="):
        return GeneratorOrder(last=tuple(atom_list(text[len("ideal-last="):])))
    raise argparse.ArgumentTypeError("order must be 'default' or 'ideal-last=<atoms>'")


def ideal_arg(text: str):
    if text in ("all-I", "all-L"):
        return text[-1]
    if text.startswith("gens="):
        return atom_list(text[len("gens="):])
    raise argparse.ArgumentTypeError("ideal must be 'all-I', 'all-L' or 'gens=<atoms>'")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the structured document")
    common.add_argument("--step-budget", type=int, default=None, metavar="N",
                        help="abort rewriting after N straightening steps")

    parser = _ArgumentParser(prog="twisted-hv", description="Exact computations in the twisted Heisenberg-Virasoro algebra.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("bracket", parents=[common], help="Lie bracket of two expressions")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("normalize", parents=[common], help="PBW canonical form")
    p.add_argument("expr")
    p.add_argument("--order", type=order_arg, default=DEFAULT_ORDER)

    p = sub.add_parser("reduce", parents=[common], help="coset representative modulo a left ideal")
    p.add_argument("expr")
    p.add_argument("--ideal", type=ideal_arg, required=True)

    p = sub.add_parser("verify-jacobi", parents=[common], help="exhaustive Jacobi/antisymmetry check")
    p.add_argument("--window", type=int_range, required=True)

    p = sub.add_parser("verma", parents=[common], help="truncated Verma module")
    p.add_argument("--lambda", dest="lam", type=rational, required=True)
    p.add_argument("--hi", type=rational, required=True)
    p.add_argument("--c", type=rational, required=True)
    p.add_argument("--ci", type=rational, required=True)
    p.add_argument("--cli", type=rational, required=True)
    p.add_argument("--depth", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--dims", action="store_true")
    mode.add_argument("--act", metavar="EXPR")
    mode.add_argument("--support", type=int_range)
    p.add_argument("--on", metavar="VECTOR-EXPR",
                   help="vector as an expression applied to the highest-weight vector, e.g. L[-1]*I[-1]")

    p = sub.add_parser("intseries", parents=[common], help="intermediate-series module")
    p.add_argument("--alpha", type=rational, required=True)
    p.add_argument("--beta", type=rational, required=True)
    p.add_argument("--f", type=rational, required=True)
    p.add_argument("--window", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--check-axioms", action="store_true")
    mode.add_argument("--support", type=int_range)
    p.add_argument("--generators", type=int_range, default=None,
                   help="generator index window for --check-axioms (default -W..W)")

    p = sub.add_parser("verify-paper", parents=[common], help="run the full verification harness")
    p.add_argument("--window", type=int, default=8)
    return parser


def _doc(command: str, **payload) -> dict[str, Any]:
    return {"schema": SCHEMA, "command": command, **payload}


def _support_doc(report) -> list[dict[str, Any]]:
    return [{"weight": format_rational(w), "dim": d} for w, d in report.entries]


def _support_text(report) -> str:
    return "\n".join(f"{format_rational(w)}\t{d}" for w, d in report.entries)


def _cmd_bracket(args) -> CommandResult:
    budget = args.step_budget
    expr = f"[{args.left}, {args.right}]"
    # parse the operands separately so error offsets refer to the user's text
    from .parser import Bracket, parse

    value = evaluate(Bracket(parse(args.left), parse(args.right)), step_budget=budget)
    return CommandResult(0, format_element(value), _doc("bracket", input=expr, result=element_to_json(value)))


def _cmd_normalize(args) -> CommandResult:
    value = evaluate(args.expr, args.order, step_budget=args.step_budget)
    return CommandResult(0, format_element(value), _doc("normalize", input=args.expr, result=element_to_json(value)))


def _cmd_reduce(args) -> CommandResult:
    value = evaluate(args.expr, step_budget=args.step_budget)
    reduced = reduce_mod_left_ideal(value, args.ideal, step_budget=args.step_budget)
    return CommandResult(0, format_element(reduced), _doc("reduce", input=args.expr, result=element_to_json(reduced)))


def _cmd_verify_jacobi(args) -> CommandResult:
    report = verify_jacobi(args.window)
    lo, hi = args.window
    if report.ok:
        text = f"ok: {report.pairs_checked} pairs and {report.triples_checked} triples in {lo}..{hi}"
    else:
        v = report.violation
        text = f"violation ({v['kind']}) at {v['elements']}: {v['value']!r}"
    doc = _doc(
        "verify-jacobi",
        window=[lo, hi],
        ok=report.ok,
        pairs=report.pairs_checked,
        triples=report.triples_checked,
        violation=None if report.ok else {"kind": report.violation["kind"],
                                          "elements": [repr(g) for g in report.violation["elements"]]},
    )
    return CommandResult(0 if report.ok else 1, text, doc)


def _cmd_verma(args) -> CommandResult:
    params = VermaParams(args.lam, args.hi, args.c, args.ci, args.cli, args.depth)
    module = verma_new(params)
    if args.act is not None:
        start = module.highest_weight_vector()
        if args.on:
            start = module.act(evaluate(args.on, step_budget=args.step_budget), start)
        result = module.act(evaluate(args.act, step_budget=args.step_budget), start)
        text = module.format_vector(result)
        return CommandResult(0, text, _doc("verma", mode="act", act=args.act, on=args.on or "1", result=text))
    if args.support is not None:
        report = support(module, args.support)
        return CommandResult(0, _support_text(report), _doc("verma", mode="support", support=_support_doc(report)))
    dims = [len(module.basis[n]) for n in range(params.depth + 1)]
    return CommandResult(0, " ".join(map(str, dims)), _doc("verma", mode="dims", dims=dims))


def _cmd_intseries(args) -> CommandResult:
    params = IntermediateSeriesParams(args.alpha, args.beta, args.f, args.window)
    module = intseries_new(params)
    if args.check_axioms:
        window = args.generators or (-args.window, args.window)
        report = check_module_axioms(module, window)
        text = (
            f"{'ok' if report.ok else 'FAILED'}: {report.checked} checks, "
            f"{len(report.skipped)} skipped at the window boundary, {len(report.violations)} violations"
        )
        for v in report.violations[:10]:
            text += f"\n  violation at {v['pair']} on {v['vector']!r}"
        doc = _doc("intseries", mode="check-axioms", ok=report.ok, checked=report.checked,
                   skipped=len(report.skipped), violations=len(report.violations))
        return CommandResult(0 if report.ok else 1, text, doc)
    window = args.support or (-args.window, args.window)
    report = support(module, window)
    return CommandResult(0, _support_text(report), _doc("intseries", mode="support", support=_support_doc(report)))


def _cmd_verify_paper(args) -> CommandResult:
    report = verify_all(args.window)
    lines = [f"[{e.status}] {e.claim_id}: {e.value}" + (f"  ({e.window})" if e.window else "")
             for e in report.entries]
    summary = report.to_dict()["summary"]
    lines.append(
        f"{summary['pass']} pass, {summary['fail']} fail, "
        f"{summary['flagged-inconsistent']} flagged-inconsistent"
    )
    return CommandResult(0 if report.ok else 1, "\n".join(lines), _doc("verify-paper", report=report.to_dict()))


_COMMANDS = {
    "bracket": _cmd_bracket,
    "normalize": _cmd_normalize,
    "reduce": _cmd_reduce,
    "verify-jacobi": _cmd_verify_jacobi,
    "verma": _cmd_verma,
    "intseries": _cmd_intseries,
    "verify-paper": _cmd_verify_paper,
}


def run_command(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    want_json = "--json" in argv
    try:
        args = parser.parse_args(list(argv))
        return _COMMANDS[args.command](args)
    except SystemExit as exc:  # --help
        return CommandResult(int(exc.code or 0), "")
    except (UsageError, ParseError) as exc:
        return CommandResult(2, f"error: {exc}", _doc("error", kind=type(exc).__name__, message=str(exc)) if want_json else None)
    except TwistedHVError as exc:
        return CommandResult(1, f"error: {exc}", _doc("error", kind=type(exc).__name__, message=str(exc)) if want_json else None)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    result = run_command(argv)
    if "--json" in argv and result.document is not None:
        print(dumps(result.document))
    elif result.text:
        stream = sys.stderr if result.status == 2 else sys.stdout
        print(result.text, file=stream)
    return result.status
