"""Command-line interface.

Subcommands: gen, derive, invariants, verify, export-dot, oracle.  Data
goes to stdout or the -o path; diagnostics go to stderr.  Exit codes:
0 success, 2 invalid parameters or malformed input, 3 non-unit parameter,
4 no tower exists, 5 growth-law mismatch, 6 oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import documents
from .errors import (
    DocumentError,
    InvalidPrimeError,
    InvalidSpecError,
    NoTowerError,
    NotAUnitError,
    NotConnectedError,
    TooLargeError,
)
from .generators import (
    CRATER_BARE,
    CRATER_TWO_LOOPS,
    CraterSpec,
    VolcanoSpec,
    bouquet,
    directed_cycle,
    doubled,
    volcano,
)
from .iwasawa import invariants, verify_growth
from .linalg import brute_force_spanning_trees
from .tower import ConstantVoltage, derive

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NON_UNIT = 3
EXIT_NO_TOWER = 4
EXIT_GROWTH_MISMATCH = 5
EXIT_ORACLE_CAP = 6


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def parse_crater(token: str) -> CraterSpec:
    if token.startswith("cycle:"):
        try:
            k = int(token.split(":", 1)[1])
        except ValueError:
            raise InvalidSpecError(f"bad crater token {token!r}") from None
        return CraterSpec.cycle(k)
    if token == "one-loop":
        return CraterSpec.one_loop()
    if token == CRATER_TWO_LOOPS:
        return CraterSpec.two_loops()
    if token == CRATER_BARE:
        return CraterSpec.bare()
    raise InvalidSpecError(
        f"unknown crater {token!r}; use cycle:K, one-loop, two-loops or bare"
    )


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_graph(g, out_path: Optional[str]) -> None:
    text = json.dumps(documents.graph_to_document(g), indent=2) + "\n"
    _emit(text, out_path)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "cycle":
        g = directed_cycle(args.length)
    elif args.family == "bouquet":
        g = bouquet(args.loops)
    else:
        spec = VolcanoSpec(args.l, args.depth, parse_crater(args.crater))
        g = volcano(spec)
        if args.family == "doubled-volcano":
            g = doubled(g)
    _emit_graph(g, args.output)
    return EXIT_OK


def cmd_derive(args: argparse.Namespace) -> int:
    g = documents.read_graph(args.input)
    voltage = ConstantVoltage(args.p, args.param)
    if not voltage.is_unit and not args.allow_non_unit:
        return _fail(
            EXIT_NON_UNIT,
            f"parameter {args.param} is divisible by {args.p}; "
            "pass --allow-non-unit to derive anyway",
        )
    d = derive(g, voltage, args.level)
    _emit_graph(d.graph, args.output)
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    g = documents.read_graph(args.input)
    inv = invariants(g, args.p)
    report = None
    if args.n_max is not None:
        report = verify_growth(g, args.p, args.n_max)
    doc = documents.invariants_to_document(inv, report)
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _report_table(report, inv) -> str:
    lines = [
        f"p={inv.p} n0={inv.n0} mu={inv.mu} lambda={inv.lam} "
        f"nu={report.fitted_nu}",
        f"{'n':>3} {'components':>10} {'kappa':>24} {'ord_p':>6} {'predicted':>9}",
    ]
    for lvl in report.levels:
        lines.append(
            f"{lvl.n:>3} {lvl.component_count:>10} "
            f"{str(lvl.kappa_per_component):>24} {lvl.ord_p:>6} "
            f"{lvl.predicted_ord_p:>9}"
        )
    if report.exact_from_level is not None:
        lines.append(f"growth law exact from level {report.exact_from_level}")
    else:
        lines.append("growth law did not match at the top level")
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    g = documents.read_graph(args.input)
    inv = invariants(g, args.p)
    report = verify_growth(g, args.p, args.n_max)
    if args.json:
        text = (
            json.dumps(
                documents.tower_report_to_document(report, args.p, inv),
                indent=2,
            )
            + "\n"
        )
    else:
        text = _report_table(report, inv)
    _emit(text, args.output)
    if report.exact_from_level is None:
        top = report.levels[-1]
        return _fail(
            EXIT_GROWTH_MISMATCH,
            f"observed ord_p {top.ord_p} at level {top.n} does not match "
            f"the fitted prediction {top.predicted_ord_p}",
        )
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    g = documents.read_graph(args.input)
    _emit(documents.graph_to_dot(g), args.output)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = documents.read_graph(args.input)
    count = brute_force_spanning_trees(g)
    _emit(f"{count}\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="voltage-tower",
        description=(
            "Constant Z_p-towers of graph coverings: derived graphs, "
            "Iwasawa invariants and spanning-tree growth verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a standard graph family")
    p_gen.add_argument(
        "family", choices=["cycle", "bouquet", "volcano", "doubled-volcano"]
    )
    p_gen.add_argument("--length", type=int, default=3, help="cycle length")
    p_gen.add_argument("--loops", type=int, default=1, help="bouquet loops")
    p_gen.add_argument("--l", type=int, default=2, help="volcano branching")
    p_gen.add_argument("--depth", type=int, default=0, help="volcano depth")
    p_gen.add_argument(
        "--crater",
        default="cycle:3",
        help="volcano crater: cycle:K, one-loop, two-loops or bare",
    )
    p_gen.add_argument("-o", "--output", help="output path (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_derive = sub.add_parser("derive", help="derived graph modulo p^level")
    p_derive.add_argument("-i", "--input", required=True)
    p_derive.add_argument("--p", type=int, required=True)
    p_derive.add_argument("--level", type=int, required=True)
    p_derive.add_argument("--param", type=int, default=1)
    p_derive.add_argument("--allow-non-unit", action="store_true")
    p_derive.add_argument("-o", "--output")
    p_derive.set_defaults(func=cmd_derive)

    p_inv = sub.add_parser("invariants", help="Iwasawa invariants of the tower")
    p_inv.add_argument("-i", "--input", required=True)
    p_inv.add_argument("--p", type=int, required=True)
    p_inv.add_argument(
        "--n-max",
        type=int,
        default=None,
        help="embed a tower report up to this level",
    )
    p_inv.add_argument("-o", "--output")
    p_inv.set_defaults(func=cmd_invariants)

    p_verify = sub.add_parser(
        "verify", help="verify the spanning-tree growth law against tower data"
    )
    p_verify.add_argument("-i", "--input", required=True)
    p_verify.add_argument("--p", type=int, required=True)
    p_verify.add_argument("--n-max", type=int, required=True)
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("-o", "--output")
    p_verify.set_defaults(func=cmd_verify)

    p_dot = sub.add_parser("export-dot", help="export a graph as DOT")
    p_dot.add_argument("-i", "--input", required=True)
    p_dot.add_argument("-o", "--output")
    p_dot.set_defaults(func=cmd_export_dot)

    p_oracle = sub.add_parser(
        "oracle", help="brute-force spanning-tree count (16-edge cap)"
    )
    p_oracle.add_argument("-i", "--input", required=True)
    p_oracle.add_argument("-o", "--output")
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        DocumentError,
        InvalidSpecError,
        InvalidPrimeError,
        NotConnectedError,
        ValueError,
    ) as exc:
        return _fail(EXIT_USAGE, str(exc))
    except NotAUnitError as exc:
        return _fail(EXIT_NON_UNIT, str(exc))
    except NoTowerError as exc:
        detail = (
            "the undirected image is a forest"
            if exc.reason == "acyclic"
            else "every cycle weight is 0, so no cycle weight is coprime to p"
        )
        return _fail(EXIT_NO_TOWER, f"{exc} ({detail})")
    except TooLargeError as exc:
        return _fail(EXIT_ORACLE_CAP, str(exc))
    except OSError as exc:
        return _fail(EXIT_USAGE, str(exc))


if __name__ == "__main__":
    sys.exit(main())
