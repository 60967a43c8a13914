"""
species-operads CLI entry point.

Subcommands: compose, enumerate, dims, render and check. Results go to
stdout, log messages to stderr.

Exit codes: 0 success, 1 unexpected law verdict, 2 usage or evaluation error.
"""

import argparse
import logging
import sys
from typing import List, Literal, Optional, TextIO

from pydantic import BaseModel, Field

from .composition.dimension import composition_dimension, dimension_table, synthetic_labels
from .core.errors import OperadError
from .core.labels import FiniteSet
from .core.lincomb import LinComb
from .env import get_env
from .lawcheck.suites import run_suite, suite_names
from .lawcheck.types import Bounds, LawReport, Verdict
from .operads.registry import resolve_operad
from .render.dot import lincomb_to_dot
from .render.json_output import (
    ComposeOutput,
    DimensionRow,
    DimsOutput,
    EnumerateOutput,
    check_output,
    lincomb_output,
)
from .startup_checks import validate_startup_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNEXPECTED_VERDICT = 1
EXIT_USAGE = 2

OutputFormat = Literal["text", "json", "dot"]


class Command(BaseModel):
    """
    A parsed CLI invocation.

    Operand expressions stay as text until run() resolves the operad, so
    the selector decides between planar trees, plain trees and block
    expressions.
    """

    subcommand: Literal["compose", "enumerate", "dims", "render", "check"]
    op: Optional[str] = Field(default=None, description="Operad selector, e.g. nap or box:com")
    at: Optional[str] = None
    operands: List[str] = Field(default_factory=list)
    labels: List[str] = Field(default_factory=list)
    p: Optional[str] = None
    q: Optional[str] = None
    n: Optional[int] = None
    max_n: Optional[int] = None
    suite: str = "all"
    output_format: OutputFormat = "text"
    allow_large: bool = False


def _write(stream: TextIO, text: str) -> None:
    stream.write(text)
    if not text.endswith("\n"):
        stream.write("\n")


def _require(value, flag: str, subcommand: str):
    if value is None:
        raise ValueError(f"{subcommand} needs {flag}")
    return value


def _compose(command: Command, stream: TextIO) -> int:
    operad = resolve_operad(_require(command.op, "--op", "compose"))
    at = _require(command.at, "--at", "compose")
    if len(command.operands) != 2:
        raise ValueError(f"compose needs exactly two operands, got {len(command.operands)}")
    outer, inner = command.operands
    x = operad.parse_lincomb(outer)
    y = operad.parse_lincomb(inner)
    result = operad.compose_lincomb(x, at, y)
    logger.info(f"{operad.name}: composed at {at}, {len(result)} terms")
    if command.output_format == "json":
        output = ComposeOutput(
            **lincomb_output(operad, result, outer=outer, at=at, inner=inner)
        )
        _write(stream, output.to_json())
    elif command.output_format == "dot":
        _write(stream, lincomb_to_dot(operad, result))
    else:
        _write(stream, operad.format_lincomb(result))
    return EXIT_OK


def _enumerate(command: Command, stream: TextIO) -> int:
    operad = resolve_operad(_require(command.op, "--op", "enumerate"))
    if not command.labels:
        raise ValueError("enumerate needs --labels, e.g. --labels 1,2,3")
    labels = FiniteSet(tuple(command.labels))
    elements = [operad.format(element) for element in operad.basis(labels)]
    elements.sort()
    if command.output_format == "json":
        output = EnumerateOutput(
            operad=operad.name, labels=list(labels.labels), count=len(elements), elements=elements
        )
        _write(stream, output.to_json())
    elif command.output_format == "dot":
        _write(stream, lincomb_to_dot(operad, LinComb.sum_of(operad.basis(labels))))
    else:
        for element in elements:
            _write(stream, element)
        _write(stream, f"# {len(elements)} elements of {operad.name} over {labels}")
    return EXIT_OK


def _dims(command: Command, stream: TextIO) -> int:
    p = resolve_operad(_require(command.p, "--p", "dims"))
    q = resolve_operad(_require(command.q, "--q", "dims"))
    if command.max_n is not None:
        rows = dimension_table(p, q, command.max_n)
    else:
        n = _require(command.n, "--n or --max-n", "dims")
        rows = [(n, composition_dimension(p, q, synthetic_labels(n)))]
    if command.output_format == "json":
        output = DimsOutput(
            p=p.name, q=q.name, rows=[DimensionRow(n=n, dimension=d) for n, d in rows]
        )
        _write(stream, output.to_json())
    elif command.max_n is None:
        _write(stream, str(rows[0][1]))
    else:
        for n, dimension in rows:
            _write(stream, f"{n}\t{dimension}")
    return EXIT_OK


def _render(command: Command, stream: TextIO) -> int:
    operad = resolve_operad(_require(command.op, "--op", "render"))
    if len(command.operands) != 1:
        raise ValueError(f"render needs exactly one expression, got {len(command.operands)}")
    _write(stream, lincomb_to_dot(operad, operad.parse_lincomb(command.operands[0])))
    return EXIT_OK


def _report_lines(report: LawReport) -> List[str]:
    lines = [report.summary()]
    if report.witness is not None:
        inputs = ", ".join(f"{role}={value}" for role, value in report.witness.inputs.items())
        lines.append(f"    witness: {inputs}")
        lines.append(f"    lhs: {report.witness.lhs}")
        lines.append(f"    rhs: {report.witness.rhs}")
    return lines


def _check(command: Command, stream: TextIO) -> int:
    overrides = {"allow_large": True} if command.allow_large else {}
    reports = run_suite(command.suite, Bounds.from_env(**overrides))
    unexpected = [report for report in reports if report.unexpected]
    if command.output_format == "json":
        _write(stream, check_output(command.suite, reports).to_json())
    else:
        for report in reports:
            for line in _report_lines(report):
                _write(stream, line)
        counterexamples = sum(report.verdict == Verdict.COUNTEREXAMPLE for report in reports)
        _write(
            stream,
            f"{len(reports)} checks, {counterexamples} counterexamples, "
            f"{len(unexpected)} unexpected",
        )
    return EXIT_UNEXPECTED_VERDICT if unexpected else EXIT_OK


HANDLERS = {
    "compose": _compose,
    "enumerate": _enumerate,
    "dims": _dims,
    "render": _render,
    "check": _check,
}


def run(command: Command, stream: Optional[TextIO] = None) -> int:
    """
    Execute a command and return its exit status.

    Errors from parsing or evaluation are reported on stderr with exit
    status 2; an unexpected law verdict gives exit status 1.
    """
    stream = stream or sys.stdout
    try:
        return HANDLERS[command.subcommand](command, stream)
    except (OperadError, ValueError, TypeError) as e:
        logger.debug(f"{command.subcommand} failed", exc_info=True)
        print(f"species-operads {command.subcommand}: {e}", file=sys.stderr)
        return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="species-operads",
        description="Operads on labeled rooted trees and their composite species",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    formats = ("text", "json", "dot")

    compose = subparsers.add_parser("compose", help="Partial composition X ∘_at Y")
    compose.add_argument("--op", required=True, help="nap, prelie, mag, shmag, com, box:<q>, diamond:<q>")
    compose.add_argument("--at", required=True, help="Composition point, a label of X")
    compose.add_argument("operands", nargs=2, metavar="EXPR")
    compose.add_argument("--format", dest="output_format", choices=formats, default="text")

    enumerate_ = subparsers.add_parser("enumerate", help="List the basis over a label set")
    enumerate_.add_argument("--op", required=True)
    enumerate_.add_argument("--labels", required=True, help="Comma separated, e.g. 1,2,3")
    enumerate_.add_argument("--format", dest="output_format", choices=formats, default="text")

    dims = subparsers.add_parser("dims", help="Dimensions of the composite species P∘Q")
    dims.add_argument("--p", required=True)
    dims.add_argument("--q", required=True)
    size = dims.add_mutually_exclusive_group(required=True)
    size.add_argument("--n", type=int)
    size.add_argument("--max-n", dest="max_n", type=int)
    dims.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")

    render = subparsers.add_parser("render", help="DOT graphs of a tree or a linear combination")
    render.add_argument("--op", required=True)
    render.add_argument("operands", nargs=1, metavar="EXPR")

    check = subparsers.add_parser("check", help="Run a law-check suite")
    check.add_argument("--suite", default="all", choices=suite_names())
    check.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    check.add_argument(
        "--allow-large", action="store_true", help="Run checks above OPERADS_MAX_INSTANCES"
    )
    return parser


def command_from_args(namespace: argparse.Namespace) -> Command:
    args = dict(vars(namespace))
    args.pop("verbose", None)
    if "labels" in args:
        args["labels"] = [label.strip() for label in args["labels"].split(",") if label.strip()]
    return Command(**args)


def setup_logging(verbose: bool) -> None:
    level = "DEBUG" if verbose else get_env("OPERADS_LOG_LEVEL", "WARNING").upper()
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


def main(argv: Optional[List[str]] = None) -> None:
    """Main CLI entry point"""
    args = build_parser().parse_args(argv)
    validate_startup_config()
    setup_logging(args.verbose)
    sys.exit(run(command_from_args(args)))


if __name__ == "__main__":
    main()
