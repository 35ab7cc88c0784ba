"""Command-line interface.

Graphs are given as an edge-list path, ``-`` for standard input, or an
inline generator spec ``gen:FAMILY[:P1,P2,...]`` such as ``gen:cmkr:6,3,4``.

Exit status: 0 success, 1 negative verdict (only with ``--script``),
2 usage error, 3 precondition violation, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import edgelist
from .errors import InvalidArgument, PreconditionViolation, ResourceLimit
from .generators import FAMILIES, generate
from .graph import Graph, MAX_CYCLE, MIN_CYCLE, cycle_lengths
from .independence import DEFAULT_CAP
from .linalg import format_rational
from .methods import METHODS, compute_wcw, generating, relating, well_covered
from .recognition import BipartitePair, validate_witness

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_RESOURCE = 4


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _edge(text: str) -> tuple[int, int]:
    parts = _int_list(text)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected an edge 'u,v', got {text!r}")
    return parts[0], parts[1]


def read_graph(source: str, stdin=None) -> Graph:
    if source.startswith("gen:"):
        family, _, params = source[4:].partition(":")
        return generate(family, *_int_list(params))
    if source == "-":
        return edgelist.load(stdin if stdin is not None else sys.stdin)
    try:
        with open(source) as fp:
            return edgelist.load(fp)
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def _set_text(s) -> str:
    return " ".join(map(str, sorted(s))) if s else "(empty)"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wellcovered",
        description="Weight spaces of well-covered graphs, relating edges and generating subgraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("graph", help="edge-list path, '-' for stdin, or gen:FAMILY:PARAMS")
    common.add_argument("--method", choices=METHODS, default="auto")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="limit on enumerated maximal independent sets (oracle)")
    common.add_argument("--unchecked", action="store_true",
                        help="skip the forbidden-cycle scan on the fast route")
    common.add_argument("--script", action="store_true",
                        help="exit with status 1 on a negative verdict")

    sub.add_parser("wcw", parents=[common], help="compute WCW(G)")
    sub.add_parser("well-covered", parents=[common], help="decide well-coveredness")
    p = sub.add_parser("relating", parents=[common], help="is an edge relating")
    p.add_argument("--edge", type=_edge, required=True, metavar="U,V")
    p = sub.add_parser("generating", parents=[common], help="is a bipartite pair generating")
    p.add_argument("--bx", type=_int_list, required=True, metavar="A,B,...")
    p.add_argument("--by", type=_int_list, required=True, metavar="C,D,...")
    p = sub.add_parser("cycles", parents=[common], help="report which cycle lengths occur")
    p.add_argument("--lengths", type=_int_list, default=[4, 5, 6, 7], metavar="K,...")

    p = sub.add_parser("gen", help="write a named graph in edge-list format")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out", help="output path (default: stdout)")
    return parser


def _emit(args, out, text_lines: list[str], payload: dict) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _cmd_wcw(args, g: Graph, out) -> int:
    result = compute_wcw(g, args.method, args.cap, not args.unchecked)
    basis = result.basis
    if result.report is not None:
        payload = result.report.to_json()
    else:
        payload = {"class_check": False, "basis": basis.to_json()}
    payload = {"method": result.method, **payload}
    lines = [f"method: {result.method}", f"dimension: {basis.dimension}"]
    for j, label in enumerate(basis.labels):
        values = " ".join(format_rational(x) for x in basis.column(j))
        lines.append(f"column {label}: {values}")
    _emit(args, out, lines, payload)
    return EXIT_OK


def _verdict(args, verdict: bool) -> int:
    return EXIT_NEGATIVE if args.script and not verdict else EXIT_OK


def _cmd_well_covered(args, g: Graph, out) -> int:
    verdict, method = well_covered(g, args.method, args.cap, not args.unchecked)
    _emit(args, out, [f"method: {method}", f"well-covered: {str(verdict).lower()}"],
          {"method": method, "well_covered": verdict})
    return _verdict(args, verdict)


def _recognition_output(args, out, pair, result, method, g) -> int:
    lines = [f"method: {method}", f"verdict: {str(result.verdict).lower()}"]
    payload = {"method": method, "verdict": result.verdict}
    if result.verdict:
        valid = validate_witness(g, pair, result.witness)
        lines += [f"witness: {_set_text(result.witness)}", f"witness valid: {str(valid).lower()}"]
        payload.update(witness=sorted(result.witness), witness_valid=valid)
    _emit(args, out, lines, payload)
    return _verdict(args, result.verdict)


def _cmd_relating(args, g: Graph, out) -> int:
    x, y = args.edge
    result, method = relating(g, x, y, args.method, args.cap, not args.unchecked)
    return _recognition_output(args, out, BipartitePair.of((x,), (y,)), result, method, g)


def _cmd_generating(args, g: Graph, out) -> int:
    pair = BipartitePair.of(args.bx, args.by)
    result, method = generating(g, pair, args.method, args.cap, not args.unchecked)
    return _recognition_output(args, out, pair, result, method, g)


def _cmd_cycles(args, g: Graph, out) -> int:
    lengths = sorted(set(args.lengths))
    for k in lengths:
        if not MIN_CYCLE <= k <= MAX_CYCLE:
            raise InvalidArgument(f"cycle lengths must be in {MIN_CYCLE}..{MAX_CYCLE}, got {k}")
    found = cycle_lengths(g, lengths)
    lines = [f"C{k}: {'yes' if k in found else 'no'}" for k in lengths]
    _emit(args, out, lines, {"cycles": {str(k): k in found for k in lengths}})
    return _verdict(args, not found)


def _cmd_gen(args, out) -> int:
    g = generate(args.family, *args.params)
    if args.out:
        with open(args.out, "w") as fp:
            edgelist.dump(g, fp)
    else:
        edgelist.dump(g, out)
    return EXIT_OK


COMMANDS = {
    "wcw": _cmd_wcw,
    "well-covered": _cmd_well_covered,
    "relating": _cmd_relating,
    "generating": _cmd_generating,
    "cycles": _cmd_cycles,
}


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "gen":
            return _cmd_gen(args, stdout)
        if args.cap < 1:
            raise UsageError("--cap must be >= 1")
        g = read_graph(args.graph, stdin)
        return COMMANDS[args.command](args, g, stdout)
    except (UsageError, InvalidArgument) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except PreconditionViolation as exc:
        stderr.write(f"precondition violated: {exc}\n")
        return EXIT_PRECONDITION
    except ResourceLimit as exc:
        stderr.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
