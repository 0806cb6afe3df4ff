"""Command-line interface.

Exit status: 0 on success, 1 on domain errors (bad syntax, invalid trace,
no normal form, bad redex index), 2 when a resource bound is hit (fuel or
enumeration frontier).  Errors print one diagnostic line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle, serialize
from .alpha import alpha_eq
from .beta import check_trace, contract_at
from .errors import InvalidTrace, LamstdError
from .standard import check_standard, standardize
from .strategies import DEFAULT_FUEL, FuelExhausted, normalize_leftmost
from .syntax import parse_term, print_term

PROG = "lamstd"


def _nat(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return value


def _emit(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False, indent=2))


def cmd_parse(args) -> int:
    print(print_term(parse_term(args.term)))
    return 0


def cmd_redexes(args) -> int:
    print(parse_term(args.term).redexes)
    return 0


def cmd_step(args) -> int:
    print(print_term(contract_at(parse_term(args.term), args.at)))
    return 0


def cmd_alpha_eq(args) -> int:
    verdict = alpha_eq(parse_term(args.left), parse_term(args.right))
    print("true" if verdict else "false")
    return 0


def cmd_normalize(args) -> int:
    outcome = normalize_leftmost(parse_term(args.term), args.fuel)
    if isinstance(outcome, FuelExhausted):
        _emit(serialize.trace_to_document(outcome.partial))
        print(f"{PROG}: fuel exhausted after {args.fuel} step(s)", file=sys.stderr)
        return 2
    _emit(serialize.trace_to_document(outcome.trace))
    return 0


def cmd_standardize(args) -> int:
    if args.trace is not None:
        trace = serialize.document_to_trace(serialize.load_document(args.trace))
    else:
        if args.source is None or args.target is None or args.depth is None:
            raise InvalidTrace("--from, --to and --depth are required without --trace")
        start, end = parse_term(args.source), parse_term(args.target)
        trace = oracle.find_trace(start, end, args.depth)
        if trace is None:
            raise InvalidTrace(f"no reduction found within {args.depth} beta step(s)")
    _emit(serialize.trace_to_document(standardize(trace)))
    return 0


def cmd_verify(args) -> int:
    doc = serialize.load_document(args.file)
    if args.standard:
        problem = check_standard(serialize.document_to_sequence(doc))
    else:
        problem = check_trace(serialize.document_to_trace(doc))
    if problem:
        raise InvalidTrace(problem)
    print("ok")
    return 0


def cmd_oracle(args) -> int:
    traces = oracle.enumerate_traces(parse_term(args.term), args.depth)
    _emit([serialize.trace_to_document(t) for t in traces])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Lambda-calculus standardization engine.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="print a term in canonical form")
    p.add_argument("term")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("redexes", help="count the redexes of a term")
    p.add_argument("term")
    p.set_defaults(func=cmd_redexes)

    p = sub.add_parser("step", help="contract one redex by position")
    p.add_argument("--at", type=_nat, required=True, metavar="N")
    p.add_argument("term")
    p.set_defaults(func=cmd_step)

    p = sub.add_parser("alpha-eq", help="decide alpha-equivalence")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_alpha_eq)

    p = sub.add_parser("normalize", help="leftmost-outermost normalization")
    p.add_argument("--fuel", type=_nat, default=DEFAULT_FUEL, metavar="K")
    p.add_argument("term")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("standardize", help="turn a reduction into a standard sequence")
    p.add_argument("--trace", metavar="FILE")
    p.add_argument("--from", dest="source", metavar="TERM")
    p.add_argument("--to", dest="target", metavar="TERM")
    p.add_argument("--depth", type=_nat, metavar="D")
    p.set_defaults(func=cmd_standardize)

    p = sub.add_parser("verify", help="replay a trace document")
    p.add_argument("--standard", action="store_true", help="also require non-decreasing indices")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="enumerate all beta traces up to a depth")
    p.add_argument("--depth", type=_nat, required=True, metavar="D")
    p.add_argument("term")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "standardize" and args.trace is not None and (args.source or args.target):
        print(f"{PROG}: use either --trace or --from/--to, not both", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except LamstdError as e:
        print(f"{PROG}: {e}", file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        # misconfigured environment, e.g. a non-numeric frontier cap
        print(f"{PROG}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
