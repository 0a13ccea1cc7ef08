"""Command line entry point.

Exit codes: 0 success, 1 invalid input, 2 precondition failure,
3 bound exceeded, 4 verification mismatch.
"""
from __future__ import annotations

import argparse
import sys

from . import report, textfmt
from .errors import BoundExceeded, InvalidInput, PreconditionError, VerificationError

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_BOUND, EXIT_MISMATCH = 0, 1, 2, 3, 4

HELP = {
    "check-balanced": "decide balancedness of a graph of groups, with a certificate",
    "pi1": "presentation of the fundamental group of a graph of groups",
    "central-quotient": "quotient by the central cyclic subgroup of a balanced all-Z graph of groups",
    "find-z-homs": "search homomorphisms to Z that are nontrivial on each edge group",
    "decompose": "free product decomposition along edges with trivial groups",
    "graph-product": "presentation of a graph product",
    "normal-form": "canonical normal forms of graph-product words",
    "kill-vertex": "the surjection killing one vertex, and its link",
    "kernel-factor": "factor kernel elements of the kill-vertex surjection",
    "coset-action": "action of an element on cosets of the link subgroup",
    "gs": "multiply elements of a free product permuted by Z",
    "enumerate": "Todd-Coxeter coset enumeration",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphgroups", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in HELP.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="input document (.gog / .gp), '-' for stdin")
        p.add_argument("--format", choices=("text", "machine"), default="text")
        p.add_argument("--bound", type=int, help="cap on cosets (enumerate, coset-action)")
        p.add_argument("--base", help="base vertex for central-quotient")
        p.add_argument("--vertex", help="vertex to kill (kill-vertex, kernel-factor, coset-action)")
        p.add_argument("-o", "--output", help="write the report here instead of stdout")
    v = sub.add_parser("verify", help="recheck every certificate in a text report")
    v.add_argument("report", help="report file produced by another command")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            command = report.verify_report(_read(args.report))
            print(f"ok: {command} report verified")
            return EXIT_OK
        doc = textfmt.parse(_read(args.input))
        sections = report.run(args.command, doc, bound=args.bound, base=args.base, vertex=args.vertex)
        out = report.render(sections, args.format)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
        return EXIT_OK
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InvalidInput, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
