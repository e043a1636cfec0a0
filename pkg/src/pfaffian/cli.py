"""Command line front end.

Subcommands: ``pf`` and ``det`` evaluate a matrix file by a chosen
algorithm, ``matchings`` lists canonical perfect matchings of a word with
signs, ``verify`` runs seeded random trials of a registry identity, and
``verify-symbolic`` proves one by polynomial expansion.

Word letters on the command line are written as plain indices or barred
ones with an apostrophe (``3'``); internally plain k becomes letter 2k and
barred k becomes 2k + 1, so the two vocabularies never collide.

Exit codes: 0 success, 1 verification or computation failure, 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import re
import sys

from .algebra import format_scalar, parse_scalar
from .core import MatrixForm, det, pf_elimination, pf_matchings, pf_recursive
from .detbridge import BipartiteForm, ZeroPivotError, det_via_pf, dodgson_condense
from .matrixio import read_matrix
from .verify import registry_names, run_numeric, run_symbolic
from .words import enumerate_matchings

_TOKEN_RE = re.compile(r"(\d+)(')?\Z")


def _parse_letter(token: str) -> int:
    match = _TOKEN_RE.match(token)
    if match is None:
        raise ValueError(f"cannot parse letter {token!r}: expected an index like 4 or 4'")
    index = int(match.group(1))
    return 2 * index + 1 if match.group(2) else 2 * index


def _render_letter(letter: int) -> str:
    return f"{(letter - 1) // 2}'" if letter % 2 else str(letter // 2)


def _cmd_pf(args) -> int:
    matrix = read_matrix(args.matrix)
    if args.algo == "elimination":
        value = pf_elimination(matrix)
    else:
        form = MatrixForm(matrix)
        engine = pf_matchings if args.algo == "matchings" else pf_recursive
        value = engine(form, range(len(matrix)))
    print(format_scalar(value))
    return 0


def _cmd_det(args) -> int:
    matrix = read_matrix(args.matrix)
    if args.algo == "condense":
        value = dodgson_condense(matrix)
    elif args.algo == "pf-bridge":
        value = det_via_pf(BipartiteForm(matrix), range(len(matrix)), range(len(matrix)))
    else:
        value = det(matrix)
    print(format_scalar(value))
    return 0


def _cmd_matchings(args) -> int:
    word = tuple(_parse_letter(token) for token in args.letters)
    count = 0
    for matching in enumerate_matchings(word):
        pairs = "".join(
            f"({_render_letter(x)},{_render_letter(y)})" for x, y in matching.pairs
        )
        print(f"{'+' if matching.sign > 0 else '-'} {pairs}" if pairs else
              f"{'+' if matching.sign > 0 else '-'} (empty)")
        count += 1
    print(f"count {count}")
    return 0


def _gather_options(args) -> dict:
    options = {
        "alpha_len": args.alpha_len,
        "beta_len": args.beta_len,
        "gamma_len": args.gamma_len,
        "n": args.n,
        "k": args.k,
    }
    if args.params is not None:
        options["params"] = tuple(parse_scalar(p) for p in args.params)
    return {key: value for key, value in options.items() if value is not None}


def _emit_report(report, report_path) -> int:
    if report_path:
        with open(report_path, "w", encoding="utf-8") as handle:
            handle.write(report.jsonl())
    sys.stdout.write(report.summary())
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    report = run_numeric(args.identity, trials=args.trials, seed=args.seed,
                         workers=args.workers, options=_gather_options(args))
    return _emit_report(report, args.report)


def _cmd_verify_symbolic(args) -> int:
    report = run_symbolic(args.identity, options=_gather_options(args))
    return _emit_report(report, args.report)


def _add_shape_flags(parser):
    parser.add_argument("--alpha-len", dest="alpha_len", type=int, default=None,
                        help="length of the word alpha")
    parser.add_argument("--beta-len", dest="beta_len", type=int, default=None,
                        help="length of the word beta")
    parser.add_argument("--gamma-len", dest="gamma_len", type=int, default=None,
                        help="length of the word gamma")
    parser.add_argument("--n", type=int, default=None,
                        help="primary size parameter (dimension or point count)")
    parser.add_argument("--k", type=int, default=None,
                        help="secondary parameter (subword half-length or power)")
    parser.add_argument("--params", nargs=3, metavar=("A", "B", "C"), default=None,
                        help="denominator coefficients a b c for the closed-form family")
    parser.add_argument("--report", default=None,
                        help="write a machine-readable JSONL report to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfaffian",
        description="Exact Pfaffian calculus and identity verification.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    cmd = commands.add_parser("pf", help="Pfaffian of a skew matrix file")
    cmd.add_argument("matrix", help="matrix file: dimension line, then rows of rationals")
    cmd.add_argument("--algo", choices=["matchings", "recursive", "elimination"],
                     default="elimination")
    cmd.set_defaults(func=_cmd_pf)

    cmd = commands.add_parser("det", help="determinant of a square matrix file")
    cmd.add_argument("matrix", help="matrix file: dimension line, then rows of rationals")
    cmd.add_argument("--algo", choices=["condense", "elimination", "pf-bridge"],
                     default="elimination")
    cmd.set_defaults(func=_cmd_det)

    cmd = commands.add_parser("matchings",
                              help="canonical perfect matchings of a word, with signs")
    cmd.add_argument("letters", nargs="*",
                     help="letters such as 0 1 2 3, with 2' for a barred index")
    cmd.set_defaults(func=_cmd_matchings)

    cmd = commands.add_parser("verify", help="random exact trials of one identity")
    cmd.add_argument("identity", help="registry name, e.g. " + ", ".join(registry_names()[:4]) + ", ...")
    cmd.add_argument("--trials", type=int, default=100)
    cmd.add_argument("--seed", type=int, default=0)
    cmd.add_argument("--workers", type=int, default=1)
    _add_shape_flags(cmd)
    cmd.set_defaults(func=_cmd_verify)

    cmd = commands.add_parser("verify-symbolic",
                              help="prove one identity by polynomial expansion")
    cmd.add_argument("identity")
    _add_shape_flags(cmd)
    cmd.set_defaults(func=_cmd_verify_symbolic)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)
    try:
        return args.func(args)
    except ZeroPivotError as failure:
        print(f"error: {failure}", file=sys.stderr)
        return 1
    except (ValueError, OSError, ZeroDivisionError) as failure:
        print(f"error: {failure}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
