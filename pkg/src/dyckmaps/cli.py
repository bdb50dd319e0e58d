"""Batch command-line interface.

Words stream one per line on standard input; a blank line is the empty
word.  Exit codes: 0 success, 1 input or validation error, 2 internal
error (a bug), 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import DyckError
from .generate import distribution
from .maps import alpha, beta, phi, phi_ext, phi_stages, psi, psi_ext, psi_stages
from .render import render_ascii
from .stats import stat_record
from .verify import (
    VerificationReport,
    verify_involutions_and_transport,
    verify_randomized,
    verify_theorem1,
    verify_theorem2,
)
from .words import classify, parse_word

_MAX_N = 30

_PLAIN_OPS = {
    "phi": phi,
    "psi": psi,
    "alpha": alpha,
    "beta": beta,
    "phi-ext": phi_ext,
    "psi-ext": psi_ext,
}


class _LineError(Exception):
    """Validation error tagged with the offending input line."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"{message} (line {lineno})")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckmaps",
        description="Bijections and exact statistics on Dyck and bilateral Dyck paths.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_map = sub.add_parser("map", help="transform words from stdin")
    p_map.add_argument("--op", required=True, choices=sorted(_PLAIN_OPS))
    p_map.add_argument(
        "--trace", action="store_true",
        help="emit '#'-prefixed bracketed stage lines before each result",
    )

    p_stats = sub.add_parser("stats", help="statistics record per word from stdin")
    p_stats.add_argument("--format", choices=("text", "json"), default="text")

    sub.add_parser("classify", help="class of each word from stdin")

    p_enum = sub.add_parser("enum", help="stream all words of a class")
    p_enum.add_argument("--class", dest="path_class", required=True,
                        choices=("dyck", "bilateral"))
    p_enum.add_argument("--n", type=int, required=True)

    p_table = sub.add_parser("table", help="exact distribution table")
    p_table.add_argument("--class", dest="path_class", required=True,
                         choices=("dyck", "bilateral"))
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--stat", required=True)
    p_table.add_argument("--stat2", default=None)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")

    p_verify = sub.add_parser("verify", help="run the verification engine")
    p_verify.add_argument("--max-n", type=int, default=8)
    p_verify.add_argument("--randomized", action="store_true",
                          help="also run randomized round-trip checks")
    p_verify.add_argument("--rand-n", type=int, default=200,
                          help="semilength for randomized checks")
    p_verify.add_argument("--trials", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    sub.add_parser("render", help="ASCII drawing of each word from stdin")
    return parser


def _input_words(stdin):
    for lineno, line in enumerate(stdin, 1):
        yield lineno, line.rstrip("\r\n")


def _parse_line(lineno: int, raw: str):
    try:
        return parse_word(raw)
    except DyckError as exc:
        raise _LineError(lineno, str(exc)) from exc


def _cmd_map(args, stdin, stdout) -> int:
    op = _PLAIN_OPS[args.op]
    staged = {"phi": phi_stages, "psi": psi_stages}.get(args.op)
    for lineno, raw in _input_words(stdin):
        word = _parse_line(lineno, raw)
        try:
            if args.trace and staged is not None:
                result, lines = staged(word)
                for line in lines:
                    print(f"# {line}", file=stdout)
            else:
                result = op(word)
                if args.trace:
                    _print_simple_trace(args.op, word, stdout)
        except DyckError as exc:
            raise _LineError(lineno, str(exc)) from exc
        print(result.text, file=stdout)
    return 0


def _print_simple_trace(op: str, word, stdout) -> None:
    from .decompose import crossing_factorize, first_return_split

    if op == "alpha":
        print("# reflect every step", file=stdout)
    elif op == "beta":
        if word.text:
            head, rest = first_return_split(word)
            print(f"# swap U({head.text[1:-1]})D {rest.text} -> "
                  f"U({rest.text})D {head.text[1:-1]}", file=stdout)
    else:
        factors = crossing_factorize(word).factors
        if factors:
            print("# factors: " + " | ".join(f.text for f in factors), file=stdout)


def _cmd_stats(args, stdin, stdout) -> int:
    for lineno, raw in _input_words(stdin):
        word = _parse_line(lineno, raw)
        try:
            rec = stat_record(word)
        except DyckError as exc:
            raise _LineError(lineno, str(exc)) from exc
        if args.format == "json":
            print(json.dumps(rec.to_dict()), file=stdout)
        else:
            print(rec.to_text(), file=stdout)
    return 0


def _cmd_classify(args, stdin, stdout) -> int:
    for lineno, raw in _input_words(stdin):
        word = _parse_line(lineno, raw)
        print(classify(word).value, file=stdout)
    return 0


def _check_n(n: int) -> None:
    if not 0 <= n <= _MAX_N:
        raise DyckError(f"--n must be between 0 and {_MAX_N}")


def _cmd_enum(args, stdin, stdout) -> int:
    from .generate import _balanced_texts, _dyck_texts

    _check_n(args.n)
    source = _dyck_texts if args.path_class == "dyck" else _balanced_texts
    for text in source(args.n):
        print(text, file=stdout)
    return 0


def _cmd_table(args, stdin, stdout) -> int:
    _check_n(args.n)
    table = distribution(args.path_class, args.n, args.stat, args.stat2)
    if args.format == "json":
        print(json.dumps(table.to_dict()), file=stdout)
    else:
        stdout.write(table.to_csv())
    return 0


def _cmd_verify(args, stdin, stdout) -> int:
    if not 0 <= args.max_n <= _MAX_N:
        raise DyckError(f"--max-n must be between 0 and {_MAX_N}")
    report = VerificationReport()
    report.checks += verify_theorem1(args.max_n, jobs=args.jobs).checks
    report.checks += verify_theorem2(args.max_n, jobs=args.jobs).checks
    report.checks += verify_involutions_and_transport(args.max_n).checks
    if args.randomized:
        report.checks += verify_randomized(
            args.rand_n, args.trials, args.seed
        ).checks
    if args.format == "json":
        print(json.dumps(report.to_dict()), file=stdout)
    else:
        print(report.format_text(), file=stdout)
    return 0 if report.ok else 3


def _cmd_render(args, stdin, stdout) -> int:
    for lineno, raw in _input_words(stdin):
        word = _parse_line(lineno, raw)
        try:
            block = render_ascii(word)
        except DyckError as exc:
            raise _LineError(lineno, str(exc)) from exc
        print(block, file=stdout)
        print(file=stdout)
    return 0


_COMMANDS = {
    "map": _cmd_map,
    "stats": _cmd_stats,
    "classify": _cmd_classify,
    "enum": _cmd_enum,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def run(argv, stdin=None, stdout=None, stderr=None) -> int:
    """Run one CLI invocation; streams are injectable for testing."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return _COMMANDS[args.command](args, stdin, stdout)
    except (_LineError, DyckError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except BrokenPipeError:
        return 0
    except Exception as exc:  # pragma: no cover - indicates a bug
        print(f"internal error: {exc!r}", file=stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
