"""Command-line front end.

Subcommands: gray, count, exists, ocycle, verify, digraph.  Words travel on
stdout one per line in their text form; diagnostics go to stderr.  Exit
codes: 0 success / exists / valid, 1 not-exists / invalid input list,
2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .graycode import gray_list, gray_stream, verify_gray
from .ocycles import (
    REASON_GCD,
    NotEulerianError,
    build_transition_digraph,
    compress_cycle,
    construct_ocycle,
    exists_fixed_weight_ocycle,
    export_dot,
    verify_ocycle,
)
from .words import (
    MaterializationLimitError,
    Word,
    count_fixed_weight,
    enumerate_fixed_weight,
    enumerate_weight_range,
    format_word,
    parse_word,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graycycles",
        description="Fixed-weight m-ary Gray codes and s-overlap cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gray", help="list the two-change ordering of B_k(m,n)")
    _add_ints(p, "m", "n", "k")
    p.add_argument(
        "--stream",
        action="store_true",
        help="emit words incrementally with O(n) memory (no size cap)",
    )

    p = sub.add_parser("count", help="print |B_k(m,n)| exactly")
    _add_ints(p, "m", "n", "k")

    p = sub.add_parser("exists", help="fixed-weight s-overlap cycle existence")
    _add_ints(p, "m", "n", "k", "s")

    p = sub.add_parser("ocycle", help="construct an s-overlap cycle")
    modes = p.add_subparsers(dest="mode", required=True)
    fixed = modes.add_parser("fixed", help="cycle for the weight-k words")
    _add_ints(fixed, "m", "n", "k", "s")
    fixed.add_argument("--compressed", action="store_true", help="one-line compressed form")
    rng = modes.add_parser("range", help="cycle for the words with weight in [p,q]")
    _add_ints(rng, "m", "n", "p", "q", "s")
    rng.add_argument("--compressed", action="store_true", help="one-line compressed form")

    p = sub.add_parser("verify", help="check a word list from stdin")
    targets = p.add_subparsers(dest="target", required=True)
    vg = targets.add_parser("gray", help="check a claimed two-change ordering")
    _add_ints(vg, "m", "n", "k")
    vo = targets.add_parser("ocycle", help="check a claimed s-overlap cycle")
    _add_ints(vo, "n", "s")

    p = sub.add_parser("digraph", help="export a transition digraph as DOT")
    modes = p.add_subparsers(dest="mode", required=True)
    fixed = modes.add_parser("fixed")
    _add_ints(fixed, "m", "n", "k", "s")
    fixed.add_argument("--dot", metavar="PATH", help="write DOT here instead of stdout")
    rng = modes.add_parser("range")
    _add_ints(rng, "m", "n", "p", "q", "s")
    rng.add_argument("--dot", metavar="PATH", help="write DOT here instead of stdout")

    return parser


def _add_ints(parser: argparse.ArgumentParser, *names: str) -> None:
    for name in names:
        parser.add_argument(name, type=int)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "gray": _cmd_gray,
        "count": _cmd_count,
        "exists": _cmd_exists,
        "ocycle": _cmd_ocycle,
        "verify": _cmd_verify,
        "digraph": _cmd_digraph,
    }[args.command]
    try:
        return handler(args)
    except MaterializationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _cmd_gray(args: argparse.Namespace) -> int:
    words = gray_stream(args.m, args.n, args.k) if args.stream else gray_list(
        args.m, args.n, args.k
    )
    for w in words:
        print(format_word(w, args.m))
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    print(count_fixed_weight(args.m, args.n, args.k))
    return 0


def _cmd_exists(args: argparse.Namespace) -> int:
    verdict = exists_fixed_weight_ocycle(args.m, args.n, args.k, args.s)
    if verdict.reason == REASON_GCD:
        phrase = "n-s > gcd(n,s)" if verdict.exists else "n-s = gcd(n,s)"
    else:
        phrase = verdict.reason
    print(f"{'yes' if verdict.exists else 'no'} ({phrase})")
    return 0 if verdict.exists else 1


def _word_set(args: argparse.Namespace) -> list[Word]:
    if args.mode == "fixed":
        return enumerate_fixed_weight(args.m, args.n, args.k)
    return enumerate_weight_range(args.m, args.n, args.p, args.q)


def _cmd_ocycle(args: argparse.Namespace) -> int:
    words = _word_set(args)
    if not words:
        print("error: the word set is empty", file=sys.stderr)
        return 1
    try:
        solution = construct_ocycle(words, args.s)
    except NotEulerianError as exc:
        print(f"no {args.s}-overlap cycle: {exc.reason}", file=sys.stderr)
        return 1
    if args.compressed:
        print(compress_cycle(solution, args.n))
    else:
        for w in solution.cycle:
            print(format_word(w, args.m))
    return 0


def _read_words(stream) -> list[Word]:
    # One word per line; blank lines and '#' comments are ignored.
    words = []
    for lineno, raw in enumerate(stream, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            words.append(parse_word(text))
        except ValueError as exc:
            raise _InputListError(f"line {lineno}: {exc}") from None
    return words


class _InputListError(Exception):
    pass


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        words = _read_words(sys.stdin)
    except _InputListError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.target == "gray":
        report = verify_gray(words, args.m, args.n, args.k)
    else:
        if not 1 <= args.s <= args.n - 1:
            print(
                f"error: overlap length s={args.s} out of range for n={args.n}",
                file=sys.stderr,
            )
            return 2
        bad = next((i for i, w in enumerate(words) if len(w) != args.n), None)
        if bad is not None:
            print(f"violation at index {bad}: word has length "
                  f"{len(words[bad])}, expected {args.n}")
            return 1
        report = verify_ocycle(words, words, args.s)
    if report.ok:
        print("ok")
        return 0
    index, description = report.first_violation
    print(f"violation at index {index}: {description}")
    return 1


def _cmd_digraph(args: argparse.Namespace) -> int:
    digraph = build_transition_digraph(_word_set(args), args.s)
    text = export_dot(digraph, args.m)
    if args.dot:
        with open(args.dot, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
