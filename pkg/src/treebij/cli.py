"""Command-line interface: ``treebij <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys

from .convert import KINDS, convert, enumerate_objects, verify_size
from .core import PARSERS, TreebijError, format_word, parse_word
from .enumeration import count_objects, rank, sample, unrank
from .render import render

ENUMERATE_LIMIT = 10
VERIFY_LIMIT = 7


def _read_input(text: str | None) -> str:
    if text is None or text == "-":
        return sys.stdin.read().strip()
    return text


def cmd_convert(args) -> int:
    print(convert(args.source, args.target, _read_input(args.input)))
    return 0


def cmd_enumerate(args) -> int:
    if args.n > ENUMERATE_LIMIT and not args.force:
        print(f"refusing to enumerate n = {args.n} > {ENUMERATE_LIMIT} without --force",
              file=sys.stderr)
        return 2
    for line in enumerate_objects(args.kind, args.n):
        print(line)
    return 0


def cmd_count(args) -> int:
    print(count_objects(args.n))
    return 0


def cmd_rank(args) -> int:
    print(rank(parse_word(args.word)))
    return 0


def cmd_unrank(args) -> int:
    print(format_word(unrank(args.rank, args.n)))
    return 0


def cmd_sample(args) -> int:
    for k in range(args.count):
        print(format_word(sample(args.n, args.seed + k)))
    return 0


def cmd_verify(args) -> int:
    if args.n_max < 1:
        print("--n-max must be at least 1", file=sys.stderr)
        return 2
    if args.n_max > VERIFY_LIMIT and not args.force:
        print(f"refusing to verify n-max = {args.n_max} > {VERIFY_LIMIT} without --force",
              file=sys.stderr)
        return 2
    total = 0
    for n in range(1, args.n_max + 1):
        result = verify_size(n)
        status = "PASS" if result.ok else "FAIL"
        print(f"n={n}: {result.words} words, {len(result.partitions)} partitions, "
              f"{len(result.ports)} ports, {len(result.phylos)} phylo trees, "
              f"expected {result.expected}: {status}")
        total += result.words
        if not result.ok:
            print(f"counterexample: {result.counterexample}")
            return 1
    print(f"all checks passed for n = 1..{args.n_max} ({total} words)")
    return 0


def cmd_render(args) -> int:
    value = PARSERS[args.kind](_read_input(args.input))
    print(render(args.kind, value, args.format, args.stanley_labels))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treebij",
        description="Bijections among trapezoidal words, PORTs, 2-partitions and phylogenetic trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("--from", dest="source", choices=KINDS, required=True)
    p.add_argument("--to", dest="target", choices=KINDS, required=True)
    p.add_argument("--input", help="input text, or - for standard input (default)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("enumerate", help="list every object of size n")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="print (2n-1)!!")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("rank", help="lexicographic rank of a word")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("unrank", help="word of length n with the given rank")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_unrank)

    p = sub.add_parser("sample", help="uniform random words for seeds seed, seed+1, ...")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="exhaustive round-trip check for n = 1..n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a PORT or phylogenetic tree")
    p.add_argument("--kind", choices=("port", "phylo"), required=True)
    p.add_argument("--format", choices=("dot", "ascii"), required=True)
    p.add_argument("--stanley-labels", action="store_true",
                   help="label internal phylo nodes with their Stanley labels")
    p.add_argument("--input", help="input text, or - for standard input (default)")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TreebijError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
