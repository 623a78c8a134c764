"""Command line front end for the codecs."""

import argparse
import math
import sys

from . import factoradic, hereditary, pairing, permcodec, selftest

USAGE_ERROR = 1
DOMAIN_ERROR = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; keep 2 for domain errors instead
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _parse_nat(text):
    t = text.strip()
    try:
        n = int(t, 16) if t[:2].lower() == "0x" else int(t, 10)
    except (ValueError, IndexError):
        raise ValueError(f"not a natural number: {text!r}") from None
    if n < 0:
        raise ValueError(f"not a natural number: {text!r}")
    return n


def _format_nat(n, radix):
    return f"0x{n:x}" if radix == 16 else str(n)


def _render(tree, fmt):
    return hereditary.tree_to_json(tree) if fmt == "json" else hereditary.render_tree(tree)


def _parse_tree_text(text, fmt):
    return hereditary.json_to_tree(text) if fmt == "json" else hereditary.parse_tree(text)


def _cmd_unrank(args):
    tree = hereditary.unrank(_parse_nat(args.n), args.codec, args.ulimit)
    print(_render(tree, args.format))
    return 0


def _cmd_rank(args):
    tree = _parse_tree_text(args.tree, args.format)
    print(_format_nat(hereditary.rank(tree, args.codec, args.ulimit), args.radix))
    return 0


def _cmd_enum(args):
    start = _parse_nat(args.start)
    count = _parse_nat(args.count)
    for n in range(start, start + count):
        print(_render(hereditary.unrank(n, args.codec, args.ulimit), args.format))
    return 0


def _cmd_pair(args):
    print(_format_nat(pairing.pepis_pair(_parse_nat(args.x), _parse_nat(args.y)), args.radix))
    return 0


def _cmd_unpair(args):
    x, y = pairing.pepis_unpair(_parse_nat(args.z))
    print(_format_nat(x, args.radix), _format_nat(y, args.radix))
    return 0


def _cmd_tuple(args):
    parts = [_parse_nat(p) for p in args.parts]
    print(_format_nat(pairing.tuple_encode(parts), args.radix))
    return 0


def _cmd_untuple(args):
    parts = pairing.tuple_decode(args.arity, _parse_nat(args.n))
    print(" ".join(_format_nat(p, args.radix) for p in parts))
    return 0


def _cmd_fact(args):
    if args.digits is not None:
        digits = [_parse_nat(d) for d in args.digits]
        value = (factoradic.fact_asc_value(digits) if args.order == "asc"
                 else factoradic.fact_desc_value(digits))
        print(_format_nat(value, args.radix))
    else:
        n = _parse_nat(args.n)
        digits = factoradic.to_fact_asc(n) if args.order == "asc" else factoradic.to_fact_desc(n)
        print(" ".join(str(d) for d in digits))
    return 0


def _cmd_perm_rank(args):
    perm = [_parse_nat(e) for e in args.perm]
    size, rank = permcodec.perm_rank(perm)
    print(_format_nat(size, args.radix), _format_nat(rank, args.radix))
    return 0


def _cmd_perm_unrank(args):
    perm = permcodec.perm_unrank(_parse_nat(args.size), _parse_nat(args.rank))
    print(" ".join(str(e) for e in perm))
    return 0


def _read_cover(path):
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if len(set(lines)) != len(lines):
        raise ValueError(f"{path}: cover lines must be distinct, duplicates make the order ambiguous")
    return lines


def _cmd_stego_encode(args):
    lines = sorted(_read_cover(args.items))
    n = _parse_nat(args.n)
    if n >= math.factorial(len(lines)):
        bits = sum(math.log2(k) for k in range(2, len(lines) + 1))
        raise ValueError(
            f"message {n} exceeds capacity: {len(lines)} lines carry log2({len(lines)}!) "
            f"= {bits:.1f} bits"
        )
    for i in permcodec.perm_unrank(len(lines), n):
        print(lines[i])
    return 0


def _cmd_stego_decode(args):
    cover = sorted(_read_cover(args.items))
    observed = _read_cover(args.permuted)
    if sorted(observed) != cover:
        raise ValueError(f"{args.permuted} is not a reordering of the cover lines")
    index = {line: i for i, line in enumerate(cover)}
    perm = [index[line] for line in observed]
    message = 0 if not perm else permcodec.perm_rank(perm)[1]
    print(_format_nat(message, args.radix))
    return 0


def _cmd_selftest(args):
    return selftest.run(sys.stdout)


def _add_codec(p):
    p.add_argument("--codec", choices=hereditary.CODEC_NAMES, required=True,
                   help="flat codec applied at every tree level")
    p.add_argument("--ulimit", type=int, default=0, metavar="N",
                   help="urelement limit: numbers below N stay atoms (default 0)")


def _add_format(p):
    p.add_argument("--format", choices=("bracket", "json"), default="bracket",
                   help="tree text form (default bracket)")


def _add_radix(p):
    p.add_argument("--radix", type=int, choices=(10, 16), default=10,
                   help="output base for numbers (default 10)")


def _build_parser():
    parser = _Parser(
        prog="natrank",
        description="Reversible encodings between naturals and finite sets, "
                    "functions, tuples, permutations, and their hereditary closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("unrank", help="decode a natural into a tree")
    p.add_argument("n", help="code to decode (decimal, or hex with 0x)")
    _add_codec(p)
    _add_format(p)
    p.set_defaults(func=_cmd_unrank)

    p = sub.add_parser("rank", help="encode a tree back into its natural")
    p.add_argument("tree", help="tree text, e.g. '[[],[[]]]'")
    _add_codec(p)
    _add_format(p)
    _add_radix(p)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("enum", help="decode a contiguous range of codes, one tree per line")
    _add_codec(p)
    _add_format(p)
    p.add_argument("--from", dest="start", default="0", metavar="N", help="first code (default 0)")
    p.add_argument("--count", required=True, metavar="N", help="how many codes to decode")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("pair", help="pair two naturals (exponential in the first)")
    p.add_argument("x")
    p.add_argument("y")
    _add_radix(p)
    p.set_defaults(func=_cmd_pair)

    p = sub.add_parser("unpair", help="split a natural back into its pair")
    p.add_argument("z")
    _add_radix(p)
    p.set_defaults(func=_cmd_unpair)

    p = sub.add_parser("tuple", help="merge k naturals into one, k bits at a time")
    p.add_argument("parts", nargs="+", metavar="part")
    _add_radix(p)
    p.set_defaults(func=_cmd_tuple)

    p = sub.add_parser("untuple", help="split a natural into a k-tuple")
    p.add_argument("--arity", type=int, required=True, metavar="K")
    p.add_argument("n")
    _add_radix(p)
    p.set_defaults(func=_cmd_untuple)

    p = sub.add_parser("fact", help="factoradic digits of a natural, or back")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("n", nargs="?", help="number to expand into digits")
    group.add_argument("--digits", nargs="+", metavar="D", help="digits to evaluate")
    p.add_argument("--order", choices=("asc", "desc"), default="asc",
                   help="digit significance order (default asc)")
    _add_radix(p)
    p.set_defaults(func=_cmd_fact)

    p = sub.add_parser("perm-rank", help="size and rank of a permutation of 0..n-1")
    p.add_argument("perm", nargs="+", metavar="element")
    _add_radix(p)
    p.set_defaults(func=_cmd_perm_rank)

    p = sub.add_parser("perm-unrank", help="the rank-th permutation of a given size")
    p.add_argument("size")
    p.add_argument("rank")
    p.set_defaults(func=_cmd_perm_unrank)

    p = sub.add_parser("stego-encode", help="hide a number in the line order of a text file")
    p.add_argument("--items", required=True, metavar="FILE", help="cover file, distinct lines")
    p.add_argument("n", help="message to hide; must be below (line count)!")
    p.set_defaults(func=_cmd_stego_encode)

    p = sub.add_parser("stego-decode", help="recover the number from a reordered file")
    p.add_argument("--items", required=True, metavar="FILE", help="original cover file")
    p.add_argument("permuted", metavar="FILE", help="reordered file to read")
    _add_radix(p)
    p.set_defaults(func=_cmd_stego_decode)

    p = sub.add_parser("selftest", help="run the built-in golden-value and round-trip checks")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
