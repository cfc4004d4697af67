"""Command-line front end.

Exit codes: 0 success, 1 a law failed, 2 usage or parse error.
"""

import argparse
import json
import sys

from . import kernel
from .algebra import evaluate
from .coalgebra import coproduct, counit
from .enumeration import EmptyAlphabet, dimension_series, enumerate_basis
from .hopf import antipode, homogeneous_components
from .textio import ParseError, format_word, print_canonical, print_latex, print_tensor, to_json, word_to_json
from .verify import LAWS, EmptySpace, run_suite
from .words import diamond_factorize, measures


class UsageError(Exception):
    pass


def _print_element(e, fmt, out):
    if fmt == "json":
        print(to_json(e), file=out)
    elif fmt == "latex":
        print(print_latex(e), file=out)
    else:
        print(print_canonical(e), file=out)


def _alphabet(text):
    return [a.strip() for a in text.split(",") if a.strip()]


def cmd_eval(args, out):
    _print_element(evaluate(args.expr), args.format, out)
    return 0


def cmd_coprod(args, out):
    t = coproduct(evaluate(args.expr))
    if args.format == "json":
        print(to_json(t), file=out)
    else:
        print(print_tensor(t), file=out)
    return 0


def cmd_counit(args, out):
    c = counit(evaluate(args.expr))
    if args.format == "json":
        print(json.dumps({"num": str(c.numerator), "den": str(c.denominator)}, separators=(",", ":")), file=out)
    else:
        print(c, file=out)
    return 0


def cmd_antipode(args, out):
    _print_element(antipode(evaluate(args.expr)), args.format, out)
    return 0


def cmd_degree(args, out):
    parts = homogeneous_components(evaluate(args.expr))
    if args.format == "json":
        doc = {str(n): json.loads(to_json(e)) for n, e in parts.items()}
        print(json.dumps(doc, separators=(",", ":")), file=out)
        return 0
    if not parts:
        print("0", file=out)
    for n, e in parts.items():
        print(f"{n}\t{print_canonical(e)}", file=out)
    return 0


def cmd_factor(args, out):
    e = evaluate(args.word)
    items = e.items()
    if len(items) != 1 or items[0][1] != 1:
        raise UsageError(f"not a single basis word: {print_canonical(e)}")
    w = items[0][0]
    m = measures(w)
    factors = diamond_factorize(w) if w else ()
    if args.format == "json":
        doc = {"word": word_to_json(w), "factors": [word_to_json(f) for f in factors],
               "degree": m.degree, "degree_letters": m.degree_letters, "degree_brackets": m.degree_brackets,
               "depth": m.depth, "breadth": m.breadth, "width": m.width}
        print(json.dumps(doc, separators=(",", ":")), file=out)
        return 0
    print("factors: " + (" <> ".join(format_word(f) for f in factors) if factors else "(none)"), file=out)
    for field in ("degree", "degree_letters", "degree_brackets", "depth", "breadth", "width"):
        print(f"{field}: {getattr(m, field)}", file=out)
    return 0


def cmd_enumerate(args, out):
    alphabet = _alphabet(args.alphabet)
    if args.counts_only:
        print(" ".join(map(str, dimension_series(alphabet, args.max_degree))), file=out)
        return 0
    buckets = enumerate_basis(alphabet, args.max_degree)
    if args.format == "json":
        doc = [[word_to_json(w) for w in ws] for ws in buckets]
        print(json.dumps(doc, separators=(",", ":")), file=out)
        return 0
    for n, ws in enumerate(buckets):
        print(f"{n} ({len(ws)}): " + ", ".join(format_word(w) for w in ws), file=out)
    return 0


def cmd_check(args, out):
    alphabet = _alphabet(args.alphabet)
    if args.law == "all":
        names = list(LAWS)
    else:
        names = [n.strip() for n in args.law.split(",")]
        unknown = [n for n in names if n not in LAWS]
        if unknown:
            raise UsageError(f"unknown law(s): {', '.join(unknown)}; known: {', '.join(LAWS)}")
    reports = [run_suite(n, alphabet, args.max_degree, args.random, args.seed) for n in names]
    if args.json or args.format == "json":
        print(json.dumps([r.to_doc() for r in reports], separators=(",", ":")), file=out)
    elif not args.quiet:
        for r in reports:
            print(r.summary(), file=out)
    return 0 if all(r.passed for r in reports) else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "latex"], default="text")
    common.add_argument("--quiet", action="store_true", help="suppress report text (exit code only)")

    p = argparse.ArgumentParser(prog="nijenhuis", description="Free Nijenhuis algebra calculator and law checker.")
    p.add_argument("--backend", choices=kernel.available_backends(), help="word kernel implementation")
    sub = p.add_subparsers(dest="command", required=True)

    for name, func, help_text in [
        ("eval", cmd_eval, "normalize an expression into the basis"),
        ("coprod", cmd_coprod, "coproduct of an expression"),
        ("counit", cmd_counit, "counit of an expression"),
        ("antipode", cmd_antipode, "right antipode of an expression"),
        ("degree", cmd_degree, "homogeneous components"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("expr")
        sp.set_defaults(func=func)

    sp = sub.add_parser("factor", parents=[common], help="diamond factorization and measures of a word")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("enumerate", parents=[common], help="list basis words by degree")
    sp.add_argument("--alphabet", required=True, help="comma-separated letters")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--counts-only", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("check", parents=[common], help="run law suites")
    sp.add_argument("--law", default="all", help=f"'all' or comma-separated names: {', '.join(LAWS)}")
    sp.add_argument("--alphabet", default="x")
    sp.add_argument("--max-degree", type=int, default=None,
                    help="degree bound (default 4 for unary laws, 3 otherwise)")
    sp.add_argument("--random", type=int, default=None, metavar="K", help="check K random tuples instead")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_check)
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.backend:
        kernel.set_backend(args.backend)
    try:
        return args.func(args, out)
    except ParseError as exc:
        source = getattr(args, "expr", None) or getattr(args, "word", "")
        print(f"error: {exc}", file=err)
        print(f"  {source}", file=err)
        print("  " + " " * len(source.encode()[:exc.offset].decode(errors="ignore")) + "^", file=err)
        return 2
    except (UsageError, EmptyAlphabet, EmptySpace, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
