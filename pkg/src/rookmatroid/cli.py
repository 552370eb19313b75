"""Command-line front end: ``rookmatroid <command> ...``.

Exit status is 0 whenever an answer was computed (including negative ones
such as NOT-ROOK), 2 for unreadable input or bad usage and 1 when an
internal consistency check fails.
"""

from __future__ import annotations

import argparse
import sys

from .errors import InternalError, ParseError, RookMatroidError
from .essential import check_hrep, essential_family, format_ine, format_plain, polytope_hrep
from .matroid import CounterExample
from .necklace import Accept, format_necklace, necklace_of_shape, classify, parse_necklace
from .placements import decode, encode, enumerate_non_nesting
from .rook import build, is_matroid_board
from .shapes import format_board, inner_corners, is_connected_shape, outer_corners, parse_board, parse_shape
from .sorting import even, number_uncrossing, odd, sort_pair, uncross, verify_sort_closed


def fmt_set(s) -> str:
    return "{" + ",".join(str(e) for e in sorted(s)) + "}"


def parse_set(text: str) -> frozenset[int]:
    text = text.strip().strip("{}")
    if not text:
        return frozenset()
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None
    if len(set(vals)) != len(vals):
        raise ParseError(f"repeated element in {text!r}")
    return frozenset(vals)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def cmd_shape(args, out):
    shape = parse_shape(args.spec)
    out.write(f"shape {shape}\n")
    out.write(f"rows {shape.r} columns {shape.c} cells {len(shape.cell_set)}\n")
    if shape.has_empty_lines:
        out.write("connected no (empty row or column)\n")
    else:
        out.write(f"connected {'yes' if is_connected_shape(shape) else 'no'}\n")
    if args.corners:
        out.write("inner " + " ".join(f"({c.row},{c.col})" for c in inner_corners(shape)) + "\n")
        out.write("outer " + " ".join(f"({c.row},{c.col})" for c in outer_corners(shape)) + "\n")
    if args.render:
        from .render import render_grid

        out.write(render_grid(shape, {}, empty="#"))


def cmd_enumerate(args, out):
    shape = parse_shape(args.spec)
    placements = enumerate_non_nesting(shape)
    if args.count:
        out.write(f"{len(placements)}\n")
        return
    for rho in placements:
        out.write(" ".join(str(e) for e in sorted(encode(rho))) + "\n")


def cmd_necklace(args, out):
    out.write(format_necklace(necklace_of_shape(parse_shape(args.spec))))


def cmd_classify(args, out):
    verdict = classify(parse_necklace(_read(args.file)))
    out.write(f"{verdict}\n")
    if args.verbose and isinstance(verdict, Accept):
        out.write("inner " + " ".join(f"({a},{b})" for a, b in verdict.corners.inner) + "\n")
        out.write("outer " + " ".join(f"({a},{b})" for a, b in verdict.corners.outer) + "\n")
    elif args.verbose and verdict.detail:
        out.write(verdict.detail + "\n")


def cmd_sort_check(args, out):
    failure = verify_sort_closed(build(parse_shape(args.spec)), properties=args.properties)
    if failure is None:
        out.write("OK\n")
    else:
        out.write(f"FAIL I={fmt_set(failure.I)} J={fmt_set(failure.J)} reason={failure.reason}\n")


def cmd_uncross(args, out):
    shape = parse_shape(args.spec)
    I, J = parse_set(args.I), parse_set(args.J)
    rho1, rho2 = decode(shape, I), decode(shape, J)
    from .sorting import Color, ColoredRook, DoubleRookPlacement

    start = DoubleRookPlacement(
        shape,
        tuple(ColoredRook(c, Color.WHITE) for c in rho1.rooks) + tuple(ColoredRook(c, Color.BLACK) for c in rho2.rooks),
    )
    z = uncross(rho1, rho2)
    y = number_uncrossing(z)
    s1, s2 = sort_pair(I, J)
    out.write("input (R white = I, r black = J, * both)\n" + start.render())
    out.write("uncrossed\n" + z.render())
    out.write("numbered\n" + y.render())
    out.write(f"odd {fmt_set(encode(odd(y)))} sort1 {fmt_set(s1)}\n")
    out.write(f"even {fmt_set(encode(even(y)))} sort2 {fmt_set(s2)}\n")


def cmd_essential(args, out):
    shape = parse_shape(args.spec)
    for ess in essential_family(build(shape).matroid):
        flag = "connected" if ess.connected else "disconnected"
        out.write(f"({ess.rank},{ess.interval}) {flag}\n")


def cmd_polytope(args, out):
    shape = parse_shape(args.spec)
    h = polytope_hrep(shape)
    out.write(format_ine(h) if args.format == "ine" else format_plain(h))
    if args.check:
        w = check_hrep(shape, h)
        out.write("check OK\n" if w is None else f"check FAIL point={''.join(map(str, w.point))} basis={w.basis}\n")


def cmd_verify(args, out):
    board = parse_board(_read(args.boardfile))
    verdict = is_matroid_board(board)
    if isinstance(verdict, CounterExample):
        out.write(f"NOT-MATROID B1={fmt_set(verdict.b1)} B2={fmt_set(verdict.b2)} a={verdict.a}\n")
    else:
        out.write("MATROID\n")
        if args.verbose:
            out.write(format_board(board))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rookmatroid", description="Rook matroids on skew shapes.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("shape", help="dimensions, corners and a drawing of a skew shape")
    sp.add_argument("spec", help='shape such as "54421/31" or "10,9,3/2,1"')
    sp.add_argument("--corners", action="store_true")
    sp.add_argument("--render", action="store_true")
    sp.set_defaults(func=cmd_shape)

    sp = sub.add_parser("enumerate", help="encoded bases of all non-nesting placements")
    sp.add_argument("spec")
    sp.add_argument("--count", action="store_true", help="print only how many there are")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("necklace", help="Grassmann necklace of the rook matroid")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_necklace)

    sp = sub.add_parser("classify", help="decide whether a necklace file comes from a rook matroid")
    sp.add_argument("file", help="necklace file, or - for stdin")
    sp.add_argument("-v", "--verbose", action="store_true")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("sort-check", help="check sort-closure over every basis pair")
    sp.add_argument("spec")
    sp.add_argument("--properties", action="store_true", help="also check the structure of each uncrossing")
    sp.set_defaults(func=cmd_sort_check)

    sp = sub.add_parser("uncross", help="draw the uncrossing of two bases")
    sp.add_argument("spec")
    sp.add_argument("--I", required=True, help="first basis, e.g. 1,2,4,9,10")
    sp.add_argument("--J", required=True, help="second basis")
    sp.set_defaults(func=cmd_uncross)

    sp = sub.add_parser("essential", help="ranked essential sets")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_essential)

    sp = sub.add_parser("polytope", help="H-representation of the base polytope")
    sp.add_argument("spec")
    sp.add_argument("--format", choices=["ine", "plain"], default="ine")
    sp.add_argument("--check", action="store_true", help="compare 0/1 points with the bases")
    sp.set_defaults(func=cmd_polytope)

    sp = sub.add_parser("verify", help="check basis exchange for a '#'/'.' board file")
    sp.add_argument("boardfile", help="board file, or - for stdin")
    sp.add_argument("-v", "--verbose", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except InternalError as exc:
        err.write(f"internal error: {exc}\n")
        return 1
    except RookMatroidError as exc:
        err.write(f"error: {exc}\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
