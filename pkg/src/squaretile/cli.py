"""Command-line entry point.

Every command prints one JSON document on stdout (``enumerate`` prints one
per line). Exit codes: 0 success, 1 infeasible / failed / counterexample,
2 usage or input error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import plane, rectangles, render, sequences
from .tiling import Window, odd_census, report_to_json, tiling_from_json, tiling_to_json, verify

OK, FAILED, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- argument types -----------------------------------------------------------


def int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def rect_dims(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    try:
        w, h = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH, got {text!r}")
    if w < 1 or h < 1:
        raise argparse.ArgumentTypeError("rectangle dimensions must be positive")
    return w, h


def window_bounds(text: str) -> Window:
    vals = int_list(text)
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("window needs x0,y0,x1,y1")
    try:
        return Window(*vals)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def canonical_rect(dims: tuple[int, int]) -> tuple[int, int]:
    w, h = dims
    if w < h:
        print(f"warning: rectangle {w}x{h} read as {h}x{w} (width >= height)", file=sys.stderr)
        return h, w
    return w, h


# -- I/O helpers --------------------------------------------------------------


def emit(doc, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(doc) + "\n")


def read_tiling(path: str | None):
    try:
        text = sys.stdin.read() if path in (None, "-") else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    try:
        return tiling_from_json(doc)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid tiling document: {exc}")


def write_figures(t, args) -> None:
    try:
        if getattr(args, "svg", None):
            render.render_svg(t, args.svg)
        if getattr(args, "png", None):
            render.render_png(t, args.png)
    except OSError as exc:
        raise UsageError(f"cannot write figure: {exc}")


# -- commands -----------------------------------------------------------------


def cmd_solve(args) -> int:
    w, h = canonical_rect(args.rect)
    res = rectangles.search(args.sides, w, h, args.budget)
    if res.tiling is None:
        emit({"status": res.status, "nodes": res.nodes})
        return FAILED
    write_figures(res.tiling, args)
    emit(tiling_to_json(res.tiling))
    return OK


def cmd_verify(args) -> int:
    report = verify(read_tiling(args.input))
    emit(report_to_json(report))
    return OK if report.passed else FAILED


def cmd_enumerate(args) -> int:
    for sset, w, h, t in rectangles.enumerate_squared_rectangles(args.order, args.max_side, args.budget):
        emit({"sides": list(sset.sides), "w": w, "h": h, "tiling": tiling_to_json(t)})
    return OK


def cmd_witness(args) -> int:
    if args.target == "plane":
        verdict = plane.plane_odd_count_verdict(args.odds)
        emit(verdict.to_json())
        return OK if isinstance(verdict, plane.Possible) else FAILED
    verdict = rectangles.rect_odd_count_verdict(args.odds)
    if isinstance(verdict, rectangles.Witness):
        write_figures(verdict.tiling, args)
    emit(verdict.to_json())
    return OK if isinstance(verdict, rectangles.Witness) else FAILED


def _patch_result(t, args) -> int:
    report = verify(t)
    write_figures(t, args)
    count, odds = odd_census(t)
    emit({"report": report_to_json(report), "odd_count": count, "tiling": tiling_to_json(t)})
    return OK if report.passed else FAILED


def cmd_pinwheel(args) -> int:
    scales = tuple(args.scale) if args.scale else plane.PINWHEEL_SCALES
    if len(scales) != 4:
        raise UsageError("--scale needs four comma-separated factors")
    return _patch_result(plane.pinwheel_patch(args.odd, args.window, scales), args)


def cmd_three_odds(args) -> int:
    return _patch_result(plane.three_odds_patch(args.window), args)


def cmd_disjoint(args) -> int:
    try:
        seqs = [sequences.parse_seq(s) for s in args.seq]
    except ValueError as exc:
        raise UsageError(str(exc))
    result = sequences.pairwise_disjoint(seqs, args.horizon)
    emit(result.to_json())
    return OK if isinstance(result, sequences.DisjointnessCertificate) and result.valid else FAILED


def cmd_ratio_filter(args) -> int:
    idx = sequences.golden_ratio_filter(args.sides)
    emit({"index": idx, "pair": None if idx is None else args.sides[idx:idx + 2]})
    return OK


def cmd_extend(args) -> int:
    t = read_tiling(args.input)
    for _ in range(args.times):
        t = rectangles.fib_extend_rect(t)
    write_figures(t, args)
    emit(tiling_to_json(t))
    return OK


def cmd_render(args) -> int:
    t = read_tiling(args.input)
    if not (args.svg or args.png):
        raise UsageError("render needs --svg and/or --png")
    write_figures(t, args)
    count, odds = odd_census(t)
    emit({"svg": args.svg, "png": args.png, "bouwkamp": render.bouwkamp(t), "odd_sides": odds,
          "squares": len(t.squares)})
    return OK


# -- parser -------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="squaretile", description="Perfect tilings by distinct squares.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def figures(sp, png=True):
        sp.add_argument("--svg", metavar="PATH", help="also write an SVG drawing")
        if png:
            sp.add_argument("--png", metavar="PATH", help="also write a matplotlib PNG")

    def budget(sp):
        sp.add_argument("--budget", type=int, default=rectangles.DEFAULT_BUDGET,
                        help="search node budget (default %(default)s)")

    sp = sub.add_parser("solve", help="tile a rectangle with a given side set")
    sp.add_argument("--sides", type=int_list, required=True)
    sp.add_argument("--rect", type=rect_dims, required=True, metavar="WxH")
    budget(sp)
    figures(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", help="check a tiling document")
    sp.add_argument("input", nargs="?", help="tiling JSON (default stdin)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="list perfect squared rectangles, one JSON per line")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--max-side", type=int, required=True)
    budget(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("witness", help="odd-count feasibility verdict")
    sp.add_argument("--odds", type=int, required=True)
    sp.add_argument("--target", choices=("rect", "plane"), default="rect")
    figures(sp)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("pinwheel", help="window of the one-odd plane tiling")
    sp.add_argument("--odd", type=int, required=True, help="side of the central odd square")
    sp.add_argument("--window", type=window_bounds, required=True, metavar="x0,y0,x1,y1")
    sp.add_argument("--scale", type=int_list, help="four quadrant scales (default 23,24,25,26)")
    figures(sp)
    sp.set_defaults(func=cmd_pinwheel)

    sp = sub.add_parser("three-odds", help="window of the plane tiling with odd sides 3, 5, 11")
    sp.add_argument("--window", type=window_bounds, required=True, metavar="x0,y0,x1,y1")
    figures(sp)
    sp.set_defaults(func=cmd_three_odds)

    sp = sub.add_parser("disjoint", help="certify that sequences share no term")
    sp.add_argument("--seq", action="append", required=True,
                    help='sequence like "23*fib(64,130;prefix=2,8,14)"; repeat for each')
    sp.add_argument("--horizon", type=int, default=16)
    sp.set_defaults(func=cmd_disjoint)

    sp = sub.add_parser("ratio-filter", help="first consecutive ratio above the golden ratio")
    sp.add_argument("--sides", type=int_list, required=True)
    sp.set_defaults(func=cmd_ratio_filter)

    sp = sub.add_parser("extend", help="append squares to a rectangle tiling")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--times", type=int, default=1)
    figures(sp)
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("render", help="draw a tiling document")
    sp.add_argument("input", nargs="?")
    figures(sp)
    sp.set_defaults(func=cmd_render)
    return p


_VALUE_FLAGS = {"--window", "--sides", "--scale"}


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--window -5,0,5,9`` into ``--window=-5,0,5,9`` so argparse keeps the value."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_glue_negative_values(argv))
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except rectangles.BudgetExceeded as exc:
        emit({"status": "budget-exhausted", "nodes": exc.nodes})
        return BUDGET
    except rectangles.DuplicateSideError as exc:
        print(f"error: side {exc.side} already used", file=sys.stderr)
        emit({"status": "duplicate-side", "side": exc.side})
        return FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())
