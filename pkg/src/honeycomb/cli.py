"""Command-line interface: ``honeycomb <command> ...``.

Output is buffered and written only when a command succeeds, so error paths
print a single diagnostic on stderr and nothing on stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .config import (
    DotConfiguration,
    automorphism_group_order,
    bounding_region,
    canonicalize,
    hexagonal_permutation_index,
    honeycomb_radius,
    is_distinct_difference,
)
from .io_render import format_costas_line, parse_costas_line, parse_document, render_ascii, render_svg, write_dots
from .search import (
    BudgetExceeded,
    costas_to_honeycomb,
    count_hex_permutations,
    enumerate_costas,
    growth_report,
    is_costas,
    max_brooks,
    search_honeycomb,
    search_symmetric_honeycomb,
)

EXIT_OK, EXIT_ERROR, EXIT_NOT_HONEYCOMB = 0, 1, 2


class CliError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _default_workers() -> int:
    env = os.environ.get("HONEYCOMB_WORKERS")
    if env is None:
        return 1
    try:
        return _positive(env)
    except argparse.ArgumentTypeError as exc:
        raise CliError(f"HONEYCOMB_WORKERS: {exc}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def build_parser(default_workers: int = 1) -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--workers", type=_positive, default=default_workers,
                        help="worker threads (default: $HONEYCOMB_WORKERS or 1)")
    common.add_argument("--format", choices=("text", "json-lines"), default="text", dest="fmt")
    common.add_argument("--node-budget", type=_nonneg, default=None,
                        help="lift the default size limits and stop after this many search nodes (0: unlimited)")
    common.add_argument("--timings", action="store_true", help="append elapsed time (breaks byte-identical output)")

    parser = _Parser(prog="honeycomb", description="Honeycomb arrays, Costas arrays and hexagonal permutations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="check the properties of a dot file")
    p.add_argument("file")

    costas = sub.add_parser("costas", help="Costas arrays")
    csub = costas.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = csub.add_parser("enum", parents=[common], help="list all Costas arrays of order N")
    p.add_argument("n", type=_positive)
    p.add_argument("--base", type=int, choices=(0, 1), default=0, help="index base of printed values")
    p = csub.add_parser("check", parents=[common], help="check database lines read from a file or '-'")
    p.add_argument("source")
    p.add_argument("--base", type=int, choices=(0, 1), default=1, help="index base of input values")

    search = sub.add_parser("search", help="honeycomb array searches")
    ssub = search.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = ssub.add_parser("honeycomb", parents=[common], help="honeycomb arrays with N dots")
    p.add_argument("n", type=_positive)
    p.add_argument("--up-to-symmetry", action="store_true")
    p.add_argument("--method", choices=("costas", "direct"), default="costas")
    p.add_argument("--no-theorem1-shortcut", action="store_true", help="search even sizes instead of skipping them")
    p = ssub.add_parser("symmetric", parents=[common], help="6-fold symmetric honeycomb arrays of radius R")
    p.add_argument("r", type=_nonneg)

    count = sub.add_parser("count", help="counting")
    cosub = count.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = cosub.add_parser("hexperm", parents=[common], help="number of hexagonal permutations with N dots")
    p.add_argument("n", type=_positive)
    p.add_argument("--validate-even", "--no-theorem1-shortcut", action="store_true", dest="validate",
                   help="search every diagonal window, so even N is actually searched")

    p = sub.add_parser("brooks", parents=[common], help="maximum non-attacking brooks on a triangular board")
    p.add_argument("w", type=_positive)

    p = sub.add_parser("render", parents=[common], help="draw a dot file")
    p.add_argument("file")
    p.add_argument("--svg", metavar="OUT", help="write SVG here instead of ASCII to stdout")
    p.add_argument("--layout", choices=("hex", "square"), default="hex")

    p = sub.add_parser("canon", parents=[common], help="canonical form of a dot file")
    p.add_argument("file")

    p = sub.add_parser("growth", parents=[common], help="growth of the hexagonal permutation counts")
    p.add_argument("max_dots", type=_positive)
    return parser


# -- helpers ------------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None


def _guard(args) -> dict:
    if args.node_budget is None:
        return {"guard": True, "node_budget": None}
    return {"guard": False, "node_budget": args.node_budget or None}


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _dots(cfg: DotConfiguration) -> list[list[int]]:
    return [[c.col, c.row] for c in cfg.dots]


# -- commands -----------------------------------------------------------------


def cmd_verify(args, out):
    doc = parse_document(_read_text(args.file))
    cfg = doc.config
    if cfg.n == 0:
        raise CliError(f"{args.file}: no dots")
    index = hexagonal_permutation_index(cfg)
    dd = is_distinct_difference(cfg)
    found = honeycomb_radius(cfg)
    order = automorphism_group_order(cfg)
    if args.fmt == "json-lines":
        out.append(_json({
            "dots": cfg.n, "hexagonal_permutation": index is not None, "staircase_index": index,
            "distinct_difference": dd, "honeycomb_radius": found[0] if found else None,
            "center": list(found[1]) if found else None, "automorphism_group_order": order,
        }))
    else:
        out.append(f"dots: {cfg.n}")
        out.append(f"hexagonal permutation: {_yn(index is not None)}")
        out.append(f"staircase index: {index if index is not None else '-'}")
        out.append(f"distinct differences: {_yn(dd)}")
        if found:
            out.append(f"honeycomb radius: {found[0]} (centre {found[1].col} {found[1].row})")
        else:
            out.append("honeycomb radius: -")
        out.append(f"automorphism group order: {order}")
    return EXIT_OK if found else EXIT_NOT_HONEYCOMB


def cmd_costas_enum(args, out):
    total = 0
    for p in enumerate_costas(args.n, workers=args.workers, **_guard(args)):
        total += 1
        if args.fmt == "json-lines":
            out.append(_json({"costas": [v + args.base for v in p]}))
        else:
            out.append(format_costas_line(p, base=args.base))
    out.append(_json({"order": args.n, "count": total}) if args.fmt == "json-lines"
               else f"count = {total}")
    return EXIT_OK


def cmd_costas_check(args, out):
    lines = _read_text(args.source).splitlines()
    n_costas = n_honey = 0
    for lineno, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            rec = parse_costas_line(line, base=args.base)
        except ValueError as exc:
            raise CliError(f"line {lineno}: {exc}") from None
        costas = is_costas(rec.permutation)
        honey = costas_to_honeycomb(rec.permutation) if costas else None
        n_costas += costas
        n_honey += honey is not None
        if args.fmt == "json-lines":
            out.append(_json({"line": lineno, "n": rec.n, "costas": costas,
                              "honeycomb_radius": honey.radius if honey else None}))
        else:
            status = f"honeycomb radius {honey.radius}" if honey else "no honeycomb"
            out.append(f"line {lineno}: n={rec.n} costas={_yn(costas)} {status if costas else ''}".rstrip())
    summary = {"costas": n_costas, "honeycomb": n_honey}
    out.append(_json(summary) if args.fmt == "json-lines" else f"costas = {n_costas}, honeycomb = {n_honey}")
    return EXIT_OK


def _emit_arrays(arrays, args, out, label):
    for k, a in enumerate(arrays, start=1):
        if args.fmt == "json-lines":
            out.append(_json({"radius": a.radius, "center": list(a.center), "dots": _dots(a.base),
                              "automorphism_group_order": automorphism_group_order(a.base)}))
        else:
            out.append(f"# array {k}: radius {a.radius}, automorphism group order "
                       f"{automorphism_group_order(a.base)}")
            out.append(write_dots(a.base).rstrip("\n"))
    if args.fmt == "json-lines":
        out.append(_json({"search": label, "count": len(arrays)}))
    else:
        out.append(f"found {len(arrays)} honeycomb array(s)")


def cmd_search_honeycomb(args, out):
    arrays = search_honeycomb(
        args.n, up_to_symmetry=args.up_to_symmetry, workers=args.workers, method=args.method,
        theorem1_shortcut=not args.no_theorem1_shortcut, **_guard(args),
    )
    _emit_arrays(arrays, args, out, f"honeycomb {args.n}")
    return EXIT_OK


def cmd_search_symmetric(args, out):
    arrays = search_symmetric_honeycomb(args.r, workers=args.workers)
    _emit_arrays(arrays, args, out, f"symmetric {args.r}")
    return EXIT_OK


def cmd_count_hexperm(args, out):
    res = count_hex_permutations(args.n, workers=args.workers, theorem1_shortcut=not args.validate, **_guard(args))
    if args.fmt == "json-lines":
        out.append(_json({"num_dots": res.num_dots, "h": res.count, "nodes": res.nodes}))
    else:
        out.append(f"num_dots = {res.num_dots}")
        out.append(f"h = {res.count}")
        out.append(f"nodes = {res.nodes}")
    if args.timings:
        out.append(f"elapsed = {res.elapsed:.3f} s")
    return EXIT_OK


def cmd_brooks(args, out):
    res = max_brooks(args.w)
    formula = (2 * args.w + 1) // 3
    verdict = "MATCH" if formula == res.k else "MISMATCH"
    if args.fmt == "json-lines":
        out.append(_json({"w": res.w, "k": res.k, "formula": formula, "match": formula == res.k,
                          "placement": [[c.col, c.row] for c in res.placement], "nodes": res.nodes}))
    else:
        out.append(f"w = {res.w}")
        out.append(f"k = {res.k}")
        out.append(f"formula = {formula}, {verdict}")
        out.append("placement: " + " ".join(f"({c.col},{c.row})" for c in res.placement))
        out.append(f"nodes = {res.nodes}")
    return EXIT_OK


def cmd_render(args, out):
    doc = parse_document(_read_text(args.file))
    region = doc.region
    if region is None and doc.config.n and hexagonal_permutation_index(doc.config) is not None:
        region = bounding_region(doc.config)
    try:
        if args.svg:
            svg = render_svg(doc.config, region)
        else:
            out.append(render_ascii(doc.config, region, layout=args.layout).rstrip("\n"))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.svg:
        try:
            Path(args.svg).write_text(svg, encoding="utf-8")
        except OSError as exc:
            raise CliError(f"{args.svg}: {exc.strerror}") from None
        out.append(f"wrote {args.svg}")
    return EXIT_OK


def cmd_canon(args, out):
    cfg = canonicalize(parse_document(_read_text(args.file)).config)
    if args.fmt == "json-lines":
        out.append(_json({"dots": _dots(cfg)}))
    else:
        out.append(write_dots(cfg).rstrip("\n"))
    return EXIT_OK


def cmd_growth(args, out):
    rows = growth_report(args.max_dots, workers=args.workers, **_guard(args))
    if args.fmt == "json-lines":
        out.extend(_json({"num_dots": r.num_dots, "n": r.n, "h": r.h, "ratio": round(r.ratio, 6)}) for r in rows)
    else:
        out.append(f"{'dots':>5} {'n':>3} {'h':>12} {'log h/(n log n)':>16}")
        out.extend(f"{r.num_dots:>5} {r.n:>3} {r.h:>12} {r.ratio:>16.6f}" for r in rows)
    return EXIT_OK


COMMANDS = {
    ("verify", None): cmd_verify,
    ("costas", "enum"): cmd_costas_enum,
    ("costas", "check"): cmd_costas_check,
    ("search", "honeycomb"): cmd_search_honeycomb,
    ("search", "symmetric"): cmd_search_symmetric,
    ("count", "hexperm"): cmd_count_hexperm,
    ("brooks", None): cmd_brooks,
    ("render", None): cmd_render,
    ("canon", None): cmd_canon,
    ("growth", None): cmd_growth,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    out: list[str] = []
    try:
        args = build_parser(_default_workers()).parse_args(argv)
        handler = COMMANDS[(args.command, getattr(args, "action", None))]
        t0 = time.perf_counter()
        code = handler(args, out)
        if args.timings and handler is not cmd_count_hexperm:
            out.append(f"elapsed = {time.perf_counter() - t0:.3f} s")
    except (CliError, BudgetExceeded, ValueError) as exc:
        print(f"honeycomb: error: {exc}", file=stderr)
        return EXIT_ERROR
    except SystemExit as exc:  # --help / --version
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    if out:
        stdout.write("\n".join(out) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
