"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .constructors import (
    build_complete_bipartite,
    build_complete_even,
    build_folded_cube,
    build_hypercube,
    build_quotient,
)
from .dashing import MAX_ENUMERATED_DASHINGS, apply_dashing, solve_dashings, validate_totally_odd
from .gf2code import CodeError, classify, format_code, parse_code_file
from .graph import AGFError, ColoredGraph, GraphError, bipartition, format_agf, is_connected, parse_agf, validate_regular_coloring
from .heights import assign_heights, check_heights, current_heights, move, valise, with_heights
from .representations import export_dot, to_latin, to_matrix
from .structure import bicolor_report, exchange_group, extract_code, is_perfect_1factorization, is_quadrilateral
from .susy import emit_rules, render


class UsageError(Exception):
    pass


class Failed(Exception):
    """A validation failure; the message is the report already produced."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> ColoredGraph:
    try:
        return parse_agf(_read(path))
    except AGFError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_build(args) -> str:
    kind, value = args.family, args.value
    if kind == "qn":
        g = build_hypercube(value)
    elif kind == "folded":
        g = build_folded_cube(value)
    elif kind == "k2n":
        g = build_complete_even(value)
    elif kind == "knn":
        g = build_complete_bipartite(value)
    else:
        return cmd_quotient(args)
    return format_agf(g)


def cmd_quotient(args) -> str:
    if not args.code:
        raise UsageError("quotient needs --code FILE")
    N = args.value
    try:
        code = parse_code_file(_read(args.code), length=N)
    except CodeError as exc:
        raise UsageError(f"{args.code}: {exc}") from None
    return format_agf(build_quotient(N, code))


def verify_report(g: ColoredGraph) -> tuple[str, list[str], str]:
    """``(label, report lines, violations)`` for the composite check."""
    lines, bad = [], []
    violations = validate_regular_coloring(g)
    regular = not violations
    bad += [str(v) for v in violations]
    lines.append(f"regular: {_yes(regular)}")
    bip = bipartition(g) is not None
    lines.append(f"bipartite: {_yes(bip)}")
    quad = regular and is_quadrilateral(g)
    lines.append(f"quadrilateral: {'n/a' if not regular else _yes(quad)}")
    dashed = False
    if quad:
        broken = validate_totally_odd(g)
        if g.signed() or g.colors < 2:
            dashed = not broken
            lines.append(f"totally odd dashing: {_yes(dashed)}")
            if g.signed():
                bad += [str(sq) for sq in broken]
        else:
            lines.append("totally odd dashing: unsigned")
    heights_ok = True
    if g.height is not None:
        problems = check_heights(g, g.height)
        heights_ok = not problems
        lines.append(f"heights: {_yes(heights_ok)}")
        bad += problems
    if regular and bip and quad:
        label = "ADINKRA" if dashed and heights_ok else "PRE-ADINKRA"
    else:
        label = "NONE"
    lines.append(f"class: {label}")
    return label, lines, "\n".join(bad)


def cmd_verify(args) -> str:
    g = _load(args.file)
    label, lines, bad = verify_report(g)
    out = "\n".join(lines) + "\n"
    if bad:
        out += "violations:\n" + bad + "\n"
    if bad or label == "NONE":
        raise Failed(out)
    return out


def cmd_analyze(args) -> str:
    g = _load(args.file)
    if validate_regular_coloring(g):
        raise Failed("coloring is not regular; run verify for details\n")
    report = bicolor_report(g)
    quad = is_quadrilateral(g)
    out = [report.format(), f"quadrilateral: {_yes(quad)}",
           f"perfect 1-factorization: {_yes(is_perfect_1factorization(g))}",
           "exchange group:", *("  " + ln for ln in exchange_group(g, cap=args.cap).format().splitlines())]
    if quad and is_connected(g):
        code = extract_code(g, seed=args.seed)
        cls = classify(code)
        out.append(f"code (dimension {code.dimension}): " + (" ".join(str(b) for b in code.basis) or "zero"))
        out.append(f"even: {_yes(cls.even)}, doubly even: {_yes(cls.doubly_even)}")
    if args.figure:
        from .plotting import plot_bicolor

        plot_bicolor(report, args.figure)
    return "\n".join(out) + "\n"


def cmd_extract_code(args) -> str:
    g = _load(args.file)
    return format_code(extract_code(g, base=args.base, seed=args.seed))


def cmd_dash(args) -> str:
    g = _load(args.file)
    system = solve_dashings(g)
    if not system.consistent:
        raise Failed("no totally odd dashing exists\n")
    if args.mode == "count":
        return f"{system.solution_count}\n"
    if args.mode == "one":
        return format_agf(apply_dashing(g, system.assignment(system.particular)))
    if system.solution_count > MAX_ENUMERATED_DASHINGS:
        raise Failed(
            f"refusing to list {system.solution_count} dashings (limit {MAX_ENUMERATED_DASHINGS})\n"
        )
    return "".join(system.sign_string(mask) + "\n" for mask in system.solutions())


def cmd_heights(args) -> str:
    g = _load(args.file)
    if args.valise:
        h = valise(g)
    elif args.set:
        pairs = {}
        for item in args.set.split(","):
            try:
                v, value = item.split("=")
                pairs[int(v)] = int(value)
            except ValueError:
                raise UsageError(f"bad --set item {item!r}; expected v=h") from None
        h = assign_heights(g, pairs)
    else:
        v, direction = (args.lower, "down") if args.lower is not None else (args.raise_, "up")
        h = move(g, current_heights(g), v, direction)
    out = with_heights(g, h)
    if args.figure:
        from .plotting import plot_adinkra

        plot_adinkra(out, args.figure)
    return format_agf(out)


def cmd_export(args) -> str:
    g = _load(args.file)
    names = args.color_names.split(",") if args.color_names else None
    fmt = args.format
    if args.figure:
        from .plotting import plot_adinkra, plot_matrix

        if fmt == "matrix":
            plot_matrix(to_matrix(g), args.figure)
        else:
            plot_adinkra(g, args.figure)
    if fmt == "agf":
        return format_agf(g)
    if fmt == "dot":
        return export_dot(g)
    if fmt == "latin":
        lst = to_latin(g, names)
        return lst.to_csv() if args.csv else lst.format()
    m = to_matrix(g)
    return m.to_csv() if args.csv else m.format(symbolic=args.symbolic)


def cmd_emit_susy(args) -> str:
    g = _load(args.file)
    if g.height is None:
        g = with_heights(g, valise(g))
    rules = emit_rules(g)
    if args.color == "all":
        colors = None
    else:
        try:
            colors = [int(args.color)]
        except ValueError:
            raise UsageError(f"--color must be an integer or 'all', got {args.color!r}") from None
    return render(rules, args.format, colors)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="adinkra", description="Build and analyze Adinkras.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-o", "--output", help="write to this file instead of standard output")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized self-checks")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a graph family as AGF")
    b.add_argument("family", choices=["qn", "folded", "k2n", "knn", "quotient"])
    b.add_argument("value", type=int)
    b.add_argument("--code", help="code file (for quotient)")
    b.set_defaults(func=cmd_build)

    q = sub.add_parser("quotient", help="quotient of Q_N by a code")
    q.add_argument("value", type=int, metavar="N")
    q.add_argument("--code", required=True)
    q.set_defaults(func=cmd_quotient)

    def with_file(name, func, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("file", help="AGF file, or - for standard input")
        s.set_defaults(func=func)
        return s

    with_file("verify", cmd_verify, "check the Adinkra conditions")

    a = with_file("analyze", cmd_analyze, "bicolor cycles, exchange group, code")
    a.add_argument("--cap", type=int, default=10**6, help="exchange group element cap")
    a.add_argument("--figure", help="write an m_ij heat map here")

    e = with_file("extract-code", cmd_extract_code, "the code C with G = Q_N/C")
    e.add_argument("--base", type=int, default=1)

    d = with_file("dash", cmd_dash, "totally odd dashings")
    mode = d.add_mutually_exclusive_group()
    mode.add_argument("--one", dest="mode", action="store_const", const="one")
    mode.add_argument("--count", dest="mode", action="store_const", const="count")
    mode.add_argument("--all", dest="mode", action="store_const", const="all")
    d.set_defaults(mode="count")

    h = with_file("heights", cmd_heights, "height assignments and vertex moves")
    hm = h.add_mutually_exclusive_group(required=True)
    hm.add_argument("--valise", action="store_true")
    hm.add_argument("--set", metavar="v=h,...")
    hm.add_argument("--lower", type=int, metavar="V")
    hm.add_argument("--raise", dest="raise_", type=int, metavar="V")
    h.add_argument("--figure", help="draw the resulting Hasse diagram here")

    x = with_file("export", cmd_export, "adjacency list, matrix, DOT or AGF")
    x.add_argument("--format", choices=["latin", "matrix", "dot", "agf"], required=True)
    x.add_argument("--csv", action="store_true", help="comma separated (latin, matrix)")
    x.add_argument("--color-names", help="comma separated row names for latin")
    x.add_argument("--symbolic", action="store_true", help="matrix entries as x1..xN")
    x.add_argument("--figure", help="also render a PNG/PDF figure here")

    s = with_file("emit-susy", cmd_emit_susy, "supercharge transformation rules")
    s.add_argument("--color", default="all")
    s.add_argument("--format", choices=["text", "latex"], default="text")
    return p


def _emit(text: str, output: str | None, stream) -> None:
    if output:
        Path(output).write_text(text)
    else:
        stream.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except UsageError as exc:
        print(f"adinkra: {exc}", file=sys.stderr)
        return 2
    except Failed as exc:
        _emit(str(exc), args.output, sys.stdout)
        return 1
    except (GraphError, CodeError, ValueError) as exc:
        print(f"adinkra: {exc}", file=sys.stderr)
        return 1
    _emit(text, args.output, sys.stdout)
    return 0


def main() -> None:
    sys.exit(run())
