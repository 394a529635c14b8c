"""Command-line front end.

Every subcommand prints ``key = value`` lines and appends one flat JSON
object per run to a log file (``runs.log`` unless ``--log`` says otherwise).

Exit codes: 0 the property holds or the run succeeded, 1 refuted (a
certificate is printed or written) or the requested object does not exist,
2 search budget exhausted, 64 usage error, 74 input/output error.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import sys
import time
from contextlib import redirect_stdout
from pathlib import Path

from . import __version__
from .bounds import best_interval, default_table, load_table, lower_bounds, ramsey_lower, upper_bounds
from .color import (
    biclique_free_partition,
    cycle_free_partition,
    find_mono_copy,
    greedy_backdegree_coloring,
    is_ramsey,
    path_free_partition,
    read_coloring,
    write_coloring,
    format_coloring,
)
from .constructions import build_gnkm, build_gstar, format_structure, kpq_witness
from .contract import contract_dense
from .decompose import INFINITY, a_d_exact, acyclic_orient, nash_williams, split_into_star_forests
from .errors import BudgetExhaustedError, InvalidParameterError, RamseyDensityError, TableParseError
from .graph import build_named, format_edgelist, format_multigraph, p3_witness, read_edgelist
from .parameters import m1_density, m1k_density, m2_density, m_density
from .patterns import PatternSpec, parse_pattern

EXIT_OK, EXIT_REFUTED, EXIT_BUDGET, EXIT_USAGE, EXIT_IO = 0, 1, 2, 64, 74


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(key, value):
    if isinstance(value, (list, tuple)):
        value = " ".join(map(str, value))
    print(f"{key} = {value}")


def _table(args):
    return load_table(args.table) if args.table else default_table()


def _write_or_print(text, path, key):
    if path:
        Path(path).write_text(text)
        _emit(key, path)
    else:
        sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------------


def cmd_density(args):
    G = read_edgelist(args.graph)
    if args.param == "m":
        res = m_density(G)
    elif args.param == "m1":
        res = m1_density(G)
    elif args.param == "m1k":
        if args.k is None:
            raise UsageError("m1k needs --k")
        res = m1k_density(G, args.k)
    else:
        res = m2_density(G)
    _emit("param", args.param)
    _emit("value", res.value)
    _emit("witness", res.witness)
    if res.convention:
        _emit("note", res.convention)
    return EXIT_OK


def cmd_decompose(args):
    G = read_edgelist(args.graph)
    if args.mode in ("forests", "stars"):
        part = nash_williams(G)
        part.check()
        classes = part.edge_classes()
        if args.mode == "stars":
            classes = [half for cls in classes for half in split_into_star_forests(cls, G.n)]
        _emit("classes", len(classes))
        for i, cls in enumerate(classes):
            _emit(f"class {i}", [f"{u}-{v}" for u, v in cls])
        return EXIT_OK
    if args.mode == "orient":
        if args.k is None:
            raise UsageError("orient needs --k")
        o = acyclic_orient(G, args.k)
        o.check()
        _emit("max_indegree", o.max_indegree)
        _emit("order", o.order)
        _emit("arcs", [f"{t}->{h}" for t, h in o.arcs])
        return EXIT_OK
    d = INFINITY if args.d in (None, "inf") else int(args.d)
    _emit("d", "inf" if d == INFINITY else d)
    _emit("value", a_d_exact(G, d, max_vertices=args.max_vertices, max_edges=args.max_edges))
    return EXIT_OK


def cmd_contract(args):
    G = read_edgelist(args.graph)
    cert = contract_dense(G, args.r)
    _emit("r", args.r)
    _emit("members", len(cert.family))
    for H in cert.family:
        _emit("member", H)
    _emit("vmap", cert.vmap)
    _write_or_print(format_multigraph(cert.contracted), args.out, "contracted")
    return EXIT_OK


def cmd_verify(args):
    F = parse_pattern(args.pattern)
    if args.mode == "ramsey":
        if args.r is None:
            raise UsageError("verify ramsey needs --r")
        G = read_edgelist(args.graph)
        verdict = is_ramsey(G, F, args.r, budget=args.budget, threads=args.threads)
        _emit("pattern", str(F))
        _emit("r", args.r)
        _emit("nodes", verdict.nodes)
        _emit("is_ramsey", str(verdict.is_ramsey).lower())
        if verdict.is_ramsey:
            return EXIT_OK
        _write_or_print(format_coloring(verdict.coloring), args.out, "certificate")
        return EXIT_REFUTED
    if args.coloring is None:
        raise UsageError("verify coloring needs a coloring file")
    G = read_edgelist(args.graph)
    col = read_coloring(args.coloring)
    if col.host != G:
        raise RamseyDensityError("coloring does not color the edges of the graph")
    hit = find_mono_copy(col, F)
    _emit("pattern", str(F))
    if hit is None:
        _emit("valid", "true")
        return EXIT_OK
    _emit("valid", "false")
    _emit("color", hit[0])
    _emit("copy", hit[1])
    return EXIT_REFUTED


def cmd_color(args):
    G = read_edgelist(args.graph)
    table = _table(args)
    if args.engine == "greedy":
        if args.delta is None:
            raise UsageError("greedy needs --delta")
        col = greedy_backdegree_coloring(G, args.r, args.delta)
        target = None
    elif args.engine == "cycle-free":
        if args.l is None:
            raise UsageError("cycle-free needs --l")
        target = PatternSpec.cycle(args.l)
        R = args.R if args.R is not None else ramsey_lower(target, args.r, table)[0]
        _emit("R", R)
        col = cycle_free_partition(G, args.l, args.r, R, budget=args.budget)
    elif args.engine == "biclique-free":
        if args.a is None or args.b is None:
            raise UsageError("biclique-free needs --a and --b")
        target = PatternSpec.biclique(args.a, args.b)
        R = args.R if args.R is not None else ramsey_lower(target, args.r, table)[0]
        _emit("R", R)
        col = biclique_free_partition(G, args.a, args.b, args.r, R, budget=args.budget)
    else:
        if args.l is None:
            raise UsageError("path-free needs --l")
        target = PatternSpec.path(args.l)
        R = args.R if args.R is not None else ramsey_lower(PatternSpec.path(args.l // 3), args.r, table)[0]
        _emit("R", R)
        col = path_free_partition(G, args.l, args.r, R, budget=args.budget)
    _emit("engine", args.engine)
    if target is not None:
        _emit("certified", f"no monochromatic {target}")
    if args.out:
        write_coloring(col, args.out)
        _emit("coloring", args.out)
    else:
        sys.stdout.write(format_coloring(col))
    return EXIT_OK


def _read_overrides(path):
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        key = key.strip()
        if not sep or key not in ("n", "s", "m"):
            raise ValueError(f"{path}:{lineno}: expected 'n|s|m = values'")
        out[key] = [int(x) for x in val.replace(",", " ").split()]
    return out


def cmd_construct(args):
    structure = None
    if args.family == "gnkm":
        fg = build_gnkm(args.n, args.k, args.m)
        G, structure = fg.graph, format_structure(fg)
    elif args.family == "gstar":
        overrides = _read_overrides(args.override) if args.override else None
        gs = build_gstar(args.l, args.k, args.r, overrides, relax=args.relax, table=_table(args))
        G, structure = gs.graph, format_structure(gs)
        _emit("canonical", str(gs.canonical).lower())
    elif args.family == "kpq":
        G = kpq_witness(args.a, args.b, args.r)
    elif args.family == "witness-p3":
        G = p3_witness()
    else:
        if not args.name:
            raise UsageError("named needs a family and parameters")
        G = build_named(args.name[0], *(int(x) for x in args.name[1:]))
    _emit("vertices", G.n)
    _emit("edges", G.num_edges)
    _write_or_print(format_edgelist(G), args.out, "graph")
    if structure is not None and args.structure:
        Path(args.structure).write_text(structure)
        _emit("structure", args.structure)
    return EXIT_OK


def cmd_bounds(args):
    F = parse_pattern(args.pattern)
    table = _table(args)
    iv = best_interval(F, args.r, table)
    _emit("pattern", str(F))
    _emit("r", args.r)
    print(f"interval = {iv}")
    _emit("lower", iv.lower)
    _emit("upper", "inf" if iv.upper is None else iv.upper)
    _emit("upper_strict", str(iv.upper_strict).lower())
    _emit("lower_sources", ",".join(iv.lower_sources))
    _emit("upper_sources", ",".join(iv.upper_sources) or "none")
    for t in lower_bounds(F, args.r, table):
        _emit("lower_rule", f"{t.rule} {t.value}" + (f" [{t.detail}]" if t.detail else ""))
    for t in upper_bounds(F, args.r, table):
        rel = "<" if t.strict else "<="
        _emit("upper_rule", f"{t.rule} {rel} {t.value}" + (f" [{t.detail}]" if t.detail else ""))
    for note in iv.notes:
        _emit("note", note)
    return EXIT_OK


# -- parser and dispatch ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--deterministic", action="store_true")
    common.add_argument("--budget", type=int, default=10**9)
    common.add_argument("--table", default=None)
    common.add_argument("--log", default="runs.log", help="manifest log file ('-' disables)")

    p = _Parser(prog="sparseramsey", description="Exact Ramsey-density toolkit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("density", parents=[common])
    s.add_argument("--param", choices=["m", "m1", "m1k", "m2"], required=True)
    s.add_argument("--k", type=int)
    s.add_argument("graph")
    s.set_defaults(func=cmd_density)

    s = sub.add_parser("decompose", parents=[common])
    s.add_argument("mode", choices=["forests", "stars", "orient", "ad"])
    s.add_argument("--k", type=int)
    s.add_argument("--d", default=None)
    s.add_argument("--max-vertices", type=int, default=10)
    s.add_argument("--max-edges", type=int, default=15)
    s.add_argument("graph")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("contract", parents=[common])
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("graph")
    s.set_defaults(func=cmd_contract)

    s = sub.add_parser("verify", parents=[common])
    s.add_argument("mode", choices=["ramsey", "coloring"])
    s.add_argument("--pattern", required=True)
    s.add_argument("--r", type=int)
    s.add_argument("--out", help="where to write a refuting coloring")
    s.add_argument("graph")
    s.add_argument("coloring", nargs="?")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("color", parents=[common])
    s.add_argument("engine", choices=["greedy", "cycle-free", "biclique-free", "path-free"])
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--delta", type=int)
    s.add_argument("--l", type=int)
    s.add_argument("--a", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--R", type=int, help="Ramsey value to use (default: table lower bound)")
    s.add_argument("--out")
    s.add_argument("graph")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("construct", parents=[common])
    s.add_argument("family", choices=["gnkm", "gstar", "kpq", "witness-p3", "named"])
    s.add_argument("name", nargs="*", help="for 'named': family then parameters")
    for flag in ("--n", "--k", "--m", "--l", "--r", "--a", "--b"):
        s.add_argument(flag, type=int)
    s.add_argument("--override")
    s.add_argument("--relax", action="store_true")
    s.add_argument("--out")
    s.add_argument("--structure")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("bounds", parents=[common])
    s.add_argument("--pattern", required=True)
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=cmd_bounds)
    return p


def _digest(path):
    try:
        return hashlib.sha256(Path(path).read_bytes()).hexdigest()
    except OSError:
        return "unreadable"


def _manifest(args, argv, code, out, wall):
    rec = {"tool": "sparseramsey", "version": __version__, "subcommand": getattr(args, "command", None)}
    for key, val in sorted(vars(args).items()):
        if key in ("func", "command", "log"):
            continue
        rec[f"flag_{key}"] = " ".join(map(str, val)) if isinstance(val, list) else val
    for key in ("graph", "coloring", "override", "table"):
        path = getattr(args, key, None)
        if path:
            rec[f"digest_{key}"] = _digest(path)
    rec["argv"] = " ".join(argv)
    rec["exit_code"] = code
    rec["result_sha256"] = hashlib.sha256(out.encode()).hexdigest()
    rec["wall_seconds"] = round(wall, 6)
    return rec


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    buf = io.StringIO()
    start = time.perf_counter()
    try:
        with redirect_stdout(buf):
            code = args.func(args)
    except (UsageError, InvalidParameterError) as exc:
        code = EXIT_USAGE
        print(f"usage error: {exc}", file=sys.stderr)
    except BudgetExhaustedError as exc:
        code = EXIT_BUDGET
        buf.write(f"error = {exc}\nnodes = {exc.nodes}\n")
    except (OSError, TableParseError) as exc:
        code = EXIT_IO
        print(f"io error: {exc}", file=sys.stderr)
    except RamseyDensityError as exc:
        code = EXIT_REFUTED
        buf.write(f"error = {type(exc).__name__}: {exc}\n")
        witness = getattr(exc, "witness", None)
        if witness:
            buf.write(f"witness = {' '.join(map(str, witness))}\n")
    except ValueError as exc:
        code = EXIT_IO if getattr(args, "graph", None) else EXIT_USAGE
        print(f"input error: {exc}", file=sys.stderr)
    wall = time.perf_counter() - start
    out = buf.getvalue()
    sys.stdout.write(out)
    if args.log != "-":
        try:
            with open(args.log, "a") as fh:
                fh.write(json.dumps(_manifest(args, argv, code, out, wall), sort_keys=True) + "\n")
        except OSError as exc:
            print(f"io error: cannot append manifest: {exc}", file=sys.stderr)
            return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
