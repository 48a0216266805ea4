"""Command-line entry point: ``mvd <subcommand> ...``.

Exit codes: 0 success, 1 verification failed or counterexample found,
2 parse/format/input error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import shutil
import sys
from pathlib import Path

from .blocks import BlockDecomposition, decompose
from .catalog import (
    BUNDLED_DIR,
    MINIMAL_TAG,
    CatalogEntry,
    catalog_check,
    find_isomorphic,
    load_entry,
    load_store,
    parse_entry_text,
    save_entry,
)
from .coloring import format_coloring, parse_coloring
from .compose import METHODS, mvd_bounds, solve
from .errors import CapacityError, InputError, IntegrityError, MvdError
from .families import FAMILIES, block_bound, emax, f_v, generate, mvd_formula, parse_spec, theta
from .graph import Graph, components, format_mvdg, is_connected, is_minimally_2_connected, load_graph
from .scan import EXTREMAL_MAX_N, PROPERTIES, scan_extremal, scan_property
from .solver import DEFAULT_CAP, is_mvd_coloring, mvd_exact

log = logging.getLogger("mvdcolor")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def _catalog_dir(arg: str | None) -> Path:
    if arg:
        return Path(arg)
    local = Path("catalog")
    return local if local.is_dir() else BUNDLED_DIR


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        print(text)


def _load_connected(path: str) -> Graph:
    g = load_graph(path)
    if not is_connected(g):
        parts = "; ".join("{" + ",".join(sorted(c, key=g.index)) + "}" for c in components(g))
        raise InputError(f"{path}: graph is disconnected; components: {parts}")
    return g


def _block_layout(g: Graph, d: BlockDecomposition) -> list[str]:
    cuts = ", ".join(f"{{'{c}'}}" for c in d.cut_vertices)
    lines = ["### CutVertices and Blocks  ###", f"cutVerticesSet:[{cuts}]", "Block generated from Graph:"]
    for b in d.blocks:
        lines.append(f"Block num {b.index + 1}")
        lines.append("[" + ", ".join(f"{{'{x}'}}" for x in b.vertices) + "]")
        for x in b.vertices:
            lines.append("\t".join("1" if g.has_edge(x, y) else "0" for y in b.vertices) + "\t")
    return lines


# -- subcommands -------------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = parse_spec(args.family, args.params)
    _emit(args, f"# {spec}\n" + format_mvdg(generate(spec)))
    return EXIT_OK


def cmd_blocks(args) -> int:
    g = _load_connected(args.graph)
    d = decompose(g)
    if args.format == "json-lines":
        rows = [json.dumps({"type": "cut_vertices", "cut_vertices": list(d.cut_vertices)})]
        rows += [
            json.dumps({"type": "block", "block": b.index + 1, "vertices": list(b.vertices)}) for b in d.blocks
        ]
        _emit(args, "\n".join(rows))
    else:
        _emit(args, "\n".join(_block_layout(g, d)))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    coloring = parse_coloring(args.coloring)
    verdict = is_mvd_coloring(g, coloring)
    if args.format == "json-lines":
        print(json.dumps({"type": "verify", "ok": verdict.ok, "pair": verdict.pair, "colors": coloring.num_colors}))
    elif verdict:
        print(f"OK: MVD-coloring with {coloring.num_colors} colors")
    else:
        x, y = verdict.pair
        print(f"FAIL: no monochromatic vertex cut separates {x} and {y}")
    return EXIT_OK if verdict else EXIT_FAIL


def cmd_solve(args) -> int:
    g = _load_connected(args.graph)
    store = load_store(_catalog_dir(args.catalog))
    try:
        report = solve(g, args.method, store, args.cap)
    except CapacityError as exc:
        if not args.partial:
            raise
        bounds = mvd_bounds(g, store, args.cap)
        print(f"{exc}", file=sys.stderr)
        if args.format == "json-lines":
            _emit(args, json.dumps({"type": "partial", "lower": bounds.lower, "upper": bounds.upper}))
        else:
            table = [f"block {i + 1}: {'?' if v is None else v} ({src})" for i, v, src in bounds.per_block]
            _emit(args, "\n".join(table + [f"{bounds.lower} <= mvd <= {bounds.upper}"]))
        return EXIT_CAPACITY

    d = decompose(g)
    if args.format == "json-lines":
        rows = []
        for b in d.blocks:
            row = {"type": "block", "block": b.index + 1, "order": b.order, "vertices": list(b.vertices)}
            if report.per_block is not None:
                _, value, source = report.per_block[b.index]
                row.update(mvd=value, source=source)
            rows.append(json.dumps(row))
        rows.append(
            json.dumps(
                {
                    "type": "result",
                    "mvd": report.value,
                    "method": report.method,
                    "cut_vertices": list(d.cut_vertices),
                    "coloring": {x: report.witness[x] for x in g.labels},
                    "coloring_text": format_coloring(report.witness, g.labels),
                }
            )
        )
        _emit(args, "\n".join(rows))
        return EXIT_OK

    lines = _block_layout(g, d)
    if report.per_block is not None:
        lines.append("### Block Values ###")
        lines.append(f"{'block':>5} {'order':>5} {'mvd':>4}  source")
        for i, value, source in report.per_block:
            lines.append(f"{i + 1:>5} {d.blocks[i].order:>5} {value:>4}  {source}")
    lines.append("### Coloring Vertices Results ###")
    lines.append(" ".join(f"{{'{x}':{report.witness[x]}}}" for x in g.labels))
    lines.append(f"mvd = {report.value} (method: {report.method})")
    lines.append("coloring: " + format_coloring(report.witness, g.labels))
    _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_catalog(args) -> int:
    directory = _catalog_dir(args.catalog)
    if args.action == "list":
        store = load_store(directory, verify=False)
        print(f"catalog {directory}: {len(store)} entries")
        for e in store:
            tags = f"  [{', '.join(e.tags)}]" if e.tags else ""
            print(f"{e.name:<32} n={e.graph.n:<3} m={e.graph.m:<3} mvd={e.mvd_value}{tags}")
        return EXIT_OK
    if args.action == "check":
        store = load_store(directory, verify=False)
        report = catalog_check(store, args.cap)
        print("\n".join(report.lines()))
        return EXIT_OK if report.ok else EXIT_FAIL
    if args.action == "add":
        if not args.file:
            raise InputError("catalog add needs a graph file")
        return _catalog_add(args)
    if args.action == "build":
        target = Path(args.file) if args.file else directory
        build_catalog(target, args.cap)
        print(f"wrote catalog to {target}")
        return EXIT_OK
    raise InputError(f"unknown catalog action {args.action!r}")


def _catalog_add(args) -> int:
    target = Path(args.catalog) if args.catalog else Path("catalog")
    src = Path(args.file)
    text = src.read_text(encoding="utf-8")
    first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")), "")
    if ":" in first and not first.lower().startswith(("vertices", "edges")):
        entry = load_entry(text, src.stem)
    else:
        g = load_graph(src) if first.lower().startswith(("vertices", "edges")) else parse_entry_text(text)[0]
        if not is_connected(g):
            raise InputError(f"{src}: catalog graphs must be connected")
        report = mvd_exact(g, args.cap)
        tags = (MINIMAL_TAG,) if is_minimally_2_connected(g) else ()
        entry = CatalogEntry(g, report.witness.normalized(g.labels), tags, src.stem)
    target.mkdir(parents=True, exist_ok=True)
    existing = load_store(target, verify=False)
    hit = find_isomorphic(existing, entry.graph)
    if hit is not None and not args.force:
        print(f"FAIL: isomorphic to existing entry {hit[0].name}; use --force to add anyway", file=sys.stderr)
        return EXIT_FAIL
    name = args.name or entry.name or "entry"
    out = target / f"{name}.txt"
    out.write_text(save_entry(entry), encoding="utf-8")
    print(f"added {out} (n={entry.graph.n}, mvd={entry.mvd_value})")
    return EXIT_OK


def _theta_params(max_internal: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def parts(total, most, acc):
        if total == 0:
            if len(acc) >= 3:
                out.append(tuple(acc))
            return
        for p in range(min(total, most), 0, -1):
            parts(total - p, p, acc + [p])

    for s in range(3, max_internal + 1):
        parts(s, s, [])
    return out


def build_catalog(target: Path, cap: int = DEFAULT_CAP) -> None:
    """Write the default type set: C4..C11, theta graphs with k >= 3 up to order 10, the two bundled 9-vertex entries."""
    from .families import cycle

    target.mkdir(parents=True, exist_ok=True)
    jobs = [(f"cycle_C{n:02d}", cycle(n), ("cycle", MINIMAL_TAG)) for n in range(4, 12)]
    for ps in _theta_params(8):
        jobs.append((f"theta_P{'-'.join(map(str, ps))}", theta(*ps), ("theta", MINIMAL_TAG)))
    for name, g, tags in jobs:
        report = mvd_exact(g, max(cap, g.n))
        entry = CatalogEntry(g, report.witness.normalized(g.labels), tags, name)
        (target / f"{name}.txt").write_text(save_entry(entry), encoding="utf-8")
        log.info("catalog %s: mvd=%d", name, entry.mvd_value)
    if target.resolve() != BUNDLED_DIR.resolve():
        for path in sorted(BUNDLED_DIR.glob("graph_*.txt")):
            shutil.copy(path, target / path.name)


def cmd_formula(args) -> int:
    kind, params = args.kind, args.params
    if kind == "mvd":
        if not params:
            raise InputError("formula mvd needs a family and its parameters")
        value = mvd_formula(parse_spec(params[0], params[1:]))
        print("none" if value is None else value)
        return EXIT_OK if value is not None else EXIT_FAIL
    try:
        nums = [int(p) for p in params]
    except ValueError:
        raise InputError(f"formula {kind} takes integer parameters") from None
    funcs = {"fv": (f_v, 2), "emax": (emax, 2), "blockbound": (block_bound, 3)}
    func, arity = funcs[kind]
    if len(nums) != arity:
        raise InputError(f"formula {kind} takes {arity} integers")
    print(func(*nums))
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.mode == "extremal":
        res = scan_extremal(args.n, max(args.max_n, EXTREMAL_MAX_N) if args.max_n else EXTREMAL_MAX_N, args.workers)
    else:
        if not args.prop:
            raise InputError(f"scan property needs --prop, one of {', '.join(PROPERTIES)}")
        res = scan_property(args.n, args.prop, args.workers)
    lines = [res.table()]
    if args.machine:
        lines += res.machine_lines()
    _emit(args, "\n".join(lines))
    return EXIT_OK if res.ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", help="catalog directory (default ./catalog, else the bundled one)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest order solved exhaustively")
    common.add_argument("--format", choices=("text", "json-lines"), default="text")
    common.add_argument("-o", "--output", help="write the report to this file")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="mvd", description="Monochromatic vertex-disconnection toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a family member as .mvdg")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("blocks", parents=[common], help="cut vertices and blocks")
    p.add_argument("graph")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("verify", parents=[common], help="check a coloring is an MVD-coloring")
    p.add_argument("graph")
    p.add_argument("coloring", help='e.g. "a:1, b:2, c:1"')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", parents=[common], help="compute mvd and a witness coloring")
    p.add_argument("graph")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--partial", action="store_true", help="report bounds when a block exceeds the cap")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("catalog", parents=[common], help="list, check, add to or rebuild the type set")
    p.add_argument("action", choices=("list", "check", "add", "build"))
    p.add_argument("file", nargs="?", help="graph file for add; target directory for build")
    p.add_argument("--name", help="entry name for add")
    p.add_argument("--force", action="store_true", help="add even if an isomorphic entry exists")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("formula", parents=[common], help="closed-form values")
    p.add_argument("kind", choices=("mvd", "fv", "emax", "blockbound"))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("scan", parents=[common], help="exhaustive small-n verification")
    p.add_argument("mode", choices=("extremal", "property"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prop", choices=tuple(PROPERTIES))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-n", type=int, default=0, help="raise the extremal scan limit")
    p.add_argument("--machine", action="store_true", help="also print k=<k> ... ok|FAIL lines")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.cap < 1:
        print("error: --cap must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except IntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MvdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
