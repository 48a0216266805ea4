"""mvd of a connected graph from its blocks, with an assembled witness coloring.

Each block is solved on its own; the witness is built by walking the
block-cut tree from the root block.  Every later block arrives with exactly
one already-colored cut vertex, so its class through that vertex takes the
inherited color and all its other classes get fresh ids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import block_cut_order, decompose, root_block_index
from .catalog import CatalogStore, find_isomorphic, transfer_coloring
from .coloring import Coloring
from .errors import CapacityError, InputError
from .families import cycle_order, recognize
from .graph import Graph, _kappa_plus, is_2_connected, is_complete, is_connected
from .solver import DEFAULT_CAP, SolveReport, mvd_exact

METHODS = ("auto", "exact", "compose")


@dataclass(frozen=True)
class BlockSolution:
    value: int
    coloring: Coloring
    source: str


def alternating_cycle_coloring(g: Graph) -> Coloring:
    """Color the j-th vertex along the cycle with ((j - 1) mod floor(n/2)) + 1."""
    k = g.n // 2
    return Coloring({label: j % k + 1 for j, label in enumerate(cycle_order(g))})


def solve_block(b: Graph, store: CatalogStore | None = None, cap: int = DEFAULT_CAP) -> BlockSolution:
    """Resolve one block: complete, then cycle, then catalog, then exhaustive search."""
    if not (b.n == 2 and b.m == 1) and not is_2_connected(b):
        raise InputError("solve_block expects K2 or a 2-connected graph")
    if is_complete(b):
        return BlockSolution(b.n, Coloring({x: i for i, x in enumerate(b.labels, 1)}), "complete")
    if all(d == 2 for d in b.degrees()):
        return BlockSolution(b.n // 2, alternating_cycle_coloring(b), "cycle")
    if store is not None:
        hit = find_isomorphic(store, b)
        if hit is not None:
            entry, mapping = hit
            return BlockSolution(entry.mvd_value, transfer_coloring(entry, mapping), "catalog")
    if b.n <= cap:
        report = mvd_exact(b, cap)
        return BlockSolution(report.value, report.witness, "exact")
    raise CapacityError(
        f"block {{{', '.join(b.labels)}}} of order {b.n} is not in the catalog and exceeds cap {cap}",
        n=b.n,
        cap=cap,
    )


def assemble(g: Graph, solutions: dict[int, BlockSolution], order) -> Coloring:
    """Merge per-block colorings along ``order`` (see :func:`block_cut_order`)."""
    final: dict[str, int] = {}
    next_id = 1
    for block, entry in order:
        sol = solutions[block.index]
        labels = block.graph.labels
        rename: dict[int, int] = {}
        if entry is not None:
            rename[sol.coloring[entry]] = final[entry]
        for x in labels:
            c = sol.coloring[x]
            if c not in rename:
                rename[c] = next_id
                next_id += 1
            if x in final and final[x] != rename[c]:
                raise AssertionError(f"vertex {x} recolored during assembly")
            final[x] = rename[c]
    return Coloring({x: final[x] for x in g.labels})


def mvd_compose(g: Graph, store: CatalogStore | None = None, cap: int = DEFAULT_CAP) -> SolveReport:
    """mvd(G) = sum of block values - r + 1, with a witness coloring."""
    if not is_connected(g):
        raise InputError("mvd is only defined for connected graphs")
    d = decompose(g)
    solutions = {b.index: solve_block(b.graph, store, cap) for b in d.blocks}
    value = sum(s.value for s in solutions.values()) - d.r + 1
    witness = assemble(g, solutions, block_cut_order(d, root_block_index(d)))
    per_block = [(b.index, solutions[b.index].value, solutions[b.index].source) for b in d.blocks]
    return SolveReport(value, witness, "compose", per_block)


@dataclass(frozen=True)
class PartialBounds:
    lower: int
    upper: int
    per_block: list[tuple[int, int | None, str]]


def mvd_bounds(g: Graph, store: CatalogStore | None = None, cap: int = DEFAULT_CAP) -> PartialBounds:
    """Bounds on mvd(G) when some blocks cannot be solved within ``cap``.

    Unsolved blocks contribute at least 1 and at most |B| - kappa_plus(B) + 1.
    """
    d = decompose(g)
    lower = upper = 1 - d.r
    rows: list[tuple[int, int | None, str]] = []
    for b in d.blocks:
        try:
            sol = solve_block(b.graph, store, cap)
        except CapacityError:
            lower += 1
            upper += b.order - _kappa_plus(b.graph.adj) + 1
            rows.append((b.index, None, "unsolved"))
        else:
            lower += sol.value
            upper += sol.value
            rows.append((b.index, sol.value, sol.source))
    return PartialBounds(lower, upper, rows)


def solve(g: Graph, method: str = "auto", store: CatalogStore | None = None, cap: int = DEFAULT_CAP) -> SolveReport:
    """Dispatch on ``method``; ``auto`` tries a closed form, then blocks, then exhaustive search."""
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if not is_connected(g):
        raise InputError("mvd is only defined for connected graphs")
    if method == "exact":
        return mvd_exact(g, cap)
    if method == "compose":
        return mvd_compose(g, store, cap)
    hit = recognize(g)
    if hit is not None:
        spec, value, witness = hit
        return SolveReport(value, witness, "formula")
    try:
        return mvd_compose(g, store, cap)
    except CapacityError:
        if g.n <= cap:
            return mvd_exact(g, cap)
        raise
