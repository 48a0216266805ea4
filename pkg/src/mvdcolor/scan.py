"""Exhaustive checks over every labeled graph on n vertices.

A graph is encoded as an integer whose bit e says whether the e-th vertex
pair, in lexicographic order (0,1), (0,2), ..., (n-2,n-1), is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from multiprocessing import Pool

from .blocks import decompose
from .catalog import CatalogStore, load_store
from .coloring import Coloring
from .compose import mvd_compose
from .errors import CapacityError, InputError
from .families import UNDEFINED, Undefined, block_bound, emax, f_v
from .graph import Graph, _kappa_plus, induced_subgraph, is_minimally_2_connected, reach
from .solver import best_partition, is_mvd_coloring

EXTREMAL_MAX_N = 6
PROPERTY_MAX_N = 7

PROPERTIES = {
    "bound": "1 <= mvd <= n - kappa_plus + 1",
    "blocks-complete-iff-n": "mvd = n exactly when every block is complete",
    "compose-agrees-exact": "block composition gives the exhaustive value",
    "restriction": "an mvd-coloring restricted to a connected induced subgraph stays MVD",
    "minimal-block-bound": "minimally 2-connected graphs of order >= 4 have mvd <= n/2",
    "block-bound": "blocks minimally 2-connected and triangle-free imply mvd <= (n + 2t - r + 1)/2",
}


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_bits(n: int) -> tuple[tuple[int, int, int, int], ...]:
    return tuple((i, j, 1 << i, 1 << j) for i, j in combinations(range(n), 2))


def decode(n: int, code: int) -> tuple[int, ...]:
    """Neighbourhood masks of the graph with edge code ``code``."""
    adj = [0] * n
    pairs = _pair_bits(n)
    while code:
        low = code & -code
        i, j, bi, bj = pairs[low.bit_length() - 1]
        adj[i] |= bj
        adj[j] |= bi
        code ^= low
    return tuple(adj)


def to_graph(n: int, code: int) -> Graph:
    return Graph([f"v{i}" for i in range(1, n + 1)], decode(n, code))


def describe(n: int, code: int) -> str:
    edges = [f"v{i + 1}-v{j + 1}" for e, (i, j) in enumerate(vertex_pairs(n)) if code >> e & 1]
    return f"n={n} code={code} edges=[{','.join(edges)}]"


def _connected(adj: tuple[int, ...]) -> bool:
    full = (1 << len(adj)) - 1
    return reach(adj, 0, full) == full


def _mvd_chunk(args: tuple[int, int, int]) -> dict[int, int]:
    n, lo, hi = args
    out = {}
    for code in range(lo, hi):
        adj = decode(n, code)
        if _connected(adj):
            out[code] = best_partition(adj)[0]
    return out


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


# Per-run memo of mvd values: n -> {edge code: mvd}.
_MVD_MEMO: dict[int, dict[int, int]] = {}


def mvd_table(n: int, workers: int = 1) -> dict[int, int]:
    """mvd of every connected labeled graph on n vertices, keyed by edge code (memoized per run)."""
    if n < 1:
        raise InputError("n must be >= 1")
    if n > PROPERTY_MAX_N:
        raise CapacityError(f"exhaustive scans are limited to n <= {PROPERTY_MAX_N}", n=n, cap=PROPERTY_MAX_N)
    if n not in _MVD_MEMO:
        total = 1 << (n * (n - 1) // 2)
        chunks = [(n, lo, hi) for lo, hi in _ranges(total, max(1, workers) * 4)]
        if workers > 1:
            with Pool(workers) as pool:
                parts = pool.map(_mvd_chunk, chunks)
        else:
            parts = [_mvd_chunk(c) for c in chunks]
        merged: dict[int, int] = {}
        for part in parts:
            merged.update(part)
        _MVD_MEMO[n] = dict(sorted(merged.items()))
    return _MVD_MEMO[n]


@dataclass
class ScanResult:
    n: int
    total: int = 0
    connected: int = 0
    emax_observed: dict[int, int | Undefined] = field(default_factory=dict)
    emax_expected: dict[int, int | Undefined] = field(default_factory=dict)
    fv_observed: dict[int, int] = field(default_factory=dict)
    fv_expected: dict[int, int | Undefined] = field(default_factory=dict)
    prop: str | None = None
    # for the bound properties only triangle-free graphs are enumerated
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def machine_lines(self) -> list[str]:
        out = []
        for k in sorted(self.emax_observed):
            got, want = self.emax_observed[k], self.emax_expected[k]
            out.append(f"k={k} emax={got} expect={want} {'ok' if got == want else 'FAIL'}")
        for k in sorted(self.fv_observed):
            got, want = self.fv_observed[k], self.fv_expected[k]
            out.append(f"k={k} fv={got} expect={want} {'ok' if got == want else 'FAIL'}")
        return out

    def table(self) -> str:
        if self.prop is not None:
            pool = "connected triangle-free" if self.prop in BOUND_PROPS else "connected"
            head = (
                f"property {self.prop} at n={self.n}: {self.connected} {pool} graphs, "
                f"{self.checked} checked, {len(self.counterexamples)} violations"
            )
            return "\n".join([head] + [f"  {c}" for c in self.counterexamples])
        rows = [f"n={self.n}: {self.total} labeled graphs, {self.connected} connected"]
        rows.append(f"{'k':>3} {'emax':>9} {'expected':>9} {'f_v':>9} {'expected':>9}")
        for k in range(1, self.n + 1):
            rows.append(
                f"{k:>3} {str(self.emax_observed[k]):>9} {str(self.emax_expected[k]):>9}"
                f" {str(self.fv_observed[k]):>9} {str(self.fv_expected[k]):>9}"
            )
        rows += [f"  {c}" for c in self.counterexamples]
        return "\n".join(rows)


def scan_extremal(n: int, cap: int = EXTREMAL_MAX_N, workers: int = 1) -> ScanResult:
    """Tabulate max size per mvd value and the f_v thresholds; compare with the formulas."""
    if n > cap:
        raise CapacityError(f"extremal scan limited to n <= {cap}, got n = {n}", n=n, cap=cap)
    table = mvd_table(n, workers)
    res = ScanResult(n=n, total=1 << (n * (n - 1) // 2), connected=len(table))
    best_code: dict[int, int] = {}
    for code, value in table.items():
        size = code.bit_count()
        if value not in best_code or size > best_code[value].bit_count():
            best_code[value] = code
    for k in range(1, n + 1):
        res.emax_observed[k] = best_code[k].bit_count() if k in best_code else UNDEFINED
        res.emax_expected[k] = emax(n, k)
        # f_v(n, k) = 1 + largest size with mvd < k, but never below the tree size n - 1
        below = [best_code[j].bit_count() for j in best_code if j < k]
        res.fv_observed[k] = max([n - 1] + [s + 1 for s in below])
        res.fv_expected[k] = f_v(n, k)
        if res.emax_observed[k] != res.emax_expected[k]:
            witness = describe(n, best_code[k]) if k in best_code else "no graph"
            res.counterexamples.append(
                f"emax k={k}: observed {res.emax_observed[k]} expected {res.emax_expected[k]} ({witness})"
            )
        if res.fv_observed[k] != res.fv_expected[k]:
            res.counterexamples.append(f"f_v k={k}: observed {res.fv_observed[k]} expected {res.fv_expected[k]}")
    return res


def _all_blocks_complete(g: Graph) -> bool:
    return all(b.graph.m == b.order * (b.order - 1) // 2 for b in decompose(g).blocks)


def _triangle_free_adj(adj: tuple[int, ...]) -> bool:
    return not any(adj[i] & adj[j] for i in range(len(adj)) for j in range(i + 1, len(adj)) if adj[i] >> j & 1)


def _witness(g: Graph) -> Coloring:
    _, rgs = best_partition(g.adj)
    return Coloring({x: p + 1 for x, p in zip(g.labels, rgs)})


BOUND_PROPS = ("minimal-block-bound", "block-bound")


def _structural_bound(prop: str, n: int, adj: tuple[int, ...]) -> tuple[int, str] | None:
    """Bound and its description when a triangle-free graph falls under ``prop``, else None."""
    g = Graph([f"v{i}" for i in range(1, n + 1)], adj)
    if prop == "minimal-block-bound":
        if n < 4 or min(a.bit_count() for a in adj) < 2 or not is_minimally_2_connected(g):
            return None
        return n // 2, "n/2"
    d = decompose(g)
    if not all(b.is_trivial or is_minimally_2_connected(b.graph) for b in d.blocks):
        return None
    return block_bound(n, d.r, d.t), f"block bound (r={d.r}, t={d.t})"


def _check(prop: str, n: int, code: int, value: int, store: CatalogStore | None) -> str | None:
    """Return a violation message, or None when the property holds (or does not apply)."""
    adj = decode(n, code)
    full_size = n * (n - 1) // 2
    if prop == "bound":
        upper = n if code.bit_count() == full_size else n - _kappa_plus(adj) + 1
        if not 1 <= value <= upper:
            return f"mvd={value} outside [1, {upper}]"
        return None
    if prop == "blocks-complete-iff-n":
        if (value == n) != _all_blocks_complete(to_graph(n, code)):
            return f"mvd={value} but all-blocks-complete={not value == n}"
        return None
    if prop == "compose-agrees-exact":
        composed = mvd_compose(to_graph(n, code), store)
        if composed.value != value or not is_mvd_coloring(to_graph(n, code), composed.witness):
            return f"compose={composed.value} exact={value}"
        return None
    if prop == "restriction":
        g = to_graph(n, code)
        tau = _witness(g)
        for mask in range(1, 1 << n):
            if mask.bit_count() < 2:
                continue
            start = (mask & -mask).bit_length() - 1
            if reach(adj, start, mask) != mask:
                continue
            sub_labels = g.labels_of(mask)
            sub = induced_subgraph(g, sub_labels)
            verdict = is_mvd_coloring(sub, tau.restrict(sub_labels))
            if not verdict:
                return f"restriction to {{{','.join(sub_labels)}}} fails at {verdict.pair}"
        return None
    raise InputError(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}")


def scan_property(n: int, prop: str, workers: int = 1, store: CatalogStore | None = None) -> ScanResult:
    """Check one invariant over every connected labeled graph of order n."""
    if prop not in PROPERTIES:
        raise InputError(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}")
    if n > PROPERTY_MAX_N:
        raise CapacityError(f"property scan limited to n <= {PROPERTY_MAX_N}, got n = {n}", n=n, cap=PROPERTY_MAX_N)
    if prop == "compose-agrees-exact" and store is None:
        store = load_store()
    total = 1 << (n * (n - 1) // 2)
    res = ScanResult(n=n, prop=prop, total=total)
    if n <= EXTREMAL_MAX_N and prop not in BOUND_PROPS:
        mvd_table(n, workers)
    if prop in BOUND_PROPS:
        # triangle-free codes only; the rest cannot fall under these properties
        head = min(PREFIX_BITS, n * (n - 1) // 2)
        chunks = [(prop, n, head, prefix) for prefix in range(1 << head)]
        worker = _bound_chunk
    else:
        chunks = [(prop, n, lo, hi, store) for lo, hi in _ranges(total, max(1, workers) * 4)]
        worker = _property_chunk
    if workers > 1:
        with Pool(workers) as pool:
            parts = pool.map(worker, chunks)
    else:
        parts = [worker(c) for c in chunks]
    for connected, checked, bad in parts:
        res.connected += connected
        res.checked += checked
        res.counterexamples += bad
    return res


PREFIX_BITS = 4


def triangle_free_codes(n: int, head: int = 0, prefix: int = 0):
    """Yield (code, adj) for triangle-free graphs whose first ``head`` pair bits equal ``prefix``."""
    pairs = _pair_bits(n)
    adj = [0] * n
    start = 0
    for e in range(head):
        if prefix >> e & 1:
            i, j, bi, bj = pairs[e]
            if adj[i] & adj[j]:
                return
            adj[i] |= bj
            adj[j] |= bi
            start |= 1 << e
    stack = [(head, start, tuple(adj))]
    while stack:
        e, code, cur = stack.pop()
        if e == len(pairs):
            yield code, cur
            continue
        i, j, bi, bj = pairs[e]
        if not cur[i] & cur[j]:
            nxt = list(cur)
            nxt[i] |= bj
            nxt[j] |= bi
            stack.append((e + 1, code | 1 << e, tuple(nxt)))
        stack.append((e + 1, code, cur))


def _bound_chunk(args) -> tuple[int, int, list[str]]:
    prop, n, head, prefix = args
    connected = checked = 0
    bad = []
    for code, adj in triangle_free_codes(n, head, prefix):
        if not _connected(adj):
            continue
        connected += 1
        hit = _structural_bound(prop, n, adj)
        if hit is None:
            continue
        bound, what = hit
        checked += 1
        if bound >= n:
            continue  # no coloring has more than n classes
        # search only for partitions with more than `bound` parts
        value, _ = best_partition(adj, floor=bound)
        if value:
            bad.append(f"{describe(n, code)}: mvd={value} > {what} = {bound}")
    return connected, checked, bad


def _property_chunk(args) -> tuple[int, int, list[str]]:
    prop, n, lo, hi, store = args
    cached = _MVD_MEMO.get(n, {})
    connected = checked = 0
    bad = []
    for code in range(lo, hi):
        adj = decode(n, code)
        if not _connected(adj):
            continue
        connected += 1
        value = cached.get(code)
        if value is None:
            value = best_partition(adj)[0]
        msg = _check(prop, n, code, value, store)
        checked += 1
        if msg is not None:
            bad.append(f"{describe(n, code)}: {msg}")
    return connected, checked, bad
