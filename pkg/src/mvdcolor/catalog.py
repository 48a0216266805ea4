"""The type set: stored graphs with known mvd-colorings, and isomorphic lookup.

File format, one graph per file::

    a:1, b:2, c:1, d:2
    0, 1, 0, 1
    1, 0, 1, 0
    0, 1, 0, 1
    1, 0, 1, 0
    # tags: cycle, minimally-2-connected

The first non-blank line names the vertices and their colors; the next n
lines are the adjacency rows in that order.  ``# tags:`` lines are optional.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from .coloring import Coloring, format_coloring, parse_coloring
from .errors import FormatError, InputError, IntegrityError
from .graph import Graph, bits, from_adjacency_matrix, is_minimally_2_connected
from .solver import DEFAULT_CAP, is_mvd_coloring, mvd_exact

MINIMAL_TAG = "minimally-2-connected"
BUNDLED_DIR = Path(__file__).parent / "data" / "catalog"


def fingerprint(g: Graph) -> tuple:
    """Isomorphism-invariant key: (n, m, degree sequence, per-vertex triangle counts)."""
    adj = g.adj
    tri = [sum((adj[v] & adj[w]).bit_count() for w in bits(adj[v])) // 2 for v in range(g.n)]
    return (g.n, g.m, tuple(sorted(g.degrees())), tuple(sorted(tri)))


@dataclass(frozen=True)
class CatalogEntry:
    graph: Graph
    coloring: Coloring
    tags: tuple[str, ...] = ()
    name: str = ""
    key: tuple = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "key", fingerprint(self.graph))

    @property
    def mvd_value(self) -> int:
        return self.coloring.num_colors


def parse_entry_text(text: str) -> tuple[Graph, Coloring | None]:
    """Graph plus its header coloring; a header of bare names yields no coloring."""
    rows = []
    tags_seen = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("//"):
            continue
        if line.startswith("#"):
            tags_seen.append(line)
            continue
        rows.append(line)
    if not rows:
        raise FormatError("empty catalog file")
    header = rows[0]
    if ":" in header:
        coloring = parse_coloring(header)
        labels = list(coloring)
    else:
        coloring = None
        labels = [x.strip() for x in header.split(",") if x.strip()]
    body = rows[1:]
    if len(body) != len(labels):
        raise FormatError(f"header names {len(labels)} vertices but {len(body)} matrix rows follow")
    matrix = []
    for i, row in enumerate(body, 2):
        try:
            matrix.append([int(x) for x in row.replace(",", " ").split()])
        except ValueError:
            raise FormatError(f"matrix row {i}: non-integer entry") from None
    try:
        graph = from_adjacency_matrix(labels, matrix)
    except InputError as exc:
        raise FormatError(str(exc)) from None
    return graph, coloring


def _parse_tags(text: str) -> tuple[str, ...]:
    tags: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#") and line[1:].strip().lower().startswith("tags:"):
            tags += [t.strip() for t in line.split(":", 1)[1].split(",") if t.strip()]
    return tuple(tags)


def load_entry(text: str, name: str = "", verify: bool = True) -> CatalogEntry:
    graph, coloring = parse_entry_text(text)
    if coloring is None:
        raise FormatError("catalog header must list name:color pairs")
    if verify:
        verdict = is_mvd_coloring(graph, coloring)
        if not verdict:
            x, y = verdict.pair
            raise IntegrityError(f"{name or 'entry'}: stored coloring has no monochromatic {x}-{y} cut", verdict.pair)
    return CatalogEntry(graph, coloring, _parse_tags(text), name)


def save_entry(e: CatalogEntry) -> str:
    lines = [format_coloring(e.coloring, e.graph.labels)]
    lines += [", ".join(str(v) for v in row) for row in e.graph.adjacency_matrix()]
    if e.tags:
        lines.append("# tags: " + ", ".join(e.tags))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CatalogStore:
    entries: tuple[CatalogEntry, ...] = ()
    path: Path | None = None

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def load_store(directory: str | Path | None = None, verify: bool = True) -> CatalogStore:
    """Load every ``*.txt`` file of ``directory`` in file-name order."""
    directory = BUNDLED_DIR if directory is None else Path(directory)
    if not directory.is_dir():
        raise InputError(f"catalog directory {directory} does not exist")
    entries = []
    for path in sorted(directory.glob("*.txt"), key=lambda p: p.name):
        try:
            entries.append(load_entry(path.read_text(encoding="utf-8"), path.stem, verify))
        except FormatError as exc:
            raise FormatError(f"{path}: {exc}") from None
    return CatalogStore(tuple(entries), directory)


# -- isomorphism ---------------------------------------------------------------


def _match(pattern: Graph, target: Graph) -> dict[str, str] | None:
    n = pattern.n
    padj, tadj = pattern.adj, target.adj
    pdeg = [a.bit_count() for a in padj]
    tdeg = [a.bit_count() for a in tadj]

    def profile(adj, deg, v):
        tri = sum((adj[v] & adj[w]).bit_count() for w in bits(adj[v])) // 2
        return deg[v], tri, tuple(sorted(deg[w] for w in bits(adj[v])))

    pprof = [profile(padj, pdeg, v) for v in range(n)]
    tprof = [profile(tadj, tdeg, v) for v in range(n)]
    candidates = [[w for w in range(n) if tprof[w] == pprof[v]] for v in range(n)]
    if any(not c for c in candidates):
        return None

    # Visit pattern vertices so each one (after the first of a component) touches a mapped one.
    order: list[int] = []
    placed = 0
    while len(order) < n:
        rest = [v for v in range(n) if not placed >> v & 1]
        frontier = [v for v in rest if padj[v] & placed]
        v = max(frontier or rest, key=lambda u: (pdeg[u], -u))
        order.append(v)
        placed |= 1 << v

    image = [-1] * n
    used = 0

    def rec(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        for w in candidates[v]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:depth]:
                if (padj[v] >> u & 1) != (tadj[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if rec(depth + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    if not rec(0):
        return None
    return {pattern.labels[v]: target.labels[image[v]] for v in range(n)}


def is_isomorphism(a: Graph, b: Graph, mapping: dict[str, str]) -> bool:
    if set(mapping) != set(a.labels) or set(mapping.values()) != set(b.labels):
        return False
    return all(a.has_edge(x, y) == b.has_edge(mapping[x], mapping[y]) for x, y in combinations(a.labels, 2))


def find_isomorphism(a: Graph, b: Graph) -> dict[str, str] | None:
    """An adjacency-preserving bijection V(a) -> V(b), or None."""
    if fingerprint(a) != fingerprint(b):
        return None
    return _match(a, b)


def find_isomorphic(store: CatalogStore, g: Graph) -> tuple[CatalogEntry, dict[str, str]] | None:
    """First entry (store order) isomorphic to ``g`` with a mapping entry -> g."""
    key = fingerprint(g)
    for e in store:
        if e.key == key:
            mapping = _match(e.graph, g)
            if mapping is not None:
                return e, mapping
    return None


def transfer_coloring(e: CatalogEntry, mapping: dict[str, str], offset: int = 0) -> Coloring:
    """Color the target so v gets the entry color of its preimage, plus ``offset``."""
    if set(mapping) != set(e.graph.labels):
        raise InputError("mapping must cover every vertex of the catalog graph")
    if len(set(mapping.values())) != len(mapping):
        raise InputError("mapping is not injective")
    return Coloring({mapping[p]: e.coloring[p] + offset for p in e.graph.labels})


# -- integrity audit -------------------------------------------------------------


@dataclass
class CheckReport:
    problems: dict[str, list[str]] = field(default_factory=dict)
    duplicates: list[tuple[str, str]] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not any(self.problems.values())

    def lines(self) -> list[str]:
        out = []
        for name, probs in self.problems.items():
            out += [f"FAIL {name}: {p}" for p in probs]
        out += [f"WARN duplicate isomorphs: {a} ~ {b}" for a, b in self.duplicates]
        out += [f"SKIP {name}: larger than cap, exact value not recomputed" for name in self.skipped]
        out.append(f"{self.checked} entries checked, {sum(map(len, self.problems.values()))} problems")
        return out


def catalog_check(store: CatalogStore, cap: int = DEFAULT_CAP) -> CheckReport:
    report = CheckReport()
    for idx, e in enumerate(store):
        name = e.name or f"#{idx}"
        probs = report.problems.setdefault(name, [])
        verdict = is_mvd_coloring(e.graph, e.coloring)
        if not verdict:
            probs.append(f"coloring is not MVD; pair {verdict.pair[0]}-{verdict.pair[1]} has no monochromatic cut")
        if e.graph.n <= cap:
            exact = mvd_exact(e.graph, cap).value
            if exact != e.mvd_value:
                probs.append(f"stored coloring uses {e.mvd_value} colors but mvd = {exact}")
        else:
            report.skipped.append(name)
        if MINIMAL_TAG in e.tags and not is_minimally_2_connected(e.graph):
            probs.append(f"tagged {MINIMAL_TAG} but is not")
        report.checked += 1
    entries = list(store)
    for (i, a), (j, b) in combinations(enumerate(entries), 2):
        if a.key == b.key and _match(a.graph, b.graph) is not None:
            report.duplicates.append((a.name or f"#{i}", b.name or f"#{j}"))
    return report
