"""Undirected simple graphs with stable vertex labels.

Vertices are addressed by label everywhere in the public API.  Internally
each vertex has an index and every neighbourhood is an ``int`` bitmask, which
keeps the connectivity probes used by the solver cheap.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from pathlib import Path

from .errors import DomainError, FormatError, InputError

VertexSet = frozenset  # frozenset[str]; a set of vertex labels of one graph


def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from vertex ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


class Graph:
    """Immutable undirected simple graph.

    ``adj[i]`` is the neighbourhood bitmask of the vertex with index ``i``.
    """

    __slots__ = ("_labels", "_index", "_adj", "_m")

    def __init__(self, labels: Iterable[str], adj: Iterable[int]):
        labels = tuple(str(x) for x in labels)
        adj = tuple(int(a) for a in adj)
        if len(labels) != len(adj):
            raise InputError("label count and adjacency size differ")
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise InputError(f"duplicate vertex label {lab!r}")
            index[lab] = i
        full = (1 << len(labels)) - 1
        for i, a in enumerate(adj):
            if a & ~full:
                raise InputError(f"vertex {labels[i]!r} has a neighbour out of range")
            if a >> i & 1:
                raise InputError(f"self-loop at {labels[i]!r}")
            for j in bits(a):
                if not adj[j] >> i & 1:
                    raise InputError(f"asymmetric adjacency between {labels[i]!r} and {labels[j]!r}")
        self._labels = labels
        self._index = index
        self._adj = adj
        self._m = sum(a.bit_count() for a in adj) // 2

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def m(self) -> int:
        return self._m

    @property
    def full_mask(self) -> int:
        return (1 << len(self._labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown vertex {label!r}") from None

    def __contains__(self, label) -> bool:
        return label in self._index

    def mask(self, labels: Iterable[str]) -> int:
        out = 0
        for lab in labels:
            out |= 1 << self.index(lab)
        return out

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self._labels[i] for i in bits(mask))

    def has_edge(self, a: str, b: str) -> bool:
        return bool(self._adj[self.index(a)] >> self.index(b) & 1)

    def neighbors(self, label: str) -> tuple[str, ...]:
        return self.labels_of(self._adj[self.index(label)])

    def degree(self, label: str) -> int:
        return self._adj[self.index(label)].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def edges(self) -> list[tuple[str, str]]:
        """Edges as label pairs, lexicographic in vertex index."""
        out = []
        for i, a in enumerate(self._adj):
            for j in bits(a >> (i + 1)):
                out.append((self._labels[i], self._labels[i + 1 + j]))
        return out

    def index_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, a in enumerate(self._adj) for j in bits(a) if i < j]

    def adjacency_matrix(self) -> list[list[int]]:
        n = self.n
        return [[a >> j & 1 for j in range(n)] for a in self._adj]

    def nonadjacent_pairs(self) -> list[tuple[int, int]]:
        n = self.n
        return [(i, j) for i in range(n) for j in range(i + 1, n) if not self._adj[i] >> j & 1]

    def relabel(self, mapping: dict[str, str]) -> Graph:
        return Graph([mapping.get(x, x) for x in self._labels], self._adj)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._labels == other._labels and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._labels, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- construction -----------------------------------------------------------


def from_edge_list(labels: Iterable[str], edges: Iterable[tuple[str, str]]) -> Graph:
    labels = [str(x) for x in labels]
    index = {}
    for i, lab in enumerate(labels):
        if lab in index:
            raise InputError(f"duplicate vertex label {lab!r}")
        index[lab] = i
    adj = [0] * len(labels)
    for a, b in edges:
        a, b = str(a), str(b)
        for x in (a, b):
            if x not in index:
                raise InputError(f"edge endpoint {x!r} is not a vertex")
        if a == b:
            raise InputError(f"self-loop at {a!r}")
        i, j = index[a], index[b]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(labels, adj)


def from_adjacency_matrix(labels: Iterable[str], matrix: Sequence[Sequence[int]]) -> Graph:
    labels = [str(x) for x in labels]
    n = len(labels)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise InputError(f"matrix must be {n}x{n} to match {n} labels")
    adj = [0] * n
    for i, row in enumerate(matrix):
        for j, val in enumerate(row):
            if val not in (0, 1):
                raise InputError(f"matrix entry ({i},{j}) is {val!r}, expected 0 or 1")
            if val:
                if i == j:
                    raise InputError(f"nonzero diagonal at {labels[i]!r}")
                if not matrix[j][i]:
                    raise InputError(f"asymmetric matrix at ({labels[i]!r}, {labels[j]!r})")
                adj[i] |= 1 << j
    return Graph(labels, adj)


def induced_subgraph(g: Graph, s: Iterable[str]) -> Graph:
    """G[S], keeping labels and the parent graph's vertex order."""
    keep = sorted({g.index(x) for x in s})
    if not keep:
        raise InputError("induced subgraph of an empty vertex set")
    pos = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        a = 0
        for j in bits(g.adj[old]):
            if j in pos:
                a |= 1 << pos[j]
        adj.append(a)
    return Graph([g.labels[i] for i in keep], adj)


def delete_edge(g: Graph, a: str, b: str) -> Graph:
    i, j = g.index(a), g.index(b)
    if not g.adj[i] >> j & 1:
        raise InputError(f"{a!r}-{b!r} is not an edge")
    adj = list(g.adj)
    adj[i] &= ~(1 << j)
    adj[j] &= ~(1 << i)
    return Graph(g.labels, adj)


# -- connectivity -----------------------------------------------------------


def _components_mask(adj: Sequence[int], allowed: int) -> list[int]:
    out = []
    rest = allowed
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = reach(adj, start, allowed)
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their smallest vertex index."""
    return [VertexSet(g.labels_of(c)) for c in _components_mask(g.adj, g.full_mask)]


def is_connected(g: Graph) -> bool:
    return g.n == 0 or reach(g.adj, 0, g.full_mask) == g.full_mask


def is_separated(g: Graph, s: Iterable[str], x: str, y: str) -> bool:
    """True iff G - S contains no x-y path."""
    smask = g.mask(s)
    xi, yi = g.index(x), g.index(y)
    if xi == yi:
        raise InputError("x and y must be distinct")
    if smask >> xi & 1 or smask >> yi & 1:
        raise InputError("x and y must not belong to the cut set")
    return not reach(g.adj, xi, g.full_mask & ~smask) >> yi & 1


def _local_connectivity(adj: Sequence[int], x: int, y: int) -> int:
    # Unit vertex capacities via the split digraph: node 2v is v_in, 2v+1 is v_out.
    n = len(adj)
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a, b, c):
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(b, a)] = cap.get((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (x, y) else 1)
        for w in bits(adj[v]):
            arc(2 * v + 1, 2 * w, big)
    source, sink = 2 * x + 1, 2 * y
    flow = 0
    while True:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def local_connectivity(g: Graph, x: str, y: str) -> int:
    """kappa(x, y): the minimum size of an x-y vertex cut (Menger)."""
    xi, yi = g.index(x), g.index(y)
    if xi == yi:
        raise InputError("x and y must be distinct")
    if g.adj[xi] >> yi & 1:
        raise InputError(f"{x!r} and {y!r} are adjacent; no vertex cut separates them")
    return _local_connectivity(g.adj, xi, yi)


def _kappa_plus(adj: Sequence[int]) -> int:
    n = len(adj)
    best = 0
    for i in range(n):
        for j in range(i + 1, n):
            if not adj[i] >> j & 1:
                # kappa(x, y) <= min degree of x and y
                if min(adj[i].bit_count(), adj[j].bit_count()) <= best:
                    continue
                best = max(best, _local_connectivity(adj, i, j))
    return best


def kappa_plus(g: Graph) -> int:
    """Largest kappa(x, y) over nonadjacent pairs."""
    if is_complete(g):
        raise DomainError("kappa_plus is undefined for a complete graph")
    return _kappa_plus(g.adj)


# -- structural predicates ----------------------------------------------------


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _has_cut_vertex(adj: Sequence[int], full: int) -> bool:
    for v in bits(full):
        rest = full & ~(1 << v)
        if rest and reach(adj, (rest & -rest).bit_length() - 1, rest) != rest:
            return True
    return False


def is_2_connected(g: Graph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    return not _has_cut_vertex(g.adj, g.full_mask)


def is_minimally_2_connected(g: Graph) -> bool:
    if not is_2_connected(g):
        return False
    for a, b in g.edges():
        if is_2_connected(delete_edge(g, a, b)):
            return False
    return True


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    return not any(adj[i] & adj[j] for i, j in g.index_edges())


# -- .mvdg text format ----------------------------------------------------------


def parse_mvdg(text: str) -> Graph:
    """Parse ``vertices: a,b,c`` / ``edges: a-b,b-c`` text."""
    labels = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in ("vertices", "edges"):
            raise FormatError(f"line {lineno}: expected 'vertices:' or 'edges:'")
        items = [t.strip() for t in rest.split(",") if t.strip()]
        if key == "vertices":
            if labels is not None:
                raise FormatError(f"line {lineno}: duplicate 'vertices:' line")
            labels = items
        else:
            for item in items:
                a, dash, b = item.partition("-")
                if not dash or not a.strip() or not b.strip():
                    raise FormatError(f"line {lineno}: bad edge {item!r}")
                edges.append((a.strip(), b.strip()))
    if labels is None:
        raise FormatError("missing 'vertices:' line")
    try:
        return from_edge_list(labels, edges)
    except InputError as exc:
        raise FormatError(str(exc)) from None


def format_mvdg(g: Graph) -> str:
    lines = ["vertices: " + ",".join(g.labels)]
    lines.append("edges: " + ",".join(f"{a}-{b}" for a, b in g.edges()))
    return "\n".join(lines) + "\n"


def load_graph(path: str | Path) -> Graph:
    """Read a graph from ``.mvdg`` text or a catalog-style matrix file."""
    text = Path(path).read_text(encoding="utf-8")
    body = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    body = [ln for ln in body if ln]
    if body and body[0].lower().startswith(("vertices", "edges")):
        return parse_mvdg(text)
    from .catalog import parse_entry_text

    graph, _ = parse_entry_text(text)
    return graph
