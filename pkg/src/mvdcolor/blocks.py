"""Block decomposition (Tarjan's depth-first method) and block-cut tree traversal."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InputError
from .graph import Graph, induced_subgraph, is_connected


@dataclass(frozen=True)
class Block:
    index: int
    # Vertices in the order the DFS stack released them, shared cut vertex last.
    vertices: tuple[str, ...]
    parent: Graph = field(repr=False, compare=False)

    @cached_property
    def graph(self) -> Graph:
        return induced_subgraph(self.parent, self.vertices)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def is_trivial(self) -> bool:
        return len(self.vertices) == 2


@dataclass(frozen=True)
class BlockDecomposition:
    graph: Graph
    blocks: tuple[Block, ...]
    cut_vertices: tuple[str, ...]

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def t(self) -> int:
        return sum(b.is_trivial for b in self.blocks)

    @cached_property
    def blocks_of(self) -> dict[str, tuple[int, ...]]:
        """Indices of the blocks containing each vertex."""
        out: dict[str, list[int]] = {x: [] for x in self.graph.labels}
        for b in self.blocks:
            for x in b.vertices:
                out[x].append(b.index)
        return {x: tuple(v) for x, v in out.items()}

    @cached_property
    def tree(self) -> dict[tuple[str, object], tuple[tuple[str, object], ...]]:
        """Block-cut tree as adjacency lists over ("block", i) and ("cut", label) nodes."""
        adj: dict[tuple[str, object], list[tuple[str, object]]] = {("block", b.index): [] for b in self.blocks}
        for c in self.cut_vertices:
            adj[("cut", c)] = []
            for i in self.blocks_of[c]:
                adj[("cut", c)].append(("block", i))
                adj[("block", i)].append(("cut", c))
        return {k: tuple(v) for k, v in adj.items()}


def decompose(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices, DFS rooted at vertex index 0 with neighbours in index order."""
    n = g.n
    if n == 0:
        raise InputError("cannot decompose an empty graph")
    if not is_connected(g):
        raise InputError("block decomposition needs a connected graph; split into components first")
    if n == 1:
        return BlockDecomposition(g, (Block(0, g.labels, g),), ())

    nbrs = [[j for j in range(n) if g.adj[i] >> j & 1] for i in range(n)]
    explored: set[tuple[int, int]] = set()
    pos = [0] * n  # next neighbour to inspect per vertex

    def next_unexplored(v):
        lst = nbrs[v]
        while pos[v] < len(lst):
            w = lst[pos[v]]
            if (min(v, w), max(v, w)) not in explored:
                return w
            pos[v] += 1
        return None

    root = 0
    K = [0] * n
    L = [0] * n
    f: list[int | None] = [None] * n
    cuts: list[int] = []
    found: list[list[int]] = []
    K[root] = L[root] = 1
    counter = 1
    stack = [root]
    v = root
    while True:
        w = next_unexplored(v)
        if w is None and f[v] is None:
            break
        if w is not None:
            explored.add((min(v, w), max(v, w)))
            if K[w] == 0:
                stack.append(w)
                f[w] = v
                counter += 1
                K[w] = L[w] = counter
                v = w
            else:
                L[v] = min(L[v], K[w])
        else:
            p = f[v]
            if L[v] >= K[p]:
                if (p != root or next_unexplored(root) is not None) and p not in cuts:
                    cuts.append(p)
                block = []
                while True:
                    u = stack.pop()
                    block.append(u)
                    if u == v:
                        break
                block.append(p)
                found.append(block)
            else:
                L[p] = min(L[p], L[v])
            v = p

    blocks = tuple(Block(i, tuple(g.labels[u] for u in b), g) for i, b in enumerate(found))
    return BlockDecomposition(g, blocks, tuple(g.labels[c] for c in cuts))


def block_cut_order(d: BlockDecomposition, root_block: int = 0) -> list[tuple[Block, str | None]]:
    """Blocks in BFS order over the block-cut tree with the cut vertex each was entered by."""
    if not 0 <= root_block < d.r:
        raise InputError(f"root block {root_block} out of range 0..{d.r - 1}")
    g = d.graph
    cutset = set(d.cut_vertices)
    seen_blocks = {root_block}
    seen_cuts: set[str] = set()
    out: list[tuple[Block, str | None]] = [(d.blocks[root_block], None)]
    queue = deque([root_block])
    while queue:
        b = d.blocks[queue.popleft()]
        for c in sorted((x for x in b.vertices if x in cutset), key=g.index):
            if c in seen_cuts:
                continue
            seen_cuts.add(c)
            for i in d.blocks_of[c]:
                if i not in seen_blocks:
                    seen_blocks.add(i)
                    out.append((d.blocks[i], c))
                    queue.append(i)
    return out


def root_block_index(d: BlockDecomposition) -> int:
    """The block holding the graph's first vertex (lowest index among ties)."""
    return min(d.blocks_of[d.graph.labels[0]])
