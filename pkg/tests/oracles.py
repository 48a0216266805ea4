"""Independent reference implementations used as test oracles."""

import random
from itertools import combinations

from mvdcolor.graph import Graph, from_edge_list


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus independent extra edges."""
    labels = [f"x{i}" for i in range(n)]
    edges = set()
    for i in range(1, n):
        edges.add((labels[rng.randrange(i)], labels[i]))
    for a, b in combinations(labels, 2):
        if rng.random() < p:
            edges.add((a, b))
    return from_edge_list(labels, edges)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _separates(g: Graph, cut: set, x: str, y: str) -> bool:
    seen, stack = {x}, [x]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in cut and w not in seen:
                seen.add(w)
                stack.append(w)
    return y not in seen


def brute_is_mvd(g: Graph, parts) -> bool:
    """Straight from the definition: try every subset of every class as the cut."""
    for x, y in combinations(g.labels, 2):
        if g.has_edge(x, y):
            continue
        ok = False
        for cls in parts:
            pool = [v for v in cls if v not in (x, y)]
            for r in range(1, len(pool) + 1):
                if any(_separates(g, set(s), x, y) for s in combinations(pool, r)):
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False
    return True


def brute_mvd(g: Graph) -> int:
    return max(len(p) for p in set_partitions(list(g.labels)) if brute_is_mvd(g, p))
