import random

import pytest
from oracles import random_connected

from mvdcolor.blocks import decompose
from mvdcolor.catalog import load_store
from mvdcolor.compose import alternating_cycle_coloring, mvd_bounds, mvd_compose, solve, solve_block
from mvdcolor.errors import CapacityError, InputError
from mvdcolor.families import complete, cycle, path, wheel
from mvdcolor.graph import Graph, from_edge_list
from mvdcolor.solver import is_mvd_coloring, mvd_exact

STORE = load_store()


def glue(parts: list[Graph], rng: random.Random) -> Graph:
    """Attach each block to a random earlier vertex, giving a block-tree."""
    labels: list[str] = []
    edges = []
    for idx, b in enumerate(parts):
        names = {x: f"b{idx}_{x}" for x in b.labels}
        if labels:
            names[rng.choice(b.labels)] = rng.choice(labels)
        labels += [v for v in names.values() if v not in labels]
        edges += [(names[x], names[y]) for x, y in b.edges()]
    return from_edge_list(labels, edges)


def test_solve_block_rungs():
    assert solve_block(complete(2)).source == "complete"
    sol = solve_block(cycle(7))
    assert (sol.value, sol.source) == (3, "cycle")
    assert is_mvd_coloring(cycle(7), sol.coloring)
    assert solve_block(wheel(6), STORE).source == "exact"
    with pytest.raises(InputError):
        solve_block(path(3))


def test_solve_block_capacity_names_block():
    with pytest.raises(CapacityError) as info:
        solve_block(wheel(13), STORE, cap=8)
    assert "order 13" in str(info.value)


def test_alternating_cycle():
    c = alternating_cycle_coloring(cycle(6))
    assert c.num_colors == 3 and is_mvd_coloring(cycle(6), c)


def test_two_pentagons():
    g = glue([cycle(5), cycle(5)], random.Random(1))
    assert g.n == 9
    r = mvd_compose(g, STORE)
    assert r.value == 3 == mvd_exact(g).value
    assert is_mvd_coloring(g, r.witness)


def test_trees_have_mvd_n(rng):
    for _ in range(20):
        n = rng.randint(2, 12)
        g = random_connected(n, 0.0, rng)
        r = mvd_compose(g, STORE)
        assert r.value == n and is_mvd_coloring(g, r.witness)


def test_fresh_colors_per_block(rng):
    for _ in range(30):
        g = random_connected(rng.randint(4, 10), 0.15, rng)
        r = mvd_compose(g, STORE)
        d = decompose(g)
        assert r.witness.num_colors == r.value
        assert is_mvd_coloring(g, r.witness)
        per_block = sum(v for _, v, _ in r.per_block)
        assert r.value == per_block - d.r + 1
        # colors shared between blocks are always colors carried by cut vertices
        cut_colors = {r.witness[c] for c in d.cut_vertices}
        for a in d.blocks:
            for b in d.blocks:
                if a.index < b.index:
                    ca = {r.witness[x] for x in a.vertices}
                    cb = {r.witness[x] for x in b.vertices}
                    assert ca & cb <= cut_colors


def test_compose_agrees_with_exact_on_random_graphs(rng):
    for _ in range(40):
        g = random_connected(rng.randint(2, 9), rng.choice([0.1, 0.2, 0.4]), rng)
        assert mvd_compose(g, STORE).value == mvd_exact(g).value


def test_partial_bounds():
    g = glue([wheel(13), cycle(4)], random.Random(3))
    with pytest.raises(CapacityError):
        mvd_compose(g, STORE, cap=8)
    bounds = mvd_bounds(g, STORE, cap=8)
    assert bounds.lower <= bounds.upper
    assert [row[1] for row in bounds.per_block].count(None) == 1
    # true value is 1 + 2 - 1 = 2
    assert bounds.lower <= 2 <= bounds.upper


def test_auto_method():
    r = solve(wheel(7), "auto", STORE)
    assert (r.value, r.method) == (1, "formula")
    r = solve(glue([cycle(5), complete(3)], random.Random(0)), "auto", STORE)
    assert r.method == "compose" and r.value == 2 + 3 - 1
    with pytest.raises(InputError):
        solve(cycle(5), "magic")
    with pytest.raises(InputError):
        solve(from_edge_list("abc", [("a", "b")]))
