from itertools import combinations

import networkx as nx
import pytest
from oracles import random_connected

from mvdcolor.blocks import block_cut_order, decompose, root_block_index
from mvdcolor.errors import InputError
from mvdcolor.families import complete, cycle, path
from mvdcolor.graph import Graph, from_edge_list, induced_subgraph, is_2_connected, is_connected, load_graph

EXAMPLE17 = load_graph(__import__("pathlib").Path(__file__).parent / "data" / "example17.mvdg")


def brute_cut_vertices(g: Graph) -> set[str]:
    return {v for v in g.labels if not is_connected(induced_subgraph(g, [x for x in g.labels if x != v]))}


def brute_blocks(g: Graph) -> set[frozenset[str]]:
    """Maximal vertex sets inducing K2 or a 2-connected subgraph (n <= 9)."""
    good = []
    for r in range(2, g.n + 1):
        for s in combinations(g.labels, r):
            h = induced_subgraph(g, s)
            if (r == 2 and h.m == 1) or (r >= 3 and is_2_connected(h)):
                good.append(frozenset(s))
    return {s for s in good if not any(s < t for t in good)}


def test_example17_blocks():
    d = decompose(EXAMPLE17)
    assert d.cut_vertices == ("H",)
    assert [b.vertices for b in d.blocks] == [
        ("I", "M", "D", "O", "C", "L", "Q", "B", "H"),
        ("K", "P", "J", "N", "H", "G", "F", "E", "A"),
    ]
    assert (d.r, d.t) == (2, 0)


def test_path_and_complete():
    d = decompose(path(4))
    assert d.r == 3 and d.t == 3
    assert set(d.cut_vertices) == {"v2", "v3"}
    assert decompose(complete(4)).r == 1
    single = decompose(Graph(["a"], [0]))
    assert single.r == 1 and single.cut_vertices == ()


def test_rejects_disconnected():
    with pytest.raises(InputError):
        decompose(from_edge_list("abc", [("a", "b")]))


def test_matches_brute_force(rng):
    for _ in range(80):
        g = random_connected(rng.randint(2, 9), rng.choice([0.05, 0.15, 0.3]), rng)
        d = decompose(g)
        assert set(d.cut_vertices) == brute_cut_vertices(g)
        assert {frozenset(b.vertices) for b in d.blocks} == brute_blocks(g)


def test_matches_networkx(rng):
    for _ in range(100):
        g = random_connected(rng.randint(2, 25), rng.choice([0.02, 0.08, 0.2]), rng)
        h = nx.Graph(g.edges())
        h.add_nodes_from(g.labels)
        d = decompose(g)
        assert set(d.cut_vertices) == set(nx.articulation_points(h))
        assert {frozenset(b.vertices) for b in d.blocks} == {frozenset(c) for c in nx.biconnected_components(h)}


def test_block_cut_tree_is_a_tree(rng):
    for _ in range(40):
        g = random_connected(rng.randint(3, 15), 0.1, rng)
        d = decompose(g)
        nodes = len(d.tree)
        edges = sum(len(v) for v in d.tree.values()) // 2
        assert edges == nodes - 1
        order = block_cut_order(d, root_block_index(d))
        assert sorted(b.index for b, _ in order) == list(range(d.r))
        assert order[0][1] is None
        seen = set(order[0][0].vertices)
        for block, entry in order[1:]:
            assert entry in d.cut_vertices and entry in block.vertices
            # exactly one vertex of each later block is already placed
            assert set(block.vertices) & seen == {entry}
            seen |= set(block.vertices)


def test_cut_vertex_sits_last_in_block():
    d = decompose(cycle(4))
    assert d.blocks[0].vertices[-1] == "v1"
