import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_is_mvd, brute_mvd, random_connected

from mvdcolor.coloring import Coloring
from mvdcolor.errors import CapacityError, InputError
from mvdcolor.families import complete, cycle, path, petersen, theta, wheel
from mvdcolor.graph import from_edge_list
from mvdcolor.solver import (
    best_partition,
    has_monochromatic_cut,
    is_mvd_coloring,
    mvd_exact,
    mvd_upper_bound,
    restricted_growth_strings,
)

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


@pytest.mark.parametrize("n", range(0, 9))
def test_rgs_count_is_bell(n):
    strings = list(restricted_growth_strings(n))
    assert len(strings) == BELL[n]
    assert strings == sorted(strings)
    for s in strings:
        top = -1
        for v in s:
            assert v <= top + 1
            top = max(top, v)


def test_monochromatic_cut_on_c4():
    g = cycle(4)
    c = Coloring({"v1": 1, "v2": 2, "v3": 1, "v4": 2})
    assert has_monochromatic_cut(g, c, "v1", "v3") == frozenset({"v2", "v4"})
    bad = Coloring({"v1": 1, "v2": 2, "v3": 3, "v4": 4})
    assert has_monochromatic_cut(g, bad, "v1", "v3") is None
    with pytest.raises(InputError):
        has_monochromatic_cut(g, c, "v1", "v2")


def test_verdict_names_failing_pair():
    g = cycle(4)
    verdict = is_mvd_coloring(g, Coloring({"v1": 1, "v2": 2, "v3": 3, "v4": 4}))
    assert not verdict and verdict.pair == ("v1", "v3")
    assert is_mvd_coloring(path(3), Coloring({"v1": 1, "v2": 2, "v3": 3}))


def test_domain_mismatch():
    with pytest.raises(InputError):
        is_mvd_coloring(path(3), Coloring({"v1": 1, "v2": 1}))


def test_exact_rejects_bad_inputs():
    with pytest.raises(InputError):
        mvd_exact(from_edge_list("abc", [("a", "b")]))
    with pytest.raises(CapacityError):
        mvd_exact(cycle(12))


def test_exact_small_values():
    assert mvd_exact(complete(5)).value == 5
    assert mvd_exact(path(6)).value == 6
    assert mvd_exact(cycle(7)).value == 3
    assert mvd_exact(wheel(6)).value == 1
    assert mvd_exact(petersen()).value == 2
    assert mvd_exact(theta(2, 1)).value == 2


def test_witness_is_first_optimal_rgs():
    g = cycle(4)
    report = mvd_exact(g)
    assert dict(report.witness) == {"v1": 1, "v2": 2, "v3": 1, "v4": 2}
    n = g.n
    for rgs in restricted_growth_strings(n):
        if max(rgs) + 1 == report.value:
            c = Coloring({x: p + 1 for x, p in zip(g.labels, rgs)})
            if is_mvd_coloring(g, c):
                assert rgs == tuple(report.witness[x] - 1 for x in g.labels)
                break


def test_upper_bound_caps_search():
    g = theta(1, 1, 1)
    assert mvd_upper_bound(g) == 5 - 3 + 1
    value, _ = best_partition(g.adj, bound=1)
    assert value == 1


def test_exact_matches_definition_oracle(rng):
    for _ in range(50):
        g = random_connected(rng.randint(2, 6), rng.choice([0.1, 0.3, 0.6]), rng)
        report = mvd_exact(g)
        assert report.value == brute_mvd(g)
        parts = [sorted(cls) for cls in report.witness.classes]
        assert brute_is_mvd(g, parts)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 7), st.floats(0.0, 0.8), st.integers(0, 10**6), st.data())
def test_verifier_matches_definition(n, p, seed, data):
    import random

    g = random_connected(n, p, random.Random(seed))
    colors = data.draw(st.lists(st.integers(1, 3), min_size=n, max_size=n))
    c = Coloring(dict(zip(g.labels, colors)))
    parts = [sorted(cls) for cls in c.classes]
    assert bool(is_mvd_coloring(g, c)) == brute_is_mvd(g, parts)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.floats(0.0, 1.0), st.integers(0, 10**6))
def test_witness_verifies_and_respects_bound(n, p, seed):
    import random

    g = random_connected(n, p, random.Random(seed))
    report = mvd_exact(g)
    assert is_mvd_coloring(g, report.witness)
    assert report.witness.num_colors == report.value
    assert 1 <= report.value <= mvd_upper_bound(g)


def test_c5_three_colors_fails_somewhere():
    g = cycle(5)
    c = Coloring(dict(zip(g.labels, [1, 2, 3, 1, 2])))
    # v2 and v5 are split by class 1 = {v1, v4}; another pair is the one that fails
    assert has_monochromatic_cut(g, c, "v2", "v5") == frozenset({"v1", "v4"})
    verdict = is_mvd_coloring(g, c)
    assert not verdict
    assert has_monochromatic_cut(g, c, *verdict.pair) is None
    assert not brute_is_mvd(g, [sorted(cls) for cls in c.classes])
    assert is_mvd_coloring(g, Coloring(dict(zip(g.labels, [1, 2, 1, 2, 1]))))


def test_path_middle_is_the_cut():
    c = Coloring({"v1": 1, "v2": 1, "v3": 1})
    assert has_monochromatic_cut(path(3), c, "v1", "v3") == frozenset({"v2"})


def test_upper_bound_examples():
    assert mvd_upper_bound(cycle(6)) == 5
    assert mvd_upper_bound(complete(5)) == 5
    assert mvd_upper_bound(petersen()) == 8


def test_disconnected_pairs_are_vacuously_separated():
    g = from_edge_list("abc", [("a", "b")])
    assert is_mvd_coloring(g, Coloring({"a": 1, "b": 2, "c": 3}))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.floats(0.0, 1.0), st.integers(0, 10**6), st.permutations(range(1, 9)))
def test_color_ids_are_names_only(n, p, seed, perm):
    import random

    g = random_connected(n, p, random.Random(seed))
    c = mvd_exact(g).witness
    renamed = Coloring({x: perm[c[x] - 1] for x in g.labels})
    assert bool(is_mvd_coloring(g, renamed))


def test_bound_and_completeness_on_random_graphs(rng):
    from mvdcolor.blocks import decompose
    from mvdcolor.graph import is_minimally_2_connected

    for _ in range(60):
        g = random_connected(rng.randint(4, 9), rng.choice([0.1, 0.25, 0.4]), rng)
        value = mvd_exact(g).value
        assert 1 <= value <= mvd_upper_bound(g)
        all_complete = all(b.graph.m == b.order * (b.order - 1) // 2 for b in decompose(g).blocks)
        assert (value == g.n) == all_complete
        if is_minimally_2_connected(g):
            assert value <= g.n // 2
