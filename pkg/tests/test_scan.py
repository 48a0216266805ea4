import pytest

import mvdcolor.scan as scan
from mvdcolor.errors import CapacityError, InputError
from mvdcolor.families import UNDEFINED
from mvdcolor.graph import is_connected
from mvdcolor.scan import decode, describe, mvd_table, scan_extremal, scan_property, to_graph, vertex_pairs

# labeled connected graphs on n vertices, counted independently below
KNOWN_CONNECTED = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}


def connected_counts(limit: int) -> dict[int, int]:
    """c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2)."""
    from math import comb

    c: dict[int, int] = {}
    for n in range(1, limit + 1):
        total = 2 ** comb(n, 2)
        c[n] = total - sum(comb(n - 1, k - 1) * c[k] * 2 ** comb(n - k, 2) for k in range(1, n))
    return c


def test_recurrence_oracle_agrees_with_known_counts():
    assert connected_counts(6) == KNOWN_CONNECTED


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_is_complete(n):
    oracle = connected_counts(n)[n]
    brute = sum(is_connected(to_graph(n, code)) for code in range(1 << (n * (n - 1) // 2)))
    assert brute == oracle == len(mvd_table(n))


def test_decode_matches_pair_order():
    n = 4
    pairs = vertex_pairs(n)
    for e, (i, j) in enumerate(pairs):
        adj = decode(n, 1 << e)
        assert adj[i] == 1 << j and adj[j] == 1 << i
    assert describe(3, 0b101) == "n=3 code=5 edges=[v1-v2,v2-v3]"


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_extremal_small(n):
    res = scan_extremal(n)
    assert res.ok, res.counterexamples
    assert res.connected == KNOWN_CONNECTED[n]
    assert all(line.endswith("ok") for line in res.machine_lines())


def test_extremal_n4_rows():
    res = scan_extremal(4)
    assert [res.fv_observed[k] for k in range(1, 5)] == [3, 3, 5, 6]
    assert res.emax_observed[1] is UNDEFINED


def test_extremal_detects_wrong_formula(monkeypatch):
    monkeypatch.setattr(scan, "emax", lambda n, k: 0)
    assert not scan_extremal(4).ok


def test_property_scan_detects_violations(monkeypatch):
    monkeypatch.setattr(scan, "block_bound", lambda n, r, t: 1)
    res = scan_property(5, "block-bound")
    assert not res.ok and "block bound" in res.counterexamples[0]


@pytest.mark.parametrize("prop", sorted(scan.PROPERTIES))
def test_properties_hold_at_n5(prop):
    res = scan_property(5, prop)
    assert res.ok, res.counterexamples[:3]
    assert res.connected == (207 if prop in scan.BOUND_PROPS else 728)


@pytest.mark.parametrize("n", range(1, 6))
def test_triangle_free_enumeration(n):
    brute = {c for c in range(1 << (n * (n - 1) // 2)) if scan._triangle_free_adj(decode(n, c))}
    got = [c for c, adj in scan.triangle_free_codes(n)]
    assert len(got) == len(brute) and set(got) == brute
    split = [c for p in range(4) for c, _ in scan.triangle_free_codes(n, 2, p)] if n >= 3 else got
    assert sorted(split) == sorted(got)
    for c, adj in scan.triangle_free_codes(n):
        assert adj == decode(n, c)


def test_bound_scans_check_the_same_graphs_as_a_direct_filter():
    from mvdcolor.blocks import decompose
    from mvdcolor.graph import is_minimally_2_connected

    n = 6
    want_min = want_block = 0
    for code in range(1 << 15):
        g = to_graph(n, code)
        if not is_connected(g) or not scan._triangle_free_adj(g.adj):
            continue
        d = decompose(g)
        want_block += all(b.is_trivial or is_minimally_2_connected(b.graph) for b in d.blocks)
        want_min += is_minimally_2_connected(g)
    assert scan_property(n, "minimal-block-bound").checked == want_min
    assert scan_property(n, "block-bound").checked == want_block


def test_limits():
    with pytest.raises(CapacityError):
        scan_extremal(7)
    with pytest.raises(CapacityError):
        scan_property(8, "bound")
    with pytest.raises(InputError):
        scan_property(4, "nonsense")
