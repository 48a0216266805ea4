"""MVD-coloring verification and exact mvd by set-partition enumeration.

A monochromatic x-y cut exists iff some color class C, with x and y taken
out, separates x from y: every monochromatic cut lies inside one class, and
enlarging a cut that avoids x and y keeps it a cut.  Both the verifier and
the exhaustive search rely on this whole-class test.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from .coloring import Coloring
from .errors import CapacityError, InputError
from .graph import Graph, VertexSet, _components_mask, _kappa_plus, bits, is_complete, is_connected, reach

DEFAULT_CAP = 11


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`is_mvd_coloring`; falsy when a pair has no cut."""

    ok: bool
    pair: tuple[str, str] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class SolveReport:
    value: int
    witness: Coloring
    method: str
    per_block: list[tuple[int, int, str]] | None = field(default=None)

    def as_dict(self) -> dict:
        out = {"mvd": self.value, "method": self.method, "coloring": dict(self.witness)}
        if self.per_block is not None:
            out["blocks"] = [{"block": b, "mvd": v, "source": s} for b, v, s in self.per_block]
        return out


def _check_coloring_domain(g: Graph, c: Mapping[str, int]) -> None:
    if set(c) != set(g.labels):
        missing = sorted(set(g.labels) - set(c))
        extra = sorted(set(c) - set(g.labels))
        raise InputError(f"coloring domain differs from V(G); missing={missing} extra={extra}")


def _class_masks(g: Graph, c: Mapping[str, int]) -> list[int]:
    groups: dict[int, int] = {}
    for i, label in enumerate(g.labels):
        groups[c[label]] = groups.get(c[label], 0) | 1 << i
    return [groups[k] for k in sorted(groups)]


def has_monochromatic_cut(g: Graph, c: Mapping[str, int], x: str, y: str) -> VertexSet | None:
    """A monochromatic x-y vertex cut (a whole class minus x, y), or None."""
    xi, yi = g.index(x), g.index(y)
    if xi == yi:
        raise InputError("x and y must be distinct")
    if g.adj[xi] >> yi & 1:
        raise InputError(f"{x!r} and {y!r} are adjacent")
    _check_coloring_domain(g, c)
    ends = 1 << xi | 1 << yi
    for cls in _class_masks(g, c):
        cut = cls & ~ends
        if not reach(g.adj, xi, g.full_mask & ~cut) >> yi & 1:
            return VertexSet(g.labels_of(cut))
    return None


def is_mvd_coloring(g: Graph, c: Mapping[str, int]) -> Verdict:
    """Check every nonadjacent pair for a monochromatic cut."""
    _check_coloring_domain(g, c)
    classes = _class_masks(g, c)
    full = g.full_mask
    for xi, yi in g.nonadjacent_pairs():
        ends = 1 << xi | 1 << yi
        if not any(not reach(g.adj, xi, full & ~(cls & ~ends)) >> yi & 1 for cls in classes):
            return Verdict(False, (g.labels[xi], g.labels[yi]))
    return Verdict(True)


def mvd_upper_bound(g: Graph) -> int:
    """n for complete graphs, otherwise n - kappa_plus + 1."""
    if is_complete(g):
        return g.n
    return g.n - _kappa_plus(g.adj) + 1


def restricted_growth_strings(n: int):
    """Yield every restricted growth string of length ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(a)
            return
        for v in range(top + 2):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    a[0] = 0
    yield from rec(1, 0)


class CutTable:
    """Per-graph cache answering "which nonadjacent pairs does class C cut?".

    ``separated(C)`` is a bitmask over :attr:`pairs`; bit p is set when
    removing ``C`` minus the endpoints of pair p disconnects them.
    """

    def __init__(self, adj: tuple[int, ...]):
        n = len(adj)
        self.adj = adj
        self.n = n
        self.full = (1 << n) - 1
        self.pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if not adj[i] >> j & 1]
        self.all_pairs = (1 << len(self.pairs)) - 1
        self._comp: dict[int, list[int]] = {}
        self._sep: dict[int, int] = {}

    def _components(self, removed: int) -> list[int]:
        comp = self._comp.get(removed)
        if comp is None:
            comp = [0] * self.n
            for cm in _components_mask(self.adj, self.full & ~removed):
                for v in bits(cm):
                    comp[v] = cm
            self._comp[removed] = comp
        return comp

    def separated(self, cls: int) -> int:
        out = self._sep.get(cls)
        if out is None:
            out = 0
            for p, (x, y) in enumerate(self.pairs):
                comp = self._components(cls & ~(1 << x | 1 << y))
                if not comp[x] >> y & 1:
                    out |= 1 << p
            self._sep[cls] = out
        return out


def best_partition(adj: tuple[int, ...], bound: int | None = None, floor: int = 0) -> tuple[int, tuple[int, ...]]:
    """Largest MVD partition of a connected graph given by neighbourhood masks.

    Returns (number of parts, restricted growth string); ties go to the
    lexicographically first string.  The search stops as soon as ``bound``
    parts are reached.  With ``floor`` set, only partitions with more than
    ``floor`` parts are sought and ``(0, ())`` means none exists.
    """
    n = len(adj)
    bound = n if bound is None else bound
    table = CutTable(adj)
    sep = table.separated
    want = table.all_pairs
    classes: list[int] = []
    assign = [0] * n
    best = floor
    best_rgs: tuple[int, ...] = ()

    def rec(i: int) -> bool:
        nonlocal best, best_rgs
        k = len(classes)
        if k + n - i <= best:
            return False
        if i == n:
            cov = 0
            for cls in classes:
                cov |= sep(cls)
            if cov == want:
                best, best_rgs = k, tuple(assign)
                return best >= bound
            return False
        bit = 1 << i
        for j in range(k):
            classes[j] |= bit
            assign[i] = j
            stop = rec(i + 1)
            classes[j] ^= bit
            if stop:
                return True
        classes.append(bit)
        assign[i] = k
        stop = rec(i + 1)
        classes.pop()
        return stop

    rec(0)
    return (best, best_rgs) if best_rgs else (0, ())


def mvd_exact(g: Graph, cap: int = DEFAULT_CAP) -> SolveReport:
    """mvd(G) by scanning every set partition of V(G)."""
    if g.n == 0:
        raise InputError("empty graph")
    if not is_connected(g):
        raise InputError("mvd is only defined for connected graphs")
    if g.n > cap:
        raise CapacityError(f"exact solver limited to n <= {cap}, got n = {g.n}", n=g.n, cap=cap)
    value, rgs = best_partition(g.adj, mvd_upper_bound(g))
    witness = Coloring({label: part + 1 for label, part in zip(g.labels, rgs)})
    return SolveReport(value, witness, "exact")
