"""Named graph families, their closed-form mvd values, and the extremal functions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .coloring import Coloring
from .errors import InputError
from .graph import Graph, bits, components, from_edge_list, is_complete, is_connected

FAMILIES = (
    "cycle",
    "path",
    "complete",
    "complete_multipartite",
    "wheel",
    "grid",
    "petersen",
    "theta",
    "complete_minus_edges",
    "join",
    "cartesian_product",
)

# Removed-edge shapes on v1..vn for complete_minus_edges.
MINUS_PATTERNS = {
    "G1": ((1, 2), (1, 3), (1, 4)),  # star K_{1,3}
    "G2": ((1, 2), (2, 3), (1, 3)),  # triangle
    "G3": ((1, 2), (2, 3), (3, 4)),  # path P4
    "G4": ((1, 2), (1, 3), (4, 5)),  # P3 plus a disjoint edge
    "G5": ((1, 2), (3, 4), (5, 6)),  # three disjoint edges
    "G6": ((1, 2), (2, 3), (3, 4), (4, 5)),  # path P5
}


class Undefined(enum.Enum):
    """No graph exists with the requested parameters."""

    UNDEFINED = "undefined"

    def __repr__(self) -> str:
        return "UNDEFINED"

    def __str__(self) -> str:
        return "undefined"


UNDEFINED = Undefined.UNDEFINED


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        object.__setattr__(self, "params", tuple(self.params))

    def __str__(self) -> str:
        return f"{self.family}:" + ",".join(str(p) for p in self.params)


def _ints(spec: FamilySpec, count: int | None = None, low: int = 1) -> list[int]:
    vals = list(spec.params)
    if count is not None and len(vals) != count:
        raise InputError(f"{spec.family} takes {count} integer parameter(s), got {len(vals)}")
    for v in vals:
        if not isinstance(v, int) or v < low:
            raise InputError(f"{spec.family} parameters must be integers >= {low}, got {v!r}")
    return vals


def _numbered(n: int, prefix: str = "v") -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs n >= 3")
    vs = _numbered(n)
    return from_edge_list(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InputError("a path needs n >= 1")
    vs = _numbered(n)
    return from_edge_list(vs, zip(vs, vs[1:]))


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("K_n needs n >= 1")
    vs = _numbered(n)
    return from_edge_list(vs, combinations(vs, 2))


def complete_multipartite(*parts: int) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise InputError("part sizes must be >= 1")
    groups = [[f"p{i}_{j}" for j in range(1, size + 1)] for i, size in enumerate(parts, 1)]
    labels = [x for grp in groups for x in grp]
    edges = [(a, b) for g1, g2 in combinations(groups, 2) for a in g1 for b in g2]
    return from_edge_list(labels, edges)


def wheel(n: int) -> Graph:
    """W_n: a hub joined to every vertex of C_{n-1}."""
    if n < 4:
        raise InputError("a wheel needs n >= 4")
    rim = _numbered(n - 1)
    edges = [(rim[i], rim[(i + 1) % (n - 1)]) for i in range(n - 1)]
    edges += [("h", v) for v in rim]
    return from_edge_list(["h"] + rim, edges)


def grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise InputError("grid dimensions must be >= 1")
    lab = [[f"x{i}_{j}" for j in range(1, cols + 1)] for i in range(1, rows + 1)]
    edges = []
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((lab[i][j], lab[i][j + 1]))
            if i + 1 < rows:
                edges.append((lab[i][j], lab[i + 1][j]))
    return from_edge_list([x for row in lab for x in row], edges)


def petersen() -> Graph:
    outer = "abcde"
    inner = "fghij"
    edges = [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
    edges += [(outer[i], inner[i]) for i in range(5)]
    edges += [(inner[i], inner[(i + 2) % 5]) for i in range(5)]
    return from_edge_list(outer + inner, edges)


def theta(*lengths: int) -> Graph:
    """P(n1, ..., nk): hubs u, v joined by k paths with n_i internal vertices."""
    if len(lengths) < 2 or any(n < 1 for n in lengths):
        raise InputError("theta graphs need k >= 2 paths with n_i >= 1 internal vertices")
    labels = ["u", "v"]
    edges = []
    for i, size in enumerate(lengths, 1):
        internal = [f"p{i}_{j}" for j in range(1, size + 1)]
        labels += internal
        chain = ["u"] + internal + ["v"]
        edges += zip(chain, chain[1:])
    return from_edge_list(labels, edges)


def _minus_edges(n: int, pattern: str) -> list[tuple[int, int]]:
    if pattern in MINUS_PATTERNS:
        removed = list(MINUS_PATTERNS[pattern])
    else:
        kind, _, count = pattern.partition(":")
        try:
            j = int(count)
        except ValueError:
            raise InputError(f"unknown edge-deletion pattern {pattern!r}") from None
        if kind == "star":
            if not 0 <= j <= n - 2:
                raise InputError("star:j needs 0 <= j <= n-2")
            removed = [(1, i) for i in range(2, j + 2)]
        elif kind == "matching":
            if j < 0 or 2 * j > n:
                raise InputError("matching:j needs 2j <= n")
            removed = [(2 * i + 1, 2 * i + 2) for i in range(j)]
        else:
            raise InputError(f"unknown edge-deletion pattern {pattern!r}")
    top = max((b for _, b in removed), default=0)
    if top > n:
        raise InputError(f"pattern {pattern} needs n >= {top}")
    return removed


def complete_minus_edges(n: int, pattern: str) -> Graph:
    removed = {frozenset(e) for e in _minus_edges(n, pattern)}
    vs = _numbered(n)
    edges = [(vs[a - 1], vs[b - 1]) for a, b in combinations(range(1, n + 1), 2) if frozenset((a, b)) not in removed]
    return from_edge_list(vs, edges)


def _disjoint_labels(g: Graph, h: Graph) -> list[str]:
    taken = set(g.labels)
    out = []
    for x in h.labels:
        while x in taken:
            x += "'"
        taken.add(x)
        out.append(x)
    return out


def join(g: Graph, h: Graph) -> Graph:
    hl = _disjoint_labels(g, h)
    edges = list(g.edges())
    rename = dict(zip(h.labels, hl))
    edges += [(rename[a], rename[b]) for a, b in h.edges()]
    edges += [(a, b) for a in g.labels for b in hl]
    return from_edge_list(list(g.labels) + hl, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    lab = {(a, b): f"{a}|{b}" for a in g.labels for b in h.labels}
    edges = [(lab[a, b], lab[a, c]) for a in g.labels for b, c in h.edges()]
    edges += [(lab[a, b], lab[c, b]) for b in h.labels for a, c in g.edges()]
    return from_edge_list(list(lab.values()), edges)


def generate(spec: FamilySpec) -> Graph:
    fam = spec.family
    if fam == "cycle":
        return cycle(*_ints(spec, 1, 3))
    if fam == "path":
        return path(*_ints(spec, 1))
    if fam == "complete":
        return complete(*_ints(spec, 1))
    if fam == "complete_multipartite":
        return complete_multipartite(*_ints(spec))
    if fam == "wheel":
        return wheel(*_ints(spec, 1, 4))
    if fam == "grid":
        return grid(*_ints(spec, 2))
    if fam == "petersen":
        _ints(spec, 0)
        return petersen()
    if fam == "theta":
        return theta(*_ints(spec))
    if fam == "complete_minus_edges":
        if len(spec.params) != 2 or not isinstance(spec.params[0], int):
            raise InputError("complete_minus_edges takes (n, pattern)")
        return complete_minus_edges(spec.params[0], str(spec.params[1]))
    if len(spec.params) != 2 or not all(isinstance(p, FamilySpec) for p in spec.params):
        raise InputError(f"{fam} takes two family specs")
    left, right = (generate(p) for p in spec.params)
    return join(left, right) if fam == "join" else cartesian_product(left, right)


# -- closed forms -------------------------------------------------------------


def _multipartite_mvd(parts: list[int]) -> int | None:
    parts = sorted(parts)
    n, k = sum(parts), len(parts)
    if all(p == 1 for p in parts):
        return n
    if k == 1:
        return None  # edgeless on >= 2 vertices: disconnected
    if parts[-2] == 1:
        return n - k + 2
    if k == 2:
        return 2
    return 1


def mvd_formula(spec: FamilySpec) -> int | None:
    """Closed-form mvd for the family instance, or None when none is known."""
    fam, p = spec.family, spec.params
    if fam == "cycle":
        n = p[0]
        return 3 if n == 3 else n // 2
    if fam in ("path", "complete"):
        return p[0]
    if fam == "wheel":
        return 4 if p[0] == 4 else 1
    if fam == "complete_multipartite":
        return _multipartite_mvd(list(p))
    if fam == "grid":
        rows, cols = p
        if rows == 1 or cols == 1:
            return rows * cols
        return 2
    if fam == "petersen":
        return 2
    if fam == "theta":
        if len(p) == 2:
            return (p[0] + p[1] + 2) // 2
        return None
    if fam == "complete_minus_edges":
        n, pattern = p
        kind, _, count = str(pattern).partition(":")
        if kind == "star":
            j = int(count)
            return n if j == 0 else j + 2
        if kind == "matching":
            j = int(count)
            return _multipartite_mvd([2] * j + [1] * (n - 2 * j))
        if pattern == "G1":
            return 5
        if pattern == "G4":
            return 2 if n == 5 else 1
        if pattern == "G5":
            return 1
        if pattern == "G6" and n >= 6:
            return 2
        return None
    if fam == "join":
        a, b = p
        fams = {a.family, b.family}
        if fams == {"complete"}:
            return a.params[0] + b.params[0]
        if fams == {"cycle", "complete"}:
            hub = a if a.family == "complete" else b
            rim = b if hub is a else a
            if hub.params[0] == 1:
                return mvd_formula(FamilySpec("wheel", (rim.params[0] + 1,)))
        return None
    if fam == "cartesian_product":
        a, b = p
        if a.family == b.family == "path":
            return mvd_formula(FamilySpec("grid", (a.params[0], b.params[0])))
        return None
    return None


# Small-order values for f_v and |E|_max, keyed by (n, k).
_EMAX_SMALL = {(1, 1): 0, (2, 2): 1, (3, 3): 3, (4, 2): 4, (4, 3): 5, (4, 4): 6}
_FV_SMALL = {
    (1, 1): 0,
    (2, 1): 1, (2, 2): 1,
    (3, 1): 2, (3, 2): 2, (3, 3): 2,
    (4, 1): 3, (4, 2): 3, (4, 3): 5, (4, 4): 6,
}


def _check_nk(n: int, k: int) -> None:
    if n < 1 or not 1 <= k <= n:
        raise InputError(f"need 1 <= k <= n, got n={n}, k={k}")


def f_v(n: int, k: int) -> int | Undefined:
    """Least size forcing mvd >= k on every connected graph of order n."""
    _check_nk(n, k)
    if n <= 4:
        return _FV_SMALL.get((n, k), UNDEFINED)
    full = n * (n - 1) // 2
    if k == 1:
        return n - 1
    if k <= 3:
        return full - 1
    return full


def emax(n: int, k: int) -> int | Undefined:
    """Largest size of a connected graph of order n with mvd exactly k."""
    _check_nk(n, k)
    if n <= 4:
        return _EMAX_SMALL.get((n, k), UNDEFINED)
    full = n * (n - 1) // 2
    if k == 1:
        return full - 2
    if k == 2:
        return 7 if n == 5 else full - 4
    if k < n:
        return full - k + 2
    return full


def block_bound(n: int, r: int, t: int) -> int:
    """floor((n + 2t - r + 1) / 2) for graphs whose blocks are minimal and triangle-free."""
    if r < 1 or not 0 <= t <= r:
        raise InputError("need r >= 1 and 0 <= t <= r")
    return (n + 2 * t - r + 1) // 2


def cycle_order(g: Graph) -> list[str]:
    """Vertices of a cycle graph in walking order from index 0 towards its lower neighbour."""
    if g.n < 3 or not is_connected(g) or any(d != 2 for d in g.degrees()):
        raise InputError("not a cycle")
    order = [0]
    prev, cur = -1, 0
    while True:
        nxt = [w for w in bits(g.adj[cur]) if w != prev][0]
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return [g.labels[i] for i in order]


def _complement_parts(g: Graph) -> list[list[str]] | None:
    """Parts of a complete multipartite graph, or None if g is not one."""
    full = g.full_mask
    comp = Graph(g.labels, [full & ~a & ~(1 << i) for i, a in enumerate(g.adj)])
    parts = [sorted(c, key=g.index) for c in components(comp)]
    for part in parts:
        pm = g.mask(part)
        if any(g.adj[g.index(x)] & pm for x in part):
            return None
    return parts


def recognize(g: Graph) -> tuple[FamilySpec, int, Coloring] | None:
    """Match g against the families with closed forms and build a witness coloring.

    Covers complete graphs, cycles, wheels and complete multipartite graphs;
    returns (spec, mvd, witness) or None.
    """
    n = g.n
    if n == 0 or not is_connected(g):
        return None
    if is_complete(g):
        return FamilySpec("complete", (n,)), n, Coloring({x: i for i, x in enumerate(g.labels, 1)})
    degs = g.degrees()
    if n >= 4 and all(d == 2 for d in degs):
        k = n // 2
        witness = Coloring({x: j % k + 1 for j, x in enumerate(cycle_order(g))})
        return FamilySpec("cycle", (n,)), k, witness
    if n >= 5 and degs.count(n - 1) == 1 and sorted(degs)[:-1] == [3] * (n - 1):
        hub = g.labels[degs.index(n - 1)]
        rim = Graph(*_drop(g, hub))
        if is_connected(rim) and all(d == 2 for d in rim.degrees()):
            return FamilySpec("wheel", (n,)), 1, Coloring({x: 1 for x in g.labels})
    parts = _complement_parts(g)
    if parts is not None and len(parts) >= 2:
        sizes = sorted(len(p) for p in parts)
        spec = FamilySpec("complete_multipartite", tuple(sizes))
        value = _multipartite_mvd(sizes)
        big = [p for p in parts if len(p) >= 2]
        if len(big) == 1:
            colors = {x: i for i, x in enumerate(big[0], 1)}
            colors.update({x: len(big[0]) + 1 for x in g.labels if x not in colors})
        elif len(parts) == 2:
            colors = {x: i for i, part in enumerate(parts, 1) for x in part}
        else:
            colors = {x: 1 for x in g.labels}
        return spec, value, Coloring({x: colors[x] for x in g.labels})
    return None


def _drop(g: Graph, label: str) -> tuple[list[str], list[int]]:
    i = g.index(label)
    keep = [j for j in range(g.n) if j != i]
    pos = {old: new for new, old in enumerate(keep)}
    adj = [sum(1 << pos[w] for w in bits(g.adj[j]) if w != i) for j in keep]
    return [g.labels[j] for j in keep], adj


def parse_spec(family: str, args: list[str]) -> FamilySpec:
    """Build a spec from CLI words; join/cartesian_product operands look like ``cycle:5``."""
    if family in ("join", "cartesian_product"):
        if len(args) != 2:
            raise InputError(f"{family} needs two operands like cycle:5 complete:1")
        subs = []
        for arg in args:
            name, _, rest = arg.partition(":")
            subs.append(parse_spec(name, [x for x in rest.split(",") if x]))
        return FamilySpec(family, tuple(subs))
    params: list = []
    for a in args:
        try:
            params.append(int(a))
        except ValueError:
            params.append(a)
    return FamilySpec(family, tuple(params))
