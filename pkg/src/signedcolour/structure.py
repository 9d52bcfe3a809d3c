"""Colourings built from forest partitions, and the extremal family ``G_n``.

Each ``colour_from_*`` function takes a partition (validated against the
underlying graph) and returns a proper colouring of the signed graph.  The
``brute_*`` searches supply such partitions for small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .colour import Colouring, ColouringError, check_proper, switch_colouring
from .graph import NotSimpleError, SignedGraph, SignedGraphError, forest_switch_set

DEFAULT_CAP = 14


class InvalidPartition(SignedGraphError):
    pass


class InvalidForestPair(InvalidPartition):
    pass


class NotAcyclic(InvalidPartition):
    pass


class TooLarge(SignedGraphError):
    pass


@dataclass(frozen=True)
class VertexForestPartition:
    parts: tuple[frozenset[int], ...]

    def __init__(self, parts: Iterable[Iterable[int]]):
        object.__setattr__(self, "parts", tuple(frozenset(p) for p in parts))


@dataclass(frozen=True)
class EdgeForestPair:
    """Two edge sets given as vertex pairs ``(u, v)`` with ``u < v``."""

    f1: frozenset[tuple[int, int]]
    f2: frozenset[tuple[int, int]]

    def __init__(self, f1: Iterable[tuple[int, int]], f2: Iterable[tuple[int, int]]):
        object.__setattr__(self, "f1", frozenset((min(e), max(e)) for e in f1))
        object.__setattr__(self, "f2", frozenset((min(e), max(e)) for e in f2))


@dataclass(frozen=True)
class AcyclicColouring:
    """Colours ``1..n_colours`` on the underlying graph."""

    values: tuple[int, ...]
    n_colours: int

    def __init__(self, values: Sequence[int], n_colours: int | None = None):
        values = tuple(values)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "n_colours", n_colours if n_colours is not None else max(values, default=0))

    def classes(self) -> list[frozenset[int]]:
        return [frozenset(v for v, c in enumerate(self.values) if c == i) for i in range(1, self.n_colours + 1)]


@dataclass(frozen=True)
class IndependentForestPartition:
    independent: frozenset[int]
    forest: frozenset[int]

    def __init__(self, independent: Iterable[int], forest: Iterable[int]):
        object.__setattr__(self, "independent", frozenset(independent))
        object.__setattr__(self, "forest", frozenset(forest))


# -- helpers -----------------------------------------------------------------


def _require_simple(g: SignedGraph) -> None:
    if not g.is_simple:
        raise NotSimpleError("partition constructions need a simple graph")


def _pairs(g: SignedGraph) -> set[tuple[int, int]]:
    return set(g.underlying_pairs)


def _is_forest(n: int, pairs: Iterable[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def induces_forest(g: SignedGraph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return _is_forest(g.n, [(u, v) for u, v in _pairs(g) if u in vs and v in vs])


def is_independent(g: SignedGraph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return not any(u in vs and v in vs for u, v in _pairs(g))


def _covers(g: SignedGraph, parts: Sequence[frozenset[int]]) -> bool:
    seen: set[int] = set()
    for p in parts:
        if seen & p:
            return False
        seen |= p
    return seen == set(g.vertices)


def _induced_edge_indices(g: SignedGraph, vertices: frozenset[int]) -> list[int]:
    return [i for i, (u, v, _) in enumerate(g.edges) if u in vertices and v in vertices]


def _finish(g: SignedGraph, phi: Sequence[int]) -> Colouring:
    bad = check_proper(g, phi)
    if bad is not None:  # pragma: no cover - guarded by the constructions
        raise ColouringError(f"construction produced an improper colouring at {bad}")
    return tuple(phi)


# -- validation --------------------------------------------------------------


def validate_vertex_forest_partition(g: SignedGraph, p: VertexForestPartition) -> None:
    if not _covers(g, p.parts):
        raise InvalidPartition("parts must be disjoint and cover every vertex")
    for i, part in enumerate(p.parts, 1):
        if not induces_forest(g, part):
            raise InvalidPartition(f"part {i} induces a cycle")


def validate_edge_forest_pair(g: SignedGraph, f: EdgeForestPair) -> None:
    edges = _pairs(g)
    if f.f1 & f.f2 or (f.f1 | f.f2) != edges:
        raise InvalidForestPair("forests must be edge-disjoint with union equal to the edge set")
    for name, fs in (("FOREST1", f.f1), ("FOREST2", f.f2)):
        if not _is_forest(g.n, fs):
            raise InvalidForestPair(f"{name} contains a cycle")


def validate_acyclic(g: SignedGraph, a: AcyclicColouring) -> None:
    if len(a.values) != g.n or any(not 1 <= c <= a.n_colours for c in a.values):
        raise NotAcyclic(f"colours must lie in 1..{a.n_colours} on every vertex")
    for u, v in _pairs(g):
        if a.values[u] == a.values[v]:
            raise NotAcyclic(f"edge ({u}, {v}) joins equal colours")
    classes = a.classes()
    for c1, c2 in combinations(range(len(classes)), 2):
        if not induces_forest(g, classes[c1] | classes[c2]):
            raise NotAcyclic(f"colours {c1 + 1} and {c2 + 1} induce a cycle")


def validate_independent_forest(g: SignedGraph, p: IndependentForestPartition) -> None:
    if not _covers(g, [p.independent, p.forest]):
        raise InvalidPartition("U and W must partition the vertex set")
    if not is_independent(g, p.independent):
        raise InvalidPartition("U is not independent")
    if not induces_forest(g, p.forest):
        raise InvalidPartition("W does not induce a forest")


# -- constructions -----------------------------------------------------------


def construct_sharpness_graph(n: int) -> SignedGraph:
    """``G_n``: an all-positive ``K_n``, ``n-1`` all-negative ``K_n`` copies, and
    positive edges between non-corresponding vertices of different copies.

    Vertex ``v_{i,j}`` (copy ``i``, position ``j``, 1-based) has index
    ``(i-1)*n + (j-1)``.  Its chromatic number is ``2n - 1``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")

    def idx(i, j):
        return (i - 1) * n + (j - 1)

    edges = []
    for i in range(1, n + 1):
        sign = 1 if i == 1 else -1
        for j, k in combinations(range(1, n + 1), 2):
            edges.append((idx(i, j), idx(i, k), sign))
    for i, i2 in combinations(range(1, n + 1), 2):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if j != k:
                    edges.append((idx(i, j), idx(i2, k), 1))
    return SignedGraph(n * n, edges)


def colour_from_vertex_forest_partition(g: SignedGraph, p: VertexForestPartition) -> Colouring:
    """Switch each part's induced forest all-negative and give part ``i`` colour ``i``.

    Uses colours from ``M_{2k}`` for ``k`` parts: inside a part every edge is
    negative and both ends equal, across parts absolute values differ.
    """
    _require_simple(g)
    validate_vertex_forest_partition(g, p)
    flips: set[int] = set()
    phi = [0] * g.n
    for i, part in enumerate(p.parts, 1):
        flips |= forest_switch_set(g, _induced_edge_indices(g, part), target=-1)
        for v in part:
            phi[v] = i
    return _finish(g, switch_colouring(phi, flips))


def _two_colour_forest(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    col = [0] * n
    for r in range(n):
        if col[r]:
            continue
        col[r] = 1
        stack = [r]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if not col[w]:
                    col[w] = 3 - col[x]
                    stack.append(w)
    return col


def colour_from_two_edge_forests(g: SignedGraph, f: EdgeForestPair) -> Colouring:
    """Switch ``F1`` all-negative, then properly 2-colour ``F2`` with ``{1, 2}``."""
    _require_simple(g)
    validate_edge_forest_pair(g, f)
    f1_idx = [i for i, (u, v, _) in enumerate(g.edges) if (min(u, v), max(u, v)) in f.f1]
    flips = forest_switch_set(g, f1_idx, target=-1)
    return _finish(g, switch_colouring(_two_colour_forest(g.n, f.f2), flips))


def colour_from_acyclic(g: SignedGraph, a: AcyclicColouring) -> Colouring:
    """Pair acyclic colour classes ``{2i-1, 2i}`` into forest parts; an odd
    leftover class gets colour 0.  Result lies in ``M_n`` for ``n`` acyclic colours."""
    _require_simple(g)
    validate_acyclic(g, a)
    classes = a.classes()
    n = a.n_colours
    parts = [classes[2 * i] | classes[2 * i + 1] for i in range(n // 2)]
    flips: set[int] = set()
    phi = [0] * g.n
    for i, part in enumerate(parts, 1):
        flips |= forest_switch_set(g, _induced_edge_indices(g, part), target=-1)
        for v in part:
            phi[v] = i
    # vertices of the odd class n keep 0; the class is independent
    return _finish(g, switch_colouring(phi, flips))


def colour_from_independent_forest_partition(g: SignedGraph, p: IndependentForestPartition) -> Colouring:
    """Switch the forest on ``W`` all-negative; colour ``U`` with 0 and ``W`` with 1."""
    _require_simple(g)
    validate_independent_forest(g, p)
    flips = forest_switch_set(g, _induced_edge_indices(g, p.forest), target=-1)
    phi = [1 if v in p.forest else 0 for v in g.vertices]
    return _finish(g, switch_colouring(phi, flips))


# -- brute-force partition oracles -------------------------------------------


def _guard(g: SignedGraph, cap: int) -> None:
    _require_simple(g)
    if g.n > cap:
        raise TooLarge(f"{g.n} vertices exceeds the brute-force cap of {cap}")


class _DSU:
    """Union-find with an undo log, for backtracking."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.log: list[int] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, u: int, v: int) -> bool:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        self.parent[ru] = rv
        self.log.append(ru)
        return True

    def undo(self) -> None:
        x = self.log.pop()
        self.parent[x] = x


def brute_acyclic_colouring(g: SignedGraph, n: int, cap: int = DEFAULT_CAP) -> AcyclicColouring | None:
    """Exhaustive search for an acyclic ``n``-colouring of the underlying graph."""
    _guard(g, cap)
    if g.n == 0:
        return AcyclicColouring((), n)
    nb = g.neighbours
    order = sorted(g.vertices, key=lambda v: (-len(nb[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    back = {v: [w for w in nb[v] if pos[w] < pos[v]] for v in order}
    col = [0] * g.n
    # one union-find per unordered colour pair
    dsu = {(c, d): _DSU(g.n) for c, d in combinations(range(1, n + 1), 2)}

    def key(c, d):
        return (c, d) if c < d else (d, c)

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {col[w] for w in back[v]}
        for c in range(1, min(used + 1, n) + 1):
            if c in taken:
                continue
            joined: list[tuple[int, int]] = []
            ok = True
            for w in back[v]:
                k = key(c, col[w])
                if not dsu[k].union(v, w):
                    ok = False
                    break
                joined.append(k)
            if ok:
                col[v] = c
                if extend(i + 1, max(used, c)):
                    return True
                col[v] = 0
            for k in reversed(joined):
                dsu[k].undo()
        return False

    if not extend(0, 0):
        return None
    return AcyclicColouring(col, n)


def _two_edge_forests(g: SignedGraph) -> EdgeForestPair | None:
    pairs = sorted(_pairs(g))
    if len(pairs) > 2 * max(g.n - 1, 0):
        return None
    forests = (_DSU(g.n), _DSU(g.n))
    side = [0] * len(pairs)

    def extend(i: int) -> bool:
        if i == len(pairs):
            return True
        u, v = pairs[i]
        for f in (0, 1):
            if forests[f].union(u, v):
                side[i] = f
                if extend(i + 1):
                    return True
                forests[f].undo()
        return False

    if not extend(0):
        return None
    return EdgeForestPair([e for e, s in zip(pairs, side) if s == 0], [e for e, s in zip(pairs, side) if s == 1])


def _vertex_forests(g: SignedGraph, k: int) -> VertexForestPartition | None:
    nb = g.neighbours
    part = [-1] * g.n
    dsu = [_DSU(g.n) for _ in range(k)]

    def extend(v: int, used: int) -> bool:
        if v == g.n:
            return True
        for p in range(min(used + 1, k)):
            done = 0
            ok = True
            for w in nb[v]:
                if w < v and part[w] == p:
                    if not dsu[p].union(v, w):
                        ok = False
                        break
                    done += 1
            if ok:
                part[v] = p
                if extend(v + 1, max(used, p + 1)):
                    return True
                part[v] = -1
            for _ in range(done):
                dsu[p].undo()
        return False

    if not extend(0, 0):
        return None
    return VertexForestPartition([frozenset(v for v in g.vertices if part[v] == p) for p in range(k)])


def _independent_forest(g: SignedGraph) -> IndependentForestPartition | None:
    nb = g.neighbours
    in_u = [False] * g.n
    dsu = _DSU(g.n)

    def extend(v: int) -> bool:
        if v == g.n:
            return True
        earlier = [w for w in nb[v] if w < v]
        # W first keeps U small
        done = 0
        ok = True
        for w in earlier:
            if not in_u[w]:
                if not dsu.union(v, w):
                    ok = False
                    break
                done += 1
        if ok and extend(v + 1):
            return True
        for _ in range(done):
            dsu.undo()
        if not any(in_u[w] for w in earlier):
            in_u[v] = True
            if extend(v + 1):
                return True
            in_u[v] = False
        return False

    if not extend(0):
        return None
    u = frozenset(v for v in g.vertices if in_u[v])
    return IndependentForestPartition(u, frozenset(g.vertices) - u)


PARTITION_KINDS = ("two-edge-forests", "vertex-forests", "independent-forest")


def brute_partition_search(g: SignedGraph, kind: str, k: int = 2, cap: int = DEFAULT_CAP):
    """Exhaustive search for a partition of the requested kind, or ``None``.

    ``kind`` is ``"two-edge-forests"``, ``"vertex-forests"`` (into ``k``
    parts) or ``"independent-forest"``.
    """
    _guard(g, cap)
    if kind == "two-edge-forests":
        return _two_edge_forests(g)
    if kind == "vertex-forests":
        return _vertex_forests(g, k)
    if kind == "independent-forest":
        return _independent_forest(g)
    raise ValueError(f"unknown partition kind {kind!r}")
