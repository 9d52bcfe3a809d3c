"""Signed multigraphs: construction, switching and balance.

A :class:`SignedGraph` is immutable.  Vertices are ``0 .. n-1`` and edges are
stored as ``(u, v, sign)`` triples in the order they were given; parallel
edges and negative loops are allowed, positive loops are not (no proper
colouring can exist with one).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int, int]


class SignedGraphError(ValueError):
    """Base class for invalid signed-graph input."""


class PositiveLoopError(SignedGraphError):
    def __init__(self, vertex: int, line: int | None = None):
        self.vertex = vertex
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"positive loop at vertex {vertex}{where}")


class VertexOutOfRangeError(SignedGraphError):
    pass


class UnderlyingMismatchError(SignedGraphError):
    pass


class NotSimpleError(SignedGraphError):
    pass


class NotConnectedError(SignedGraphError):
    pass


def _sign(s) -> int:
    if s in (1, "+", "+1"):
        return 1
    if s in (-1, "-", "-1"):
        return -1
    raise SignedGraphError(f"invalid sign {s!r}")


class SignedGraph:
    """Immutable signed multigraph on vertices ``0 .. n-1``."""

    __slots__ = ("n", "edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, object]] = ()):
        if n < 0:
            raise SignedGraphError("vertex count must be nonnegative")
        checked = []
        for u, v, s in edges:
            s = _sign(s)
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v and s == 1:
                raise PositiveLoopError(u)
            checked.append((int(u), int(v), s))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(checked)

    @classmethod
    def _trusted(cls, n: int, edges: tuple[Edge, ...]) -> SignedGraph:
        g = cls.__new__(cls)
        g.n = n
        g.edges = edges
        return g

    def __eq__(self, other):
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        body = ", ".join(f"({u}, {v}, {'+' if s > 0 else '-'})" for u, v, s in self.edges)
        return f"SignedGraph({self.n}, [{body}])"

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """Per vertex, ``(neighbour, sign, edge_index)`` for every non-loop edge."""
        inc: list[list[tuple[int, int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v, s) in enumerate(self.edges):
            if u != v:
                inc[u].append((v, s, i))
                inc[v].append((u, s, i))
        return tuple(tuple(x) for x in inc)

    @cached_property
    def loops(self) -> tuple[int, ...]:
        """Number of (necessarily negative) loops at each vertex."""
        cnt = [0] * self.n
        for u, v, _ in self.edges:
            if u == v:
                cnt[u] += 1
        return tuple(cnt)

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(w for w, _, _ in inc) for inc in self.incidence)

    def degree(self, v: int) -> int:
        return len(self.incidence[v]) + 2 * self.loops[v]

    @cached_property
    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices), default=0)

    @cached_property
    def is_simple(self) -> bool:
        seen = set()
        for u, v, _ in self.edges:
            if u == v:
                return False
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    @cached_property
    def underlying_pairs(self) -> tuple[tuple[int, int], ...]:
        """Sorted multiset of non-loop vertex pairs, ``u < v``."""
        return tuple(sorted((min(u, v), max(u, v)) for u, v, _ in self.edges if u != v))

    def underlying(self) -> SignedGraph:
        """Simple all-positive graph on the same vertex pairs (loops dropped)."""
        return SignedGraph._trusted(self.n, tuple((u, v, 1) for u, v in sorted(set(self.underlying_pairs))))

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        comps = []
        for r in self.vertices:
            if seen[r]:
                continue
            seen[r] = True
            comp = [r]
            queue = deque([r])
            while queue:
                x = queue.popleft()
                for w in sorted(self.neighbours[x]):
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def sign_between(self, u: int, v: int) -> int | None:
        """Sign of the unique edge ``uv`` of a simple graph, or ``None``."""
        for w, s, _ in self.incidence[u]:
            if w == v:
                return s
        return None

    def induced(self, keep: Iterable[int]) -> tuple[SignedGraph, list[int]]:
        """Induced subgraph on ``keep``, relabelled ``0..k-1`` in increasing order.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        old = sorted(set(keep))
        new = {v: i for i, v in enumerate(old)}
        edges = tuple((new[u], new[v], s) for u, v, s in self.edges if u in new and v in new)
        return SignedGraph._trusted(len(old), edges), old

    def without(self, drop: Iterable[int]) -> tuple[SignedGraph, list[int]]:
        drop = set(drop)
        return self.induced(v for v in self.vertices if v not in drop)

    def negated(self) -> SignedGraph:
        """Every edge sign reversed; raises if a negative loop would turn positive."""
        return SignedGraph(self.n, ((u, v, -s) for u, v, s in self.edges))

    def with_signs(self, signs: Sequence[int]) -> SignedGraph:
        return SignedGraph(self.n, ((u, v, s) for (u, v, _), s in zip(self.edges, signs, strict=True)))


def build_graph(n: int, edge_list: Iterable[tuple[int, int, object]]) -> SignedGraph:
    """Build a signed graph; signs may be ``+1/-1`` or ``'+'/'-'``."""
    return SignedGraph(n, edge_list)


def _check_set(g: SignedGraph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not 0 <= v < g.n:
            raise VertexOutOfRangeError(f"switch vertex {v} out of range for n={g.n}")
    return s


def switch(g: SignedGraph, s: Iterable[int]) -> SignedGraph:
    """Reverse the sign of every non-loop edge with exactly one end in ``s``."""
    s = _check_set(g, s)
    edges = tuple((u, v, -sg if (u in s) != (v in s) else sg) for u, v, sg in g.edges)
    return SignedGraph._trusted(g.n, edges)


def circuit_sign(g: SignedGraph, edge_indices: Iterable[int]) -> int:
    p = 1
    for i in edge_indices:
        p *= g.edges[i][2]
    return p


@dataclass(frozen=True)
class BalanceReport:
    """Outcome of a balance test.

    If ``balanced``, switching at ``switch_set`` makes every edge positive.
    Otherwise ``circuit`` lists edge indices of a closed walk around a simple
    circuit whose sign product is negative.
    """

    balanced: bool
    switch_set: frozenset[int] | None = None
    circuit: tuple[int, ...] | None = None

    def __bool__(self):
        return self.balanced


def _propagate(g: SignedGraph, flip: int) -> tuple[list[int], list[int | None], list[int]]:
    """BFS spanning forest with potentials such that tree edges satisfy
    ``pot[u] * sign * flip * pot[v] == 1``.

    Returns potentials, parent edge index per vertex and BFS depth.
    """
    pot = [0] * g.n
    parent: list[int | None] = [None] * g.n
    depth = [0] * g.n
    for r in g.vertices:
        if pot[r]:
            continue
        pot[r] = 1
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for w, s, i in g.incidence[x]:
                if not pot[w]:
                    pot[w] = pot[x] * s * flip
                    parent[w] = i
                    depth[w] = depth[x] + 1
                    queue.append(w)
    return pot, parent, depth


def _tree_path_circuit(g: SignedGraph, parent, depth, closing: int) -> tuple[int, ...]:
    u, v, _ = g.edges[closing]
    up, down = [], []
    while depth[u] > depth[v]:
        up.append(parent[u])
        u = _other(g, parent[u], u)
    while depth[v] > depth[u]:
        down.append(parent[v])
        v = _other(g, parent[v], v)
    while u != v:
        up.append(parent[u])
        u = _other(g, parent[u], u)
        down.append(parent[v])
        v = _other(g, parent[v], v)
    return (*up, *reversed(down), closing)


def _other(g: SignedGraph, edge: int, end: int) -> int:
    u, v, _ = g.edges[edge]
    return v if u == end else u


def _balance(g: SignedGraph, flip: int) -> BalanceReport:
    pot, parent, depth = _propagate(g, flip)
    for i, (u, v, s) in enumerate(g.edges):
        if pot[u] * s * flip * pot[v] != 1:
            if u == v:
                return BalanceReport(False, circuit=(i,))
            return BalanceReport(False, circuit=_tree_path_circuit(g, parent, depth, i))
    return BalanceReport(True, switch_set=frozenset(v for v in g.vertices if pot[v] < 0))


def is_balanced(g: SignedGraph) -> BalanceReport:
    """Balance test by spanning-forest sign propagation.

    The forest is grown breadth-first from the lowest unvisited vertex, so the
    witness (a switching set or the fundamental circuit of the first
    inconsistent edge in storage order) is deterministic.
    """
    return _balance(g, 1)


def antibalance_report(g: SignedGraph) -> BalanceReport:
    """Balance report of the negated signature.

    When antibalanced, ``switch_set`` makes every edge of ``g`` negative.
    Negative loops are consistent with antibalance.
    """
    return _balance(g, -1)


def is_antibalanced(g: SignedGraph) -> bool:
    return antibalance_report(g).balanced


def forest_switch_set(g: SignedGraph, edge_indices: Iterable[int], target: int = 1) -> frozenset[int]:
    """Switching set making the given acyclic edge set all ``target``-signed.

    Each tree is rooted at its lowest-index vertex, which is never switched.
    Raises ``ValueError`` if the edges contain a cycle or a loop.
    """
    adj: dict[int, list[tuple[int, int]]] = {}
    for i in edge_indices:
        u, v, s = g.edges[i]
        if u == v:
            raise ValueError("a loop is not a forest edge")
        adj.setdefault(u, []).append((v, s))
        adj.setdefault(v, []).append((u, s))
    pot: dict[int, int] = {}
    n_edges = sum(len(a) for a in adj.values()) // 2
    n_trees = 0
    for r in sorted(adj):
        if r in pot:
            continue
        n_trees += 1
        pot[r] = 1
        stack = [r]
        while stack:
            x = stack.pop()
            for w, s in adj[x]:
                if w not in pot:
                    pot[w] = pot[x] * s * target
                    stack.append(w)
    if n_edges != len(pot) - n_trees:
        raise ValueError("edge set is not a forest")
    return frozenset(v for v, p in pot.items() if p < 0)


def _pair_sign_counts(g: SignedGraph) -> dict[tuple[int, int], tuple[int, int]]:
    counts: dict[tuple[int, int], list[int]] = {}
    for u, v, s in g.edges:
        if u == v:
            continue
        c = counts.setdefault((min(u, v), max(u, v)), [0, 0])
        c[0 if s > 0 else 1] += 1
    return {k: (p, q) for k, (p, q) in counts.items()}


def _normal_form(g: SignedGraph) -> tuple:
    # Pairs with as many positive as negative parallel edges are unchanged by
    # any switching; the others fix the relative switch of their ends.
    counts = _pair_sign_counts(g)
    adj: dict[int, list[tuple[int, int]]] = {}
    for (u, v), (p, q) in counts.items():
        if p != q:
            s = 1 if p > q else -1
            adj.setdefault(u, []).append((v, s))
            adj.setdefault(v, []).append((u, s))
    pot: dict[int, int] = {}
    for r in sorted(adj):
        if r in pot:
            continue
        pot[r] = 1
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for w, s in sorted(adj[x]):
                if w not in pot:
                    pot[w] = pot[x] * s
                    queue.append(w)
    normal = {}
    for (u, v), (p, q) in counts.items():
        if pot.get(u, 1) * pot.get(v, 1) < 0:
            p, q = q, p
        normal[(u, v)] = (p, q)
    return tuple(sorted(normal.items())), g.loops


def switching_equivalent(g: SignedGraph, h: SignedGraph) -> bool:
    """Whether some switching of ``g`` yields ``h`` (same labelled underlying multigraph)."""
    if g.n != h.n or g.underlying_pairs != h.underlying_pairs or g.loops != h.loops:
        raise UnderlyingMismatchError("graphs do not share a labelled underlying multigraph")
    return _normal_form(g) == _normal_form(h)


def require_simple_connected(g: SignedGraph) -> None:
    if not g.is_simple:
        raise NotSimpleError("graph must be simple")
    if not g.is_connected:
        raise NotConnectedError("graph must be connected")
