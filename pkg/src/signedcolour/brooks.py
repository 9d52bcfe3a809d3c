"""Constructive Brooks-type colouring of simple connected signed graphs.

:func:`brooks_colour` returns a proper colouring from ``M_Δ`` unless the graph
is a balanced complete graph, a balanced odd circuit or an unbalanced even
circuit, in which case it uses ``M_{Δ+1}`` (optimal for those families).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, NamedTuple, Sequence

from .colour import (
    Colouring,
    ColouringError,
    check_proper,
    find_n_colouring,
    greedy_colour,
    ladder,
    lift_colouring,
    switch_colouring,
    within,
)
from .graph import (
    NotConnectedError,
    NotSimpleError,
    SignedGraph,
    SignedGraphError,
    antibalance_report,
    forest_switch_set,
    is_balanced,
    require_simple_connected,
    switch,
)


class NotCompleteError(SignedGraphError):
    pass


class PreconditionViolated(SignedGraphError):
    pass


class InternalBoundExceeded(ColouringError):
    """The constructive colouring left its declared palette (a bug)."""


class ExceptionalClass(enum.Enum):
    NONE = "none"
    BALANCED_COMPLETE = "balanced complete"
    BALANCED_ODD_CIRCUIT = "balanced odd circuit"
    UNBALANCED_EVEN_CIRCUIT = "unbalanced even circuit"

    def __bool__(self):
        return self is not ExceptionalClass.NONE


class TraceEvent(NamedTuple):
    step: str
    switch_set: frozenset[int]
    partial: dict[int, int]
    info: dict


Trace = Callable[[TraceEvent], None]


@dataclass(frozen=True)
class BrooksCertificate:
    colouring: Colouring
    bound_used: int
    exceptional: ExceptionalClass
    max_degree: int = field(default=0)


def is_complete(g: SignedGraph) -> bool:
    return g.is_simple and g.m == g.n * (g.n - 1) // 2


def is_circuit(g: SignedGraph) -> bool:
    return g.n >= 3 and g.is_connected and g.is_simple and all(g.degree(v) == 2 for v in g.vertices)


def classify_exceptional(g: SignedGraph) -> ExceptionalClass:
    require_simple_connected(g)
    if is_complete(g) and is_balanced(g):
        return ExceptionalClass.BALANCED_COMPLETE
    if is_circuit(g):
        balanced = is_balanced(g).balanced
        if balanced and g.n % 2:
            return ExceptionalClass.BALANCED_ODD_CIRCUIT
        if not balanced and g.n % 2 == 0:
            return ExceptionalClass.UNBALANCED_EVEN_CIRCUIT
    return ExceptionalClass.NONE


# -- block structure ---------------------------------------------------------


def cut_vertices(g: SignedGraph) -> list[int]:
    """Articulation points of the underlying graph (iterative low-point DFS)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    t = 0
    nbrs = {v: sorted(g.neighbours[v]) for v in g.vertices}
    for root in g.vertices:
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        children = 0
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    if v == root:
                        children += 1
                    stack.append((w, v, iter(nbrs[w])))
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= disc[p]:
                        cuts.add(p)
        if children > 1:
            cuts.add(root)
    return sorted(cuts)


def is_two_connected(g: SignedGraph) -> bool:
    return g.n >= 3 and g.is_connected and not cut_vertices(g)


def _connected_without(g: SignedGraph, drop: Iterable[int]) -> bool:
    h, _ = g.without(drop)
    return h.is_connected


# -- complete graphs ---------------------------------------------------------


def _first_unbalanced_triangle(sig, verts: Sequence[int]):
    for a, b, c in combinations(verts, 3):
        if sig[a][b] * sig[b][c] * sig[a][c] < 0:
            return a, b, c
    return None


def colour_complete(g: SignedGraph, trace: Trace | None = None) -> Colouring:
    """Optimal colouring of a signed complete graph.

    Balanced: ``n`` distinct colours of ``M_n`` after switching to all-positive.
    Unbalanced: at most ``n - 1`` colours, built by peeling off pairs joined
    by a negative edge (odd order) or a single zero vertex (even order).
    """
    if not g.is_simple:
        raise NotSimpleError("complete-graph colouring needs a simple graph")
    if not is_complete(g):
        raise NotCompleteError("underlying graph is not complete")
    n = g.n
    report = is_balanced(g)
    if report.balanced:
        pal = list(ladder(n))
        phi = switch_colouring([pal[v] for v in g.vertices], report.switch_set)
        if trace:
            trace(TraceEvent("complete-balanced", report.switch_set, dict(enumerate(phi)), {}))
        return phi

    sig = [[0] * n for _ in range(n)]
    for u, v, s in g.edges:
        sig[u][v] = sig[v][u] = s
    flipped: set[int] = set()
    col: dict[int, int] = {}

    def flip(x):
        for w in range(n):
            sig[x][w] = -sig[x][w]
            sig[w][x] = -sig[w][x]
        flipped.symmetric_difference_update({x})

    def solve(verts: list[int]) -> None:
        if len(verts) % 2 == 0:
            for v in verts:
                rest = [w for w in verts if w != v]
                if _first_unbalanced_triangle(sig, rest):
                    solve(rest)
                    col[v] = 0
                    return
            raise ColouringError("no vertex leaves an unbalanced complete graph")  # pragma: no cover
        if len(verts) == 3:
            r, p, q = verts
            for w in (p, q):
                if sig[r][w] > 0:
                    flip(w)
            assert sig[p][q] < 0
            for v in verts:
                col[v] = 1
            return
        tri = _first_unbalanced_triangle(sig, verts)
        x, y = [v for v in verts if v not in tri][:2]
        if sig[x][y] > 0:
            flip(x)
        solve([v for v in verts if v not in (x, y)])
        col[x] = col[y] = (len(verts) - 1) // 2

    solve(list(g.vertices))
    phi = switch_colouring([col[v] for v in g.vertices], flipped)
    if trace:
        trace(TraceEvent("complete-unbalanced", frozenset(flipped), dict(enumerate(phi)), {}))
    return phi


# -- the two lemmas ----------------------------------------------------------


def connected_ordering(g: SignedGraph, last: int, within_vertices: Iterable[int] | None = None) -> list[int]:
    """Order ending at ``last`` in which every other vertex has a later neighbour.

    Vertices are sorted by decreasing distance from ``last`` (index order on
    ties), i.e. breadth-first layers reversed.  With ``within_vertices`` the
    ordering is of the induced subgraph on those vertices.
    """
    allowed = set(g.vertices if within_vertices is None else within_vertices)
    if last not in allowed:
        raise ValueError(f"vertex {last} not in the graph")
    dist = {last: 0}
    frontier = [last]
    while frontier:
        nxt = []
        for x in frontier:
            for w in g.neighbours[x]:
                if w in allowed and w not in dist:
                    dist[w] = dist[x] + 1
                    nxt.append(w)
        frontier = nxt
    if len(dist) != len(allowed):
        raise NotConnectedError("graph is not connected")
    return sorted(allowed, key=lambda v: (-dist[v], v))


def find_noncut_pair(g: SignedGraph) -> tuple[int, int, int]:
    """Path ``a x b`` with ``a, b`` non-adjacent and ``g - {a, b}`` connected.

    Requires a 2-connected, non-complete simple graph with maximum degree at
    least 3; the first such triple in lexicographic order is returned.
    """
    if not g.is_simple:
        raise PreconditionViolated("graph must be simple")
    if is_complete(g) or g.max_degree < 3 or not is_two_connected(g):
        raise PreconditionViolated("need a 2-connected non-complete graph with max degree >= 3")
    nb = g.neighbours
    for a in g.vertices:
        for x in sorted(nb[a]):
            for b in sorted(nb[x]):
                if b != a and b not in nb[a] and _connected_without(g, (a, b)):
                    return a, x, b
    raise PreconditionViolated("no non-separating distance-2 pair")  # pragma: no cover


# -- circuits ----------------------------------------------------------------


def _circuit_walk(g: SignedGraph) -> list[int]:
    walk = [0]
    prev = None
    while True:
        nxt = min(w for w in g.neighbours[walk[-1]] if w != prev)
        if nxt == walk[0]:
            return walk
        prev = walk[-1]
        walk.append(nxt)


def _edge_index(g: SignedGraph, u: int, v: int) -> int:
    return next(i for w, _, i in g.incidence[u] if w == v)


def _colour_circuit(g: SignedGraph, zero_closing: bool) -> tuple[Colouring, frozenset[int]]:
    # Make the walk path positive; the closing edge then carries the circuit sign.
    walk = _circuit_walk(g)
    path = [_edge_index(g, walk[i], walk[i + 1]) for i in range(len(walk) - 1)]
    s = forest_switch_set(g, path, target=1)
    phi = [0] * g.n
    for i, v in enumerate(walk):
        phi[v] = 1 if i % 2 == 0 else -1
    if zero_closing:
        phi[walk[-1]] = 0
    return switch_colouring(phi, s), s


# -- main algorithm ----------------------------------------------------------


def _align(phi: Sequence[int], v: int) -> Colouring:
    """Apply a negation-commuting palette permutation so that ``phi[v] == 1``."""
    sgn = 1 if phi[v] > 0 else -1
    k = abs(phi[v])

    def perm(c: int) -> int:
        c *= sgn
        if abs(c) == k:
            return 1 if c > 0 else -1
        if abs(c) == 1:
            return k if c > 0 else -k
        return c

    return tuple(perm(c) for c in phi)


def _nonzero_at(piece: SignedGraph, r: int, delta: int, trace: Trace | None) -> Colouring | None:
    """An ``M_delta`` colouring of a connected piece with a non-zero colour at ``r``.

    Needs ``deg(r) <= delta - 1`` and every other degree at most ``delta``.
    """
    deg_r = len(piece.neighbours[r])
    if piece.n == 1:
        return (1,)
    if deg_r <= delta - 2:
        order = connected_ordering(piece, r)
        return greedy_colour(piece, order, palette=delta, nonzero=[r])
    for u in sorted(piece.neighbours[r]):
        rest = [v for v in piece.vertices if v != u]
        h, _ = piece.without([u])
        if not h.is_connected:
            continue
        # u is adjacent to r, so putting it first keeps every vertex's later neighbour
        order = connected_ordering(piece, r, rest)
        phi = greedy_colour(piece, order, palette=delta, preset={u: 0})
        if trace:
            trace(TraceEvent("case2-zero-start", frozenset(), dict(enumerate(phi)), {"u": u, "v": r, "graph": piece}))
        return phi
    phi = find_n_colouring(piece, delta, domains={r: [c for c in ladder(delta) if c != 0]})
    if trace:
        trace(TraceEvent("case2-exact-nonzero", frozenset(), dict(enumerate(phi or ())), {"v": r, "graph": piece}))
    return phi


def _case1(g: SignedGraph, delta: int, trace: Trace | None) -> Colouring:
    a, x, b = find_noncut_pair(g)
    s = frozenset(w for w in (a, b) if g.sign_between(w, x) < 0)
    h = switch(g, s)
    if trace:
        trace(TraceEvent("case1-switch", s, {a: 1, b: 1}, {"a": a, "x": x, "b": b, "graph": g}))
    rest = [v for v in g.vertices if v not in (a, b)]
    order = connected_ordering(h, x, rest)
    phi = greedy_colour(h, order, palette=delta, preset={a: 1, b: 1})
    return switch_colouring(phi, s)


def _case2(g: SignedGraph, delta: int, trace: Trace | None) -> Colouring:
    v = cut_vertices(g)[0]
    rest, names = g.without([v])
    pieces = []
    for comp in rest.components:
        piece, labels = g.induced([*(names[w] for w in comp), v])
        phi, _, _ = _colour(piece, None)
        pieces.append((piece, labels, labels.index(v), lift_colouring(phi, delta)))
    if trace:
        trace(TraceEvent("case2-split", frozenset(), {}, {"v": v, "pieces": [p[1] for p in pieces], "graph": g}))

    zero = [i for i, p in enumerate(pieces) if p[3][p[2]] == 0]
    if zero and len(zero) < len(pieces):
        for i in zero:
            piece, labels, r, _ = pieces[i]
            phi = _nonzero_at(piece, r, delta, trace)
            if phi is None:
                break
            pieces[i] = (piece, labels, r, phi)
        else:
            zero = []
    if zero and len(zero) < len(pieces):
        # some piece forces 0 at the cut vertex; ask the others for 0 too
        for i, (piece, labels, r, phi) in enumerate(pieces):
            if phi[r] != 0:
                phi = find_n_colouring(piece, delta, domains={r: [0]})
                if phi is None:
                    return _exact(g, delta, trace)
                pieces[i] = (piece, labels, r, phi)

    out = [0] * g.n
    for piece, labels, r, phi in pieces:
        if phi[r] != 0:
            phi = _align(phi, r)
        for local, c in enumerate(phi):
            out[labels[local]] = c
    return tuple(out)


def _exact(g: SignedGraph, delta: int, trace: Trace | None) -> Colouring:
    phi = find_n_colouring(g, delta)
    if phi is None:
        raise InternalBoundExceeded(f"no {delta}-colouring of {g!r}")
    if trace:
        trace(TraceEvent("fallback-exact", frozenset(), dict(enumerate(phi)), {"graph": g}))
    return phi


def _colour(g: SignedGraph, trace: Trace | None) -> tuple[Colouring, int, ExceptionalClass]:
    delta = g.max_degree
    kind = classify_exceptional(g)
    if kind is ExceptionalClass.BALANCED_COMPLETE:
        return colour_complete(g, trace), delta + 1, kind
    if kind is not ExceptionalClass.NONE:
        phi, s = _colour_circuit(g, zero_closing=True)
        if trace:
            trace(TraceEvent("exceptional-circuit", s, dict(enumerate(phi)), {"graph": g}))
        return phi, delta + 1, kind
    if delta <= 2:
        s = antibalance_report(g).switch_set
        phi = switch_colouring([1] * g.n, s)
        if trace:
            trace(TraceEvent("antibalanced", s, dict(enumerate(phi)), {"graph": g}))
        return phi, delta, kind
    if is_complete(g):
        return colour_complete(g, trace), delta, kind
    if is_two_connected(g):
        return _case1(g, delta, trace), delta, kind
    return _case2(g, delta, trace), delta, kind


def brooks_colour(g: SignedGraph, trace: Trace | None = None) -> BrooksCertificate:
    """Colour a simple connected signed graph within ``M_Δ`` (or ``M_{Δ+1}``
    for the three exceptional families), verified before returning."""
    require_simple_connected(g)
    phi, bound, kind = _colour(g, trace)
    bad = check_proper(g, phi)
    if bad is not None or not within(phi, max(bound, 1)):
        raise InternalBoundExceeded(f"constructed colouring {phi} of {g!r} fails ({bad}, bound {bound})")
    return BrooksCertificate(tuple(phi), bound, kind, g.max_degree)
