"""Colour sets, proper colourings and the exact chromatic number.

Colourings are tuples of integers indexed by vertex.  An edge ``uv`` of sign
``s`` is respected when ``phi[u] != s * phi[v]``; a negative loop at ``v``
therefore forbids only ``phi[v] == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .graph import SignedGraph, VertexOutOfRangeError

Colouring = tuple[int, ...]


class ColouringError(RuntimeError):
    """A construction failed to produce a colouring it should have."""


@dataclass(frozen=True)
class ColourSet:
    """The symmetric palette of ``n`` integers.

    ``{±1, …, ±k}`` for ``n = 2k`` and ``{0, ±1, …, ±k}`` for ``n = 2k + 1``.
    """

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"colour set size must be positive, got {self.n}")

    @property
    def k(self) -> int:
        return self.n // 2

    @property
    def has_zero(self) -> bool:
        return self.n % 2 == 1

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(ladder(self.n)))

    def __contains__(self, c: int) -> bool:
        return abs(c) <= self.k and (c != 0 or self.has_zero)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.n


def colour_set(n: int) -> ColourSet:
    return ColourSet(n)


def ladder(n: int | None = None) -> Iterator[int]:
    """Colours by increasing absolute value, positive first: 0, 1, -1, 2, -2, …

    With ``n`` given, only the colours of the ``n``-element palette.
    """
    if n is None:
        yield 0
        for j in count(1):
            yield j
            yield -j
        return
    if n % 2:
        yield 0
    for j in range(1, n // 2 + 1):
        yield j
        yield -j


def palette_size(phi: Sequence[int]) -> int:
    """Smallest ``n`` with every colour of ``phi`` in the ``n``-palette."""
    if not phi:
        return 0
    k = max(abs(c) for c in phi)
    return 2 * k + 1 if 0 in phi else 2 * k


def within(phi: Sequence[int], n: int) -> bool:
    cs = ColourSet(n)
    return all(c in cs for c in phi)


def lift_colouring(phi: Sequence[int], n: int) -> Colouring:
    """Re-express a colouring as an ``n``-colouring.

    Palettes are nested except when going from odd to even size, where 0 is
    missing; the zero class is independent, so it moves to ``n // 2``, whose
    absolute value no other vertex uses.
    """
    m = palette_size(phi)
    if m > n:
        raise ValueError(f"colouring needs {m} colours, more than {n}")
    if n % 2 == 0 and 0 in phi:
        if m == n:  # pragma: no cover - m odd and n even with m <= n means m < n
            raise ValueError("no free absolute value for the zero class")
        return tuple(n // 2 if c == 0 else c for c in phi)
    return tuple(phi)


class Violation(NamedTuple):
    edge_index: int
    u: int
    v: int
    sign: int


def check_proper(g: SignedGraph, phi: Sequence[int]) -> Violation | None:
    """First edge (in storage order) violated by ``phi``, or ``None`` if proper."""
    if len(phi) != g.n:
        raise ValueError(f"colouring has {len(phi)} values for {g.n} vertices")
    for i, (u, v, s) in enumerate(g.edges):
        if phi[u] == s * phi[v]:
            return Violation(i, u, v, s)
    return None


def is_proper(g: SignedGraph, phi: Sequence[int]) -> bool:
    return check_proper(g, phi) is None


def switch_colouring(phi: Sequence[int], s: Iterable[int]) -> Colouring:
    """Negate the colours at the switched vertices."""
    s = frozenset(s)
    for v in s:
        if not 0 <= v < len(phi):
            raise VertexOutOfRangeError(f"switch vertex {v} out of range")
    return tuple(-c if v in s else c for v, c in enumerate(phi))


def forbidden_colours(g: SignedGraph, v: int, phi: Mapping[int, int] | Sequence[int | None]) -> set[int]:
    """Colours excluded at ``v`` by already-coloured neighbours and its loops."""
    out = {0} if g.loops[v] else set()
    get = phi.get if isinstance(phi, Mapping) else (lambda w: phi[w])
    for w, s, _ in g.incidence[v]:
        c = get(w)
        if c is not None:
            out.add(s * c)
    return out


def greedy_colour(
    g: SignedGraph,
    order: Sequence[int],
    *,
    palette: int | None = None,
    preset: Mapping[int, int] | None = None,
    nonzero: Iterable[int] = (),
) -> Colouring:
    """Colour ``order`` greedily with the first free colour of the ladder.

    ``preset`` vertices keep their colours and ``order`` must list the rest.
    With ``palette``, only colours of that palette are tried and
    :class:`ColouringError` is raised if a vertex has none left.  Vertices in
    ``nonzero`` never receive 0.
    """
    phi: list[int | None] = [None] * g.n
    for v, c in (preset or {}).items():
        phi[v] = c
    if sorted(order) != [v for v in g.vertices if phi[v] is None]:
        raise ValueError("order must list every uncoloured vertex exactly once")
    nonzero = frozenset(nonzero)
    for v in order:
        bad = forbidden_colours(g, v, phi)
        if v in nonzero:
            bad.add(0)
        for c in ladder(palette):
            if c not in bad:
                phi[v] = c
                break
        else:
            raise ColouringError(f"no colour of M_{palette} left for vertex {v}")
    return tuple(phi)  # type: ignore[arg-type]


def _constraint_degrees(g: SignedGraph) -> list[int]:
    # one forbidden colour per non-loop edge and at most one (zero) per loop set
    return [len(g.incidence[v]) + (1 if g.loops[v] else 0) for v in g.vertices]


def degeneracy_ordering(g: SignedGraph) -> tuple[int, list[int]]:
    """Smallest-last ordering and the degeneracy it certifies.

    Repeatedly deletes a vertex of minimum remaining degree (lowest index on
    ties) and returns the deletion sequence reversed, so each vertex has at
    most ``k`` neighbours before it.  Parallel edges count separately; negative
    loops count once, since together they forbid only colour 0.
    """
    deg = _constraint_degrees(g)
    alive = set(g.vertices)
    removed: list[int] = []
    k = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        k = max(k, deg[v])
        alive.remove(v)
        removed.append(v)
        for w, _, _ in g.incidence[v]:
            if w in alive:
                deg[w] -= 1
    removed.reverse()
    return k, removed


def back_degree(g: SignedGraph, order: Sequence[int]) -> int:
    """Largest number of constraints any vertex receives from earlier vertices."""
    pos = {v: i for i, v in enumerate(order)}
    worst = 0
    for v in order:
        d = sum(1 for w, _, _ in g.incidence[v] if pos[w] < pos[v]) + (1 if g.loops[v] else 0)
        worst = max(worst, d)
    return worst


def find_n_colouring(
    g: SignedGraph,
    n: int,
    *,
    domains: Mapping[int, Iterable[int]] | None = None,
) -> Colouring | None:
    """A proper colouring with values in ``M_n``, or ``None`` if there is none.

    Backtracking over the degeneracy order, trying colours along the ladder.
    ``domains`` optionally narrows the colours allowed at given vertices.
    Global negation is broken by requiring the first vertex to be
    nonnegative whenever every domain is closed under negation.
    """
    if n < 1:
        raise ValueError(f"colour set size must be positive, got {n}")
    if g.n == 0:
        return ()
    palette = list(ladder(n))
    dom: list[list[int]] = [palette] * g.n
    symmetric = True
    for v, allowed in (domains or {}).items():
        allowed = set(allowed)
        dom[v] = [c for c in palette if c in allowed]
        if {-c for c in allowed} != allowed:
            symmetric = False
    _, order = degeneracy_ordering(g)
    for v in g.vertices:
        if g.loops[v]:
            dom[v] = [c for c in dom[v] if c != 0]
    if symmetric:
        first = order[0]
        dom[first] = [c for c in dom[first] if c >= 0]

    # Only edges to earlier vertices in the order are checked at each step.
    pos = {v: i for i, v in enumerate(order)}
    back: list[list[tuple[int, int]]] = [[] for _ in g.vertices]
    for v in g.vertices:
        back[v] = [(w, s) for w, s, _ in g.incidence[v] if pos[w] < pos[v]]
    phi = [0] * g.n

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        bad = {s * phi[w] for w, s in back[v]}
        for c in dom[v]:
            if c not in bad:
                phi[v] = c
                if extend(i + 1):
                    return True
        return False

    return tuple(phi) if extend(0) else None


def colouring_upper_bound(g: SignedGraph) -> int:
    """A palette size that is always feasible: one more than the largest
    number of colours any vertex can have forbidden (greedy always succeeds)."""
    return max(_constraint_degrees(g), default=0) + 1


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    witness: Colouring


def chromatic_number(g: SignedGraph) -> ChromaticResult:
    """Least ``n`` admitting a proper colouring into ``M_n``, with a witness.

    The empty graph gets ``chi = 0`` by convention.
    """
    if g.n == 0:
        return ChromaticResult(0, ())
    cap = colouring_upper_bound(g)
    for n in range(1, cap + 1):
        phi = find_n_colouring(g, n)
        if phi is not None:
            return ChromaticResult(n, phi)
    raise ColouringError(f"no colouring within the guaranteed bound {cap}")  # pragma: no cover


@dataclass(frozen=True)
class GammaPair:
    """Least ``k`` with a colouring into ``{-k..k}`` and least ``k`` with a
    zero-free colouring into ``{±1..±k}``."""

    gamma: int
    gamma_star: int


def gamma_pair(g: SignedGraph) -> GammaPair:
    gamma = next(k for k in count(0) if find_n_colouring(g, 2 * k + 1) is not None)
    if g.n == 0:
        return GammaPair(gamma, 0)
    gamma_star = next(k for k in count(1) if find_n_colouring(g, 2 * k) is not None)
    return GammaPair(gamma, gamma_star)


def unsigned_chromatic_number(g: SignedGraph) -> int:
    """Ordinary chromatic number of the underlying graph (loops ignored)."""
    if g.n == 0:
        return 0
    adj = g.neighbours
    _, order = degeneracy_ordering(g.underlying())
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in adj[v] if pos[w] < pos[v]] for v in g.vertices]
    col = [0] * g.n

    def extend(i: int, k: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        bad = {col[w] for w in back[v]}
        for c in range(min(used + 1, k)):
            if c not in bad:
                col[v] = c
                if extend(i + 1, k, max(used, c + 1)):
                    return True
        return False

    k = 1
    while not extend(0, k, 0):
        k += 1
    return k
