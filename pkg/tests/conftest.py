from itertools import combinations, product
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from signedcolour.colour import ladder
from signedcolour.graph import SignedGraph

FIXTURES = Path(__file__).parent / "fixtures"

# exhaustive oracles make per-example timings uneven
settings.register_profile("default", deadline=None)
settings.load_profile("default")


def complete(n, sign=1):
    return SignedGraph(n, [(i, j, sign) for i, j in combinations(range(n), 2)])


def cycle(n, negatives=()):
    return SignedGraph(n, [(i, (i + 1) % n, -1 if i in negatives else 1) for i in range(n)])


def path(n, sign=1):
    return SignedGraph(n, [(i, i + 1, sign) for i in range(n - 1)])


def star(leaves, sign=1):
    return SignedGraph(leaves + 1, [(0, i, sign) for i in range(1, leaves + 1)])


# -- brute-force oracles (independent of the package's search code) ----------


def brute_colourings(g, n):
    """Every proper colouring into M_n, by plain enumeration."""
    pal = sorted(ladder(n))
    for phi in product(pal, repeat=g.n):
        if all(phi[u] != s * phi[v] for u, v, s in g.edges):
            yield phi


def brute_chi(g):
    if g.n == 0:
        return 0
    n = 1
    while next(brute_colourings(g, n), None) is None:
        n += 1
    return n


def brute_unsigned_chi(g):
    if g.n == 0:
        return 0
    pairs = set(g.underlying_pairs)
    k = 1
    while not any(all(c[u] != c[v] for u, v in pairs) for c in product(range(k), repeat=g.n)):
        k += 1
    return k


def brute_balanced(g):
    """Balanced iff some switching set makes every edge positive."""
    for bits in range(1 << g.n):
        s = {v for v in range(g.n) if bits >> v & 1}
        if all(sign * (-1 if (u in s) != (v in s) else 1) == 1 for u, v, sign in g.edges):
            return True
    return False


def brute_antibalanced(g):
    """Harary: a bipartition with negative edges inside, positive across."""
    for bits in range(1 << g.n):
        side = [bits >> v & 1 for v in range(g.n)]
        if all((side[u] == side[v]) == (s < 0) for u, v, s in g.edges):
            return True
    return False


# -- hypothesis strategies ---------------------------------------------------


@st.composite
def signed_graphs(draw, min_n=0, max_n=6, simple=True, connected=False, loops=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    edges = []
    if connected and n > 1:
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            edges.append((min(order[i], order[j]), max(order[i], order[j])))
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs) * (1 if simple else 2))) if pairs else []
    for p in chosen:
        if simple and p in edges:
            continue
        edges.append(p)
    if simple:
        edges = sorted(set(edges))
    signed = [(u, v, draw(st.sampled_from((1, -1)))) for u, v in edges]
    if loops and n:
        for v in draw(st.lists(st.integers(0, n - 1), max_size=2)):
            signed.append((v, v, -1))
    return SignedGraph(n, signed)


@st.composite
def graph_and_subset(draw, **kw):
    g = draw(signed_graphs(**kw))
    s = draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    return g, s


@pytest.fixture
def fixtures_dir():
    return FIXTURES


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
