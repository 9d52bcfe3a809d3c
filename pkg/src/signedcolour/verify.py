"""Exhaustive small-instance checks of the colouring theorems.

Graphs are enumerated per labelled underlying graph, one signature per
switching class: tree edges of a fixed breadth-first spanning forest stay
positive and only the remaining edges range over both signs.  No isomorphism
rejection is done, so classes repeat under relabelling.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import combinations, islice
from pathlib import Path
from typing import Callable, Iterator

from .brooks import ExceptionalClass, brooks_colour, classify_exceptional, colour_complete, is_complete
from .colour import (
    chromatic_number,
    degeneracy_ordering,
    find_n_colouring,
    gamma_pair,
    greedy_colour,
    is_proper,
    switch_colouring,
    unsigned_chromatic_number,
    within,
)
from .graph import SignedGraph, is_antibalanced, is_balanced, switch
from .structure import construct_sharpness_graph

HARD_CAP = 6
LONG_RUN_FROM = 6


class CapExceeded(ValueError):
    pass


class UnknownTheorem(KeyError):
    pass


@dataclass(frozen=True)
class EnumerationSpec:
    """Which small graphs to enumerate.

    ``simple_only=False`` adds loopless multigraphs in which a vertex pair may
    carry a differently signed parallel pair.  Equally signed parallel edges
    impose the same constraint as one edge and are not generated separately.
    """

    max_vertices: int
    connected_only: bool = True
    simple_only: bool = True
    long_run: bool = False
    hard_cap: int = HARD_CAP

    def check(self) -> None:
        if self.max_vertices > self.hard_cap:
            raise CapExceeded(f"max_vertices {self.max_vertices} exceeds the hard cap {self.hard_cap}")
        if self.max_vertices >= LONG_RUN_FROM and not self.long_run:
            raise CapExceeded(f"{self.max_vertices} vertices needs the long-run flag")


@dataclass
class VerificationReport:
    theorem_id: str
    instances_checked: int = 0
    passed: bool = True
    counterexample: tuple[SignedGraph, str] | None = None
    lines: list[str] = field(default_factory=list, repr=False)

    def render(self, verbose: bool = False) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = [f"{self.theorem_id}: {status} ({self.instances_checked} instances)"]
        if self.counterexample:
            g, detail = self.counterexample
            out.append(f"  counterexample: {g!r}")
            out.append(f"  details: {detail}")
        if verbose:
            out.extend(self.lines)
        return "\n".join(out)


# -- enumeration -------------------------------------------------------------


def _bfs_tree(n: int, pairs: list[tuple[int, int]]) -> set[int]:
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(n)}
    for i, (u, v) in enumerate(pairs):
        adj[u].append((v, i))
        adj[v].append((u, i))
    seen = [False] * n
    tree: set[int] = set()
    for r in range(n):
        if seen[r]:
            continue
        seen[r] = True
        queue = [r]
        for x in queue:
            for w, i in adj[x]:
                if not seen[w]:
                    seen[w] = True
                    tree.add(i)
                    queue.append(w)
    return tree


def _connected(n: int, pairs) -> bool:
    if n <= 1:
        return True
    return len(_bfs_tree(n, list(pairs))) == n - 1


def _signatures(n: int, pairs: list[tuple[int, int]]) -> Iterator[list[tuple[int, int, int]]]:
    tree = _bfs_tree(n, pairs)
    free = [i for i in range(len(pairs)) if i not in tree]
    for bits in range(1 << len(free)):
        signs = [1] * len(pairs)
        for j, i in enumerate(free):
            if bits >> j & 1:
                signs[i] = -1
        yield [(u, v, s) for (u, v), s in zip(pairs, signs)]


def underlying_graphs(n: int, connected_only: bool) -> Iterator[list[tuple[int, int]]]:
    all_pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(all_pairs)):
        pairs = [p for i, p in enumerate(all_pairs) if mask >> i & 1]
        if not connected_only or _connected(n, pairs):
            yield pairs


def enumerate_signed_graphs(spec: EnumerationSpec) -> Iterator[SignedGraph]:
    """One signed graph per switching class of every labelled graph on
    ``1 .. max_vertices`` vertices, in a fixed order."""
    spec.check()
    for n in range(1, spec.max_vertices + 1):
        for pairs in underlying_graphs(n, spec.connected_only):
            if spec.simple_only:
                for edges in _signatures(n, pairs):
                    yield SignedGraph._trusted(n, tuple(edges))
                continue
            # Each pair is a single edge or a mixed parallel pair.  Mixed pairs
            # are switching invariant, so the spanning forest uses single edges.
            for mixed_mask in range(1 << len(pairs)):
                mixed = [p for i, p in enumerate(pairs) if mixed_mask >> i & 1]
                single = [p for i, p in enumerate(pairs) if not mixed_mask >> i & 1]
                extra = tuple(e for u, v in mixed for e in ((u, v, 1), (u, v, -1)))
                for edges in _signatures(n, single):
                    yield SignedGraph._trusted(n, tuple(edges) + extra)


def complete_graph_classes(n: int) -> Iterator[SignedGraph]:
    """Every switching class of signed ``K_n``."""
    pairs = list(combinations(range(n), 2))
    for edges in _signatures(n, pairs):
        yield SignedGraph._trusted(n, tuple(edges))


def random_connected_signed_graph(rng: random.Random, n: int, p: float) -> SignedGraph:
    """Random spanning tree plus each other pair with probability ``p``;
    signs uniform."""
    verts = list(range(n))
    rng.shuffle(verts)
    pairs = set()
    for i in range(1, n):
        u, v = verts[i], verts[rng.randrange(i)]
        pairs.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if (u, v) not in pairs and rng.random() < p:
            pairs.add((u, v))
    return SignedGraph(n, [(u, v, rng.choice((1, -1))) for u, v in sorted(pairs)])


def random_corpus(seed: int, count: int, max_vertices: int = 12) -> list[SignedGraph]:
    rng = random.Random(seed)
    return [
        random_connected_signed_graph(rng, rng.randint(1, max_vertices), rng.choice((0.1, 0.25, 0.4, 0.7)))
        for _ in range(count)
    ]


# -- predicates --------------------------------------------------------------
# Each returns None on success or a short description of the failure.

Check = Callable[[SignedGraph], "str | None"]


def check_brooks(g: SignedGraph) -> str | None:
    chi = chromatic_number(g).chi
    delta = g.max_degree
    kind = classify_exceptional(g)
    if kind:
        if chi != delta + 1:
            return f"{kind.value}: chi={chi}, expected {delta + 1}"
    elif chi > delta:
        return f"chi={chi} exceeds max degree {delta}"
    cert = brooks_colour(g)
    if cert.exceptional is not kind:
        return f"brooks_colour classified {cert.exceptional}, expected {kind}"
    if cert.bound_used != (delta + 1 if kind else delta):
        return f"bound_used={cert.bound_used} with max degree {delta}"
    if chi > cert.bound_used:
        return f"chi={chi} exceeds constructive bound {cert.bound_used}"
    return None


def check_brooks_constructive(g: SignedGraph) -> str | None:
    kind = classify_exceptional(g)
    cert = brooks_colour(g)
    if cert.exceptional is not kind:
        return f"classification mismatch {cert.exceptional} vs {kind}"
    expected = g.max_degree + 1 if kind else g.max_degree
    if cert.bound_used != expected or not within(cert.colouring, max(expected, 1)):
        return f"colouring {cert.colouring} not within M_{expected}"
    if not is_proper(g, cert.colouring):
        return "colouring not proper"
    return None


def check_bound_2chi(g: SignedGraph) -> str | None:
    if any(g.loops):
        return None
    bound = 2 * unsigned_chromatic_number(g) - 1
    if g.n and find_n_colouring(g, bound) is None:
        return f"no colouring within M_{bound}"
    return None


def check_antibalance(g: SignedGraph) -> str | None:
    two = find_n_colouring(g, 2) is not None
    anti = is_antibalanced(g)
    if two != anti:
        return f"2-colourable={two} but antibalanced={anti}"
    return None


def check_gamma_identity(g: SignedGraph) -> str | None:
    chi = chromatic_number(g).chi
    gp = gamma_pair(g)
    if gp.gamma + gp.gamma_star != chi:
        return f"gamma={gp.gamma}, gamma*={gp.gamma_star}, chi={chi}"
    return None


def check_complete(g: SignedGraph) -> str | None:
    if not is_complete(g):
        return None
    n = g.n
    chi = chromatic_number(g).chi
    balanced = is_balanced(g).balanced
    if balanced and chi != n:
        return f"balanced K_{n} has chi={chi}"
    if not balanced and chi > n - 1:
        return f"unbalanced K_{n} has chi={chi}"
    phi = colour_complete(g)
    bound = n if balanced else n - 1
    if not is_proper(g, phi) or not within(phi, bound):
        return f"colour_complete gave {phi}, not a proper {bound}-colouring"
    return None


def check_degeneracy(g: SignedGraph) -> str | None:
    k, order = degeneracy_ordering(g)
    phi = greedy_colour(g, order, palette=k + 1)
    if not is_proper(g, phi):
        return "greedy colouring not proper"
    if not within(phi, k + 1):
        return f"greedy used {phi} outside M_{k + 1}"
    return None


def check_switching_invariance(g: SignedGraph, seed: int = 0) -> str | None:
    rng = random.Random(hash((seed, g.n, g.edges)) & 0xFFFFFFFF)
    s = {v for v in g.vertices if rng.random() < 0.5}
    h = switch(g, s)
    r = chromatic_number(g)
    if chromatic_number(h).chi != r.chi:
        return f"chi changed under switching at {sorted(s)}"
    if not is_proper(h, switch_colouring(r.witness, s)):
        return "switched witness is not proper"
    return None


def check_planar_conjecture(g: SignedGraph) -> str | None:
    if g.is_simple and g.n >= 3 and g.m > 3 * g.n - 6:
        return f"{g.m} edges on {g.n} vertices cannot be planar"
    if find_n_colouring(g, 4) is None:
        return "no colouring within M_4"
    return None


CORPUS_CHECKS: dict[str, tuple[Check, dict]] = {
    "brooks": (check_brooks, {"connected_only": True, "simple_only": True}),
    "brooks_constructive": (check_brooks_constructive, {"connected_only": True, "simple_only": True}),
    "bound_2chi": (check_bound_2chi, {"simple_only": False}),
    "antibalance": (check_antibalance, {}),
    "gamma_identity": (check_gamma_identity, {}),
    "degeneracy": (check_degeneracy, {}),
    "switching_invariance": (check_switching_invariance, {}),
}
THEOREMS = (*CORPUS_CHECKS, "complete", "sharpness", "planar_conjecture")


# -- running -----------------------------------------------------------------


def _run_chunk(args) -> tuple[int, int, str | None]:
    theorem_id, start, graphs = args
    check = CORPUS_CHECKS.get(theorem_id, (None,))[0] or _SPECIAL_CHECKS[theorem_id]
    for i, g in enumerate(graphs):
        detail = check(g)
        if detail is not None:
            return start + i, i + 1, detail
    return -1, len(graphs), None


_SPECIAL_CHECKS: dict[str, Check] = {"complete": check_complete, "planar_conjecture": check_planar_conjecture}


def run_checks(
    theorem_id: str,
    instances,
    check: Check,
    *,
    jobs: int = 1,
    chunk: int = 500,
    verbose: bool = False,
) -> VerificationReport:
    """Apply ``check`` to each instance in order, stopping at the first failure.

    With ``jobs > 1`` chunks run in worker processes; the reported
    counterexample is still the first failing instance in stream order.
    """
    report = VerificationReport(theorem_id)
    parallel = jobs > 1 and (theorem_id in CORPUS_CHECKS or theorem_id in _SPECIAL_CHECKS)
    if not parallel:
        for g in instances:
            report.instances_checked += 1
            detail = check(g)
            if verbose:
                report.lines.append(f"  {report.instances_checked:6d} {'ok' if detail is None else 'FAIL'} {g!r}")
            if detail is not None:
                report.passed = False
                report.counterexample = (g, detail)
                break
        return report

    graphs = list(instances)
    chunks = [(theorem_id, i, graphs[i : i + chunk]) for i in range(0, len(graphs), chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_run_chunk, chunks))
    first = min((r for r in results if r[2] is not None), default=None, key=lambda r: r[0])
    if first is None:
        report.instances_checked = len(graphs)
    else:
        report.instances_checked = first[0] + 1
        report.passed = False
        report.counterexample = (graphs[first[0]], first[2])
    return report


def _read_planar_dir(planar_dir: Path):
    from .io import parse_graph_file

    for path in sorted(Path(planar_dir).glob("*.txt")):
        yield parse_graph_file(path.read_text())


def verify_theorem(
    theorem_id: str,
    spec: EnumerationSpec | None = None,
    *,
    planar_dir: str | Path | None = None,
    sharpness_orders: tuple[int, ...] = (2, 3),
    jobs: int = 1,
    verbose: bool = False,
) -> VerificationReport:
    """Run one theorem's predicate over its instance stream.

    Corpus theorems enumerate ``spec``; ``complete`` uses every switching class
    of ``K_n`` up to ``spec.max_vertices``; ``sharpness`` checks
    ``chi(G_n) = 2n - 1``; ``planar_conjecture`` reads ``*.txt`` graph files
    from ``planar_dir``.
    """
    spec = spec or EnumerationSpec(4)
    if theorem_id in CORPUS_CHECKS:
        check, forced = CORPUS_CHECKS[theorem_id]
        spec = replace(spec, **forced)
        return run_checks(theorem_id, enumerate_signed_graphs(spec), check, jobs=jobs, verbose=verbose)
    if theorem_id == "complete":
        spec.check()
        graphs = (g for n in range(1, spec.max_vertices + 1) for g in complete_graph_classes(n))
        return run_checks(theorem_id, graphs, check_complete, jobs=jobs, verbose=verbose)
    if theorem_id == "sharpness":
        report = VerificationReport(theorem_id)
        for n in sharpness_orders:
            g = construct_sharpness_graph(n)
            report.instances_checked += 1
            chi = chromatic_number(g).chi
            chi_u = unsigned_chromatic_number(g)
            report.lines.append(f"  G_{n}: chi={chi}, underlying chi={chi_u}")
            if chi != 2 * n - 1 or chi_u != n:
                report.passed = False
                report.counterexample = (g, f"chi(G_{n})={chi}, underlying {chi_u}")
                break
        return report
    if theorem_id == "planar_conjecture":
        if planar_dir is None:
            raise ValueError("planar_conjecture needs a directory of planar graph files")
        return run_checks(theorem_id, _read_planar_dir(Path(planar_dir)), check_planar_conjecture, verbose=verbose)
    raise UnknownTheorem(theorem_id)


def corpus(max_vertices: int, *, connected_only: bool = True, simple_only: bool = True, limit: int | None = None):
    """Materialised enumeration, handy for tests and notebooks."""
    return list(islice(enumerate_signed_graphs(EnumerationSpec(max_vertices, connected_only, simple_only)), limit))


__all__ = [
    "CapExceeded",
    "EnumerationSpec",
    "ExceptionalClass",
    "THEOREMS",
    "UnknownTheorem",
    "VerificationReport",
    "complete_graph_classes",
    "corpus",
    "enumerate_signed_graphs",
    "random_connected_signed_graph",
    "random_corpus",
    "verify_theorem",
]
