import os
from itertools import combinations, product

import pytest
from conftest import FIXTURES, complete, cycle

from signedcolour.graph import SignedGraph, switch
from signedcolour.verify import (
    THEOREMS,
    CapExceeded,
    EnumerationSpec,
    UnknownTheorem,
    check_brooks,
    check_planar_conjecture,
    complete_graph_classes,
    corpus,
    enumerate_signed_graphs,
    random_corpus,
    run_checks,
    verify_theorem,
)


def key(g):
    return g.n, tuple(sorted(g.edges))


def switching_orbit(g):
    return {key(switch(g, {v for v in range(g.n) if bits >> v & 1})) for bits in range(1 << g.n)}


def all_signings(n, pairs, multi):
    """Every signature on a labelled underlying graph; with ``multi`` each
    pair may also carry a mixed parallel pair."""
    options = [(1,), (-1,)] + ([(1, -1)] if multi else [])
    for choice in product(options, repeat=len(pairs)):
        yield SignedGraph(n, [(u, v, s) for (u, v), signs in zip(pairs, choice) for s in signs])


def hand_classes(max_n, multi=False, connected=True):
    """Switching classes by brute force: group all signatures into orbits."""
    out = []
    for n in range(1, max_n + 1):
        all_pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(all_pairs)):
            pairs = [p for i, p in enumerate(all_pairs) if mask >> i & 1]
            probe = SignedGraph(n, [(u, v, 1) for u, v in pairs])
            if connected and not probe.is_connected:
                continue
            seen = set()
            for g in all_signings(n, pairs, multi):
                if key(g) not in seen:
                    orbit = switching_orbit(g)
                    seen |= orbit
                    out.append(orbit)
    return out


class TestEnumeration:
    def test_two_vertices(self):
        graphs = list(enumerate_signed_graphs(EnumerationSpec(2)))
        assert graphs == [SignedGraph(1, []), SignedGraph(2, [(0, 1, 1)])]

    def test_triangle_and_c4_classes(self):
        tri = [g for g in corpus(3) if g.m == 3]
        assert len(tri) == 2
        c4 = [g for g in corpus(4) if sorted(g.underlying_pairs) == [(0, 1), (0, 3), (1, 2), (2, 3)]]
        assert len(c4) == 2

    def test_three_vertices_by_hand(self):
        # K1, K2, three labelled paths on 3 vertices, and K3 balanced / unbalanced
        assert len(corpus(3)) == 1 + 1 + 3 + 2

    @pytest.mark.parametrize(
        "max_n, multi, connected",
        [(3, False, True), (3, False, False), (4, False, True), (3, True, True), (3, True, False)],
    )
    def test_one_per_switching_class(self, max_n, multi, connected):
        spec = EnumerationSpec(max_n, connected_only=connected, simple_only=not multi)
        emitted = [key(g) for g in enumerate_signed_graphs(spec)]
        classes = hand_classes(max_n, multi, connected)
        assert len(emitted) == len(classes)
        for orbit in classes:
            assert sum(k in orbit for k in emitted) == 1

    def test_filters(self):
        for g in enumerate_signed_graphs(EnumerationSpec(4)):
            assert g.is_connected and g.is_simple
        gs = list(enumerate_signed_graphs(EnumerationSpec(3, connected_only=False, simple_only=False)))
        assert any(not g.is_connected for g in gs) and any(not g.is_simple for g in gs)
        assert all(not any(g.loops) for g in gs)

    def test_reproducible(self):
        spec = EnumerationSpec(4, simple_only=False)
        assert list(enumerate_signed_graphs(spec)) == list(enumerate_signed_graphs(spec))

    def test_caps(self):
        with pytest.raises(CapExceeded):
            list(enumerate_signed_graphs(EnumerationSpec(7, long_run=True)))
        with pytest.raises(CapExceeded):
            list(enumerate_signed_graphs(EnumerationSpec(6)))
        assert next(enumerate_signed_graphs(EnumerationSpec(6, long_run=True))) == SignedGraph(1, [])

    @pytest.mark.parametrize("n, classes", [(1, 1), (2, 1), (3, 2), (4, 8), (5, 64)])
    def test_complete_classes(self, n, classes):
        assert len(list(complete_graph_classes(n))) == classes


def test_random_corpus_seeded():
    a = random_corpus(7, 30)
    assert a == random_corpus(7, 30)
    assert all(g.is_connected and g.is_simple and g.n <= 12 for g in a)


class TestVerify:
    @pytest.mark.parametrize("theorem", [t for t in THEOREMS if t not in ("planar_conjecture",)])
    def test_small_runs_pass(self, theorem):
        report = verify_theorem(theorem, EnumerationSpec(4))
        assert report.passed and report.counterexample is None
        assert report.instances_checked > 0

    def test_sharpness_lines(self):
        report = verify_theorem("sharpness")
        assert report.passed and report.instances_checked == 2
        assert "G_2: chi=3, underlying chi=2" in report.render(verbose=True)
        assert "G_3: chi=5, underlying chi=3" in report.render(verbose=True)

    def test_planar_dir(self):
        report = verify_theorem("planar_conjecture", planar_dir=FIXTURES / "planar")
        assert report.passed and report.instances_checked == len(list((FIXTURES / "planar").glob("*.txt")))

    def test_planar_needs_dir(self):
        with pytest.raises(ValueError):
            verify_theorem("planar_conjecture")

    def test_euler_guard(self):
        assert check_planar_conjecture(complete(6)) is not None

    def test_unknown(self):
        with pytest.raises(UnknownTheorem):
            verify_theorem("fermat", EnumerationSpec(2))

    def test_counterexample_is_first_failure(self):
        graphs = [cycle(3), cycle(4), cycle(5), cycle(6)]
        report = run_checks("demo", graphs, lambda g: "too long" if g.n >= 5 else None)
        assert not report.passed
        assert report.instances_checked == 3
        assert report.counterexample == (cycle(5), "too long")
        assert "FAIL" in report.render() and "too long" in report.render()

    def test_brooks_check_on_exceptional(self):
        assert check_brooks(complete(4)) is None
        assert check_brooks(cycle(4, negatives={0})) is None

    def test_jobs_match_serial(self):
        spec = EnumerationSpec(4, simple_only=False)
        serial = verify_theorem("bound_2chi", spec)
        parallel = verify_theorem("bound_2chi", spec, jobs=2)
        assert (serial.passed, serial.instances_checked) == (parallel.passed, parallel.instances_checked)

    def test_verbose_lines(self):
        report = verify_theorem("antibalance", EnumerationSpec(2), verbose=True)
        assert len(report.lines) == report.instances_checked == 2


@pytest.mark.slow
@pytest.mark.skipif(not os.environ.get("SIGNEDCOLOUR_LONG_RUN"), reason="set SIGNEDCOLOUR_LONG_RUN=1 (about 2.5 min)")
def test_brooks_six_vertices_long_run():
    report = verify_theorem("brooks", EnumerationSpec(6, long_run=True), jobs=os.cpu_count() or 1)
    assert report.passed, report.render()
