"""Acceptance suite: one test per criterion, each reported as a PASS/FAIL line
in the "acceptance criteria" section of the terminal summary.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import random
import time
from itertools import combinations, product

import pytest

from sudoku_chroma import (
    Graph,
    PartialColoring,
    chromatic_number,
    complete,
    corona,
    count_extensions,
    cycle,
    forced_sets,
    is_uniquely_extendable,
    path,
    pendant_augmented_instance,
    sudoku_number,
    thm21_lower_family,
    thm21_upper_family,
    thm24_instance,
    thm25_instance,
    thm26_instance,
    wheel,
)
from sudoku_chroma.report import Match, verify_instance

from conftest import CORPUS
from oracles import list_colorings, naive_count, random_connected_edges, uniquely_determined_sets


def timed_sn(g, **options):
    start = time.monotonic()
    w = sudoku_number(g, **options)
    return w, time.monotonic() - start


def assert_exhaustive(w):
    """The witness size is proven minimal: every smaller size from the
    forced lower bound up was exhausted."""
    assert w.certificate.sizes_exhausted == tuple(range(w.certificate.lower_bound, w.sn))
    assert w.certificate.verified_by in ("brute-force", "solver")


@pytest.mark.criterion(1, "C_n o K_1: sn = 1 (n = 4, 6), n + 1 (n = 3, 5, 7); <= 60 s each")
def test_cycle_corona_exact():
    for n, expected in [(4, 1), (6, 1), (3, 4), (5, 6), (7, 8)]:
        w, elapsed = timed_sn(corona(cycle(n), path(1)))
        assert w.sn == expected, f"n={n}"
        assert_exhaustive(w)
        assert elapsed <= 60


@pytest.mark.criterion(2, "W_n o K_1: sn(W_4 o K_1) = 5, sn(W_5 o K_1) = 8; <= 300 s each")
def test_wheel_corona_exact():
    for n, expected in [(4, 5), (5, 8)]:
        w, elapsed = timed_sn(corona(wheel(n), path(1)))
        assert w.sn == expected, f"n={n}"
        assert_exhaustive(w)
        assert elapsed <= 300


@pytest.mark.criterion(3, "W_n o K_2: sn(W_4 o K_2) = 6 exactly; n = 5 UpperOnly with lower bound 12")
def test_wheel_k2_corona():
    # odd half: the 12-clue construction is unique and meets the forced bound
    odd = thm24_instance(5)
    assert len(odd.clue) == 12
    assert is_uniquely_extendable(odd.graph, odd.clue)
    assert forced_sets(odd.graph).lower_bound == 12
    assert verify_instance(odd, exact=False).match is Match.UPPER_ONLY

    # even half: the 6-clue construction is unique ...
    even = thm24_instance(4)
    assert len(even.clue) == 6
    assert is_uniquely_extendable(even.graph, even.clue)
    # ... and exact search must exhaust sizes <= 5 and land on 6
    w = sudoku_number(even.graph)
    assert w.sn == 6, (
        f"exact search found a uniquely extendable clue of size {w.sn}: "
        f"{dict(w.clue_coloring.items())}"
    )
    assert_exhaustive(w)


@pytest.mark.criterion(4, "K_n o K_m: exact 4, 4, 6 for (3,1), (3,2), (4,1); UpperOnly 9 for (4,2), (4,3)")
def test_complete_corona():
    for (n, m), expected in [((3, 1), 4), ((3, 2), 4), ((4, 1), 6)]:
        inst = thm25_instance(n, m)
        assert inst.formula_sn == expected
        w = sudoku_number(inst.graph)
        assert w.sn == expected, f"(n, m) = {(n, m)}"
        assert_exhaustive(w)
    for n, m in [(4, 2), (4, 3)]:
        inst = thm25_instance(n, m)
        assert len(inst.clue) == inst.formula_sn == 9
        report = verify_instance(inst, exact=False)
        assert report.verified_upper
        assert report.forced_lower_bound <= 9
        assert report.match is Match.UPPER_ONLY


@pytest.mark.criterion(5, "C_n o P_m: sn = n + 1 exact for (3,2), (4,2), (3,3); 6-clue (5,3) unique")
def test_cycle_path_corona():
    for n, m in [(3, 2), (4, 2), (3, 3)]:
        w = sudoku_number(corona(cycle(n), path(m)))
        assert w.sn == n + 1, f"(n, m) = {(n, m)}"
        assert_exhaustive(w)
    inst = thm26_instance(5, 3)
    assert len(inst.clue) == 6
    assert is_uniquely_extendable(inst.graph, inst.clue)
    assert verify_instance(inst, exact=False).match is Match.UPPER_ONLY


@pytest.mark.criterion(6, "corona sandwich: n <= sn(g o K_1) <= n + sn(g) for g in K_4, K_5, W_5")
def test_corona_sandwich():
    for g in (complete(4), complete(5), wheel(5)):
        assert chromatic_number(g) - 2 >= 1
        sn_g = sudoku_number(g).sn
        sn = sudoku_number(corona(g, path(1))).sn
        assert g.order <= sn <= g.order + sn_g


@pytest.mark.criterion(7, "line-graph family: sn = 2n exact at n = 3; UpperOnly with lower bound 2n at n = 4, 5")
def test_line_graph_family():
    inst = thm21_lower_family(3)
    assert inst.graph.order == 12
    w = sudoku_number(inst.graph)
    assert w.sn == 6
    assert is_uniquely_extendable(inst.graph, inst.clue)
    for n in (4, 5):
        inst = thm21_lower_family(n)
        report = verify_instance(inst, exact=False)
        assert report.verified_upper
        assert report.forced_lower_bound == 2 * n
        assert report.match is Match.UPPER_ONLY


@pytest.mark.criterion(8, "pendant family on K_4: sn(G') = 12 and sn(G' o K_1) = 28 by matching bounds")
def test_pendant_family():
    level = pendant_augmented_instance(complete(4), "K4")
    g1 = level.graph
    assert g1.order == 16
    assert len(level.clue) == 12
    assert is_uniquely_extendable(g1, level.clue)
    f1 = forced_sets(g1)
    assert f1.must_include == frozenset(range(4, 16))  # the 12 degree-1 pendants
    assert f1.lower_bound == 12

    full = thm21_upper_family(complete(4), "K4")
    g2 = full.graph
    assert g2.order == 32
    assert len(full.clue) == 28
    assert is_uniquely_extendable(g2, full.clue)
    f2 = forced_sets(g2)
    # 16 corona pendants (degree 1) and 12 G'-pendants (now degree 2 <= chi - 2)
    assert f2.must_include == frozenset(range(4, 32))
    assert f2.lower_bound == 28


def random_partial_coloring(rng, g, k, max_free):
    """Random proper partial coloring leaving at most ``max_free`` vertices free."""
    while True:
        n_clues = rng.randint(max(0, g.order - max_free), g.order)
        colors = {}
        for v in rng.sample(range(g.order), n_clues):
            allowed = [c for c in range(1, k + 1) if all(colors.get(w) != c for w in g.neighbors(v))]
            if allowed:
                colors[v] = rng.choice(allowed)
        if g.order - len(colors) <= max_free:
            return colors


@pytest.mark.criterion(9, "counting equals naive enumeration on >= 500 random graphs (<= 9 vertices); <= 120 s")
def test_oracle_equivalence():
    rng = random.Random(20261016)
    max_free = {2: 9, 3: 7, 4: 6}
    start = time.monotonic()
    nonzero = zero = 0
    for _ in range(520):
        order = rng.randint(1, 9)
        g = Graph.from_edges(order, random_connected_edges(rng, order, rng.choice([0.15, 0.3, 0.5])))
        k = rng.choice([2, 3, 4])
        colors = random_partial_coloring(rng, g, k, max_free[k])
        expected = naive_count(g.order, g.edges(), colors, k)
        assert count_extensions(g, PartialColoring(colors, k)).count == expected
        nonzero += expected > 0
        zero += expected == 0
    assert nonzero > 100 and zero > 50  # both regimes exercised
    assert time.monotonic() - start <= 120


def count_list_colorings(n, lists, closed):
    """Transfer count of proper list colorings of the path (or, when
    ``closed``, the cycle) v_0 .. v_{n-1}."""
    total = 0
    starts = sorted(lists[0]) if closed else [None]
    for first in starts:
        ways = {c: 1 for c in lists[0] if first is None or c == first}
        for v in range(1, n):
            ways = {c: sum(w for d, w in ways.items() if d != c) for c in lists[v]}
        total += sum(w for c, w in ways.items() if not closed or c != first)
    return total


@pytest.mark.criterion(10, "two-element lists: paths (4-palette) and cycles (3-palette), n <= 7, >= 2 list colorings")
def test_two_element_lists():
    pairs3 = [frozenset(p) for p in combinations(range(1, 4), 2)]
    pairs4 = [frozenset(p) for p in combinations(range(1, 5), 2)]
    cycles_checked = paths_checked = 0
    for n in range(3, 8):
        for lists in product(pairs3, repeat=n):
            count = count_list_colorings(n, lists, closed=True)
            if n <= 5:
                edges = [(i, (i + 1) % n) for i in range(n)]
                assert count == list_colorings(n, edges, lists)
            # whenever a list coloring exists there is a second one
            assert count != 1, lists
            cycles_checked += 1
    for n in range(1, 8):
        for lists in product(pairs4, repeat=n):
            count = count_list_colorings(n, lists, closed=False)
            if n <= 4:
                assert count == list_colorings(n, [(i, i + 1) for i in range(n - 1)], lists)
            assert count >= 2, lists
            paths_checked += 1
    assert cycles_checked == sum(3**n for n in range(3, 8))
    assert paths_checked == sum(6**n for n in range(1, 8))


@pytest.mark.criterion(11, "forcing soundness: every witness covers low-degree vertices and edges; zero violations")
def test_forcing_soundness():
    violations = []
    checked = 0
    for name, g in sorted(CORPUS.items()):
        k = chromatic_number(g)
        if k < 3:
            continue
        f = forced_sets(g, k)
        # witnesses found without the forcing rules, so the check is not circular
        w = sudoku_number(g, use_forcing=False)
        clue = set(w.clue_set)
        if not f.must_include <= clue or any(u not in clue and v not in clue for u, v in f.edge_constraints):
            violations.append((name, "witness", w.clue_set))
        # every uniquely determining clue set of any size, on the smaller graphs
        if g.order <= 8:
            for size in range(g.order + 1):
                for subset, _ in uniquely_determined_sets(g.order, g.edges(), k, size):
                    s = set(subset)
                    checked += 1
                    if not f.must_include <= s or any(u not in s and v not in s for u, v in f.edge_constraints):
                        violations.append((name, "exhaustive", subset))
    assert checked > 1000
    assert violations == []
