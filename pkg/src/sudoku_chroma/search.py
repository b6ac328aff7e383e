"""Exact Sudoku numbers by size-ascending search over clue sets.

For each candidate size ``s`` (starting at the forced lower bound) the search
walks every vertex subset of size ``s`` that contains all forced vertices and
hits every forced edge, in lexicographic order. For each subset it walks the
proper colorings of the clue vertices over ``{1..chi}`` with first-use color
symmetry breaking, propagating forced colors as it goes so that
non-extendable prefixes are cut early, and counts extensions (cap 2) at the
leaves. Unique extendability is invariant under permuting the palette, so one
representative per color orbit is enough.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coloring import (
    PartialColoring,
    _bits,
    _count,
    _propagate,
    _Stats,
    brute_force_count,
    chromatic_number,
    count_extensions,
    is_uniquely_extendable,
    optimal_coloring,
)
from .errors import HypothesisNotMetError, SearchBudgetError, UnsupportedGraphError
from .graph import Graph

__all__ = [
    "ForcedSets",
    "SearchCertificate",
    "SudokuWitness",
    "CoronaBounds",
    "forced_sets",
    "min_hitting_set_size",
    "sudoku_number",
    "sudoku_number_upper",
    "greedy_sudoku_coloring",
    "corona_bounds",
    "DEFAULT_MAX_ORDER",
]

DEFAULT_MAX_ORDER = 16
EXACT_HITTING_SET_LIMIT = 20
BRUTE_FORCE_LIMIT = 200_000


@dataclass(frozen=True)
class ForcedSets:
    """Vertices and edges that every Sudoku clue set must cover."""

    must_include: frozenset[int]
    edge_constraints: frozenset[tuple[int, int]]
    lower_bound: int


def min_hitting_set_size(edges) -> int:
    """Smallest vertex set touching every edge (minimum vertex cover).

    Exact for up to ``EXACT_HITTING_SET_LIMIT`` edges; beyond that the size of
    a greedy maximal matching is returned, which is still a valid lower bound.
    """
    edges = [tuple(e) for e in edges]
    if len(edges) > EXACT_HITTING_SET_LIMIT:
        covered: set[int] = set()
        matching = 0
        for u, v in sorted(edges):
            if u not in covered and v not in covered:
                covered.update((u, v))
                matching += 1
        return matching

    def solve(rest: list[tuple[int, int]]) -> int:
        if not rest:
            return 0
        u, v = rest[0]
        take_u = 1 + solve([e for e in rest if u not in e])
        take_v = 1 + solve([e for e in rest if v not in e])
        return min(take_u, take_v)

    return solve(edges)


def forced_sets(g: Graph, k: int | None = None) -> ForcedSets:
    """Clue-set requirements from the low-degree rules.

    With ``k = chi(g) >= 3``: an uncolored vertex of degree ``<= k - 2`` always
    keeps two free colors, and an uncolored edge whose endpoints both have
    degree ``<= k - 1`` can always be recolored, so neither may be left out.
    """
    if k is None:
        k = chromatic_number(g)
    if k <= 2:
        return ForcedSets(frozenset(), frozenset(), 0)
    deg = g.degrees()
    must = frozenset(v for v in range(g.order) if deg[v] <= k - 2)
    edges = frozenset(
        (u, v)
        for u, v in g.edges()
        if deg[u] <= k - 1 and deg[v] <= k - 1 and u not in must and v not in must
    )
    return ForcedSets(must, edges, len(must) + min_hitting_set_size(edges))


@dataclass
class SearchCertificate:
    chi: int
    lower_bound: int
    sizes_exhausted: tuple[int, ...] = ()
    subsets_tried: int = 0
    colorings_tested: int = 0
    nodes: int = 0
    symmetry_breaking: bool = True
    forcing: bool = True
    verified_by: str = ""
    wall_time: float = field(default=0.0, compare=False)

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "chi": self.chi,
            "lower_bound": self.lower_bound,
            "sizes_exhausted": list(self.sizes_exhausted),
            "subsets_tried": self.subsets_tried,
            "colorings_tested": self.colorings_tested,
            "nodes": self.nodes,
            "symmetry_breaking": self.symmetry_breaking,
            "forcing": self.forcing,
            "verified_by": self.verified_by,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out


@dataclass(frozen=True)
class SudokuWitness:
    sn: int
    clue_set: tuple[int, ...]
    clue_coloring: PartialColoring
    certificate: SearchCertificate = field(compare=False)


@dataclass(frozen=True)
class CoronaBounds:
    lower: int
    upper: int
    n: int
    m: int
    sn_g: int


def _subsets(order: int, size: int, must: frozenset[int], constraints):
    """Lexicographically ordered ``size``-subsets containing ``must`` and
    hitting every pair in ``constraints``."""
    lower_partners: list[list[int]] = [[] for _ in range(order)]
    for u, v in constraints:
        lower_partners[max(u, v)].append(min(u, v))
    must_after = [0] * (order + 1)
    for v in range(order - 1, -1, -1):
        must_after[v] = must_after[v + 1] + (v in must)
    chosen: list[int] = []
    inset = [False] * order

    def excluded_ok(v: int) -> bool:
        return v not in must and all(inset[p] for p in lower_partners[v])

    def rec(v: int, remaining: int):
        if must_after[v] > remaining or order - v < remaining:
            return
        if v == order:
            yield tuple(chosen)
            return
        if remaining:
            chosen.append(v)
            inset[v] = True
            yield from rec(v + 1, remaining - 1)
            inset[v] = False
            chosen.pop()
        if excluded_ok(v):
            yield from rec(v + 1, remaining)

    yield from rec(0, size)


def _scan_subset(g: Graph, k: int, clue: tuple[int, ...], canonical: bool, stats: list[int]):
    """First (lexicographically smallest) uniquely extendable coloring of
    ``clue``, or None. ``stats`` accumulates [colorings_tested, nodes]."""
    adj = g.adjacency
    order = g.order
    full = (1 << k) - 1
    counter = _Stats()

    def rec(i: int, dom: list[int], assigned: list[bool], used: int, colors: list[int]):
        if i == len(clue):
            stats[0] += 1
            if _count(adj, dom, assigned, 2, counter) == 1:
                return tuple(colors)
            return None
        v = clue[i]
        top = min(k, used + 1) if canonical else k
        for bit in _bits(dom[v] & ((1 << top) - 1)):
            nd = dom[:]
            na = assigned[:]
            nd[v] = bit
            if not _propagate(adj, nd, na, [v]):
                continue
            color = bit.bit_length()
            colors.append(color)
            found = rec(i + 1, nd, na, max(used, color), colors)
            colors.pop()
            if found is not None:
                return found
        return None

    result = rec(0, [full] * order, [False] * order, 0, [])
    stats[1] += counter.nodes
    return result


def _scan_chunk(args):
    g, k, chunk, canonical = args
    stats = [0, 0]
    for idx, clue in enumerate(chunk):
        found = _scan_subset(g, k, clue, canonical, stats)
        if found is not None:
            return clue, found, idx + 1, stats
    return None, None, len(chunk), stats


def _worker_count(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("SUDOKU_CHROMA_THREADS", "1") or 1)
    return max(1, workers)


def sudoku_number(
    g: Graph,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    symmetry_breaking: bool = True,
    use_forcing: bool = True,
    budget: float | None = None,
    workers: int | None = None,
) -> SudokuWitness:
    """Exact Sudoku number of a connected graph together with a witness.

    The returned witness is the lexicographically smallest clue set of
    minimum size, colored with the lexicographically smallest uniquely
    extendable coloring. ``budget`` is a wall-clock limit in seconds.
    """
    if g.order > max_order:
        raise SearchBudgetError(f"order {g.order} exceeds the exact-search cap {max_order}")
    if not g.is_connected():
        raise UnsupportedGraphError("sudoku_number requires a connected graph")
    start = time.monotonic()
    deadline = None if budget is None else start + budget
    k = chromatic_number(g)
    forced = forced_sets(g, k) if use_forcing else ForcedSets(frozenset(), frozenset(), 0)
    cert = SearchCertificate(
        chi=k,
        lower_bound=forced.lower_bound,
        symmetry_breaking=symmetry_breaking,
        forcing=use_forcing,
    )
    n_workers = _worker_count(workers)
    exhausted = []
    for size in range(forced.lower_bound, g.order + 1):
        subsets = _subsets(g.order, size, forced.must_include, forced.edge_constraints)
        if n_workers > 1:
            clue, colors = _scan_parallel(g, k, list(subsets), symmetry_breaking, n_workers, cert)
        else:
            clue, colors = None, None
            stats = [0, 0]
            for candidate in subsets:
                cert.subsets_tried += 1
                colors = _scan_subset(g, k, candidate, symmetry_breaking, stats)
                if colors is not None:
                    clue = candidate
                    break
                if deadline is not None and time.monotonic() > deadline:
                    cert.colorings_tested += stats[0]
                    cert.nodes += stats[1]
                    raise SearchBudgetError(
                        f"budget of {budget}s exhausted at size {size}; "
                        f"sizes {exhausted} fully exhausted"
                    )
            cert.colorings_tested += stats[0]
            cert.nodes += stats[1]
        if clue is not None:
            coloring = PartialColoring(dict(zip(clue, colors)), k)
            cert.sizes_exhausted = tuple(exhausted)
            cert.verified_by = _reverify(g, coloring)
            cert.wall_time = time.monotonic() - start
            return SudokuWitness(size, clue, coloring, cert)
        exhausted.append(size)
    raise AssertionError("a total coloring is always uniquely extendable")  # pragma: no cover


def _scan_parallel(g, k, subsets, canonical, n_workers, cert):
    chunk = max(1, len(subsets) // (4 * n_workers))
    chunks = [subsets[i : i + chunk] for i in range(0, len(subsets), chunk)]
    with ProcessPoolExecutor(max_workers=n_workers) as pool:
        results = list(pool.map(_scan_chunk, [(g, k, c, canonical) for c in chunks]))
    # Reduce in subset order, never arrival order, so the witness is deterministic.
    for clue, colors, tried, stats in results:
        cert.subsets_tried += tried
        cert.colorings_tested += stats[0]
        cert.nodes += stats[1]
        if clue is not None:
            return clue, colors
    return None, None


def _reverify(g: Graph, coloring: PartialColoring) -> str:
    free = g.order - len(coloring)
    if coloring.k**free <= BRUTE_FORCE_LIMIT:
        if brute_force_count(g, coloring, cap=2) != 1:
            raise AssertionError("witness failed brute-force re-verification")
        return "brute-force"
    if count_extensions(g, coloring, cap=2).count != 1:
        raise AssertionError("witness failed re-verification")
    return "solver"


def sudoku_number_upper(g: Graph, clue: PartialColoring) -> bool:
    """True iff ``clue`` (palette ``chi(g)``) is a Sudoku coloring of ``g``,
    certifying ``sn(g) <= len(clue)`` without any search."""
    k = chromatic_number(g)
    if clue.k != k:
        raise ValueError(f"clue palette {clue.k} differs from chi(g) = {k}")
    return is_uniquely_extendable(g, clue)


def greedy_sudoku_coloring(g: Graph) -> PartialColoring:
    """An inclusion-minimal Sudoku coloring found by clue removal.

    Starts from an optimal total coloring and drops each vertex in turn
    (highest degree first) whenever the remainder stays uniquely extendable.
    Gives an upper bound on ``sn`` for graphs too large for exact search.
    """
    current = optimal_coloring(g)
    deg = g.degrees()
    for v in sorted(range(g.order), key=lambda u: (-deg[u], u)):
        trial = PartialColoring({u: c for u, c in current.items() if u != v}, current.k)
        if is_uniquely_extendable(g, trial):
            current = trial
    return current


def corona_bounds(g: Graph, h: Graph, **search_options) -> CoronaBounds:
    """``(n*m, n*m + sn(g))`` for ``sn(g o h)`` when ``chi(g) >= 3`` and
    ``h`` has at most ``chi(g) - 2`` vertices."""
    k = chromatic_number(g)
    if k < 3:
        raise HypothesisNotMetError(f"chi(g) = {k} < 3")
    if h.order > k - 2:
        raise HypothesisNotMetError(f"order of h is {h.order} > chi(g) - 2 = {k - 2}")
    sn_g = sudoku_number(g, **search_options).sn
    nm = g.order * h.order
    return CoronaBounds(nm, nm + sn_g, g.order, h.order, sn_g)

