"""Partial colorings, extension counting and color-list propagation.

Colors are the integers ``1..k``. Internally a vertex's candidate colors are
held as a bitmask in which bit ``c - 1`` stands for color ``c``.

Extensions are *labeled*: two total colorings that differ by a permutation of
the palette are different extensions. A partial coloring is uniquely
extendable when exactly one proper total ``k``-coloring agrees with it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Mapping

from .errors import GraphParseError, ImproperColoringError, NotExtendableError
from .graph import Graph

__all__ = [
    "PartialColoring",
    "ColorListMap",
    "ExtensionCount",
    "Verdict",
    "chromatic_number",
    "optimal_coloring",
    "max_clique",
    "count_extensions",
    "brute_force_count",
    "is_uniquely_extendable",
    "unique_extension",
    "propagate",
    "is_uce",
    "residual_path_check",
    "residual_cycle_check",
    "parse_coloring",
    "serialize_coloring",
]


@dataclass(frozen=True)
class PartialColoring:
    """Assignment ``vertex -> color`` over the palette ``{1..k}``."""

    assignments: Mapping[int, int]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "assignments", dict(sorted(self.assignments.items())))
        if self.k < 1:
            raise ImproperColoringError("palette size must be at least 1")
        for v, c in self.assignments.items():
            if not 1 <= c <= self.k:
                raise ImproperColoringError(f"color {c} of vertex {v} outside 1..{self.k}")

    @classmethod
    def empty(cls, k: int) -> PartialColoring:
        return cls({}, k)

    def __len__(self) -> int:
        return len(self.assignments)

    def __contains__(self, v: int) -> bool:
        return v in self.assignments

    def __getitem__(self, v: int) -> int:
        return self.assignments[v]

    def items(self):
        return self.assignments.items()

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self.assignments)

    def with_colors(self, extra: Mapping[int, int]) -> PartialColoring:
        merged = dict(self.assignments)
        merged.update(extra)
        return PartialColoring(merged, self.k)

    def restrict(self, vertices) -> PartialColoring:
        keep = set(vertices)
        return PartialColoring({v: c for v, c in self.assignments.items() if v in keep}, self.k)

    def check(self, g: Graph) -> None:
        """Raise :class:`ImproperColoringError` unless proper on its domain in ``g``."""
        for v, c in self.assignments.items():
            if not 0 <= v < g.order:
                raise ImproperColoringError(f"vertex {v} not in graph of order {g.order}")
            for w in g.adjacency[v]:
                if self.assignments.get(w) == c:
                    raise ImproperColoringError(f"adjacent vertices {v} and {w} share color {c}")

    def is_total(self, g: Graph) -> bool:
        return len(self.assignments) == g.order


@dataclass(frozen=True)
class ColorListMap:
    """Candidate colors of every uncolored vertex."""

    lists: Mapping[int, frozenset[int]]

    @property
    def contradiction(self) -> bool:
        return any(not colors for colors in self.lists.values())

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def __len__(self) -> int:
        return len(self.lists)


@dataclass(frozen=True)
class ExtensionCount:
    count: int
    cap: int | None = None
    nodes: int = field(default=0, compare=False)

    @property
    def saturated(self) -> bool:
        """True when counting stopped at the cap; the true count is then ``>= count``."""
        return self.cap is not None and self.count >= self.cap

    @property
    def extendable(self) -> bool:
        return self.count >= 1

    @property
    def unique(self) -> bool:
        return self.count == 1 and not (self.cap == 1)

    def __str__(self) -> str:
        return f">= {self.count}" if self.saturated else str(self.count)


class Verdict(enum.Enum):
    NOT_UNIQUE = "not-unique"
    INCONCLUSIVE = "inconclusive"


# -- bitmask machinery -------------------------------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _colors_of(mask: int) -> frozenset[int]:
    return frozenset(low.bit_length() for low in _bits(mask))


class _Stats:
    __slots__ = ("nodes",)

    def __init__(self):
        self.nodes = 0


def _propagate(adj, dom: list[int], assigned: list[bool], queue: list[int]) -> bool:
    """Fix every vertex whose domain is a singleton until nothing changes.

    Mutates ``dom``/``assigned``; returns False on an empty domain (which is
    left in ``dom`` so callers can report it).
    """
    while queue:
        v = queue.pop()
        if assigned[v]:
            continue
        d = dom[v]
        if d == 0:
            return False
        assigned[v] = True
        for w in adj[v]:
            if assigned[w]:
                continue
            old = dom[w]
            if old & d:
                new = old & ~d
                dom[w] = new
                if new == 0:
                    return False
                if new & (new - 1) == 0:
                    queue.append(w)
    return True


def _initial_state(g: Graph, c0: PartialColoring):
    full = (1 << c0.k) - 1
    dom = [full] * g.order
    for v, c in c0.items():
        dom[v] = 1 << (c - 1)
    assigned = [False] * g.order
    queue = [v for v in range(g.order) if dom[v] & (dom[v] - 1) == 0]
    return dom, assigned, queue


def _branch_vertex(dom: list[int], assigned: list[bool]) -> int:
    best, best_size = -1, 1 << 30
    for v, done in enumerate(assigned):
        if not done:
            size = dom[v].bit_count()
            if size < best_size:
                best, best_size = v, size
                if size == 2:
                    break
    return best


def _count(adj, dom, assigned, cap, stats, solutions=None) -> int:
    stats.nodes += 1
    v = _branch_vertex(dom, assigned)
    if v < 0:
        if solutions is not None:
            solutions.append(list(dom))
        return 1
    total = 0
    for bit in _bits(dom[v]):
        nd = dom[:]
        na = assigned[:]
        nd[v] = bit
        if _propagate(adj, nd, na, [v]):
            total += _count(adj, nd, na, None if cap is None else cap - total, stats, solutions)
            if cap is not None and total >= cap:
                break
    return total


def _solve(g: Graph, c0: PartialColoring, cap: int | None, solutions=None):
    stats = _Stats()
    dom, assigned, queue = _initial_state(g, c0)
    adj = g.adjacency
    if not _propagate(adj, dom, assigned, queue):
        return 0, stats
    if cap is not None and cap <= 0:
        return 0, stats
    return _count(adj, dom, assigned, cap, stats, solutions), stats


# -- public operations -------------------------------------------------------


def count_extensions(g: Graph, c0: PartialColoring, cap: int | None = None) -> ExtensionCount:
    """Count proper total ``c0.k``-colorings of ``g`` that agree with ``c0``.

    Counting stops as soon as ``cap`` extensions are found. Count 0 means
    ``c0`` is not extendable; an improper ``c0`` raises instead.
    """
    c0.check(g)
    count, stats = _solve(g, c0, cap)
    return ExtensionCount(count, cap, stats.nodes)


def brute_force_count(g: Graph, c0: PartialColoring, cap: int | None = None) -> int:
    """Reference counter: try all ``k ** (#uncolored)`` assignments.

    Deliberately naive; used only to cross-check :func:`count_extensions`.
    """
    c0.check(g)
    free = [v for v in range(g.order) if v not in c0]
    position = {v: i for i, v in enumerate(free)}
    inner = [(position[u], position[v]) for u, v in g.edges() if u in position and v in position]
    outer = [(position[u], c0[v]) for u, v in g.edges() if u in position and v in c0]
    outer += [(position[v], c0[u]) for u, v in g.edges() if v in position and u in c0]
    count = 0
    for values in product(range(1, c0.k + 1), repeat=len(free)):
        if all(values[a] != values[b] for a, b in inner) and all(values[a] != c for a, c in outer):
            count += 1
            if cap is not None and count >= cap:
                break
    return count


def unique_extension(g: Graph, c0: PartialColoring) -> PartialColoring | None:
    """The total coloring extending ``c0`` if it is unique, else None."""
    c0.check(g)
    solutions: list[list[int]] = []
    count, _ = _solve(g, c0, 2, solutions)
    if count != 1:
        return None
    return PartialColoring({v: mask.bit_length() for v, mask in enumerate(solutions[0])}, c0.k)


def _probe(adj, dom: list[int], assigned: list[bool]) -> bool:
    """Drop every color whose tentative assignment propagates to a
    contradiction, re-propagating after each drop, until nothing changes."""
    changed = True
    while changed:
        changed = False
        for v in range(len(dom)):
            if assigned[v]:
                continue
            for bit in _bits(dom[v]):
                nd = dom[:]
                nd[v] = bit
                if _propagate(adj, nd, assigned[:], [v]):
                    continue
                dom[v] &= ~bit
                changed = True
                if dom[v] == 0:
                    return False
                if dom[v] & (dom[v] - 1) == 0:
                    if not _propagate(adj, dom, assigned, [v]):
                        return False
                    break
    return True


def propagate(
    g: Graph, c0: PartialColoring, probe: bool = True
) -> tuple[PartialColoring, ColorListMap]:
    """Assign every vertex whose candidate list is a singleton, to a fixpoint.

    With ``probe`` a color is also struck from a list when assigning it leads
    to a contradiction by singleton propagation alone. Every forced
    assignment holds in all extensions of ``c0``. On contradiction the
    returned lists contain an empty entry.
    """
    c0.check(g)
    dom, assigned, queue = _initial_state(g, c0)
    if _propagate(g.adjacency, dom, assigned, queue) and probe:
        _probe(g.adjacency, dom, assigned)
    colored = {v: dom[v].bit_length() for v in range(g.order) if assigned[v]}
    lists = {v: _colors_of(dom[v]) for v in range(g.order) if not assigned[v]}
    return PartialColoring(colored, c0.k), ColorListMap(lists)


def is_uniquely_extendable(g: Graph, c0: PartialColoring) -> bool:
    """True iff ``c0`` has exactly one extension (a Sudoku coloring)."""
    extended, lists = propagate(g, c0)
    if lists.contradiction:
        return False
    if len(extended) == g.order:
        return True
    if residual_path_check(g, extended, lists) is Verdict.NOT_UNIQUE:
        return False
    if residual_cycle_check(g, extended, lists) is Verdict.NOT_UNIQUE:
        return False
    count, _ = _solve(g, extended, 2)
    return count == 1


def is_uce(g: Graph, c0: PartialColoring, v: int) -> bool:
    """True iff every extension of ``c0`` gives ``v`` the same color."""
    if v in c0:
        raise ValueError(f"vertex {v} is already colored")
    c0.check(g)
    forbidden = {c0[w] for w in g.adjacency[v] if w in c0}
    feasible = 0
    for color in range(1, c0.k + 1):
        if color in forbidden:
            continue
        count, _ = _solve(g, c0.with_colors({v: color}), 1)
        feasible += count
    if feasible == 0:
        raise NotExtendableError("partial coloring has no extension")
    return feasible == 1


def _residual_components(g: Graph, coloring: PartialColoring, lists: ColorListMap):
    free = [v for v in range(g.order) if v not in coloring]
    seen: set[int] = set()
    for start in free:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            for w in g.adjacency[stack.pop()]:
                if w not in seen and w not in coloring:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        members = set(comp)
        inner_deg = {v: len(g.adjacency[v] & members) for v in comp}
        comp_lists = {}
        for v in comp:
            used = {coloring[w] for w in g.adjacency[v] if w in coloring}
            given = lists.lists.get(v, frozenset(range(1, coloring.k + 1)))
            comp_lists[v] = frozenset(c for c in given if c not in used)
        yield comp, inner_deg, comp_lists


def residual_path_check(g: Graph, coloring: PartialColoring, lists: ColorListMap) -> Verdict:
    """NOT_UNIQUE if some uncolored component is a path whose lists all have size >= 2.

    Such a path has at least two list colorings, so the whole graph has
    either no extension or at least two.
    """
    for comp, inner_deg, comp_lists in _residual_components(g, coloring, lists):
        edges = sum(inner_deg.values()) // 2
        is_path = edges == len(comp) - 1 and max(inner_deg.values()) <= 2
        if is_path and all(len(L) >= 2 for L in comp_lists.values()):
            return Verdict.NOT_UNIQUE
    return Verdict.INCONCLUSIVE


def residual_cycle_check(g: Graph, coloring: PartialColoring, lists: ColorListMap) -> Verdict:
    """NOT_UNIQUE if some uncolored component is a cycle with lists of size >= 2
    drawn from a common 3-color set."""
    for comp, inner_deg, comp_lists in _residual_components(g, coloring, lists):
        if len(comp) < 3 or any(d != 2 for d in inner_deg.values()):
            continue
        union = frozenset().union(*comp_lists.values())
        if len(union) <= 3 and all(len(L) >= 2 for L in comp_lists.values()):
            return Verdict.NOT_UNIQUE
    return Verdict.INCONCLUSIVE


# -- chromatic number --------------------------------------------------------


def max_clique(g: Graph) -> list[int]:
    """A maximum clique (Bron-Kerbosch with pivoting)."""
    adj = g.adjacency
    best: list[int] = []

    def expand(clique: list[int], cand: set[int], excl: set[int]):
        nonlocal best
        if not cand and not excl:
            if len(clique) > len(best):
                best = clique[:]
            return
        if len(clique) + len(cand) <= len(best):
            return
        pivot = max(cand | excl, key=lambda u: len(adj[u] & cand))
        for v in sorted(cand - adj[pivot]):
            expand(clique + [v], cand & adj[v], excl & adj[v])
            cand = cand - {v}
            excl = excl | {v}

    expand([], set(range(g.order)), set())
    return sorted(best)


def _dsatur(g: Graph) -> list[int]:
    colors = [0] * g.order
    for _ in range(g.order):
        best, key = -1, None
        for v in range(g.order):
            if colors[v]:
                continue
            sat = len({colors[w] for w in g.adjacency[v] if colors[w]})
            k = (sat, len(g.adjacency[v]), -v)
            if key is None or k > key:
                best, key = v, k
        used = {colors[w] for w in g.adjacency[best]}
        c = 1
        while c in used:
            c += 1
        colors[best] = c
    return colors


def optimal_coloring(g: Graph) -> PartialColoring:
    """A proper total coloring with exactly ``chromatic_number(g)`` colors."""
    clique = max_clique(g)
    greedy = _dsatur(g)
    upper = max(greedy)
    for k in range(len(clique), upper):
        # Precolor the clique to break color symmetry.
        seed = PartialColoring({v: i + 1 for i, v in enumerate(clique)}, k)
        solutions: list[list[int]] = []
        count, _ = _solve(g, seed, 1, solutions)
        if count:
            return PartialColoring(
                {v: mask.bit_length() for v, mask in enumerate(solutions[0])}, k
            )
    return PartialColoring(dict(enumerate(greedy)), upper)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number: clique lower bound, DSATUR upper bound, then
    saturation-ordered backtracking for each intermediate palette size."""
    return optimal_coloring(g).k


# -- coloring files ----------------------------------------------------------


def parse_coloring(text: str, k: int | None = None) -> PartialColoring:
    """Parse ``vertex color`` lines; the palette comes from a ``k <int>``
    header line or the ``k`` argument (the argument wins)."""
    header_k = None
    assignments: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "k":
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphParseError(f"malformed palette line {line!r}", lineno)
            header_k = int(parts[1])
            continue
        try:
            v, c = (int(p) for p in parts)
        except ValueError:
            raise GraphParseError(f"expected 'vertex color', got {line!r}", lineno) from None
        if v < 0 or c < 1:
            raise GraphParseError(f"bad vertex or color in {line!r}", lineno)
        if v in assignments:
            raise GraphParseError(f"vertex {v} colored twice", lineno)
        assignments[v] = c
    palette = k if k is not None else header_k
    if palette is None:
        raise GraphParseError("palette size missing: add a 'k <int>' line or pass k")
    return PartialColoring(assignments, palette)


def serialize_coloring(c: PartialColoring) -> str:
    lines = [f"k {c.k}"]
    lines.extend(f"{v} {color}" for v, color in c.items())
    return "\n".join(lines) + "\n"
