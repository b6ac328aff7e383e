"""Corona-product families with closed-form Sudoku numbers.

Each constructor returns the instance graph, an explicit clue coloring built
from the closed-form construction, and the predicted Sudoku number, so that
both can be checked mechanically. Vertex ids follow the conventions of
:mod:`sudoku_chroma.graph`; the helpers below translate the usual names
(``v_i`` for base vertices, ``u_i`` / ``u_i'`` for copy vertices) into ids.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .coloring import PartialColoring, chromatic_number, optimal_coloring
from .errors import InvalidSpecError
from .graph import Graph, augment_with_pendants, complete, corona, cycle, line_graph, path, wheel

__all__ = [
    "TheoremId",
    "TheoremInstance",
    "thm21_lower_family",
    "thm21_upper_family",
    "pendant_augmented_instance",
    "thm22_instance",
    "thm23_instance",
    "thm24_instance",
    "thm25_instance",
    "thm26_instance",
    "formula_sn",
    "build_instance",
]


class TheoremId(str, enum.Enum):
    T21_UpperFamily = "T21U"
    T21_LowerFamily = "T21L"
    T22_CnK1 = "T22"
    T23_WnK1 = "T23"
    T24_WnK2 = "T24"
    T25_KnKm = "T25"
    T26_CnPm = "T26"


@dataclass(frozen=True)
class TheoremInstance:
    id: TheoremId
    params: dict
    graph: Graph = field(repr=False)
    clue: PartialColoring = field(repr=False)
    formula_sn: int
    branch: str = ""

    @property
    def name(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.id.value}({args})"


def _pattern(j: int) -> int:
    """Color 1, 2, 3 for ``j`` congruent to 1, 2, 0 modulo 3."""
    return (j - 1) % 3 + 1


def _require(condition: bool, message: str):
    if not condition:
        raise InvalidSpecError(message)


def formula_sn(theorem: TheoremId | str, n: int, m: int | None = None) -> int:
    """Closed-form Sudoku number of a family member."""
    theorem = TheoremId(theorem)
    if theorem is TheoremId.T22_CnK1:
        return 1 if n % 2 == 0 else n + 1
    if theorem is TheoremId.T23_WnK1:
        return n + 1 if n % 2 == 0 else n + 3
    if theorem is TheoremId.T24_WnK2:
        return n + 2 if n % 2 == 0 else 2 * (n + 1)
    if theorem is TheoremId.T25_KnKm:
        return n * m + n - m - 1 if m <= n - 2 else n * (m - 1) + 1
    if theorem is TheoremId.T26_CnPm:
        return n + 1
    if theorem is TheoremId.T21_LowerFamily:
        return 2 * n
    raise ValueError(f"{theorem.value} has no single-parameter formula")


def thm22_instance(n: int) -> TheoremInstance:
    """``C_n o K_1``; pendant ``u_j`` (attached to ``v_j``) has id ``n + j - 1``."""
    _require(n >= 3, "C_n o K_1 needs n >= 3")
    g = corona(cycle(n), path(1))
    params = {"n": n}
    if n % 2 == 0:
        clue = PartialColoring({0: 1}, 2)
        return TheoremInstance(TheoremId.T22_CnK1, params, g, clue, 1, "even")
    k = (n - 1) // 2
    colors = {0: 3}
    colors.update({n + j - 1: _pattern(j) for j in range(1, n + 1)})
    branch = "odd"
    if k % 3 == 0:
        colors[2 * n - 1] = 2
        branch = "odd, k multiple of 3"
    clue = PartialColoring(colors, 3)
    return TheoremInstance(TheoremId.T22_CnK1, params, g, clue, n + 1, branch)


def thm23_instance(n: int) -> TheoremInstance:
    """``W_n o K_1``; rim ``v_j`` is id ``j - 1``, hub ``v`` is id ``n``,
    pendant ``u_j`` is id ``n + j`` and the hub pendant ``u`` is id ``2n + 1``."""
    _require(n >= 3, "W_n o K_1 needs n >= 3")
    g = corona(wheel(n), path(1))
    hub, hub_pendant = n, 2 * n + 1

    def u(j):
        return n + j

    params = {"n": n}
    if n % 2 == 0:
        colors = {hub_pendant: 1, u(1): 1}
        colors.update({u(i): 2 for i in range(2, n + 1)})
        clue = PartialColoring(colors, 3)
        return TheoremInstance(TheoremId.T23_WnK1, params, g, clue, n + 1, "even")
    colors = {hub: 4, 0: 3, hub_pendant: 1}
    colors.update({u(j): _pattern(j) for j in range(1, n + 1)})
    branch = "odd"
    if ((n - 1) // 2) % 3 == 0:
        colors[u(n)] = 2
        branch = "odd, k multiple of 3"
    clue = PartialColoring(colors, 4)
    return TheoremInstance(TheoremId.T23_WnK1, params, g, clue, n + 3, branch)


def thm24_instance(n: int) -> TheoremInstance:
    """``W_n o K_2``; the copy at rim ``v_i`` is ``(u_i, u_i')`` with ids
    ``n + 2i - 1`` and ``n + 2i``; the hub copy ``(u, u')`` is ``3n + 1, 3n + 2``."""
    _require(n >= 4, "W_n o K_2 needs n >= 4")
    g = corona(wheel(n), complete(2))
    hub = n

    def u(i):
        return n + 2 * i - 1

    def u_(i):
        return n + 2 * i

    hub_u, hub_u_ = 3 * n + 1, 3 * n + 2
    params = {"n": n}
    if n % 2 == 0:
        colors = {hub: 3, hub_u_: 1, u_(1): 1}
        colors.update({u_(i): 3 for i in range(2, n + 1)})
        clue = PartialColoring(colors, 3)
        return TheoremInstance(TheoremId.T24_WnK2, params, g, clue, n + 2, "even")
    colors = {hub_u: 1, u(1): 1, hub_u_: 4, u_(n): 1}
    colors.update({u(i): 2 for i in range(2, n + 1)})
    colors.update({u_(i): 4 for i in range(1, n)})
    clue = PartialColoring(colors, 4)
    return TheoremInstance(TheoremId.T24_WnK2, params, g, clue, 2 * (n + 1), "odd")


def thm25_instance(n: int, m: int) -> TheoremInstance:
    """``K_n o K_m``; ``v_i`` is id ``i - 1`` and the copy at ``v_i`` occupies
    ids ``n + (i-1)m .. n + im - 1``. Free choices are resolved by giving the
    allowed colors in ascending order to ascending copy vertices."""
    _require(n >= 3 and m >= 1, "K_n o K_m needs n >= 3 and m >= 1")
    g = corona(complete(n), complete(m))
    chi = max(n, m + 1)

    def copy(i):
        return range(n + (i - 1) * m, n + i * m)

    colors: dict[int, int] = {}
    params = {"n": n, "m": m}
    if m <= n - 2:
        fixed = set(range(m + 2, n + 1))
        colors.update({i - 1: i for i in fixed})
        for i in range(1, n + 1):
            allowed = [c for c in range(1, n + 1) if c != i and c not in fixed]
            colors.update(zip(copy(i), allowed))
        clue = PartialColoring(colors, chi)
        return TheoremInstance(TheoremId.T25_KnKm, params, g, clue, n * m + n - m - 1, "m <= n-2")
    colors.update(zip(copy(1), range(2, m + 2)))
    for i in range(2, n + 1):
        allowed = [c for c in range(1, m + 2) if c not in (1, i)]
        colors.update(zip(list(copy(i))[: m - 1], allowed))
    clue = PartialColoring(colors, chi)
    return TheoremInstance(TheoremId.T25_KnKm, params, g, clue, n * (m - 1) + 1, "m >= n-1")


def thm26_instance(n: int, m: int) -> TheoremInstance:
    """``C_n o P_m``; path vertex ``u_ij`` (copy at ``v_i``) is id ``n + (i-1)m + j - 1``."""
    _require(n >= 3 and m >= 2, "C_n o P_m needs n >= 3 and m >= 2")
    g = corona(cycle(n), path(m))

    def u(i, j):
        return n + (i - 1) * m + j - 1

    params = {"n": n, "m": m}
    if n % 2 == 0:
        colors = {u(i, 1): 1 for i in range(1, n + 1)}
        colors[u(1, 2)] = 2
        branch = "even"
    else:
        colors = {u(i, 1): 1 for i in range(1, n)}
        colors[u(1, 2)] = 2
        colors[u(n, 1)] = 2
        branch = "odd"
    clue = PartialColoring(colors, 3)
    return TheoremInstance(TheoremId.T26_CnPm, params, g, clue, n + 1, branch)


def thm21_lower_family(n: int) -> TheoremInstance:
    """``L(C_n o K_1) o K_1``, meeting the corona lower bound ``2n``.

    In the line graph ``v_j`` is the cycle edge ``v_j v_{j+1}`` and ``u_j`` the
    pendant edge at ``v_j``; ``u_j'`` and ``v_j'`` are their corona pendants.
    """
    _require(n >= 3, "the line-graph family needs n >= 3")
    base = corona(cycle(n), path(1))
    lg = line_graph(base)
    g = corona(lg, path(1))
    edge_index = {e: i for i, e in enumerate(base.edges())}

    def edge_vertex(a, b):
        return edge_index[(min(a, b), max(a, b))]

    size = lg.order
    colors = {}
    override = n % 3 == 1
    for j in range(1, n + 1):
        color = 2 if override and j == n else _pattern(j)
        v_j = edge_vertex(j - 1, j % n)
        u_j = edge_vertex(j - 1, n + j - 1)
        colors[size + v_j] = color
        colors[size + u_j] = color
    clue = PartialColoring(colors, 3)
    branch = "n = 3k+1" if override else "n = 3k or 3k+2"
    return TheoremInstance(TheoremId.T21_LowerFamily, {"n": n}, g, clue, 2 * n, branch)


def _pendant_base(g: Graph):
    chi = chromatic_number(g)
    _require(chi >= 4, f"the pendant family needs chi(g) >= 4, got {chi}")
    base = optimal_coloring(g)
    augmented = augment_with_pendants(g, chi - 1)
    colors = {}
    for v in range(g.order):
        others = [c for c in range(1, chi + 1) if c != base[v]]
        for j, c in enumerate(others):
            colors[g.order + v * (chi - 1) + j] = c
    return chi, base, augmented, colors


def pendant_augmented_instance(g: Graph, name: str = "g") -> TheoremInstance:
    """``G'``: ``chi(g) - 1`` pendants on every vertex, each vertex's pendants
    colored with the colors it does not get in an optimal coloring of ``g``."""
    chi, _, augmented, colors = _pendant_base(g)
    clue = PartialColoring(colors, chi)
    params = {"g": name, "level": "G'"}
    return TheoremInstance(
        TheoremId.T21_UpperFamily, params, augmented, clue, g.order * (chi - 1), "G'"
    )


def thm21_upper_family(g: Graph, name: str = "g") -> TheoremInstance:
    """``G' o K_1``, meeting the corona upper bound ``n chi + n (chi - 1)``.

    Each corona pendant gets the smallest color differing from its anchor's
    color in the intended extension.
    """
    chi, base, augmented, colors = _pendant_base(g)
    full = dict(colors)
    full.update(base.items())
    g2 = corona(augmented, path(1))
    clue_colors = dict(colors)
    for w in range(augmented.order):
        clue_colors[augmented.order + w] = 1 if full[w] != 1 else 2
    clue = PartialColoring(clue_colors, chi)
    value = g.order * chi + g.order * (chi - 1)
    params = {"g": name, "level": "G' o K1"}
    return TheoremInstance(TheoremId.T21_UpperFamily, params, g2, clue, value, "G' o K1")


def build_instance(theorem: TheoremId | str, n: int, m: int | None = None) -> TheoremInstance:
    theorem = TheoremId(theorem)
    if theorem is TheoremId.T22_CnK1:
        return thm22_instance(n)
    if theorem is TheoremId.T23_WnK1:
        return thm23_instance(n)
    if theorem is TheoremId.T24_WnK2:
        return thm24_instance(n)
    if theorem is TheoremId.T25_KnKm:
        return thm25_instance(n, m)
    if theorem is TheoremId.T26_CnPm:
        return thm26_instance(n, m)
    if theorem is TheoremId.T21_LowerFamily:
        return thm21_lower_family(n)
    raise ValueError("T21U instances are built from a base graph; use thm21_upper_family")
