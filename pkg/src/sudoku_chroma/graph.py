"""Immutable simple graphs, the standard families, and graph products.

Vertex ids are dense integers ``0..order-1``. Labels are side metadata only;
they never take part in equality and are lost by :func:`serialize_graph`.

Numbering conventions (fixed, so that witness colorings can be written as
literal index tables):

* ``path:n`` / ``cycle:n`` / ``complete:n`` -- vertices ``v1..vn`` are ids ``0..n-1``.
* ``wheel:n`` -- rim ``v1..vn`` are ids ``0..n-1``, the hub ``v`` is id ``n``.
* ``star:n`` -- leaves ``v1..vn`` are ids ``0..n-1``, the center ``c`` is id ``n``.
* ``corona(G, H)`` -- the vertices of ``G`` keep their ids, then copy ``i`` of
  ``H`` occupies ids ``n_G + i*n_H .. n_G + (i+1)*n_H - 1`` in ``H``'s order.
  A copy vertex is labelled ``"<G label>/<H label>"``.
* ``line(G)`` -- vertex ``i`` is the ``i``-th edge of ``G.edges()``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import EmptyLineGraphError, GraphParseError, InvalidSpecError

__all__ = [
    "Graph",
    "Family",
    "FamilySpec",
    "generate",
    "corona",
    "line_graph",
    "augment_with_pendants",
    "relabel",
    "parse_graph",
    "serialize_graph",
    "parse_family",
    "path",
    "cycle",
    "complete",
    "wheel",
    "star",
]


@dataclass(frozen=True)
class Graph:
    order: int
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adjacency) != self.order:
            raise ValueError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                if not 0 <= w < self.order:
                    raise ValueError(f"neighbor {w} of {v} out of range")
                if w == v:
                    raise ValueError(f"self-loop at {v}")
                if v not in self.adjacency[w]:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(v) for v in range(self.order)))
        elif len(self.labels) != self.order:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def from_edges(
        cls, order: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> Graph:
        adj: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(order, tuple(frozenset(a) for a in adj), tuple(labels) if labels else ())

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.order) for v in sorted(self.adjacency[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, renumbered in ascending order of ``vertices``."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges, [self.labels[v] for v in keep])

    def vertex(self, label: str) -> int:
        """Id of the vertex carrying ``label``."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None


class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    WHEEL = "wheel"
    STAR = "star"


_FAMILY_MINIMUM = {
    Family.PATH: 1,
    Family.CYCLE: 3,
    Family.COMPLETE: 1,
    Family.WHEEL: 3,
    Family.STAR: 1,
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        minimum = _FAMILY_MINIMUM[self.family]
        if not isinstance(self.n, int) or self.n < minimum:
            raise InvalidSpecError(f"{self.family.value}:{self.n} needs n >= {minimum}")


def _names(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def generate(spec: FamilySpec) -> Graph:
    n = spec.n
    if spec.family is Family.PATH:
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), _names(n))
    if spec.family is Family.CYCLE:
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), _names(n))
    if spec.family is Family.COMPLETE:
        return Graph.from_edges(n, combinations(range(n), 2), _names(n))
    if spec.family is Family.WHEEL:
        rim = [(i, (i + 1) % n) for i in range(n)]
        spokes = [(i, n) for i in range(n)]
        return Graph.from_edges(n + 1, rim + spokes, _names(n) + ["v"])
    if spec.family is Family.STAR:
        return Graph.from_edges(n + 1, ((i, n) for i in range(n)), _names(n) + ["c"])
    raise InvalidSpecError(f"unknown family {spec.family!r}")  # pragma: no cover


def path(n: int) -> Graph:
    return generate(FamilySpec(Family.PATH, n))


def cycle(n: int) -> Graph:
    return generate(FamilySpec(Family.CYCLE, n))


def complete(n: int) -> Graph:
    return generate(FamilySpec(Family.COMPLETE, n))


def wheel(n: int) -> Graph:
    """Wheel with ``n`` rim vertices (order ``n + 1``, hub last)."""
    return generate(FamilySpec(Family.WHEEL, n))


def star(n: int) -> Graph:
    return generate(FamilySpec(Family.STAR, n))


def corona(g: Graph, h: Graph) -> Graph:
    """Corona product: copy ``i`` of ``h`` is joined to vertex ``i`` of ``g``."""
    n, m = g.order, h.order
    edges = list(g.edges())
    labels = list(g.labels)
    h_edges = h.edges()
    for i in range(n):
        base = n + i * m
        edges.extend((i, base + j) for j in range(m))
        edges.extend((base + a, base + b) for a, b in h_edges)
        labels.extend(f"{g.labels[i]}/{h.labels[j]}" for j in range(m))
    return Graph.from_edges(n * (1 + m), edges, labels)


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    if not edges:
        raise EmptyLineGraphError("the line graph of an edgeless graph is empty")
    incident: list[list[int]] = [[] for _ in range(g.order)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    line_edges = set()
    for around in incident:
        line_edges.update(combinations(around, 2))
    labels = [f"{g.labels[u]}-{g.labels[v]}" for u, v in edges]
    return Graph.from_edges(len(edges), sorted(line_edges), labels)


def augment_with_pendants(g: Graph, count: int) -> Graph:
    """Attach ``count`` new pendant vertices to every vertex of ``g``.

    The pendants of vertex ``v`` get ids ``g.order + v*count + j`` for
    ``j < count`` and labels ``"<v label>'<j+1>"``.
    """
    if count < 0:
        raise InvalidSpecError("pendant count must be non-negative")
    n = g.order
    edges = list(g.edges())
    labels = list(g.labels)
    for v in range(n):
        for j in range(count):
            edges.append((v, n + v * count + j))
            labels.append(f"{g.labels[v]}'{j + 1}")
    return Graph.from_edges(n * (1 + count), edges, labels)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``g``'s vertex ``v``."""
    if sorted(perm) != list(range(g.order)):
        raise ValueError("perm must be a bijection on 0..order-1")
    labels = [""] * g.order
    for v, p in enumerate(perm):
        labels[p] = g.labels[v]
    return Graph.from_edges(g.order, ((perm[u], perm[v]) for u, v in g.edges()), labels)


# -- text format -------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    Line 1 holds the order; every further non-empty line is ``u v`` with
    ``0 <= u < v < order``. Lines starting with ``#`` are comments.
    """
    order = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise GraphParseError(f"expected integers, got {line!r}", lineno) from None
        if order is None:
            if len(values) != 1 or values[0] < 1:
                raise GraphParseError("first line must be a positive vertex count", lineno)
            order = values[0]
            continue
        if len(values) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = values
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < order and 0 <= v < order):
            raise GraphParseError(f"vertex id out of range 0..{order - 1}", lineno)
        if u > v:
            u, v = v, u
        if (u, v) in edges:
            raise GraphParseError(f"duplicate edge {u} {v}", lineno)
        edges.add((u, v))
    if order is None:
        raise GraphParseError("missing vertex count")
    return Graph.from_edges(order, sorted(edges))


def serialize_graph(g: Graph) -> str:
    lines = [str(g.order)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- family expressions ------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_]+)|(\d+)|(\S)|$)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match.group(1):
            tokens.append(("name", match.group(1).lower(), match.start(1)))
        elif match.group(2):
            tokens.append(("int", match.group(2), match.start(2)))
        elif match.group(3):
            tokens.append(("punct", match.group(3), match.start(3)))
        if match.end() == pos:
            break
        pos = match.end()
    return tokens


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def fail(self, message: str):
        pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        raise InvalidSpecError(f"{message} at position {pos} in {self.text!r}")

    def take(self, kind: str, value: str | None = None) -> str:
        if self.i >= len(self.tokens):
            self.fail(f"expected {value or kind}")
        tkind, tvalue, _ = self.tokens[self.i]
        if tkind != kind or (value is not None and tvalue != value):
            self.fail(f"expected {value or kind}, got {tvalue!r}")
        self.i += 1
        return tvalue

    def expr(self) -> Graph:
        name = self.take("name")
        if name == "corona":
            self.take("punct", "(")
            g = self.expr()
            self.take("punct", ",")
            h = self.expr()
            self.take("punct", ")")
            return corona(g, h)
        if name == "line":
            self.take("punct", "(")
            g = self.expr()
            self.take("punct", ")")
            return line_graph(g)
        if name == "pendants":
            self.take("punct", "(")
            g = self.expr()
            self.take("punct", ",")
            count = int(self.take("int"))
            self.take("punct", ")")
            return augment_with_pendants(g, count)
        try:
            family = Family(name)
        except ValueError:
            self.i -= 1
            self.fail(f"unknown family {name!r}")
        self.take("punct", ":")
        return generate(FamilySpec(family, int(self.take("int"))))

    def parse(self) -> Graph:
        g = self.expr()
        if self.i != len(self.tokens):
            self.fail("trailing input")
        return g


def parse_family(text: str) -> Graph:
    """Build a graph from an expression such as ``corona(wheel:4,complete:2)``.

    Supported forms: ``<family>:<n>`` for path, cycle, complete, wheel, star;
    ``corona(A,B)``; ``line(A)``; ``pendants(A,k)``.
    """
    return _ExprParser(text).parse()
