"""Independent reference implementations used only by the tests.

Nothing here imports the search or counting code under test; graphs are
taken as plain edge lists.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations, product

import networkx as nx


def naive_count(order, edges, pre, k):
    free = [v for v in range(order) if v not in pre]
    total = 0
    for values in product(range(1, k + 1), repeat=len(free)):
        color = dict(pre)
        color.update(zip(free, values))
        if all(color[a] != color[b] for a, b in edges):
            total += 1
    return total


def all_colorings(order, edges, k):
    adj = [[] for _ in range(order)]
    for a, b in edges:
        adj[max(a, b)].append(min(a, b))
    out = []
    color = [0] * order

    def rec(v):
        if v == order:
            out.append(tuple(color))
            return
        for c in range(1, k + 1):
            if all(color[w] != c for w in adj[v]):
                color[v] = c
                rec(v + 1)
        color[v] = 0

    rec(0)
    return out


def naive_chi(order, edges):
    k = 1
    while not all_colorings(order, edges, k):
        k += 1
    return k


def uniquely_determined_sets(order, edges, k, size):
    """Yield (S, restriction) for every size-``size`` set S and coloring of S
    that is the restriction of exactly one total proper k-coloring."""
    sols = all_colorings(order, edges, k)
    for subset in combinations(range(order), size):
        seen = Counter(tuple(s[v] for v in subset) for s in sols)
        for restriction, mult in seen.items():
            if mult == 1:
                yield subset, restriction


def naive_sn(order, edges):
    k = naive_chi(order, edges)
    for size in range(order + 1):
        for _ in uniquely_determined_sets(order, edges, k, size):
            return size
    raise AssertionError("unreachable")


def list_colorings(order, edges, lists):
    total = 0
    for values in product(*[sorted(lists[v]) for v in range(order)]):
        if all(values[a] != values[b] for a, b in edges):
            total += 1
    return total


def random_connected_edges(rng: random.Random, order: int, p: float):
    """Random spanning tree plus independent extra edges."""
    edges = set()
    perm = list(range(order))
    rng.shuffle(perm)
    for i in range(1, order):
        a, b = perm[i], perm[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    for a, b in combinations(range(order), 2):
        if rng.random() < p:
            edges.add((a, b))
    return sorted(edges)


def nx_corona(g_edges, g_order, h_edges, h_order):
    g = nx.Graph()
    g.add_nodes_from(range(g_order))
    g.add_edges_from(g_edges)
    h = nx.Graph()
    h.add_nodes_from(range(h_order))
    h.add_edges_from(h_edges)
    return nx.corona_product(g, h)
