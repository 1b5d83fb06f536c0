"""Shared brute-force oracles.

Everything here recomputes results by direct enumeration, with no code
shared with the library's search machinery, so that agreement between the
two routes is meaningful evidence of correctness.
"""

from __future__ import annotations

import itertools
import random

from unicolor.graphs import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def brute_count_partitions(g: Graph, k: int, cap: int | None = None) -> int:
    """Partitions of V into at most k non-empty independent classes.

    Enumerates every set partition via restricted-growth strings and filters
    for independence afterwards; exponential, for small n only.
    """
    n = g.n
    if n == 0:
        return 1
    count = 0
    for labels in _restricted_growth(n):
        classes = max(labels) + 1
        if classes > k:
            continue
        if all(not g.has_edge(u, v) for u in range(n) for v in range(u + 1, n) if labels[u] == labels[v]):
            count += 1
            if cap is not None and count >= cap:
                return count
    return count


def _restricted_growth(n: int):
    labels = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(labels)
            return
        for c in range(top + 2):
            labels[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(1, 0)


def brute_chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if brute_count_partitions(g, k, cap=1) > 0:
            return k
    raise AssertionError("unreachable")


def brute_clique_number(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for combo in itertools.combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                return size
    return best


def _connected_after_removal(g: Graph, removed: set[int]) -> bool:
    keep = [v for v in range(g.n) if v not in removed]
    if not keep:
        return True
    seen = {keep[0]}
    todo = [keep[0]]
    while todo:
        u = todo.pop()
        for v in keep:
            if v not in seen and g.has_edge(u, v):
                seen.add(v)
                todo.append(v)
    return len(seen) == len(keep)


def brute_vertex_connectivity_at_least(g: Graph, t: int) -> bool:
    if t <= 0:
        return True
    n = g.n
    if all(g.has_edge(u, v) for u in range(n) for v in range(u + 1, n)):
        return n >= t + 1  # complete graphs by convention
    if not _connected_after_removal(g, set()):
        return False
    for size in range(1, t):
        for combo in itertools.combinations(range(n), size):
            if not _connected_after_removal(g, set(combo)):
                return False
    return True


def brute_is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    n = g1.n
    for perm in itertools.permutations(range(n)):
        if all(g2.has_edge(perm[u], perm[v]) == g1.has_edge(u, v)
               for u in range(n) for v in range(u + 1, n)):
            return True
    return False


def brute_automorphism_count(g: Graph) -> int:
    n = g.n
    count = 0
    for perm in itertools.permutations(range(n)):
        if all(g.has_edge(perm[u], perm[v]) == g.has_edge(u, v)
               for u in range(n) for v in range(u + 1, n)):
            count += 1
    return count
