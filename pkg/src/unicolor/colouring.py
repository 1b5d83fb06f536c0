"""Exact colouring engine: partition counting, uniqueness, critical chromatic number.

A colouring is a partition of the vertex set into non-empty independent
classes; class labels carry no meaning.  Counting therefore counts
partitions, not labelled colourings, using "open-class" symmetry breaking:
class j may be used for the first time only when classes 0..j-1 are already
in use, so every partition is generated exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .budget import Budget, BudgetExceededError
from .graphs import (
    Graph,
    _connected_within,
    clique_number,
    emit_graph6,
    is_connected,
    vertex_connectivity_at_least,
)


class ColouringError(ValueError):
    """Raised for invalid colouring inputs or undefined colouring quantities."""


class Colouring:
    """A vertex partition in canonical form.

    ``assignment[v]`` is the class index of vertex v.  Classes are
    renumbered on construction so that they appear in order of their
    minimum vertex; a partition therefore has exactly one representation.
    """

    __slots__ = ("assignment", "k")

    def __init__(self, assignment: Sequence[int]):
        relabel: dict[int, int] = {}
        canon = []
        for v, c in enumerate(assignment):
            if not isinstance(c, int) or c < 0:
                raise ColouringError(f"vertex {v} has invalid class label {c!r}")
            if c not in relabel:
                relabel[c] = len(relabel)
            canon.append(relabel[c])
        self.assignment = tuple(canon)
        self.k = len(relabel)

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> "Colouring":
        assignment = [-1] * n
        for idx, cl in enumerate(classes):
            members = list(cl)
            if not members:
                raise ColouringError(f"class {idx} is empty")
            for v in members:
                if not 0 <= v < n:
                    raise ColouringError(f"vertex {v} outside range 0..{n - 1}")
                if assignment[v] != -1:
                    raise ColouringError(f"vertex {v} appears in two classes")
                assignment[v] = idx
        if any(a == -1 for a in assignment):
            missing = [v for v, a in enumerate(assignment) if a == -1]
            raise ColouringError(f"vertices {missing} not covered by any class")
        return cls(assignment)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def classes(self) -> tuple[int, ...]:
        """Class bitmasks, ordered by class index."""
        masks = [0] * self.k
        for v, c in enumerate(self.assignment):
            masks[c] |= 1 << v
        return tuple(masks)

    def class_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.k
        for c in self.assignment:
            sizes[c] += 1
        return tuple(sizes)

    def __eq__(self, other) -> bool:
        return isinstance(other, Colouring) and self.assignment == other.assignment

    def __hash__(self) -> int:
        return hash(self.assignment)

    def __repr__(self) -> str:
        return f"Colouring({list(self.assignment)!r})"


def is_proper(g: Graph, c: Colouring) -> bool:
    """No edge inside a class, and the colouring covers exactly V(g)."""
    if c.n != g.n:
        return False
    for mask in c.classes():
        m = mask
        while m:
            b = m & -m
            if g.adj[b.bit_length() - 1] & mask:
                return False
            m ^= b
    return True


class _CapReached(Exception):
    pass


def _enumerate_partitions(
    g: Graph,
    k: int,
    cap: int | None,
    on_leaf: Callable[[tuple[int, ...]], None] | None = None,
    budget: Budget | None = None,
) -> tuple[int, bool]:
    """Backtracking core shared by counting, search and sigma.

    Enumerates every partition of V(g) into at most k non-empty independent
    classes exactly once.  Vertices are chosen by descending saturation
    degree (ties: degree, then lowest index).  Returns (count, capped);
    capped means enumeration stopped because ``cap`` leaves were reached.
    """
    n = g.n
    if k < 0:
        raise ValueError("class budget k must be non-negative")
    if n == 0:
        if on_leaf is not None:
            on_leaf(())
        return (1 if cap is None or cap >= 1 else 0, False)
    if k == 0:
        return 0, False
    adj = g.adj
    deg = [r.bit_count() for r in adj]
    full = (1 << k) - 1
    forb = [0] * n  # classes already adjacent to v
    class_masks: list[int] = []
    count = 0

    def rec(remaining: int, nopen: int) -> None:
        nonlocal count
        if budget is not None:
            budget.spend()
        if remaining == 0:
            count += 1
            if on_leaf is not None:
                on_leaf(tuple(class_masks))
            if cap is not None and count >= cap:
                raise _CapReached
            return
        # pick the most saturated remaining vertex
        v = -1
        best_key = (-1, -1, 0)
        m = remaining
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            key = (forb[u].bit_count(), deg[u], -u)
            if key > best_key:
                best_key = key
                v = u
        vbit = 1 << v
        rest = remaining ^ vbit
        row = adj[v]
        avail = ~forb[v] & ((1 << nopen) - 1)
        while avail:
            cbit = avail & -avail
            avail ^= cbit
            c = cbit.bit_length() - 1
            class_masks[c] |= vbit
            changed = []
            dead = False
            mm = row & rest
            while mm:
                b = mm & -mm
                u = b.bit_length() - 1
                mm ^= b
                if not (forb[u] >> c) & 1:
                    forb[u] |= cbit
                    changed.append(u)
                    if nopen == k and forb[u] == full:
                        dead = True
            if not dead:
                rec(rest, nopen)
            for u in changed:
                forb[u] ^= cbit
            class_masks[c] ^= vbit
        if nopen < k:
            c = nopen
            cbit = 1 << c
            class_masks.append(vbit)
            changed = []
            dead = False
            mm = row & rest
            while mm:
                b = mm & -mm
                u = b.bit_length() - 1
                mm ^= b
                forb[u] |= cbit
                changed.append(u)
                if nopen + 1 == k and forb[u] == full:
                    dead = True
            if not dead:
                rec(rest, nopen + 1)
            for u in changed:
                forb[u] ^= cbit
            class_masks.pop()

    try:
        rec((1 << n) - 1, 0)
    except _CapReached:
        return count, True
    return count, False


def count_colour_partitions(
    g: Graph, k: int, cap: int = 2, budget: Budget | None = None
) -> int:
    """Number of partitions into <= k non-empty independent classes, capped.

    Returns min(true count, cap); a result equal to cap means "at least cap".
    The order-0 graph has exactly one such partition (the empty one).
    """
    if cap < 1:
        raise ColouringError("cap must be at least 1")
    count, _ = _enumerate_partitions(g, k, cap, budget=budget)
    return count


def find_colour_partition(g: Graph, k: int, budget: Budget | None = None) -> Colouring | None:
    """Some proper partition into <= k classes, or None.  Deterministic."""
    holder: list[tuple[int, ...]] = []
    _enumerate_partitions(g, k, 1, on_leaf=holder.append, budget=budget)
    if not holder:
        return None
    masks = holder[0]
    assignment = [0] * g.n
    for idx, mask in enumerate(masks):
        m = mask
        while m:
            b = m & -m
            assignment[b.bit_length() - 1] = idx
            m ^= b
    return Colouring(assignment)


def _greedy_upper_bound(g: Graph) -> int:
    """DSATUR greedy colouring; returns the number of colours used."""
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    deg = [r.bit_count() for r in adj]
    colour = [-1] * n
    forb = [0] * n
    used = 0
    for _ in range(n):
        v = -1
        best_key = (-1, -1, 0)
        for u in range(n):
            if colour[u] < 0:
                key = (forb[u].bit_count(), deg[u], -u)
                if key > best_key:
                    best_key = key
                    v = u
        free = ~forb[v]
        c = (free & -free).bit_length() - 1
        colour[v] = c
        used = max(used, c + 1)
        m = adj[v]
        while m:
            b = m & -m
            forb[b.bit_length() - 1] |= 1 << c
            m ^= b
    return used


def chromatic_number(g: Graph, budget: Budget | None = None) -> int:
    """Exact chromatic number; 0 for the order-0 graph by convention."""
    if g.n == 0:
        return 0
    lo = clique_number(g)
    hi = _greedy_upper_bound(g)
    for k in range(lo, hi):
        if count_colour_partitions(g, k, cap=1, budget=budget) >= 1:
            return k
    return hi


def sigma(g: Graph, budget: Budget | None = None) -> int:
    """Smallest class size over all chromatic colourings (full enumeration)."""
    if g.n == 0:
        raise ColouringError("sigma undefined for the order-0 graph")
    chi = chromatic_number(g, budget)
    best = g.n + 1

    def leaf(masks: tuple[int, ...]) -> None:
        nonlocal best
        small = min(m.bit_count() for m in masks)
        if small < best:
            best = small

    _enumerate_partitions(g, chi, None, on_leaf=leaf, budget=budget)
    return best


def chi_cr(g: Graph, budget: Budget | None = None) -> Fraction:
    """Critical chromatic number (chi - 1) * n / (n - sigma), exact rational."""
    chi = chromatic_number(g, budget)
    if chi <= 1:
        raise ColouringError("critical chromatic number undefined when chi <= 1")
    s = sigma(g, budget)
    return Fraction((chi - 1) * g.n, g.n - s)


def is_uniquely_k_colourable(g: Graph, k: int, budget: Budget | None = None) -> bool:
    """Exactly one partition into <= k independent classes, and chi = k.

    Cheap necessary conditions (degree floor, connectivity, a neighbour in
    every other class, two-class connectivity) run before the exact count.
    """
    if k < 1:
        raise ColouringError("k must be at least 1")
    n = g.n
    if n == 0:
        return False
    if k == 1:
        return g.edge_count() == 0
    if g.min_degree() < k - 1:
        return False
    if not is_connected(g):
        return False
    if chromatic_number(g, budget) != k:
        return False
    c = find_colour_partition(g, k, budget)
    assert c is not None and c.k == k
    masks = c.classes()
    for v in range(n):
        row = g.adj[v]
        for idx, mask in enumerate(masks):
            if idx != c.assignment[v] and not (row & mask):
                return False  # v can move to class idx: a second partition
    if not two_class_connected(g, c):
        return False
    return count_colour_partitions(g, k, cap=2, budget=budget) == 1


def kempe_change(g: Graph, c: Colouring, class_a: int, class_b: int, seed: int) -> Colouring:
    """Swap classes a and b on the component of g[A ∪ B] containing seed.

    The result is again proper; classes are renumbered canonically (a class
    may disappear when its vertices all move).
    """
    if not is_proper(g, c):
        raise ColouringError("kempe_change requires a proper colouring")
    if class_a == class_b:
        raise ColouringError("kempe_change needs two distinct classes")
    masks = c.classes()
    if not (0 <= class_a < c.k and 0 <= class_b < c.k):
        raise ColouringError("class index out of range")
    union = masks[class_a] | masks[class_b]
    if not 0 <= seed < g.n or not (union >> seed) & 1:
        raise ColouringError(f"seed vertex {seed} not in either class")
    comp = 1 << seed
    frontier = comp
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= g.adj[b.bit_length() - 1]
            m ^= b
        frontier = nxt & union & ~comp
        comp |= frontier
    assignment = list(c.assignment)
    m = comp
    while m:
        b = m & -m
        v = b.bit_length() - 1
        assignment[v] = class_b if assignment[v] == class_a else class_a
        m ^= b
    out = Colouring(assignment)
    assert is_proper(g, out)
    return out


def two_class_connected(g: Graph, c: Colouring) -> bool:
    """Is g[A ∪ B] connected for every pair of colour classes A, B?"""
    if not is_proper(g, c):
        raise ColouringError("two_class_connected requires a proper colouring")
    masks = c.classes()
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not _connected_within(g.adj, masks[i] | masks[j]):
                return False
    return True


def xu_bound_holds(g: Graph, k: int) -> tuple[bool, int]:
    """Edge lower bound (k-1) n - k (k-1) / 2 for uniquely k-colourable graphs.

    Returns (bound holds, slack); slack = |E| minus the bound.
    """
    if k < 1:
        raise ColouringError("k must be at least 1")
    bound = (k - 1) * g.n - k * (k - 1) // 2
    slack = g.edge_count() - bound
    return slack >= 0, slack


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the full uniquely-k-colourable battery on one graph.

    ``uniquely_colourable`` is "yes" (exact count 1 and chi = k), "no"
    (count >= 2 or chi != k), or "unknown-capped" when the search budget ran
    out before the decision.
    """

    graph6: str
    k: int
    min_degree_ok: bool
    connected_ok: bool
    connectivity_ok: bool
    xu_slack: int
    two_class_connected_ok: bool | None
    partition_count: int
    count_capped: bool
    uniquely_colourable: str

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "k": self.k,
            "min_degree_ok": self.min_degree_ok,
            "connected_ok": self.connected_ok,
            "connectivity_ok": self.connectivity_ok,
            "xu_slack": self.xu_slack,
            "two_class_connected_ok": self.two_class_connected_ok,
            "partition_count": self.partition_count,
            "count_capped": self.count_capped,
            "uniquely_colourable": self.uniquely_colourable,
        }


def verify(g: Graph, k: int, cap: int = 2, budget: Budget | None = None) -> VerificationReport:
    """Run every check of the battery and report them together.

    The verdict is "yes" only when the exact partition count is 1 and
    chi(g) = k; a count that merely hit ``cap`` yields "no" (there are at
    least cap partitions), while budget exhaustion yields "unknown-capped".
    """
    if k < 1:
        raise ColouringError("k must be at least 1")
    if cap < 2:
        raise ColouringError("cap below 2 cannot certify uniqueness")
    n = g.n
    min_degree_ok = n > 0 and g.min_degree() >= k - 1
    connected_ok = n > 0 and is_connected(g)
    connectivity_ok = vertex_connectivity_at_least(g, k - 1)
    _, slack = xu_bound_holds(g, k)
    two_ok: bool | None = None
    partition_count = 0
    capped = False
    try:
        chi = chromatic_number(g, budget)
        if chi == k and n > 0:
            c = find_colour_partition(g, k, budget)
            if c is not None:
                two_ok = two_class_connected(g, c)
        partition_count, capped = _enumerate_partitions(g, k, cap, budget=budget)
        if chi == k and partition_count == 1:
            verdict = "yes"
        else:
            verdict = "no"
    except BudgetExceededError:
        verdict = "unknown-capped"
        capped = True
    return VerificationReport(
        graph6=emit_graph6(g),
        k=k,
        min_degree_ok=min_degree_ok,
        connected_ok=connected_ok,
        connectivity_ok=connectivity_ok,
        xu_slack=slack,
        two_class_connected_ok=two_ok,
        partition_count=partition_count,
        count_capped=capped,
        uniquely_colourable=verdict,
    )
