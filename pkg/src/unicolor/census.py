"""Isomorph-free census of small graphs and the unique-colourability witness search.

Generation is by canonical augmentation: a graph of order r+1 is produced
from exactly one parent class, namely the one obtained by deleting the
vertex its canonical labelling places last.  An extension of a processed
parent is kept iff deleting that canonically-last vertex recovers the
parent; duplicate siblings within one parent are removed by canonical form.
No global "seen" set is needed, so runs can be split at checkpoints or
across workers and merged without coordination.

Hereditary constraints (triangle-freeness, edge-count ceiling) prune during
generation, together with sound lookahead bounds for the degree floor and
the edge-window lower bound: a partial graph is dropped only when no
sequence of vertex additions can repair it.  Connectivity and the exact
degree floor / edge window apply at full order.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import asdict, dataclass, field, replace
from typing import Callable, Sequence

from .budget import Budget, BudgetExceededError
from .colouring import (
    VerificationReport,
    find_colour_partition,
    is_uniquely_k_colourable,
    verify,
    xu_bound_holds,
)
from .graphs import (
    Graph,
    _canonical,
    _connected_within,
    independence_number,
    parse_graph6,
    vertex_connectivity_at_least,
)

CHECKPOINT_VERSION = 1
_MAX_CENSUS_ORDER = 14


@dataclass(frozen=True)
class CensusTask:
    """A census request: structural constraints plus the colouring target."""

    n: int
    k: int = 3
    triangle_free: bool = False
    connected: bool = False
    min_degree: int = 0
    balanced: bool = False
    edge_window: tuple[int, int] | None = None
    budget_nodes: int | None = None
    budget_seconds: float | None = None

    def __post_init__(self):
        if not 1 <= self.n <= _MAX_CENSUS_ORDER:
            raise ValueError(f"census order must be 1..{_MAX_CENSUS_ORDER}")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.min_degree < 0:
            raise ValueError("degree floor must be non-negative")
        if self.balanced and self.n % self.k != 0:
            raise ValueError("balanced classes need k to divide n")
        if self.edge_window is not None:
            lo, hi = self.edge_window
            if lo < 0 or hi < lo:
                raise ValueError("edge window must satisfy 0 <= lo <= hi")

    def budget(self) -> Budget | None:
        if self.budget_nodes is None and self.budget_seconds is None:
            return None
        return Budget(self.budget_nodes, self.budget_seconds)

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["edge_window"] is not None:
            d["edge_window"] = list(d["edge_window"])
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CensusTask":
        d = dict(d)
        if d.get("edge_window") is not None:
            d["edge_window"] = tuple(d["edge_window"])
        return cls(**d)


@dataclass(frozen=True)
class Witness:
    """One graph that passed the full uniquely-k-colourable battery."""

    graph6: str
    n: int
    k: int
    edges: int
    report: VerificationReport

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "k": self.k,
            "edges": self.edges,
            "report": self.report.to_json_dict(),
        }


@dataclass
class CensusResult:
    task: CensusTask
    stats: dict[str, int] = field(default_factory=dict)
    witnesses: list[Witness] = field(default_factory=list)
    checkpoint: dict | None = None

    @property
    def complete(self) -> bool:
        return self.checkpoint is None


def _bump(stats: dict[str, int], key: str, by: int = 1) -> None:
    stats[key] = stats.get(key, 0) + by


def _max_addable(order: int, n: int, alpha_bound: int) -> int:
    """Upper bound on edges gained by growing from ``order`` to ``n`` vertices.

    Each added vertex at current order i contributes at most min(i, a) edges
    where a bounds the independence number at that point (a grows by at most
    one per addition); for unrestricted tasks pass alpha_bound >= n.
    """
    total = 0
    a = alpha_bound
    for i in range(order, n):
        total += min(i, a)
        a += 1
    return total


def _candidate_masks(
    rows: Sequence[int], req: int, free: int, lo_sz: int, hi_sz: int, independent: bool
) -> list[int]:
    """Neighbourhood masks N with req <= N <= req|free and |N| in [lo_sz, hi_sz].

    When ``independent`` is set, N must be an independent set of the parent.
    """
    base = req.bit_count()
    if base > hi_sz:
        return []
    if independent:
        m = req
        while m:
            b = m & -m
            v = b.bit_length() - 1
            if rows[v] & req:
                return []
            free &= ~rows[v]
            m ^= b
    out: list[int] = []

    def go(cur: int, size: int, cand: int) -> None:
        if size + cand.bit_count() < lo_sz:
            return
        if size >= lo_sz:
            out.append(cur)
        if size == hi_sz:
            return
        while cand:
            b = cand & -cand
            cand ^= b
            nxt = cand & ~rows[b.bit_length() - 1] if independent else cand
            go(cur | b, size + 1, nxt)
            if size + cand.bit_count() < lo_sz:
                return

    go(req, base, free)
    return out


def _extend_parent(
    task: CensusTask, parent: Graph, parent_canon: bytes, stats: dict[str, int]
) -> list[tuple[Graph, bytes]]:
    """All accepted child classes of one parent, as canonical representatives.

    Children have order r+1; when r+1 == task.n the full-order structural
    filters (connectivity, exact degree floor, edge window) apply, otherwise
    hereditary constraints plus sound lookahead bounds.
    """
    n = task.n
    dmin = task.min_degree
    lo, hi = task.edge_window if task.edge_window is not None else (0, n * (n - 1) // 2)
    _bump(stats, "parents_processed")
    r = parent.n
    rows = parent.adj
    e = parent.edge_count()
    r1 = r + 1
    after = n - r1  # vertices still to come after this extension
    floor_child = max(0, dmin - after)
    req = 0
    if floor_child > 0:
        for v in range(r):
            if rows[v].bit_count() < floor_child:
                req |= 1 << v
    if task.triangle_free:
        alpha_next = independence_number(parent) + 1
    else:
        alpha_next = n
    lo_sz = max(floor_child, lo - e - _max_addable(r1, n, alpha_next))
    hi_sz = hi - e
    if hi_sz < 0:
        return []
    free = ((1 << r) - 1) & ~req
    masks = _candidate_masks(rows, req, free, lo_sz, hi_sz, task.triangle_free)
    _bump(stats, "extensions_tried", len(masks))
    accepted: list[tuple[Graph, bytes]] = []
    seen_here: set[bytes] = set()
    full_mask = (1 << n) - 1
    parent_degrees = None
    for mask in masks:
        child = parent.with_vertex(mask)
        if r1 == n and task.connected and not _connected_within(child.adj, full_mask):
            _bump(stats, "full_rejected_connected")
            continue
        canon, placement = _canonical(r1, child.adj)
        if canon in seen_here:
            _bump(stats, "duplicate_siblings")
            continue
        seen_here.add(canon)
        w = placement[-1]
        if w != r:
            reduced = child.without_vertex(w)
            if parent_degrees is None:
                parent_degrees = sorted(parent.degrees())
            if (
                reduced.edge_count() != e
                or sorted(reduced.degrees()) != parent_degrees
                or _canonical(r, reduced.adj)[0] != parent_canon
            ):
                _bump(stats, "rejected_not_canonical")
                continue
        _bump(stats, f"classes_order_{r1}")
        accepted.append((child.permuted(placement), canon))
    return accepted


def _census_loop(
    task: CensusTask,
    stack: list[tuple[Graph, bytes]],
    visit: Callable[[Graph, bytes], None],
    stats: dict[str, int],
    budget: Budget | None,
) -> list[str] | None:
    """Depth-first drive of _extend_parent.  Returns the pending stack as
    graph6 strings if the budget runs out, or None on completion.  ``visit``
    receives each accepted full-order class once, canonically labelled."""
    n = task.n
    while stack:
        parent, parent_canon = stack.pop()
        if budget is not None:
            try:
                budget.spend(1)
                budget.check_time()
            except BudgetExceededError:
                stack.append((parent, parent_canon))
                return [canon.decode("ascii") for _, canon in stack]
        for child, canon in _extend_parent(task, parent, parent_canon, stats):
            if child.n == n:
                visit(child, canon)
            else:
                stack.append((child, canon))
    return None


def _initial_stack(task: CensusTask) -> list[tuple[Graph, bytes]]:
    return [(Graph(1), b"@")]


def _visit_trivial_root(task: CensusTask, visit: Callable[[Graph, bytes], None]) -> bool:
    """Handle the degenerate n=1 task; returns True when it applied."""
    if task.n != 1:
        return False
    lo, _hi = task.edge_window if task.edge_window is not None else (0, 0)
    if task.min_degree <= 0 and lo <= 0:
        visit(Graph(1), b"@")
    return True


def _make_token(task: CensusTask, pending: list[str], stats: dict, mode: str,
                witnesses: list[Witness] | None = None) -> dict:
    token = {
        "version": CHECKPOINT_VERSION,
        "kind": "census-checkpoint",
        "mode": mode,
        "task": task.to_dict(),
        "pending": pending,
        "stats": dict(stats),
    }
    if witnesses is not None:
        token["witnesses"] = [w.to_json_dict() for w in witnesses]
    return token


def _check_token(token: dict, task: CensusTask | None, mode: str) -> None:
    if token.get("kind") != "census-checkpoint":
        raise ValueError("not a census checkpoint token")
    if token.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {token.get('version')!r}")
    if token.get("mode") != mode:
        raise ValueError(f"checkpoint holds a {token.get('mode')!r} run, expected {mode!r}")
    if task is not None and token["task"] != task.to_dict():
        raise ValueError("checkpoint was produced by a different task")


def generate(
    task: CensusTask,
    visit: Callable[[Graph], None] | None = None,
    checkpoint: dict | None = None,
) -> CensusResult:
    """Visit one canonical representative per isomorphism class.

    Classes satisfy: order task.n, triangle-freeness, degree floor, edge
    window and connectivity as requested.  With a budget, the result's
    ``checkpoint`` is a resumable token (pass it back via ``checkpoint``).
    """
    stats: dict[str, int] = {}
    if checkpoint is not None:
        _check_token(checkpoint, task, mode="generate")
        stack = [(parse_graph6(s), s.encode("ascii")) for s in checkpoint["pending"]]
        stats.update(checkpoint["stats"])
    else:
        stack = _initial_stack(task)

    def inner(g: Graph, canon: bytes) -> None:
        _bump(stats, "visited")
        if visit is not None:
            visit(g)

    if checkpoint is None and _visit_trivial_root(task, inner):
        return CensusResult(task=task, stats=stats)
    pending = _census_loop(task, stack, inner, stats, task.budget())
    token = None
    if pending is not None:
        token = _make_token(task, pending, stats, mode="generate")
    return CensusResult(task=task, stats=stats, checkpoint=token)


def _witness_from_dict(d: dict) -> Witness:
    return Witness(
        graph6=d["graph6"],
        n=d["n"],
        k=d["k"],
        edges=d["edges"],
        report=VerificationReport(**d["report"]),
    )


def _effective_task(task: CensusTask) -> CensusTask:
    # necessary conditions for unique k-colourability become structural prunes
    return replace(
        task,
        min_degree=max(task.min_degree, task.k - 1),
        connected=True,
    )


def _battery(g: Graph, canon: bytes, task: CensusTask, stats: dict, out: list[Witness]) -> None:
    k = task.k
    _bump(stats, "battery_candidates")
    ok, _ = xu_bound_holds(g, k)
    if not ok:
        _bump(stats, "failed_xu")
        return
    if not vertex_connectivity_at_least(g, k - 1):
        _bump(stats, "failed_connectivity")
        return
    if not is_uniquely_k_colourable(g, k):
        _bump(stats, "failed_unique")
        return
    if task.balanced:
        c = find_colour_partition(g, k)
        assert c is not None
        if len(set(c.class_sizes())) != 1:
            _bump(stats, "failed_balanced")
            return
    report = verify(g, k)
    assert report.uniquely_colourable == "yes"
    _bump(stats, "witnesses")
    out.append(
        Witness(graph6=canon.decode("ascii"), n=g.n, k=k, edges=g.edge_count(), report=report)
    )


def find_unique_k_witnesses(
    task: CensusTask, threads: int = 1, checkpoint: dict | None = None
) -> CensusResult:
    """Census filtered down to uniquely k-colourable graphs.

    Runs the census under the necessary-condition prefilter (degree floor
    k-1, connected), then the exact battery per survivor.  Witnesses are
    reported sorted by (edges, graph6).  ``threads`` > 1 distributes the
    search tree over worker processes (budgets then unsupported).
    """
    if threads < 1:
        raise ValueError("threads must be at least 1")
    eff = _effective_task(task)
    if threads > 1:
        if eff.budget_nodes is not None or eff.budget_seconds is not None:
            raise ValueError("budgets are only supported on single-worker runs")
        if checkpoint is not None:
            raise ValueError("checkpoints are only supported on single-worker runs")
        return _parallel_witness_search(task, eff, threads)

    stats: dict[str, int] = {}
    witnesses: list[Witness] = []
    if checkpoint is not None:
        _check_token(checkpoint, task, mode="witness")
        stack = [(parse_graph6(s), s.encode("ascii")) for s in checkpoint["pending"]]
        stats.update(checkpoint["stats"])
        witnesses.extend(_witness_from_dict(d) for d in checkpoint.get("witnesses", []))
    else:
        stack = _initial_stack(eff)

    def inner(g: Graph, canon: bytes) -> None:
        _bump(stats, "visited")
        _battery(g, canon, eff, stats, witnesses)

    if checkpoint is None and _visit_trivial_root(eff, inner):
        return CensusResult(task=task, stats=stats, witnesses=witnesses)
    pending = _census_loop(eff, stack, inner, stats, eff.budget())
    if pending is not None:
        token = _make_token(task, pending, stats, mode="witness", witnesses=witnesses)
        return CensusResult(task=task, stats=stats, witnesses=witnesses, checkpoint=token)
    witnesses.sort(key=lambda w: (w.edges, w.graph6))
    return CensusResult(task=task, stats=stats, witnesses=witnesses, checkpoint=None)


def resume(checkpoint: dict, visit: Callable[[Graph], None] | None = None) -> CensusResult:
    """Continue a budget-interrupted run from its checkpoint token."""
    task = CensusTask.from_dict(checkpoint["task"])
    mode = checkpoint.get("mode")
    if mode == "generate":
        return generate(task, visit=visit, checkpoint=checkpoint)
    if mode == "witness":
        return find_unique_k_witnesses(task, checkpoint=checkpoint)
    raise ValueError(f"unknown checkpoint mode {mode!r}")


def checkpoint_dumps(token: dict) -> str:
    return json.dumps(token, sort_keys=True)


def checkpoint_loads(text: str) -> dict:
    token = json.loads(text)
    if token.get("kind") != "census-checkpoint":
        raise ValueError("not a census checkpoint token")
    return token


# -- parallel search ---------------------------------------------------------


def _expand_frontier(
    eff: CensusTask,
    want: int,
    visit: Callable[[Graph, bytes], None],
    stats: dict[str, int],
) -> list[str]:
    """Grow the augmentation tree breadth-first until at least ``want``
    subtree roots exist (or the levels run out).  Full-order classes reached
    during expansion are handed to ``visit`` directly."""
    level = _initial_stack(eff)
    while level and len(level) < want and level[0][0].n < eff.n - 1:
        nxt: list[tuple[Graph, bytes]] = []
        for parent, canon in level:
            for child, child_canon in _extend_parent(eff, parent, canon, stats):
                if child.n == eff.n:
                    visit(child, child_canon)
                else:
                    nxt.append((child, child_canon))
        level = nxt
    return [canon.decode("ascii") for _, canon in level]


def _worker_run(args: tuple[dict, list[str]]) -> tuple[dict, list[dict]]:
    task_dict, roots = args
    eff = CensusTask.from_dict(task_dict)
    stats: dict[str, int] = {}
    witnesses: list[Witness] = []

    def inner(g: Graph, canon: bytes) -> None:
        _bump(stats, "visited")
        _battery(g, canon, eff, stats, witnesses)

    stack = [(parse_graph6(s), s.encode("ascii")) for s in roots]
    _census_loop(eff, stack, inner, stats, None)
    return stats, [w.to_json_dict() for w in witnesses]


def _parallel_witness_search(task: CensusTask, eff: CensusTask, threads: int) -> CensusResult:
    stats: dict[str, int] = {}
    witnesses: list[Witness] = []

    def inner(g: Graph, canon: bytes) -> None:
        _bump(stats, "visited")
        _battery(g, canon, eff, stats, witnesses)

    if _visit_trivial_root(eff, inner):
        return CensusResult(task=task, stats=stats, witnesses=witnesses)
    roots = _expand_frontier(eff, threads * 4, inner, stats)
    chunks: list[list[str]] = [[] for _ in range(threads)]
    for i, root in enumerate(sorted(roots)):
        chunks[i % threads].append(root)
    jobs = [(eff.to_dict(), chunk) for chunk in chunks if chunk]
    if jobs:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=min(threads, len(jobs))) as pool:
            for wstats, wdicts in pool.map(_worker_run, jobs):
                for key, val in wstats.items():
                    _bump(stats, key, val)
                witnesses.extend(_witness_from_dict(d) for d in wdicts)
    witnesses.sort(key=lambda w: (w.edges, w.graph6))
    return CensusResult(task=task, stats=stats, witnesses=witnesses, checkpoint=None)
