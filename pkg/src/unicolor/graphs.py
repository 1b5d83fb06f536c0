"""Bit-matrix simple graphs of order <= 64 and structural primitives on them.

Vertices are 0..n-1.  Adjacency is a tuple of n Python-int bitmasks; bit u of
row v is set iff uv is an edge.  All operations treat graphs as immutable
values; "mutators" return new graphs.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, Sequence

MAX_ORDER = 64
CANON_MAX_ORDER = 32

_G6_LONG = 126  # ord("~"), prefix of the multi-byte order encoding


class Graph6Error(ValueError):
    """Raised for malformed graph6 input."""


class OrderLimitError(ValueError):
    """Raised when an operation would exceed a supported vertex count."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0 or n > MAX_ORDER:
            raise OrderLimitError(f"order {n} outside supported range 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj = tuple(rows)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Trusted constructor from symmetric, irreflexive bitmask rows."""
        g = object.__new__(cls)
        g.n = len(rows)
        g.adj = tuple(rows)
        return g

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.adj), default=0)

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.adj), default=0)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1)
            base = v + 1
            while m:
                b = m & -m
                out.append((v, base + b.bit_length() - 1))
                m ^= b
        return out

    def neighbours(self, v: int) -> int:
        """Neighbourhood of v as a bitmask."""
        return self.adj[v]

    # -- derived graphs ------------------------------------------------

    def with_vertex(self, nbhd_mask: int) -> "Graph":
        """New graph with one extra vertex adjacent to the masked vertices."""
        n = self.n
        if n + 1 > MAX_ORDER:
            raise OrderLimitError(f"order {n + 1} exceeds {MAX_ORDER}")
        if nbhd_mask >> n:
            raise ValueError("neighbourhood mask addresses missing vertices")
        bit = 1 << n
        rows = [self.adj[v] | bit if (nbhd_mask >> v) & 1 else self.adj[v] for v in range(n)]
        rows.append(nbhd_mask)
        return Graph.from_rows(rows)

    def without_vertex(self, v: int) -> "Graph":
        """Induced subgraph on all vertices but v (indices above v shift down)."""
        n = self.n
        low = (1 << v) - 1
        rows = []
        for u in range(n):
            if u == v:
                continue
            r = self.adj[u]
            rows.append((r & low) | ((r >> (v + 1)) << v))
        return Graph.from_rows(rows)

    def permuted(self, placement: Sequence[int]) -> "Graph":
        """Relabelled copy: new vertex i is old vertex placement[i]."""
        n = self.n
        inv = [0] * n
        for i, v in enumerate(placement):
            inv[v] = i
        rows = [0] * n
        for i, v in enumerate(placement):
            m = self.adj[v]
            r = 0
            while m:
                b = m & -m
                r |= 1 << inv[b.bit_length() - 1]
                m ^= b
            rows[i] = r
        return Graph.from_rows(rows)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph.from_rows([full & ~(r | (1 << v)) for v, r in enumerate(self.adj)])

    # -- value semantics -----------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


# -- builders ------------------------------------------------------------


def complete_graph(k: int) -> Graph:
    return Graph(k, combinations(range(k), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus all edges between the two parts."""
    n = g1.n + g2.n
    if n > MAX_ORDER:
        raise OrderLimitError(f"join order {n} exceeds {MAX_ORDER}")
    left_full = (1 << g1.n) - 1
    right_full = ((1 << g2.n) - 1) << g1.n
    rows = [r | right_full for r in g1.adj]
    rows += [(r << g1.n) | left_full for r in g2.adj]
    return Graph.from_rows(rows)


# -- graph6 interchange ----------------------------------------------------


def _g6_order_prefix(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    # 63..258047 use "~" plus three 6-bit digits; our order cap keeps us here
    return "~" + chr(63 + ((n >> 12) & 63)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))


def emit_graph6(g: Graph) -> str:
    """Standard graph6 encoding (column-major upper triangle, 6 bits/char)."""
    n = g.n
    out = [_g6_order_prefix(n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for col in range(1, n):
        row = adj[col]
        for i in range(col):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string; raises Graph6Error with a specific reason.

    Accepts the optional ``>>graph6<<`` header and surrounding whitespace.
    """
    s = text.strip()
    if s.startswith(">>"):
        header = ">>graph6<<"
        if not s.startswith(header):
            raise Graph6Error("malformed graph6 header")
        s = s[len(header):]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = []
    for ch in s:
        o = ord(ch)
        if o < 63 or o > 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
        codes.append(o - 63)
    pos = 0
    if codes[0] == _G6_LONG - 63:
        if len(codes) >= 2 and codes[1] == _G6_LONG - 63:
            raise Graph6Error("graph6 order exceeds supported maximum 64")
        if len(codes) < 4:
            raise Graph6Error("truncated graph6 order field")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        pos = 4
    else:
        n = codes[0]
        pos = 1
    if n > MAX_ORDER:
        raise Graph6Error(f"graph6 order {n} exceeds supported maximum {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    got = len(codes) - pos
    if got < need:
        raise Graph6Error("truncated graph6 data")
    if got > need:
        raise Graph6Error("trailing garbage after graph6 data")
    rows = [0] * n
    bit = 0
    for code in codes[pos:]:
        for shift in (5, 4, 3, 2, 1, 0):
            if bit >= nbits:
                if (code >> shift) & 1:
                    raise Graph6Error("nonzero padding bits in graph6 data")
                continue
            if (code >> shift) & 1:
                # bit index -> (i, col) in column-major upper triangle
                col = _g6_column[bit] if bit < len(_g6_column) else _g6_col_of(bit)
                i = bit - col * (col - 1) // 2
                rows[i] |= 1 << col
                rows[col] |= 1 << i
            bit += 1
    return Graph.from_rows(rows)


def _g6_col_of(bit: int) -> int:
    col = 1
    while col * (col + 1) // 2 <= bit:
        col += 1
    return col


# bit index -> column lookup for the supported order range
_g6_column = []
for _c in range(1, MAX_ORDER):
    _g6_column.extend([_c] * _c)


# -- connectivity ----------------------------------------------------------


def _connected_within(adj: Sequence[int], mask: int) -> bool:
    """Is the induced subgraph on the masked vertices connected (or empty)?"""
    if mask == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= adj[b.bit_length() - 1]
            m ^= b
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected(g: Graph) -> bool:
    """Connectivity; graphs of order 0 and 1 count as connected."""
    if g.n <= 1:
        return True
    return _connected_within(g.adj, (1 << g.n) - 1)


def _max_vertex_flow(g: Graph, s: int, t: int, cap_at: int) -> int:
    """Number of internally vertex-disjoint s-t paths, capped at cap_at.

    Standard node-splitting: in(v)=2v, out(v)=2v+1, unit capacities.  BFS
    augmentation; s and t are not split (source is out(s), sink is in(t)).
    """
    n = g.n
    src = 2 * s + 1
    snk = 2 * t
    cap: dict[tuple[int, int], int] = {}
    arcs: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = cap.get((b, a), 0)
            arcs[a].append(b)
            arcs[b].append(a)
        cap[(a, b)] += c

    for v in range(n):
        add(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, 1)
        add(2 * v + 1, 2 * u, 1)
    flow = 0
    while flow < cap_at:
        parent = [-1] * (2 * n)
        parent[src] = src
        queue = [src]
        for a in queue:
            if a == snk:
                break
            for b in arcs[a]:
                if parent[b] < 0 and cap.get((a, b), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if parent[snk] < 0:
            break
        b = snk
        while b != src:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity_at_least(g: Graph, t: int) -> bool:
    """True iff g is complete on >= t+1 vertices or no < t vertices separate it.

    Decided via Menger: every non-adjacent pair must admit t internally
    vertex-disjoint paths.
    """
    if t <= 0:
        return True
    n = g.n
    full = (1 << n) - 1
    complete = all(g.adj[v] == full ^ (1 << v) for v in range(n))
    if complete:
        return n >= t + 1
    for u in range(n):
        row = g.adj[u]
        for v in range(u + 1, n):
            if not (row >> v) & 1 and _max_vertex_flow(g, u, v, t) < t:
                return False
    return True


# -- girth -----------------------------------------------------------------


def shortest_cycle(g: Graph) -> tuple[int, list[int]] | None:
    """A shortest cycle as (length, vertex list), or None for forests.

    Deterministic: BFS from each root in index order, ascending neighbour
    order, keeping the first strict improvement.
    """
    n, adj = g.n, g.adj
    best_len = -1
    best: list[int] | None = None
    for root in range(n):
        if best_len == 3:
            break
        dist = [-1] * n
        par = [-1] * n
        dist[root] = 0
        queue = [root]
        for u in queue:
            du = dist[u]
            if best_len > 0 and 2 * du + 1 >= best_len:
                break
            m = adj[u]
            while m:
                b = m & -m
                v = b.bit_length() - 1
                m ^= b
                if dist[v] < 0:
                    dist[v] = du + 1
                    par[v] = u
                    queue.append(v)
                elif v != par[u]:
                    length = du + dist[v] + 1
                    if best_len < 0 or length < best_len:
                        best_len = length
                        best = _rebuild_cycle(par, u, v)
    if best is None:
        return None
    return best_len, best


def _rebuild_cycle(par: list[int], u: int, v: int) -> list[int]:
    path_u = [u]
    while par[path_u[-1]] >= 0:
        path_u.append(par[path_u[-1]])
    on_u = {x: i for i, x in enumerate(path_u)}
    path_v = [v]
    while path_v[-1] not in on_u:
        path_v.append(par[path_v[-1]])
    meet = path_v[-1]
    return path_u[: on_u[meet] + 1] + path_v[-2::-1]


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; math.inf for forests."""
    found = shortest_cycle(g)
    return math.inf if found is None else found[0]


# -- cliques ---------------------------------------------------------------


def clique_number(g: Graph) -> int:
    """Exact clique number via branch and bound with a greedy colour bound."""
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    best = 1

    def expand(cand: int, size: int) -> None:
        nonlocal best
        # greedy colouring of the candidate set; colour index bounds clique growth
        order: list[tuple[int, int]] = []
        colour = 0
        rest = cand
        while rest:
            colour += 1
            avail = rest
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                order.append((v, colour))
                avail &= ~adj[v]
                avail ^= b
                rest ^= b
        for v, c in reversed(order):
            if size + c <= best:
                return
            sub = cand & adj[v]
            if size + 1 > best:
                best = size + 1
            if sub:
                expand(sub, size + 1)
            cand &= ~(1 << v)

    expand((1 << n) - 1, 0)
    return best


def independence_number(g: Graph) -> int:
    return clique_number(g.complement())


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for u, v in g.edges():
        if adj[u] & adj[v]:
            return False
    return True


# -- canonical forms -------------------------------------------------------


def _refine_colours(n: int, rows: Sequence[int]) -> list[int]:
    """Iterated neighbourhood refinement; stable, isomorphism-invariant ranks."""
    cols = [rows[v].bit_count() for v in range(n)]
    rank = {c: i for i, c in enumerate(sorted(set(cols)))}
    cols = [rank[c] for c in cols]
    ncells = len(rank)
    while ncells < n:
        sigs = []
        for v in range(n):
            m = rows[v]
            nb = []
            while m:
                b = m & -m
                nb.append(cols[b.bit_length() - 1])
                m ^= b
            nb.sort()
            sigs.append((cols[v], tuple(nb)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncells:
            return new
        ncells = len(rank)
        cols = new
    return cols


def _canonical_placement(n: int, rows: Sequence[int]) -> list[int]:
    """Vertex placement maximising the adjacency bitstring among labellings
    that list refinement cells in ascending colour order.

    Exact: refinement cells are isomorphism-invariant, so restricting the
    search to cell-respecting labellings keeps the form canonical while
    pruning most of the n! permutations.  Twin vertices (identical rows) are
    interchangeable and only explored once per search node.
    """
    if n == 0:
        return []
    cols = _refine_colours(n, rows)
    by_colour = sorted(range(n), key=lambda v: (cols[v], v))
    pos_cells: list[list[int]] = []
    i = 0
    while i < n:
        j = i
        c = cols[by_colour[i]]
        cell = []
        while j < n and cols[by_colour[j]] == c:
            cell.append(by_colour[j])
            j += 1
        pos_cells.extend([cell] * (j - i))
        i = j

    best: list[int] | None = None
    best_place: list[int] | None = None
    gen = 0
    w = [0] * n  # per-vertex adjacency word against the placed prefix
    place: list[int] = []
    cur: list[int] = []
    used = 0

    def rec(pos: int, strictly_greater: bool) -> None:
        nonlocal best, best_place, gen, used
        if pos == n:
            if best is None or strictly_greater:
                best = cur.copy()
                best_place = place.copy()
                gen += 1
            return
        cell = pos_cells[pos]
        cands = [v for v in cell if not (used >> v) & 1]
        if len(cands) > 1:
            cands.sort(key=lambda v: (-w[v], v))
        seen_f: set[int] | None = None
        seen_t: set[int] | None = None
        for v in cands:
            wv = w[v]
            if not strictly_greater and best is not None:
                b = best[pos]
                if wv < b:
                    break
                child_greater = wv > b
            else:
                child_greater = strictly_greater
            kf = rows[v]
            kt = kf | (1 << v)
            if seen_f is not None and (kf in seen_f or kt in seen_t):
                continue
            g0 = gen
            place.append(v)
            cur.append(wv)
            used |= 1 << v
            rv = rows[v]
            for x in range(n):
                w[x] = (w[x] << 1) | ((rv >> x) & 1)
            rec(pos + 1, child_greater)
            for x in range(n):
                w[x] >>= 1
            used ^= 1 << v
            place.pop()
            cur.pop()
            if gen != g0 and strictly_greater:
                # a descendant replaced best; our prefix now equals its prefix
                strictly_greater = False
            if seen_f is None:
                seen_f = set()
                seen_t = set()
            seen_f.add(kf)
            seen_t.add(kt)

    rec(0, False)
    assert best_place is not None
    return best_place


def _words_to_graph6(n: int, words: Sequence[int]) -> bytes:
    out = [_g6_order_prefix(n)]
    acc = 0
    nbits = 0
    for col in range(1, n):
        word = words[col]
        for shift in range(col - 1, -1, -1):
            acc = (acc << 1) | ((word >> shift) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out).encode("ascii")


def _canonical(n: int, rows: Sequence[int]) -> tuple[bytes, list[int]]:
    """Canonical graph6 bytes plus the placement that produced them."""
    placement = _canonical_placement(n, rows)
    words = []
    for j in range(n):
        rv = rows[placement[j]]
        x = 0
        for i in range(j):
            x = (x << 1) | ((rv >> placement[i]) & 1)
        words.append(x)
    return _words_to_graph6(n, words), placement


def canonical_form(g: Graph) -> bytes:
    """Canonical representative of g's isomorphism class, as graph6 bytes.

    Two graphs are isomorphic iff their canonical forms are equal; the bytes
    decode (via parse_graph6) to a relabelled copy of g.
    """
    if g.n > CANON_MAX_ORDER:
        raise OrderLimitError(f"canonical form limited to order {CANON_MAX_ORDER}")
    return _canonical(g.n, g.adj)[0]


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


# -- DOT export ------------------------------------------------------------

_DOT_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5",
)


def to_dot(g: Graph, class_of: Sequence[int] | None = None, name: str = "G") -> str:
    """GraphViz source; vertices are filled by colour class when given."""
    lines = [f"graph {name} {{", "  node [shape=circle style=filled];"]
    for v in range(g.n):
        if class_of is not None:
            fill = _DOT_PALETTE[class_of[v] % len(_DOT_PALETTE)]
            lines.append(f'  {v} [fillcolor="{fill}"];')
        else:
            lines.append(f'  {v} [fillcolor="white"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
