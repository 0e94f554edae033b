"""Ordered graphs: order-preserving containment, exact extremal edge counts,
interval chromatic number, bipartite realizations of 0-1 patterns, and the
edge reductions and vertex insertions used by the candidate pipeline.

Vertices are 1..n in line order; edges are pairs (u, v) with u < v.
Containment is non-induced: h contains g iff some strictly increasing
injection of g's vertices maps every g-edge onto an h-edge.

Text format: first line "n=<int>", then one "<u> <v>" pair per line with
u < v, blank lines ignored.  A ';' may replace the newline as a single-line
variant (used for cache keys and tsv cells).
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import InvalidInputError, InvalidTransformationError
from .patterns import Pattern01, canonical_key
from .records import DEFAULT_NODE_BUDGET, ExRecord


@dataclass(frozen=True)
class OrderedGraph:
    num_vertices: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.num_vertices < 1:
            raise InvalidInputError("ordered graph needs at least one vertex")
        for e in self.edges:
            u, v = e
            if not (1 <= u < v <= self.num_vertices):
                raise InvalidInputError(f"bad edge {e} for n={self.num_vertices}")

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> set[int]:
        return {u + w - v for u, w in self.edges if v in (u, w)}

    def __str__(self) -> str:
        return format_ordered_graph(self).rstrip("\n").replace("\n", ";")


@dataclass(frozen=True)
class Bipartition:
    part_u: frozenset[int]
    part_v: frozenset[int]


def check_bipartition(g: OrderedGraph, parts: Bipartition) -> None:
    """Raise unless parts splits g into two covering, disjoint, independent sets."""
    all_vertices = frozenset(range(1, g.num_vertices + 1))
    if parts.part_u & parts.part_v:
        raise InvalidInputError("bipartition parts overlap")
    if parts.part_u | parts.part_v != all_vertices:
        raise InvalidInputError("bipartition does not cover all vertices")
    for u, v in g.edges:
        if {u, v} <= parts.part_u or {u, v} <= parts.part_v:
            raise InvalidInputError(f"edge {(u, v)} inside one part")


def parse_ordered_graph(text: str) -> OrderedGraph:
    body = text.replace(";", "\n")
    lines = [line.strip() for line in body.split("\n")]
    lines = [line for line in lines if line]
    if not lines or not lines[0].startswith("n="):
        raise InvalidInputError("ordered graph text must start with n=<int>")
    try:
        n = int(lines[0][2:])
    except ValueError as exc:
        raise InvalidInputError(f"bad vertex count {lines[0]!r}") from exc
    edges = set()
    for line in lines[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise InvalidInputError(f"bad edge line {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise InvalidInputError(f"bad edge line {line!r}") from exc
        if not (1 <= u < v <= n):
            raise InvalidInputError(f"edge {u} {v} out of range (need 1 <= u < v <= {n})")
        edges.add((u, v))
    return OrderedGraph(n, frozenset(edges))


def format_ordered_graph(g: OrderedGraph) -> str:
    lines = [f"n={g.num_vertices}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "".join(line + "\n" for line in lines)


def og_key(g: OrderedGraph) -> str:
    """Cache key: the single-line text form (no symmetry to quotient out)."""
    return str(g)


# ---------------------------------------------------------------------------
# containment
# ---------------------------------------------------------------------------

def _og_embed(
    hay_edges: frozenset[tuple[int, int]] | set[tuple[int, int]],
    hay_n: int,
    g: OrderedGraph,
    pins: dict[int, int] | None = None,
) -> bool:
    """Increasing-injection search.  pins maps g-vertices to fixed images,
    used for the incremental check where a new edge must be part of any new
    copy."""
    k = g.num_vertices
    if k > hay_n:
        return False
    below = [[] for _ in range(k + 1)]
    for u, v in g.edges:
        below[v].append(u)
    gdeg = [0] * (k + 1)
    for u, v in g.edges:
        gdeg[u] += 1
        gdeg[v] += 1
    hdeg = [0] * (hay_n + 1)
    for u, v in hay_edges:
        hdeg[u] += 1
        hdeg[v] += 1
    assign = [0] * (k + 1)

    def rec(i: int, start: int) -> bool:
        if i > k:
            return True
        if pins and i in pins:
            x = pins[i]
            if x < start or x > hay_n - (k - i):
                return False
            choices = (x,)
        else:
            choices = range(start, hay_n - (k - i) + 1)
        for x in choices:
            if hdeg[x] < gdeg[i]:
                continue
            if any((assign[a], x) not in hay_edges for a in below[i]):
                continue
            assign[i] = x
            if rec(i + 1, x + 1):
                return True
        return False

    return rec(1, 1)


def og_contains(h: OrderedGraph, g: OrderedGraph) -> bool:
    """True iff h has a subgraph order-isomorphic to g (extra edges allowed)."""
    return _og_embed(h.edges, h.num_vertices, g)


# ---------------------------------------------------------------------------
# exact extremal edge count
# ---------------------------------------------------------------------------

class _BudgetExhausted(Exception):
    pass


def og_ex_exact(
    n: int, g: OrderedGraph, node_budget: int = DEFAULT_NODE_BUDGET
) -> ExRecord:
    """Maximum edges of an n-vertex ordered graph avoiding g, by depth-first
    include/exclude over edge slots in lexicographic order.  Including an
    edge is refused when it would complete a copy of g, checked with that
    edge pinned into the embedding."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if not g.edges:
        raise InvalidInputError("forbidden graph needs at least one edge")
    start = time.monotonic()
    slots = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    total_slots = len(slots)
    g_edges = sorted(g.edges)
    best = 0
    nodes = 0
    chosen: set[tuple[int, int]] = set()

    def creates_copy(e: tuple[int, int]) -> bool:
        return any(
            _og_embed(chosen, n, g, pins={a: e[0], b: e[1]})
            for a, b in g_edges
        )

    def rec(idx: int, count: int) -> None:
        nonlocal best, nodes
        if count + (total_slots - idx) <= best:
            return
        if idx == total_slots:
            best = count
            return
        if nodes >= node_budget:
            raise _BudgetExhausted
        nodes += 1
        e = slots[idx]
        chosen.add(e)
        if not creates_copy(e):
            rec(idx + 1, count + 1)
        chosen.discard(e)
        rec(idx + 1, count)

    exact = True
    try:
        rec(0, 0)
    except _BudgetExhausted:
        exact = False
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return ExRecord(
        pattern_key=og_key(g),
        kind="ordered-graph",
        n=n,
        value=best,
        exact=exact,
        nodes_explored=nodes,
        elapsed_ms=elapsed_ms,
    )


# ---------------------------------------------------------------------------
# interval chromatic number
# ---------------------------------------------------------------------------

def interval_chromatic(g: OrderedGraph) -> int:
    """Minimum number of intervals of consecutive vertices, each independent.

    Greedy left to right: extend the current interval until the next vertex
    has a neighbor inside it.  Greedy is optimal here because any partition's
    first interval is a prefix of the greedy one, and shrinking an interval
    never breaks independence.
    """
    count = 1
    interval_start = 1
    for v in range(2, g.num_vertices + 1):
        if any(w == v and u >= interval_start for u, w in g.edges):
            count += 1
            interval_start = v
    return count


# ---------------------------------------------------------------------------
# bipartite realizations of a 0-1 pattern
# ---------------------------------------------------------------------------

def _matrix_of_bipartition(
    g: OrderedGraph, part_a: tuple[int, ...], part_b: tuple[int, ...]
) -> Pattern01:
    """0-1 matrix with rows = part_a and columns = part_b in increasing
    vertex order, ones at edges."""
    row_of = {v: i + 1 for i, v in enumerate(part_a)}
    col_of = {v: j + 1 for j, v in enumerate(part_b)}
    ones = set()
    for u, v in g.edges:
        if u in row_of:
            ones.add((row_of[u], col_of[v]))
        else:
            ones.add((row_of[v], col_of[u]))
    return Pattern01(len(part_a), len(part_b), frozenset(ones))


def _independent(g: OrderedGraph, vertices: tuple[int, ...]) -> bool:
    vs = set(vertices)
    return not any(u in vs and v in vs for u, v in g.edges)


def realizing_bipartitions(g: OrderedGraph, p: Pattern01) -> list[Bipartition]:
    """All unordered bipartitions of g into two independent sets whose
    edge matrix is equivalent to p up to reflections and rotations (the
    increasing/decreasing arrangement freedom of the construction)."""
    n = g.num_vertices
    target = canonical_key(p)
    found = []
    rest = tuple(range(2, n + 1))
    for size_a in range(0, n):
        for others in combinations(rest, size_a):
            part_a = (1,) + others
            part_b = tuple(v for v in range(1, n + 1) if v not in part_a)
            if not part_b:
                continue
            if not (_independent(g, part_a) and _independent(g, part_b)):
                continue
            matrix = _matrix_of_bipartition(g, part_a, part_b)
            if canonical_key(matrix) == target:
                found.append(Bipartition(frozenset(part_a), frozenset(part_b)))
    return found


def go_family(p: Pattern01) -> frozenset[OrderedGraph]:
    """Ordered bipartite graphs realizing p: one vertex per row and per
    column, every interleaving of the two groups along the line, row and
    column order each taken increasing or decreasing, edges at the ones.
    Members whose independent-set decomposition realizing p is not unique
    are discarded."""
    if not p.ones:
        raise InvalidInputError("pattern with no ones has no realizations")
    k, c = p.num_rows, p.num_cols
    row_has = {r for r, _ in p.ones}
    col_has = {cc for _, cc in p.ones}
    if len(row_has) < k or len(col_has) < c:
        raise InvalidInputError("pattern has an all-zero row or column")
    n = k + c
    members = set()
    for row_positions in combinations(range(1, n + 1), k):
        col_positions = tuple(v for v in range(1, n + 1) if v not in row_positions)
        for row_dir in (1, -1):
            rp = row_positions if row_dir == 1 else row_positions[::-1]
            for col_dir in (1, -1):
                cp = col_positions if col_dir == 1 else col_positions[::-1]
                edges = frozenset(
                    (min(rp[r - 1], cp[cc - 1]), max(rp[r - 1], cp[cc - 1]))
                    for r, cc in p.ones
                )
                members.add(OrderedGraph(n, edges))
    return frozenset(
        g for g in members if len(realizing_bipartitions(g, p)) == 1
    )


# ---------------------------------------------------------------------------
# reductions and insertions
# ---------------------------------------------------------------------------

def og_reduce_smallest(g: OrderedGraph) -> OrderedGraph:
    """For every vertex with a neighbor above it, delete its edge to the
    smallest such neighbor."""
    removed = set()
    for u in range(1, g.num_vertices + 1):
        above = [v for uu, v in g.edges if uu == u]
        if above:
            removed.add((u, min(above)))
    return OrderedGraph(g.num_vertices, g.edges - removed)


def og_bipartite_reduce(g: OrderedGraph, parts: Bipartition) -> OrderedGraph:
    """For every vertex of part_u with a neighbor, delete its edge to the
    smallest-labeled neighbor (necessarily in part_v)."""
    check_bipartition(g, parts)
    removed = set()
    for u in sorted(parts.part_u):
        nbrs = g.neighbors(u)
        if nbrs:
            v = min(nbrs)
            removed.add((min(u, v), max(u, v)))
    return OrderedGraph(g.num_vertices, g.edges - removed)


def og_insert_split_vertex(g: OrderedGraph, left: int, neighbor: int) -> OrderedGraph:
    """Insert a degree-one vertex between consecutive vertices left and
    left+1, both of which must be adjacent to neighbor; the new vertex is
    adjacent only to neighbor's shifted image."""
    for v in (left, left + 1):
        if v > g.num_vertices or neighbor not in g.neighbors(v):
            raise InvalidTransformationError(
                f"vertices {left} and {left + 1} must both be adjacent to {neighbor}"
            )

    def shift(v: int) -> int:
        return v + 1 if v > left else v

    new_vertex = left + 1
    target = shift(neighbor)
    edges = {(min(shift(u), shift(v)), max(shift(u), shift(v))) for u, v in g.edges}
    edges.add((min(new_vertex, target), max(new_vertex, target)))
    return OrderedGraph(g.num_vertices + 1, frozenset(edges))


def og_insert_isolated(g: OrderedGraph, position: int) -> OrderedGraph:
    """Insert an edgeless vertex after the given position (0 prepends)."""
    if not 0 <= position <= g.num_vertices:
        raise InvalidInputError(f"position {position} out of range 0..{g.num_vertices}")
    edges = frozenset(
        (u + 1 if u > position else u, v + 1 if v > position else v)
        for u, v in g.edges
    )
    return OrderedGraph(g.num_vertices + 1, edges)


def underlying_is_k22(g: OrderedGraph) -> bool:
    """True iff forgetting the order leaves the complete bipartite graph with
    two vertices a side: four vertices, four edges, all degrees two."""
    return (
        g.num_vertices == 4
        and len(g.edges) == 4
        and all(g.degree(v) == 2 for v in range(1, 5))
    )
