"""Brute-force spanning-tree counters used as ground truth.

Two deliberately independent oracles: exhaustive enumeration of (n-1)-edge
subsets, and the deletion-contraction recurrence on a multigraph.  Neither
touches the linear algebra, so a determinant bug cannot validate itself.
Both are desk-scale by design; the subset oracle refuses oversized inputs
outright rather than silently skipping.
"""

from __future__ import annotations

import math
import sys
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Graph

DEFAULT_SUBSET_LIMIT = 10_000_000


class EdgeNotInGraphError(ValueError):
    """A candidate subset mentions an edge the graph does not contain."""


class OracleTooLargeError(ValueError):
    """The subset space exceeds the enumeration guard."""


def is_spanning_tree(g: Graph, subset: Iterable[tuple[int, int]]) -> bool:
    """True when the edge subset forms a spanning tree of g.

    Checks edge count n-1 plus connectivity over all n vertices; with the
    count fixed, connectivity already rules out cycles.
    """
    chosen = set()
    for i, j in subset:
        e = (i, j) if i < j else (j, i)
        if e not in g.edges:
            raise EdgeNotInGraphError(f"edge ({i},{j}) is not in the graph")
        chosen.add(e)
    if len(chosen) != g.n - 1:
        return False
    adj: dict[int, list[int]] = {v: [] for v in range(1, g.n + 1)}
    for i, j in chosen:
        adj[i].append(j)
        adj[j].append(i)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def tau_subsets(g: Graph, limit: int = DEFAULT_SUBSET_LIMIT) -> int:
    """Count spanning trees by enumerating (n-1)-edge subsets.

    Equivalent to testing every subset with is_spanning_tree, implemented
    as a backtracking scan that abandons a branch as soon as a chosen edge
    closes a cycle.  Refuses to run when C(|E|, n-1) exceeds `limit`.
    """
    n = g.n
    edges = sorted(g.edges)
    need = n - 1
    if math.comb(len(edges), need) > limit:
        raise OracleTooLargeError(
            f"C({len(edges)},{need}) exceeds the subset guard of {limit}"
        )
    if need == 0:
        return 1
    total_edges = len(edges)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), total_edges + 100))
    parent = list(range(n + 1))
    size = [1] * (n + 1)
    count = 0

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def scan(idx: int, chosen: int) -> None:
        nonlocal count
        if chosen == need:
            count += 1
            return
        if total_edges - idx < need - chosen:
            return
        a, b = edges[idx]
        root_a, root_b = find(a), find(b)
        if root_a != root_b:
            if size[root_a] < size[root_b]:
                root_a, root_b = root_b, root_a
            parent[root_b] = root_a
            size[root_a] += size[root_b]
            scan(idx + 1, chosen + 1)
            parent[root_b] = root_b
            size[root_a] -= size[root_b]
        scan(idx + 1, chosen)

    scan(0, 0)
    return count


@dataclass(frozen=True)
class Multigraph:
    """Vertex count plus an edge multiset; loops are never stored."""

    n: int
    edges: Counter

    @classmethod
    def from_graph(cls, g: Graph) -> "Multigraph":
        return cls(g.n, Counter(g.edges))


def _connected(vertices: frozenset[int], edges: Counter) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _delcon(vertices: frozenset[int], edges: Counter) -> int:
    if len(vertices) == 1:
        return 1
    if not edges or not _connected(vertices, edges):
        return 0
    a, b = min(edges)
    # delete one copy of (a,b)
    deleted = edges.copy()
    deleted[(a, b)] -= 1
    if deleted[(a, b)] == 0:
        del deleted[(a, b)]
    # contract (a,b): merge b into a, dropping the resulting loops
    contracted: Counter = Counter()
    for (i, j), mult in edges.items():
        if (i, j) == (a, b):
            continue
        i2 = a if i == b else i
        j2 = a if j == b else j
        if i2 != j2:
            contracted[(min(i2, j2), max(i2, j2))] += mult
    return _delcon(vertices, deleted) + _delcon(vertices - {b}, contracted)


def tau_delcon(mg: Multigraph) -> int:
    """Count spanning trees by the deletion-contraction recurrence.

    Splits on the first edge in sorted order: count without that copy plus
    count with its endpoints merged.  Disconnected states count 0 and the
    single vertex counts 1.
    """
    sys.setrecursionlimit(max(sys.getrecursionlimit(), sum(mg.edges.values()) + mg.n + 100))
    return _delcon(frozenset(range(1, mg.n + 1)), Counter(mg.edges))
