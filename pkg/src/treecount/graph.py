"""Simple undirected graphs on vertices 1..n, with degrees and Laplacians."""

from __future__ import annotations

from collections.abc import Iterable


class GraphError(ValueError):
    """Invalid graph construction or vertex access."""


class LoopEdgeError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same unordered pair appears more than once in the input."""


class OutOfRangeError(GraphError):
    """A vertex index falls outside 1..n."""


class Graph:
    """Immutable simple undirected graph on vertices labelled 1..n.

    Edges are unordered pairs of distinct vertices, each stored once as a
    sorted tuple.  Loops and duplicate edges are rejected at construction so
    bad input surfaces early rather than being silently cleaned up.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edge_list: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
        edges: set[tuple[int, int]] = set()
        for i, j in edge_list:
            if i == j:
                raise LoopEdgeError(f"loop edge ({i},{j}) is not allowed")
            if not (1 <= i <= n and 1 <= j <= n):
                raise OutOfRangeError(f"edge ({i},{j}) has an endpoint outside 1..{n}")
            e = (i, j) if i < j else (j, i)
            if e in edges:
                raise DuplicateEdgeError(f"edge ({i},{j}) appears more than once")
            edges.add(e)
            adj[i].add(j)
            adj[j].add(i)
        self.n = n
        self.edges = frozenset(edges)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}

    def _check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.n):
            raise OutOfRangeError(f"vertex {v} outside 1..{self.n}")

    def degree(self, v: int) -> int:
        """Number of edges containing v."""
        self._check_vertex(v)
        return len(self._adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        """Set of vertices sharing an edge with v."""
        self._check_vertex(v)
        return self._adj[v]

    def laplacian(self) -> list[list[int]]:
        """Degree matrix minus adjacency matrix, as an n x n list of ints.

        Entry (i,i) is deg(i), entry (i,j) is -1 when {i,j} is an edge and 0
        otherwise, so every row and column sums to zero.
        """
        n = self.n
        lap = [[0] * n for _ in range(n)]
        for v in range(1, n + 1):
            lap[v - 1][v - 1] = len(self._adj[v])
            for w in self._adj[v]:
                lap[v - 1][w - 1] = -1
        return lap

    def is_connected(self) -> bool:
        """True when every vertex is reachable from vertex 1."""
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in self._adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self.edges)})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Construct a Graph from a vertex count and an edge list."""
    return Graph(n, edge_list)
