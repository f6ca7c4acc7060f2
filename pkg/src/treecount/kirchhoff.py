"""Spanning-tree counts from Laplacian determinants.

Three independent routes to tau(G): the classical reduced-Laplacian
cofactor, a rank-one determinant update det(L + u v^T) = (sum u)(sum v) tau,
and a Schur-complement reduction that collapses a bipartite Laplacian onto
one side of the bipartition.  All arithmetic is exact; every division is
checked and any negative or inexact intermediate is an assertion failure,
never a value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Sequence

from . import linalg
from .graph import Graph


class ZeroVectorSumError(ValueError):
    """A rank-one update vector sums to zero, so the count cannot be recovered."""


class NotBipartitionError(ValueError):
    """The given vertex split is not a bipartition of the graph."""


class IsolatedColumnVertexError(ValueError):
    """A column-side vertex has degree zero, so 1/deg(c) is undefined."""


@dataclass(frozen=True)
class Bipartition:
    """Ordered two-sided vertex split: no edge may run inside either side."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))


def check_bipartition(g: Graph, bp: Bipartition) -> None:
    """Raise NotBipartitionError unless bp is a valid bipartition of g."""
    rows, cols = set(bp.rows), set(bp.cols)
    if len(rows) != len(bp.rows) or len(cols) != len(bp.cols):
        raise NotBipartitionError("bipartition sides contain repeated vertices")
    if rows & cols:
        raise NotBipartitionError(f"sides overlap on {sorted(rows & cols)}")
    if rows | cols != set(range(1, g.n + 1)):
        raise NotBipartitionError("sides do not cover the vertex set exactly")
    for i, j in g.edges:
        if (i in rows) == (j in rows):
            raise NotBipartitionError(f"edge ({i},{j}) lies inside one side")


def find_bipartition(g: Graph) -> Bipartition | None:
    """Two-color g by search; None when some component has an odd cycle.

    Isolated vertices and component roots are colored to the row side, so
    the result is deterministic for a given graph.
    """
    color: dict[int, int] = {}
    for start in range(1, g.n + 1):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    rows = tuple(v for v in range(1, g.n + 1) if color[v] == 0)
    cols = tuple(v for v in range(1, g.n + 1) if color[v] == 1)
    return Bipartition(rows, cols)


def tau_reduced(g: Graph, row: int, col: int) -> int:
    """Count spanning trees from the reduced Laplacian with `row` and `col`
    deleted: (-1)^(row+col) det(L_{row,col}).  Any vertex pair gives the
    same value; disconnected graphs give 0."""
    lap = g.laplacian()
    sign = -1 if (row + col) % 2 else 1
    value = sign * linalg.det_int(linalg.minor_matrix(lap, row, col))
    assert value >= 0, f"reduced-Laplacian count came out negative: {value}"
    return value


def tau_rank_one(g: Graph, u: Sequence[int], v: Sequence[int]) -> int:
    """Count spanning trees as det(L + u v^T) / ((sum u)(sum v)).

    Both vector sums must be nonzero; the identity degenerates to 0 = 0
    otherwise.  The division is exact for any valid input, so a remainder
    is an arithmetic bug, not an error path.
    """
    sum_u, sum_v = sum(u), sum(v)
    if sum_u == 0 or sum_v == 0:
        raise ZeroVectorSumError("vector sums must be nonzero to recover the count")
    det = linalg.det_perturbed(g.laplacian(), u, v)
    value, rem = divmod(det, sum_u * sum_v)
    assert rem == 0, "rank-one update determinant not divisible by the vector sums"
    assert value >= 0, f"rank-one count came out negative: {value}"
    return value


def tau_temperley(g: Graph) -> int:
    """Count spanning trees as det(L + J) / n^2, J the all-ones matrix.

    This is the rank-one route with u = v = all-ones: it needs no choice of
    row and column, and handles every graph including the single vertex.
    """
    ones = [1] * g.n
    return tau_rank_one(g, ones, ones)


def s_matrix(g: Graph, bp: Bipartition) -> linalg.RatMatrix:
    """Reduction of a bipartite Laplacian onto the row side.

    Entry (r,r) is deg(r); entry (r,r') for r != r' is the sum of 1/deg(c)
    over columns c adjacent to r but not to r'.  The diagonal needs no
    correction term because the corresponding correction matrix has zero
    diagonal.
    """
    check_bipartition(g, bp)
    for c in bp.cols:
        if g.degree(c) == 0:
            raise IsolatedColumnVertexError(f"column vertex {c} has degree 0")
    nbrs = {r: g.neighbors(r) for r in bp.rows}
    out: linalg.RatMatrix = []
    for r in bp.rows:
        row = []
        for r2 in bp.rows:
            if r == r2:
                row.append(Fraction(g.degree(r)))
            else:
                row.append(sum((Fraction(1, g.degree(c)) for c in nbrs[r] - nbrs[r2]), Fraction(0)))
        out.append(row)
    return out


def tau_bipartite_schur(g: Graph, bp: Bipartition) -> int:
    """Count spanning trees of a bipartite graph from its reduction matrix:
    (prod of column degrees) * det(S) / (|rows| * |cols|)."""
    m, n = len(bp.rows), len(bp.cols)
    if m == 0 or n == 0:
        raise NotBipartitionError("both sides must be nonempty")
    s = s_matrix(g, bp)
    deg_product = 1
    for c in bp.cols:
        deg_product *= g.degree(c)
    value = deg_product * linalg.det_rat(s) / (m * n)
    assert value.denominator == 1, "bipartite reduction gave a non-integer count"
    assert value >= 0, f"bipartite reduction count came out negative: {value}"
    return int(value)


def tau(g: Graph) -> int:
    """Number of spanning trees of g.

    Dispatches to the all-ones rank-one route, which requires no index
    choices and agrees exactly with every other method.
    """
    return tau_temperley(g)
