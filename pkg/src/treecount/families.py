"""Graph family generators and their closed-form spanning-tree counts.

Five families: complete graphs, complete bipartite and multipartite graphs,
Ferrers graphs of integer partitions, and threshold graphs given by a
creation sequence.  Each family has a generator returning a Graph with a
fixed, documented vertex numbering, and a closed-form count that the test
suite checks against the determinant methods and the brute-force oracles.

Family spec strings (shared by all CLI commands):

    complete:N            bipartite:M,N         multipartite:N1,N2,...
    ferrers:L1,L2,...     threshold:BITS

Numeric argument lists accept a repetition token CxV meaning C copies of V
(so ferrers:3x4 is the partition (4,4,4)).  Threshold BITS is a string over
{d,i}: d adds a vertex adjacent to everything so far, i adds an isolated
vertex, read left to right in addition order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from collections.abc import Sequence

from .graph import Graph

DOMINATING = "d"
ISOLATED = "i"


class FamilySpecError(ValueError):
    """Malformed family spec string or invalid family parameters."""


class NotThresholdOrderedError(ValueError):
    """Vertex labels do not satisfy the threshold ordering property."""


def _check_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 1:
        raise FamilySpecError(f"{name} must be a positive integer, got {value!r}")


def _check_partition(parts: Sequence[int]) -> list[int]:
    parts = list(parts)
    if not parts:
        raise FamilySpecError("partition must have at least one part")
    for p in parts:
        _check_positive("partition part", p)
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise FamilySpecError(f"partition parts must be weakly decreasing, got {parts}")
    return parts


def _check_bits(bits) -> str:
    text = "".join(bits).lower()
    if any(ch not in (DOMINATING, ISOLATED) for ch in text):
        raise FamilySpecError(f"threshold sequence may only contain 'd' and 'i', got {text!r}")
    return text


def gen_complete(n: int) -> Graph:
    """Complete graph on n vertices: every pair joined."""
    _check_positive("n", n)
    return Graph(n, combinations(range(1, n + 1), 2))


def gen_complete_bipartite(m: int, n: int) -> Graph:
    """Complete bipartite graph: side one is 1..m, side two is m+1..m+n,
    with exactly the m*n cross edges."""
    _check_positive("m", m)
    _check_positive("n", n)
    return Graph(m + n, ((i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)))


def gen_complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with consecutively numbered parts.

    Vertices 1..sizes[0] form the first part, the next sizes[1] vertices the
    second, and so on; two vertices are adjacent exactly when they lie in
    different parts.
    """
    sizes = list(sizes)
    if not sizes:
        raise FamilySpecError("multipartite spec needs at least one part")
    for s in sizes:
        _check_positive("part size", s)
    n = sum(sizes)
    part = []
    for index, size in enumerate(sizes):
        part.extend([index] * size)
    edges = (
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if part[i - 1] != part[j - 1]
    )
    return Graph(n, edges)


def gen_ferrers(parts: Sequence[int]) -> Graph:
    """Bipartite graph of a partition's diagram.

    With m parts and largest part n, vertices 1..m are the m rows and
    m+1..m+n the n columns; row i is joined to column j exactly when the
    diagram has a box at (i,j), i.e. j <= parts[i-1].
    """
    parts = _check_partition(parts)
    m = len(parts)
    edges = ((i, m + j) for i in range(1, m + 1) for j in range(1, parts[i - 1] + 1))
    return Graph(m + parts[0], edges)


def gen_threshold(bits) -> Graph:
    """Threshold graph built from a creation sequence, in canonical order.

    Construction: start from a single vertex, then for each character add a
    dominating vertex ('d', adjacent to all vertices so far) or an isolated
    one ('i').  The result is then relabelled so that the dominating
    vertices come first in reverse addition order (last added becomes
    vertex 1), the initial vertex follows them at position t = #d + 1, and
    the isolated additions trail in addition order.  Under this labelling,
    vertices 1..t form the unique maximal clique prefix and every edge
    {k,l} with k < l implies the edges {i,l} for i < k and {k,j} for j < l.
    """
    text = _check_bits(bits)
    n = len(text) + 1
    # construction ids: 0 is the initial vertex, then 1..n-1 in addition order
    raw_edges = []
    for step, ch in enumerate(text, start=1):
        if ch == DOMINATING:
            raw_edges.extend((earlier, step) for earlier in range(step))
    dominating = [step for step, ch in enumerate(text, start=1) if ch == DOMINATING]
    isolated = [step for step, ch in enumerate(text, start=1) if ch == ISOLATED]
    order = list(reversed(dominating)) + [0] + isolated
    label = {old: new for new, old in enumerate(order, start=1)}
    return Graph(n, ((label[a], label[b]) for a, b in raw_edges))


def threshold_t(g: Graph) -> int:
    """Largest index t such that vertex t is adjacent to every lower index.

    Requires g to be labelled in threshold order; a labelling that violates
    the ordering property raises NotThresholdOrderedError.
    """
    for i, j in g.edges:
        for k in range(1, i):
            if (k, j) not in g.edges:
                raise NotThresholdOrderedError(
                    f"edge ({i},{j}) present but ({k},{j}) missing"
                )
        for k in range(1, j):
            if k != i and (min(i, k), max(i, k)) not in g.edges:
                raise NotThresholdOrderedError(
                    f"edge ({i},{j}) present but ({i},{k}) missing"
                )
    for t in range(g.n, 0, -1):
        if all((i, t) in g.edges for i in range(1, t)):
            return t
    raise AssertionError("unreachable: t = 1 always qualifies")


def conjugate_partition(parts: Sequence[int]) -> list[int]:
    """Transpose of the partition diagram.

    The returned list has length parts[0]; its j-th entry (1-based) is the
    number of parts of size at least j, which is also the degree of column
    vertex j in the Ferrers graph.
    """
    parts = _check_partition(parts)
    return [sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)]


def count_complete(n: int) -> int:
    """n^(n-2) spanning trees; the single vertex counts 1 by convention."""
    _check_positive("n", n)
    if n == 1:
        return 1
    return n ** (n - 2)


def count_complete_bipartite(m: int, n: int) -> int:
    """m^(n-1) * n^(m-1) spanning trees."""
    _check_positive("m", m)
    _check_positive("n", n)
    return m ** (n - 1) * n ** (m - 1)


def count_complete_multipartite(sizes: Sequence[int]) -> int:
    """n^(k-2) * prod (n - n_i)^(n_i - 1) spanning trees over k parts.

    A single part gives an edgeless graph: 1 for the lone vertex, else 0.
    """
    sizes = list(sizes)
    if not sizes:
        raise FamilySpecError("multipartite spec needs at least one part")
    for s in sizes:
        _check_positive("part size", s)
    n = sum(sizes)
    if len(sizes) == 1:
        return 1 if n == 1 else 0
    result = n ** (len(sizes) - 2)
    for size in sizes:
        result *= (n - size) ** (size - 1)
    return result


def count_ferrers(parts: Sequence[int]) -> int:
    """Product of row degrees 2..m times column degrees 2..n.

    Row degrees are the parts themselves and column degrees the conjugate
    parts.  The equivalent form prod(all degrees) / (m*n) is computed too
    and the two are asserted equal.
    """
    parts = _check_partition(parts)
    conj = conjugate_partition(parts)
    m, n = len(parts), parts[0]
    from_second = 1
    for d in parts[1:]:
        from_second *= d
    for d in conj[1:]:
        from_second *= d
    all_degrees = 1
    for d in parts:
        all_degrees *= d
    for d in conj:
        all_degrees *= d
    quotient, rem = divmod(all_degrees, m * n)
    assert rem == 0 and quotient == from_second, "the two degree-product forms disagree"
    return from_second


def count_threshold(bits) -> int:
    """Spanning trees of the threshold graph of a creation sequence.

    For a connected graph this is prod_{i=2}^{t-1} (deg(v_i)+1) times
    prod_{i=t+1}^{n} deg(v_i) over the canonical labelling; a sequence
    whose graph is disconnected counts 0, matching tau.
    """
    g = gen_threshold(bits)
    if not g.is_connected():
        return 0
    t = threshold_t(g)
    result = 1
    for i in range(2, t):
        result *= g.degree(i) + 1
    for i in range(t + 1, g.n + 1):
        result *= g.degree(i)
    return result


@dataclass(frozen=True)
class Family:
    """A parsed family spec: the kind plus its numeric or bit arguments."""

    kind: str
    args: tuple

    def spec_string(self) -> str:
        if self.kind == "threshold":
            return f"threshold:{self.args[0]}"
        return f"{self.kind}:{','.join(str(a) for a in self.args)}"

    def graph(self) -> Graph:
        if self.kind == "complete":
            return gen_complete(self.args[0])
        if self.kind == "bipartite":
            return gen_complete_bipartite(*self.args)
        if self.kind == "multipartite":
            return gen_complete_multipartite(self.args)
        if self.kind == "ferrers":
            return gen_ferrers(self.args)
        return gen_threshold(self.args[0])

    def formula_count(self) -> int:
        if self.kind == "complete":
            return count_complete(self.args[0])
        if self.kind == "bipartite":
            return count_complete_bipartite(*self.args)
        if self.kind == "multipartite":
            return count_complete_multipartite(self.args)
        if self.kind == "ferrers":
            return count_ferrers(self.args)
        return count_threshold(self.args[0])


_INT_TOKEN = re.compile(r"^(?:(\d+)x)?(\d+)$")


def _parse_int_list(kind: str, text: str) -> list[int]:
    if not text:
        raise FamilySpecError(f"{kind} spec needs arguments")
    values = []
    for token in text.split(","):
        match = _INT_TOKEN.match(token.strip())
        if not match:
            raise FamilySpecError(f"bad numeric token {token!r} in {kind} spec")
        repeat = int(match.group(1)) if match.group(1) else 1
        values.extend([int(match.group(2))] * repeat)
    return values


def parse_family(text: str) -> Family:
    """Parse a family spec string; FamilySpecError on any malformed input."""
    kind, sep, rest = text.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise FamilySpecError(f"family spec {text!r} is missing ':'")
    if kind == "complete":
        args = _parse_int_list(kind, rest)
        if len(args) != 1:
            raise FamilySpecError("complete takes exactly one size")
        _check_positive("n", args[0])
        return Family(kind, tuple(args))
    if kind == "bipartite":
        args = _parse_int_list(kind, rest)
        if len(args) != 2:
            raise FamilySpecError("bipartite takes exactly two sizes")
        for a in args:
            _check_positive("size", a)
        return Family(kind, tuple(args))
    if kind == "multipartite":
        args = _parse_int_list(kind, rest)
        for a in args:
            _check_positive("part size", a)
        return Family(kind, tuple(args))
    if kind == "ferrers":
        return Family(kind, tuple(_check_partition(_parse_int_list(kind, rest))))
    if kind == "threshold":
        return Family(kind, (_check_bits(rest.strip()),))
    raise FamilySpecError(f"unknown family kind {kind!r}")
