import random
from collections import Counter
from itertools import combinations

import pytest

from treecount import (
    EdgeNotInGraphError,
    Multigraph,
    OracleTooLargeError,
    build_graph,
    gen_complete,
    is_spanning_tree,
    tau_delcon,
    tau_subsets,
)

from conftest import DIAMOND_TREES, random_graph


def tau_by_literal_enumeration(g):
    """Reference count: test every (n-1)-subset with is_spanning_tree."""
    return sum(
        1
        for combo in combinations(sorted(g.edges), g.n - 1)
        if is_spanning_tree(g, combo)
    )


def test_is_spanning_tree_examples(diamond):
    assert is_spanning_tree(diamond, {(1, 4), (3, 4), (2, 3)})
    # contains the cycle on 1, 3, 4
    assert not is_spanning_tree(diamond, {(1, 4), (3, 4), (1, 3), (1, 2)})
    # too few edges, disconnected
    assert not is_spanning_tree(diamond, {(1, 4), (2, 3)})


def test_is_spanning_tree_rejects_foreign_edges(diamond):
    with pytest.raises(EdgeNotInGraphError):
        is_spanning_tree(diamond, {(2, 4)})


def test_is_spanning_tree_accepts_exactly_the_eight_diamond_trees(diamond):
    accepted = [
        set(combo)
        for combo in combinations(sorted(diamond.edges), 3)
        if is_spanning_tree(diamond, combo)
    ]
    assert len(accepted) == 8
    for tree in DIAMOND_TREES:
        assert tree in accepted


def test_tau_subsets_examples(diamond):
    assert tau_subsets(diamond) == 8
    assert tau_subsets(gen_complete(4)) == 16
    path = build_graph(4, [(1, 2), (2, 3), (3, 4)])
    assert tau_subsets(path) == 1
    assert tau_subsets(build_graph(1, [])) == 1


def test_tau_subsets_equals_literal_enumeration():
    rng = random.Random(31337)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 6), rng.uniform(0.2, 0.9))
        assert tau_subsets(g) == tau_by_literal_enumeration(g)


def test_tau_subsets_guard_is_a_hard_error():
    g = gen_complete(5)  # C(10, 4) = 210 subsets
    with pytest.raises(OracleTooLargeError):
        tau_subsets(g, limit=209)
    assert tau_subsets(g, limit=210) == 125


def test_tau_delcon_examples(diamond):
    assert tau_delcon(Multigraph.from_graph(diamond)) == 8
    assert tau_delcon(Multigraph.from_graph(gen_complete(5))) == 125
    assert tau_delcon(Multigraph.from_graph(build_graph(1, []))) == 1
    assert tau_delcon(Multigraph.from_graph(build_graph(3, [(1, 2)]))) == 0


def test_tau_delcon_parallel_edges():
    for k in range(1, 6):
        mg = Multigraph(2, Counter({(1, 2): k}))
        assert tau_delcon(mg) == k


def test_oracles_agree_on_random_corpus():
    rng = random.Random(987)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 7), rng.uniform(0.2, 0.9))
        assert tau_subsets(g) == tau_delcon(Multigraph.from_graph(g))
