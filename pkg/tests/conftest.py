"""Shared fixtures: the five worked networks and independent mini-oracles."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from netcontrol import DirectedNetwork, Matching, load_edge_list


@pytest.fixture
def dilation_net():
    """Two-branch dilation: c feeds a and b; only one can be matched."""
    return load_edge_list("c a\nc b\n")


@pytest.fixture
def dilation_matching(dilation_net):
    ids = dilation_net.id_of
    return Matching.from_pairs(dilation_net, [(ids("c"), ids("b"))])


@pytest.fixture
def path4():
    return load_edge_list("1 2\n2 3\n3 4\n")


@pytest.fixture
def confluence():
    return load_edge_list("1 3\n2 3\n")


@pytest.fixture
def five_node():
    """Cross-class pitfall network: a is redundant yet pairs with possible b."""
    return load_edge_list("c1 u\nc1 b\nc1 a\nw a\n")


@pytest.fixture
def five_node_matching(five_node):
    ids = five_node.id_of
    return Matching.from_pairs(
        five_node, [(ids("c1"), ids("b")), (ids("w"), ids("a"))])


@pytest.fixture
def two_cycle():
    return load_edge_list("1 2\n2 1\n")


def worked_networks():
    """All five hand-built networks, freshly parsed."""
    texts = ["c a\nc b\n", "1 2\n2 3\n3 4\n", "1 3\n2 3\n",
             "c1 u\nc1 b\nc1 a\nw a\n", "1 2\n2 1\n"]
    return [load_edge_list(t) for t in texts]


def random_digraph(n: int, p: float, seed: int) -> DirectedNetwork:
    """Bernoulli digraph over every ordered pair, no self-loops."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(n)
             if u != v and rng.random() < p]
    return DirectedNetwork(n, edges)


def is_valid_matching(net: DirectedNetwork, pairs) -> bool:
    srcs = [u for u, _ in pairs]
    dsts = [v for _, v in pairs]
    return (len(set(srcs)) == len(srcs) and len(set(dsts)) == len(dsts)
            and all(net.has_edge(u, v) for u, v in pairs))


def brute_maximum_matchings(net: DirectedNetwork):
    """Every maximum matching by subset enumeration; tiny graphs only."""
    assert net.edge_count <= 16, "brute force limited to 16 edges"
    edges = list(net.edges)
    for size in range(net.edge_count, 0, -1):
        found = [combo for combo in combinations(edges, size)
                 if is_valid_matching(net, combo)]
        if found:
            return found
    return [()]


def brute_input_sets(net: DirectedNetwork):
    """Deduplicated unmatched-target sets over all maximum matchings."""
    everyone = frozenset(range(net.n))
    return {everyone - frozenset(v for _, v in pairs)
            for pairs in brute_maximum_matchings(net)}
