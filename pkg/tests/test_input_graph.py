import pytest

from netcontrol import (Matching, NodeClass, NotMaximumMatchingError,
                        build_input_graph, classify_nodes,
                        control_reachable_from, exchange, input_nodes,
                        maximum_matching)
from netcontrol.input_graph import verify_class_separation
from netcontrol.oracle import enumerate_maximum_matchings

from conftest import brute_input_sets, random_digraph, worked_networks


def test_dilation_input_graph(dilation_net, dilation_matching):
    ids = dilation_net.id_of
    ig = build_input_graph(dilation_net, dilation_matching)
    assert ig.possible_inputs == {ids("a"), ids("b"), ids("c")}
    assert [(e.src, e.dst, e.witness) for e in ig.possible_edges] == \
        [(ids("a"), ids("b"), ids("c"))]
    assert ig.redundant_edges == ()


def test_path_has_no_adjacencies(path4):
    m = maximum_matching(path4, 0)
    ig = build_input_graph(path4, m)
    assert ig.possible_edges == () and ig.redundant_edges == ()
    assert ig.possible_inputs == {0}


def test_five_node_excludes_cross_class_pair(five_node, five_node_matching):
    """A literal witness scan relates redundant a to possible b; the
    constructed graph must not contain that pair in either direction."""
    net, m = five_node, five_node_matching
    ids = net.id_of
    ig = build_input_graph(net, m)
    assert ig.possible_inputs == {ids("u"), ids("c1"), ids("w"), ids("b")}
    assert [(e.src, e.dst, e.witness) for e in ig.all_edges()] == \
        [(ids("u"), ids("b"), ids("c1"))]

    # the cross-class pair exists under the raw definition...
    raw_pairs = set()
    for c in range(net.n):
        b = m.matched_out.get(c)
        if b is None:
            continue
        for a in net.out_adj[c]:
            if a != b:
                raw_pairs.add((a, b))
    assert (ids("a"), ids("b")) in raw_pairs
    # ...and a is redundant while b is possible, so it must stay excluded
    classes = classify_nodes(ig)
    assert classes[ids("a")] is NodeClass.REDUNDANT
    assert classes[ids("b")].possible_input
    constructed = {(e.src, e.dst) for e in ig.all_edges()}
    assert (ids("a"), ids("b")) not in constructed
    assert (ids("b"), ids("a")) not in constructed


def test_redundant_side_edges():
    # two sources into one chain: 3->1 adjacency on the redundant side
    from netcontrol import load_edge_list
    net = load_edge_list("1 3\n2 3\n2 1\n")
    m = Matching.from_pairs(net, [(net.id_of("1"), net.id_of("3")),
                                  (net.id_of("2"), net.id_of("1"))])
    ig = build_input_graph(net, m)
    classes = classify_nodes(ig)
    assert classes[net.id_of("2")].possible_input
    redundant_pairs = {(e.src, e.dst, e.witness) for e in ig.redundant_edges}
    assert redundant_pairs == {(net.id_of("3"), net.id_of("1"), net.id_of("2"))}


def test_rejects_non_maximum_matching(dilation_net):
    with pytest.raises(NotMaximumMatchingError):
        build_input_graph(dilation_net, Matching({}))


def test_classify_dilation(dilation_net, dilation_matching):
    classes = classify_nodes(build_input_graph(dilation_net, dilation_matching))
    ids = dilation_net.id_of
    assert classes[ids("c")] is NodeClass.CRITICAL
    assert classes[ids("a")] is NodeClass.INTERMITTENT
    assert classes[ids("b")] is NodeClass.INTERMITTENT


def test_classify_path(path4):
    classes = classify_nodes(build_input_graph(path4, maximum_matching(path4, 0)))
    assert classes[0] is NodeClass.CRITICAL
    assert all(classes[v] is NodeClass.REDUNDANT for v in (1, 2, 3))


def test_classify_confluence(confluence):
    m = maximum_matching(confluence, 0)
    classes = classify_nodes(build_input_graph(confluence, m))
    assert classes[confluence.id_of("1")] is NodeClass.CRITICAL
    assert classes[confluence.id_of("2")] is NodeClass.CRITICAL
    assert classes[confluence.id_of("3")] is NodeClass.REDUNDANT


def test_reachability_dilation(dilation_net, dilation_matching):
    ids = dilation_net.id_of
    ig = build_input_graph(dilation_net, dilation_matching)
    assert control_reachable_from(ig, ids("a")) == {ids("a"), ids("b")}
    assert control_reachable_from(ig, ids("c")) == {ids("c")}


def test_reachability_five_node(five_node, five_node_matching):
    ids = five_node.id_of
    ig = build_input_graph(five_node, five_node_matching)
    assert control_reachable_from(ig, ids("u")) == {ids("u"), ids("b")}


def test_class_separation_and_edge_bound_random():
    for seed in range(25):
        net = random_digraph(12, 0.25, seed)
        ig = build_input_graph(net, maximum_matching(net, 0))
        verify_class_separation(ig)
        assert ig.edge_count <= net.edge_count


def test_classification_is_matching_invariant():
    for seed in range(10):
        net = random_digraph(14, 0.25, seed)
        reference = None
        for order_seed in range(5):
            ig = build_input_graph(net, maximum_matching(net, order_seed))
            classes = classify_nodes(ig)
            if reference is None:
                reference = classes
            assert classes == reference


def test_possible_inputs_equal_union_of_all_input_sets():
    for net in worked_networks():
        union = frozenset().union(*brute_input_sets(net))
        ig = build_input_graph(net, maximum_matching(net, 0))
        assert ig.possible_inputs == union
    for seed in range(15):
        net = random_digraph(6, 0.3, seed)
        union = frozenset().union(
            *enumerate_maximum_matchings(net).input_sets)
        ig = build_input_graph(net, maximum_matching(net, 0))
        assert ig.possible_inputs == union


def test_exchange_chain_realizes_reachability(five_node, five_node_matching):
    """Walking adjacency edges via successive exchanges turns each reached
    node into an actual input node."""
    net, m = five_node, five_node_matching
    ids = net.id_of
    ig = build_input_graph(net, m)
    result = exchange(net, m, ids("u"), ids("c1"))
    assert ids("b") in input_nodes(net, result.matching)


def test_self_loop_network_agrees_with_oracle():
    from netcontrol import DirectedNetwork
    net = DirectedNetwork(2, [(0, 0), (0, 1)], labels=["a", "b"])
    ig = build_input_graph(net, maximum_matching(net, 0))
    union = frozenset().union(*enumerate_maximum_matchings(net).input_sets)
    assert ig.possible_inputs == union == {0, 1}


def test_oracle_agreement_on_larger_graphs():
    from netcontrol import classify_exhaustive
    for n, seed in ((10, 1), (10, 2), (12, 3), (12, 4), (11, 5)):
        net = random_digraph(n, 0.18, seed)
        ig = build_input_graph(net, maximum_matching(net, 0))
        assert classify_nodes(ig) == classify_exhaustive(net)
