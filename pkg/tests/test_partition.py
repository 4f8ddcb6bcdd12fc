import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import mixed_instance, reduced
from strategies import graphs

from diamondkernel.generate import FIGURE3, gen_figure3
from diamondkernel.graph import (Graph, GraphError, Instance, Mode, common_neighbors, complete_graph,
                                 diamond_graph)
from diamondkernel.oracle import bruteforce_labels, classify_cliques, is_yes
from diamondkernel.partition import Part, compute_partition, guarded_cliques, part_of

F = FIGURE3
NAMED = set(F.values())
UNNAMED = set(range(5, 15))


def names(*xs):
    return [F[x] for x in xs]


def test_figure3_partition():
    labels = compute_partition(gen_figure3(k=4))
    small = set(names("v2", "v3", "v4", "v5", "v6", "u2", "u3", "u4", "v9"))
    assert labels.small == small
    assert labels.vertex_vulnerable == NAMED
    parts = labels.parts()
    assert set(parts[Part.SMALL_TYPE1]) == small
    assert parts[Part.VULNERABLE_BIG] == [F["u1"]]
    assert set(parts[Part.VULNERABLE_TYPE2]) == set(names("v0", "v1", "v7", "v8"))
    assert set(parts[Part.GUARDED_TYPE1]) == UNNAMED
    assert parts[Part.GUARDED_TYPE2] == []
    assert labels.only_type2 == set(names("v0", "v1", "v7", "v8"))
    assert labels.guarded == UNNAMED


def test_part_of_examples():
    labels = compute_partition(gen_figure3(k=4))
    assert part_of(labels, F["v2"]) is Part.SMALL_TYPE1
    assert part_of(labels, F["u1"]) is Part.VULNERABLE_BIG
    assert part_of(labels, F["v7"]) is Part.VULNERABLE_TYPE2
    assert labels.part(5) is Part.GUARDED_TYPE1
    with pytest.raises(GraphError):
        part_of(labels, 99)


def test_diamond_free_graph_has_no_labels():
    g = complete_graph(range(5))
    g.add_edge(4, 5)
    labels = compute_partition(Instance(g, 2))
    assert not (labels.vertex_type1 or labels.vertex_small or labels.vertex_vulnerable
                or labels.edge_cross or labels.edge_type1)
    assert labels.parts()[Part.GUARDED_TYPE2] == list(range(6))


def test_single_diamond():
    labels = compute_partition(Instance(diamond_graph(), 1))
    assert labels.vertex_type1 == labels.small == labels.vertex_vulnerable == {0, 1, 2, 3}
    assert labels.parts()[Part.SMALL_TYPE1] == [0, 1, 2, 3]
    assert labels.edge_cross == {(1, 2)}


def test_requires_reduced_instance():
    with pytest.raises(GraphError):
        compute_partition(Instance(diamond_graph(), 0))
    compute_partition(Instance(diamond_graph(), 0), check=False)


def test_guarded_cliques_examples():
    inst = gen_figure3(k=4)
    labels = compute_partition(inst)
    view = guarded_cliques(inst, labels, 5)
    assert view.cliques == [frozenset(range(1, 15))] and view.type1_flags == [True]
    assert view.type1_cliques() == [frozenset(range(1, 15))]
    with pytest.raises(GraphError):
        guarded_cliques(inst, labels, F["v2"])

    lone = Instance(Graph([1]), 1)
    assert guarded_cliques(lone, compute_partition(lone), 1).cliques == []

    # x = 0 sees two disjoint triangles: two 4-cliques, both type II
    g = complete_graph([0, 1, 2, 3])
    for a, b in itertools.combinations([0, 4, 5, 6], 2):
        g.add_edge(a, b)
    inst = Instance(g, 1)
    view = guarded_cliques(inst, compute_partition(inst), 0)
    assert sorted(map(sorted, view.cliques)) == [[0, 1, 2, 3], [0, 4, 5, 6]]
    assert view.type1_flags == [False, False]


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9), st.integers(0, 3), st.sampled_from(list(Mode)))
def test_partition_matches_clique_enumeration(g, k, mode):
    red = reduced(Instance(g, k, mode))
    if red is None:
        return
    labels = compute_partition(red)
    brute = bruteforce_labels(red.graph, red.k)
    assert labels.vertex_type1 == brute.type1
    assert labels.vertex_small == brute.small
    assert labels.vertex_vulnerable == brute.vulnerable
    assert labels.edge_type1 == brute.type1_edges


def _reduced_yes_instances(count):
    out = []
    for s in range(count):
        for mode in Mode:
            red = reduced(mixed_instance(s, mode, n_range=(5, 10), k_range=(1, 3)))
            if red is not None and red.k >= 1 and is_yes(red):
                out.append(red)
    return out


def test_small_and_big_clique_bounds_on_yes_instances():
    cases = _reduced_yes_instances(300)
    assert len(cases) >= 100
    for inst in cases:
        k = inst.k
        cls = classify_cliques(inst.graph, k)
        assert len(set().union(*cls.small_type1)) <= 18 * k**3 + 2 * k
        assert len(cls.big_type1) <= 6 * k**2


def test_private_common_neighbours_are_independent():
    seen = 0
    for s in range(400):
        red = reduced(mixed_instance(s, Mode.EDITING, n_range=(5, 11), k_range=(1, 3)))
        if red is None:
            continue
        g = red.graph
        small = compute_partition(red).small
        for u, v in itertools.combinations(sorted(small), 2):
            if g.has_edge(u, v):
                continue
            private = common_neighbors(g, u, v) - small
            seen += len(private) > 1
            assert all(not g.has_edge(a, b) for a, b in itertools.combinations(private, 2))
    assert seen > 0
