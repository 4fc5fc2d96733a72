import pytest

from dagic import build_ontology
from dagic.errors import (
    CycleDetected,
    MultipleRoots,
    NoRoot,
    UnknownTerm,
    UnknownTermInEdge,
)

from conftest import chain, random_dag


def dfs_reachable(edges, start):
    """Naive reachability oracle over an adjacency built from scratch."""
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
    seen = set()
    stack = [start]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        stack.extend(adj.get(node, []))
    return seen


def test_single_node():
    o = build_ontology(["r"], [])
    assert o.ancestors("r") == {"r"}
    assert o.descendants("r") == set()
    assert o.min_depth("r") == 0
    assert o.root == "r"


def test_diamond_closures(diamond):
    assert diamond.ancestors("c") == {"c", "a", "b", "r"}
    assert diamond.descendants("r") == {"a", "b", "c"}
    assert diamond.min_depth("c") == 2
    assert diamond.ancestors("r") == {"r"}


def test_chain_queries():
    o = chain(3)
    t0, t1, t2 = o.ids[0], o.ids[1], o.ids[2]
    assert o.ancestors(t2) == {t0, t1, t2}
    assert o.descendants(t1) == {t2}
    assert o.min_depth(t2) == 2


def test_two_cycle_rejected():
    with pytest.raises(CycleDetected):
        build_ontology(["a", "b"], [("a", "b"), ("b", "a")])


def test_cycle_reports_offenders():
    with pytest.raises(CycleDetected) as err:
        build_ontology(["r", "a", "b", "c"],
                       [("a", "r"), ("b", "a"), ("c", "b"), ("b", "c")])
    assert {"b", "c"} <= set(err.value.cycle)


def test_multiple_roots_listed():
    with pytest.raises(MultipleRoots) as err:
        build_ontology(["r1", "r2", "a"], [("a", "r1")])
    assert err.value.roots == ["r1", "r2"]


def test_no_root():
    with pytest.raises((NoRoot, CycleDetected)):
        build_ontology(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


def test_unknown_term_in_edge():
    with pytest.raises(UnknownTermInEdge):
        build_ontology(["r", "a"], [("a", "r"), ("a", "ghost")])


def test_unknown_term_query(diamond):
    with pytest.raises(UnknownTerm):
        diamond.ancestors("nope")
    with pytest.raises(UnknownTerm):
        diamond.min_depth("nope")


def test_indices_lexicographic(diamond):
    assert list(diamond.ids) == sorted(diamond.ids)
    assert all(diamond.index(t) == i for i, t in enumerate(diamond.ids))


def test_closures_match_dfs_on_random_dags(rng):
    for _ in range(100):
        o = random_dag(rng)
        child_to_parent = [(o.ids[c], o.ids[p]) for c, p in o.edges]
        parent_to_child = [(p, c) for c, p in child_to_parent]
        for t in o.ids:
            assert o.ancestors(t) == dfs_reachable(child_to_parent, t) | {t}
            assert o.descendants(t) == dfs_reachable(parent_to_child, t) - {t}


def test_closure_size_identity(rng):
    # strict ancestor pairs counted once from each side
    for _ in range(30):
        o = random_dag(rng)
        total_desc = sum(len(o.descendants(t)) for t in o.ids)
        total_strict_anc = sum(len(o.ancestors(t)) - 1 for t in o.ids)
        assert total_desc == total_strict_anc


def test_depth_properties(rng):
    for _ in range(30):
        o = random_dag(rng)
        assert o.min_depth(o.root) == 0
        for t in o.ids:
            if t != o.root:
                assert o.min_depth(t) >= 1
        for c, p in o.edges:
            assert o.depth[c] <= o.depth[p] + 1
