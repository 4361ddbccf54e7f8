"""
Minimal zero forcing sets, Z(G) and Z̄(G)
"""
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from strategies import graphs


def test_is_minimal_zfs():
    """Test minimality on C5 and P4"""
    from zforce import is_minimal_zfs
    from zforce.graph import cycle, path

    assert is_minimal_zfs(cycle(5), [0, 1])
    assert is_minimal_zfs(path(4), [1, 2])
    assert not is_minimal_zfs(path(4), [0, 2])
    assert not is_minimal_zfs(cycle(5), [0, 2])

def test_shrink_to_minimal():
    """Test removals are attempted in ascending id order"""
    from zforce import NotZeroForcingError, shrink_to_minimal
    from zforce.graph import complete, cycle, path

    assert shrink_to_minimal(complete(3), [0, 1, 2]) == {1, 2}
    assert shrink_to_minimal(cycle(5), [0, 1, 2]) == {1, 2}
    assert shrink_to_minimal(path(4), [1, 2]) == {1, 2}
    with pytest.raises(NotZeroForcingError):
        shrink_to_minimal(cycle(5), [0, 2])

def test_zero_forcing_number():
    """Test Z on complete graphs, the prism C5 □ K2 and paths"""
    from zforce import zero_forcing_number
    from zforce.graph import complete, cycle, path, prism

    for n in range(2, 7):
        assert zero_forcing_number(complete(n))[0] == n - 1
    assert zero_forcing_number(prism(2))[0] == 4
    assert zero_forcing_number(path(5)) == (1, {0})
    assert zero_forcing_number(cycle(7)) == (2, {0, 1})

def test_zero_forcing_lower_bound():
    """Test the degree and fort packing bound never exceeds Z"""
    from zforce import build_graph, zero_forcing_number
    from zforce.minimal import zero_forcing_lower_bound
    from zforce.graph import prism

    two_edges = build_graph(4, [(0, 1), (2, 3)])
    assert zero_forcing_lower_bound(two_edges) == 2
    assert zero_forcing_lower_bound(prism(2)) <= zero_forcing_number(prism(2))[0]

def test_max_minimal_zfs():
    """Test Z̄ on K_m ∪ kK1, the gap family and P4"""
    from zforce import max_minimal_zfs
    from zforce.constructions import gap_family
    from zforce.graph import complete_union_isolates, path

    assert max_minimal_zfs(complete_union_isolates(4, 2))[0] == 5
    assert max_minimal_zfs(gap_family(9, validate=False))[0] == 7
    assert max_minimal_zfs(path(4)) == (2, {1, 2})

def test_routes():
    """Test every route agrees and unknown routes are rejected"""
    from zforce import ZforceError
    from zforce.minimal import minimal_masks
    from zforce.graph import cycle, path, wheel

    for g in (cycle(5), path(4), wheel(6)):
        assert minimal_masks(g, "scan") == minimal_masks(g, "forts") == minimal_masks(g, "both")
    with pytest.raises(ZforceError):
        minimal_masks(path(4), "fast")

def test_enumerate_minimal_zfs():
    """Test the minimal sets of C5, a star and two disjoint edges"""
    from zforce import build_graph, enumerate_minimal_zfs
    from zforce.graph import cycle, star

    assert enumerate_minimal_zfs(cycle(5)) == [{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}]
    assert enumerate_minimal_zfs(star(5)) == [{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}]
    two_edges = build_graph(4, [(0, 1), (2, 3)])
    assert enumerate_minimal_zfs(two_edges) == [{0, 2}, {0, 3}, {1, 2}, {1, 3}]

def test_count_minimal_zfs():
    """Test counts on C6, C3 ∪ C3 and the empty graph"""
    from zforce import count_minimal_zfs
    from zforce.graph import cycle, cycle_union, empty

    assert count_minimal_zfs(cycle(6)) == 6
    assert count_minimal_zfs(cycle_union(2, 3)) == 9
    assert count_minimal_zfs(empty(3)) == 1

def test_every_zfs_contains_minimum():
    """Test the containment property on a wheel, the counterexample join and P4"""
    from zforce import add_universal_vertex, every_zfs_contains_minimum
    from zforce.constructions import counterexample_graph
    from zforce.graph import path, wheel

    assert every_zfs_contains_minimum(wheel(6))
    assert not every_zfs_contains_minimum(add_universal_vertex(counterexample_graph(7, validate=False)))
    assert not every_zfs_contains_minimum(path(4))

def test_in_every_minimal_zfs():
    """Test only isolated vertices lie in every minimal set"""
    from zforce import GraphError, in_every_minimal_zfs
    from zforce.graph import complete, complete_union_isolates, cycle

    assert in_every_minimal_zfs(complete_union_isolates(3, 1), 3)
    assert not in_every_minimal_zfs(complete_union_isolates(3, 1), 0)
    assert not any(in_every_minimal_zfs(cycle(5), v) for v in range(5))
    assert not in_every_minimal_zfs(complete(2), 0)
    with pytest.raises(GraphError):
        in_every_minimal_zfs(complete(2), 2)

def test_summarize_and_histogram():
    """Test the summary of P4"""
    from zforce import summarize
    from zforce.minimal import minimal_zfs_by_size, zbar_polynomial_bound, z_equals_zbar
    from zforce.graph import cycle, path

    s = summarize(path(4))
    assert (s.z, s.zbar, s.minimal_count, s.gap) == (1, 2, 3, 1)
    assert s.witness_min == {0}
    assert s.witness_max_minimal == {1, 2}
    assert minimal_zfs_by_size(path(4)) == {1: 2, 2: 1}
    assert zbar_polynomial_bound(path(4)) == 10
    assert z_equals_zbar(cycle(5))
    assert not z_equals_zbar(path(4))

def test_enumeration_cap():
    """Test exhaustive routes refuse orders above the cap"""
    from zforce import CapExceededError, max_minimal_zfs, override_limits, zero_forcing_number
    from zforce.graph import cycle

    with override_limits(enumeration_cap=4):
        with pytest.raises(CapExceededError):
            zero_forcing_number(cycle(5))
        with pytest.raises(CapExceededError):
            max_minimal_zfs(cycle(5))

def test_universal_vertex_arithmetic():
    """Test Z(G ∨ K1) against the number of isolates for every graph of order at most 4"""
    from zforce import add_universal_vertex, enumerate_all_graphs, zero_forcing_number

    for n in range(1, 5):
        for g in enumerate_all_graphs(n):
            z = zero_forcing_number(g)[0]
            zh = zero_forcing_number(add_universal_vertex(g))[0]
            isolated = len(g.isolates())
            expected = z + 1 if isolated == 0 else z if isolated == 1 else z - 1
            assert zh == expected, g

@settings(max_examples=100, derandomize=True, deadline=None)
@given(graphs(max_order=5))
def test_single_deletion_decides_minimality(g):
    """Test single-vertex deletion agrees with checking every proper subset"""
    from zforce import VertexSet, is_minimal_zfs, is_zero_forcing_set

    for mask in range(1 << g.order):
        s = VertexSet.from_mask(mask)
        by_subsets = is_zero_forcing_set(g, s) and not any(
            is_zero_forcing_set(g, sub) for k in range(len(s)) for sub in combinations(list(s), k)
        )
        assert is_minimal_zfs(g, s) == by_subsets

@settings(max_examples=100, derandomize=True, deadline=None)
@given(graphs(max_order=7))
def test_zbar_bounds(g):
    """Test Z <= Z̄ <= n and that the witnesses have the claimed properties"""
    from zforce import is_minimal_zfs, is_zero_forcing_set, summarize

    s = summarize(g)
    assert s.z <= s.zbar <= g.order
    assert s.minimal_count >= 1
    assert len(s.witness_min) == s.z and is_zero_forcing_set(g, s.witness_min)
    assert len(s.witness_max_minimal) == s.zbar and is_minimal_zfs(g, s.witness_max_minimal)

def test_routes_agree_on_random_graphs():
    """Test scan and fort transversals agree on random graphs of order 7 to 10"""
    from zforce.constructions import random_graph
    from zforce.minimal import minimal_masks

    rng = random.Random(0)
    for _ in range(30):
        g = random_graph(rng.randint(7, 10), rng)
        assert minimal_masks(g, "scan") == minimal_masks(g, "forts")

@pytest.mark.slow
def test_routes_agree_exhaustively():
    """Test scan and fort transversals agree on every graph of order at most 6"""
    from zforce import enumerate_all_graphs
    from zforce.minimal import minimal_masks

    for n in range(1, 7):
        for g in enumerate_all_graphs(n):
            assert minimal_masks(g, "scan") == minimal_masks(g, "forts")
