"""
Explicit constructions, witness sets and exhaustive graph enumeration
"""
import pytest


def test_spider_witness_sets():
    """Test S(I, j) picks {b,c} on legs in I and {c,d} elsewhere, skipping leg j"""
    from zforce import is_minimal_zfs, spider_witness_sets
    from zforce.constructions import five_leg_spider, spider_vertex

    g = five_leg_spider(3)
    assert spider_vertex(2, "a") == 6
    assert spider_witness_sets(3, 3, [1]) == {2, 3, 8, 9}
    assert spider_witness_sets(3, 1, []) == {8, 9, 13, 14}
    assert is_minimal_zfs(g, spider_witness_sets(3, 3, [1]))
    assert is_minimal_zfs(g, spider_witness_sets(3, 1, []))

def test_spider_witness_set_errors():
    """Test too few legs, a bad excluded leg and a foreign leg subset"""
    from zforce import FamilyError, spider_witness_sets

    with pytest.raises(FamilyError):
        spider_witness_sets(2, 1, [])
    with pytest.raises(FamilyError):
        spider_witness_sets(3, 4, [])
    with pytest.raises(FamilyError):
        spider_witness_sets(3, 1, [5])

def test_all_spider_witness_sets():
    """Test each excluded leg yields 2^(k-1) distinct sets"""
    from zforce.constructions import all_spider_witness_sets

    families = all_spider_witness_sets(3)
    assert sorted(families) == [1, 2, 3]
    assert all(len(sets) == 4 for sets in families.values())
    assert all(len(s) == 4 for sets in families.values() for s in sets)

def test_twin_spider():
    """Test the twin matches order, leaves and branchpoints"""
    from zforce.constructions import five_leg_spider, twin_spider

    twin = twin_spider(3)
    g = five_leg_spider(3)
    assert twin.order == g.order == 16
    assert len(twin.leaves()) == len(g.leaves()) == 3
    assert twin.branchpoints() == g.branchpoints() == {0}

def test_prism_witness_sets():
    """Test S(I) is the middle column plus u_i for i in I and w_i otherwise"""
    from zforce import is_zero_forcing_set, prism_witness_sets, zero_forcing_number
    from zforce.graph import prism

    assert prism_witness_sets(2, []) == {2, 3, 4, 5}
    assert prism_witness_sets(3, [2]) == {1, 3, 4, 5, 6, 8}
    g = prism(2)
    z, _ = zero_forcing_number(g)
    for legs in ([], [1], [2], [1, 2]):
        s = prism_witness_sets(2, legs)
        assert len(s) == z
        assert is_zero_forcing_set(g, s)

def test_counterexample_graph():
    """Test the labeling of G_n and the validation of its properties"""
    from zforce import FamilyError, counterexample_graph, generate
    from zforce.constructions import counterexample_witness

    assert counterexample_graph(7).degree_sequence() == [4, 3, 4, 3, 4, 2, 2]
    assert counterexample_graph(8).degree_sequence() == [4, 3, 4, 3, 4, 2, 2, 2]
    assert generate("counterexample", 7) == counterexample_graph(7, validate=False)
    assert counterexample_witness() == {0, 2, 3, 4, 5}
    with pytest.raises(FamilyError):
        counterexample_graph(6)

def test_counterexample_validation_failure(caplog):
    """Test a graph missing the properties raises ConstructionError and logs"""
    from zforce import ConstructionError
    from zforce.constructions import validate_counterexample
    from zforce.graph import cycle

    with pytest.raises(ConstructionError):
        validate_counterexample(cycle(7))
    assert "failed validation" in caplog.text

def test_gap_family():
    """Test (2K2) ∨ P_{n-4} and its witness sets"""
    from zforce import is_minimal_zfs, is_zero_forcing_set
    from zforce.constructions import gap_family, gap_witness_sets

    for n in (7, 8):
        g = gap_family(n)
        largest, smallest = gap_witness_sets(n)
        assert len(largest) == 4 and len(smallest) == 2
        for s in largest:
            assert len(s) == n - 2
            assert is_minimal_zfs(g, s)
        for s in smallest:
            assert len(s) == 5
            assert is_zero_forcing_set(g, s)

def test_component_reversal_sets():
    """Test 3K2 gives 8 distinct minimum zero forcing sets"""
    from zforce import disjoint_union, is_zero_forcing_set
    from zforce.constructions import component_reversal_sets
    from zforce.graph import complete, empty

    g = disjoint_union(disjoint_union(complete(2), complete(2)), complete(2))
    sets = component_reversal_sets(g)
    assert len(set(sets)) == 8
    assert all(len(s) == 3 and is_zero_forcing_set(g, s) for s in sets)
    assert component_reversal_sets(empty(2)) == [{0, 1}]

def test_graph_codes():
    """Test the pair encoding follows graph6 column order"""
    from zforce.constructions import graph_code, graph_from_code, pair_list
    from zforce.graph import path

    assert pair_list(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    assert graph_code(path(3)) == 0b101
    assert graph_from_code(3, 0b101) == path(3)

def test_enumerate_all_graphs():
    """Test labeled counts 2^C(n,2) and isomorphism class counts 1, 2, 4, 11, 34"""
    from zforce import enumerate_all_graphs

    for n, classes in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)]:
        assert len(list(enumerate_all_graphs(n, up_to_iso=True))) == classes
        assert len(list(enumerate_all_graphs(n))) == 2 ** (n * (n - 1) // 2)

def test_enumeration_order_limit():
    """Test exhaustive enumeration refuses order 8"""
    from zforce import GraphError
    from zforce.constructions import graph_codes

    with pytest.raises(GraphError):
        graph_codes(8)

def test_isomorphism():
    """Test canonical forms and isomorphism on both sides of the brute force limit"""
    from zforce import canonical_form
    from zforce.constructions import is_isomorphic
    from zforce.graph import cycle, path, star

    assert canonical_form(path(4)) == canonical_form(path(4).permute([2, 0, 3, 1]))
    assert is_isomorphic(path(4), path(4).permute([3, 1, 0, 2]))
    assert not is_isomorphic(path(4), star(4))
    big = cycle(9)
    assert is_isomorphic(big, big.permute([4, 7, 1, 0, 8, 2, 6, 3, 5]))
    assert not is_isomorphic(cycle(9), path(9))

def test_is_clique_with_isolates():
    """Test recognition of K_m ∪ kK1 with m >= 2"""
    from zforce.constructions import is_clique_with_isolates
    from zforce.graph import complete, complete_union_isolates, empty, path

    assert is_clique_with_isolates(complete_union_isolates(3, 2))
    assert is_clique_with_isolates(complete(2))
    assert not is_clique_with_isolates(empty(3))
    assert not is_clique_with_isolates(path(3))

def test_universal_chain_step():
    """Test C4 -> W5 keeps Z = Z̄ while P4 -> P4 ∨ K1 does not"""
    from zforce import add_universal_vertex, universal_chain_step
    from zforce.graph import cycle, path, wheel

    assert universal_chain_step(cycle(4), wheel(5))
    assert not universal_chain_step(path(4), add_universal_vertex(path(4)))
    assert not universal_chain_step(cycle(4), cycle(4))
