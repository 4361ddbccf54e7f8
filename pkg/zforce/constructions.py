"""zforce constructions - explicit graph families and witness sets

Named vertices map to ids as follows:

* spider S_{5,...,5}: center 0; leg i (1-based) holds a_i..e_i at
  ids 1 + 5(i-1) .. 5 + 5(i-1)
* C5 □ K_m: vertex (u, v) is u*m + v; the cliques K^1, K^2, K^3 are the
  columns u = 0, 1, 2, so u_i, v_i, w_i are (0, i-1), (1, i-1), (2, i-1)
* G_n of the add-universal construction: 1-based label x is id x - 1
"""
import itertools
import logging
import random
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from .config import HARD_SWEEP_ORDER
from .errors import ConstructionError, FamilyError, GraphError
from .forcing import is_zero_forcing_set, reversal
from .graph import (
    Graph,
    VertexSet,
    add_universal_vertex,
    build_graph,
    complete,
    components,
    disjoint_union,
    family,
    join,
    path,
    spider,
)
from .minimal import is_minimal_zfs, max_minimal_zfs, z_equals_zbar, zero_forcing_number

logger = logging.getLogger(__name__)

_LEG_LETTERS = "abcde"


# Spiders

def five_leg_spider(k: int) -> Graph:
    """S_{5,...,5} with k legs"""
    return spider(*([5] * k))


def twin_spider(k: int) -> Graph:
    """S_{1,...,1,4k+1}: same order, leaves and branchpoints as five_leg_spider(k)"""
    return spider(*([1] * (k - 1) + [4 * k + 1]))


def spider_vertex(leg: int, letter: str) -> int:
    """Id of vertex a_i..e_i on leg i (1-based) of S_{5,...,5}"""
    return 1 + 5 * (leg - 1) + _LEG_LETTERS.index(letter)


def spider_witness_sets(k: int, j: int, legs: Iterable[int]) -> VertexSet:
    """S(I, j): {b_i, c_i} for i in I and {c_i, d_i} for i outside I, skipping leg j"""
    chosen = set(legs)
    if k < 3:
        raise FamilyError(f"spider witness sets need at least 3 legs, got {k}")
    if not 1 <= j <= k:
        raise FamilyError(f"excluded leg {j} out of range 1..{k}")
    if not chosen <= set(range(1, k + 1)):
        raise FamilyError(f"leg subset {sorted(chosen)} not within 1..{k}")
    members = []
    for i in range(1, k + 1):
        if i == j:
            continue
        pair = "bc" if i in chosen else "cd"
        members.extend(spider_vertex(i, letter) for letter in pair)
    return VertexSet(members)


def all_spider_witness_sets(k: int) -> Dict[int, List[VertexSet]]:
    """Excluded leg j -> the distinct S(I, j) over all I"""
    result = {}
    for j in range(1, k + 1):
        sets = {spider_witness_sets(k, j, legs) for legs in _subsets(range(1, k + 1))}
        result[j] = sorted(sets, key=VertexSet.sort_key)
    return result


# C5 □ K_m

def prism_witness_sets(m: int, legs: Iterable[int]) -> VertexSet:
    """S(I) = V(K^2) ∪ {u_i : i in I} ∪ {w_i : i not in I}"""
    chosen = set(legs)
    if m < 1:
        raise FamilyError(f"clique size must be at least 1, got {m}")
    if not chosen <= set(range(1, m + 1)):
        raise FamilyError(f"index subset {sorted(chosen)} not within 1..{m}")
    members = [m + i for i in range(m)]
    for i in range(1, m + 1):
        members.append(i - 1 if i in chosen else 2 * m + i - 1)
    return VertexSet(members)


# Adding a universal vertex can break Z = Z̄

COUNTEREXAMPLE_WITNESS = (1, 3, 4, 5, 6)


def _counterexample_edges(n: int) -> List[Tuple[int, int]]:
    labeled = [(1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]
    labeled += [(x, x + 1) for x in range(5, n)]
    labeled.append((n, 1))
    return [(x - 1, y - 1) for x, y in labeled]


def counterexample_witness() -> VertexSet:
    """{1,3,4,5,6} in 1-based labels: a minimal zero forcing set of G_n ∨ K1"""
    return VertexSet(x - 1 for x in COUNTEREXAMPLE_WITNESS)


def validate_counterexample(g: Graph) -> None:
    n = g.order
    name = f"counterexample_graph({n})"

    def expect(condition: bool, diagnostic: str) -> None:
        if not condition:
            logger.error("%s failed validation: %s", name, diagnostic)
            raise ConstructionError(name, diagnostic)

    z, _ = zero_forcing_number(g)
    expect(z == 3, f"Z(G) = {z}, expected 3")
    zbar, witness = max_minimal_zfs(g)
    expect(zbar == 3, f"Z̄(G) = {zbar}, expected 3 (witness {witness})")
    expect(is_zero_forcing_set(g, [0, 1, 2]), "{1,2,3} is not a zero forcing set")
    h = add_universal_vertex(g)
    zh, _ = zero_forcing_number(h)
    expect(zh == 4, f"Z(G ∨ K1) = {zh}, expected 4")
    expect(is_minimal_zfs(h, counterexample_witness()), "{1,3,4,5,6} is not minimal in G ∨ K1")
    logger.debug("%s passed validation", name)


@family("counterexample")
def counterexample_graph(n: int, validate: bool = True) -> Graph:
    """G_n: Z = Z̄ = 3 but Z̄(G_n ∨ K1) >= 5 > 4 = Z(G_n ∨ K1)

    N(1)={2,3,5,n}, N(2)={1,3,4}, N(3)={1,2,4,5}, N(4)={2,3,5},
    N(5)={1,3,4,6}, plus the path 5-6-...-n-1 (1-based labels).
    """
    if n < 7:
        raise FamilyError(f"counterexample graph needs n >= 7, got {n}")
    g = build_graph(n, _counterexample_edges(n))
    if validate:
        validate_counterexample(g)
    return g


# Z̄ - Z = n - 7

def two_k2() -> Graph:
    return disjoint_union(complete(2), complete(2))


@family("gap")
def gap_family(n: int, validate: bool = True) -> Graph:
    """(2K2) ∨ P_{n-4}: K2's on {0,1} and {2,3}, path 4..n-1"""
    if n < 7:
        raise FamilyError(f"gap family needs n >= 7, got {n}")
    g = join(two_k2(), path(n - 4))
    if validate:
        z, _ = zero_forcing_number(g)
        zbar, _ = max_minimal_zfs(g)
        if z != 5 or zbar != n - 2:
            logger.error("gap_family(%d): Z = %d, Z̄ = %d", n, z, zbar)
            raise ConstructionError(f"gap_family({n})", f"Z = {z}, Z̄ = {zbar}; expected 5 and {n - 2}")
    return g


def gap_witness_sets(n: int) -> Tuple[List[VertexSet], List[VertexSet]]:
    """(minimal sets of size n-2, minimum sets of size 5) of gap_family(n)"""
    path_vertices = list(range(4, n))
    largest = [VertexSet([a, c] + path_vertices) for a in (0, 1) for c in (2, 3)]
    smallest = [VertexSet([0, 1, 2, 3, leaf]) for leaf in (4, n - 1)]
    return largest, smallest


# Components

def component_reversal_sets(g: Graph) -> List[VertexSet]:
    """One set per choice of minimum ZFS or its reversal on every nontrivial component

    Isolated vertices are in every set. With k nontrivial components there
    are 2^k choices; each result is a minimum zero forcing set of g.
    """
    fixed = g.isolates()
    options = []
    for block in components(g).nontrivial:
        sub = g.induced_subgraph(block)
        ids = list(block)
        _, minimum = zero_forcing_number(sub)
        reverse = reversal(sub, minimum)
        options.append([VertexSet(ids[v] for v in minimum), VertexSet(ids[v] for v in reverse)])
    result = []
    for choice in itertools.product(*options):
        s = fixed
        for part in choice:
            s = s | part
        result.append(s)
    return result


# Exhaustive graph enumeration

def pair_list(n: int) -> List[Tuple[int, int]]:
    """Upper-triangle pairs in graph6 order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_code(n: int, code: int) -> Graph:
    """Graph whose edge set is bit k of code for the k-th pair of pair_list(n)"""
    return build_graph(n, [p for k, p in enumerate(pair_list(n)) if (code >> k) & 1])


def graph_code(g: Graph) -> int:
    code = 0
    for k, (i, j) in enumerate(pair_list(g.order)):
        if (g.adjacency[i] >> j) & 1:
            code |= 1 << k
    return code


def _permuted_pair_maps(n: int) -> List[List[int]]:
    pairs = pair_list(n)
    index = {p: k for k, p in enumerate(pairs)}
    maps = []
    for perm in itertools.permutations(range(n)):
        maps.append([index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs])
    return maps


def _permute_code(code: int, pair_map: Sequence[int]) -> int:
    result = 0
    k = 0
    while code:
        if code & 1:
            result |= 1 << pair_map[k]
        code >>= 1
        k += 1
    return result


def _check_sweep_order(n: int) -> None:
    if not 1 <= n <= HARD_SWEEP_ORDER:
        raise GraphError(f"exhaustive enumeration supports orders 1..{HARD_SWEEP_ORDER}, got {n}")


def canonical_code(g: Graph) -> int:
    """Minimum pair encoding over all vertex permutations"""
    _check_sweep_order(g.order)
    code = graph_code(g)
    return min(_permute_code(code, m) for m in _permuted_pair_maps(g.order))


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(g.order, canonical_code(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.num_edges != h.num_edges:
        return False
    if sorted(g.degree_sequence()) != sorted(h.degree_sequence()):
        return False
    if g.order <= HARD_SWEEP_ORDER:
        return canonical_code(g) == canonical_code(h)
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def canonical_codes(n: int) -> List[int]:
    """One code per isomorphism class, each the least code of its class, ascending

    Codes are visited in ascending order; the first unseen code of a class is
    its minimum, and its whole orbit is then marked.
    """
    _check_sweep_order(n)
    total = 1 << (n * (n - 1) // 2)
    maps = _permuted_pair_maps(n)
    seen = bytearray(total)
    result = []
    for code in range(total):
        if seen[code]:
            continue
        result.append(code)
        for m in maps:
            seen[_permute_code(code, m)] = 1
    logger.debug("order %d: %d labeled graphs, %d isomorphism classes", n, total, len(result))
    return result


def graph_codes(n: int, up_to_iso: bool = False) -> List[int]:
    _check_sweep_order(n)
    if up_to_iso:
        return canonical_codes(n)
    return list(range(1 << (n * (n - 1) // 2)))


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """G(n, p) sample drawn pair by pair in pair_list order"""
    return build_graph(n, [pair for pair in pair_list(n) if rng.random() < p])


def enumerate_all_graphs(n: int, up_to_iso: bool = False) -> Iterator[Graph]:
    """All labeled graphs on n vertices, or one canonical graph per class, in code order"""
    for code in graph_codes(n, up_to_iso):
        yield graph_from_code(n, code)


# Structure recognizers

def is_clique_with_isolates(g: Graph) -> bool:
    """g ≅ K_m ∪ kK1 with m >= 2 and k >= 0"""
    active = VertexSet(v for v in range(g.order) if g.adjacency[v])
    if len(active) < 2:
        return False
    return all(g.adjacency[v] == active.mask & ~(1 << v) for v in active)


def universal_chain_step(g: Graph, h: Graph) -> bool:
    """One step of the Z = Z̄ poset: both graphs satisfy Z = Z̄ and h ≅ g ∨ K1"""
    if h.order != g.order + 1:
        return False
    if not is_isomorphic(add_universal_vertex(g), h):
        return False
    return z_equals_zbar(g) and z_equals_zbar(h)


def _subsets(items: Iterable[int]) -> Iterator[Tuple[int, ...]]:
    pool = list(items)
    for r in range(len(pool) + 1):
        yield from itertools.combinations(pool, r)


def leg_subsets(k: int) -> Iterator[Tuple[int, ...]]:
    return _subsets(range(1, k + 1))


__all__ = [
    'COUNTEREXAMPLE_WITNESS',
    'all_spider_witness_sets',
    'canonical_code',
    'canonical_codes',
    'canonical_form',
    'component_reversal_sets',
    'counterexample_graph',
    'counterexample_witness',
    'enumerate_all_graphs',
    'five_leg_spider',
    'gap_family',
    'gap_witness_sets',
    'graph_code',
    'graph_codes',
    'graph_from_code',
    'is_clique_with_isolates',
    'is_isomorphic',
    'leg_subsets',
    'pair_list',
    'prism_witness_sets',
    'random_graph',
    'spider_vertex',
    'spider_witness_sets',
    'twin_spider',
    'two_k2',
    'universal_chain_step',
    'validate_counterexample',
]
