"""zforce graph - immutable simple graphs over bit-field vertex sets

Vertex ids are 0..n-1 and a vertex set is a single int whose bit v marks
vertex v. Every constructor below documents the labeling it produces, so
results are reproducible across runs.
"""
import inspect
import logging
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .config import check_order
from .errors import FamilyError, GraphError

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class VertexSet:
    """Immutable set of vertex ids backed by a bit field"""

    __slots__ = ("_mask",)

    def __init__(self, members: Iterable[int] = ()):
        mask = 0
        for v in members:
            if v < 0:
                raise GraphError(f"vertex id must be non-negative, got {v}")
            mask |= 1 << v
        self._mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        result = cls.__new__(cls)
        result._mask = mask
        return result

    @property
    def mask(self) -> int:
        return self._mask

    # Set algebra
    def union(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask | _mask_of(other))

    def intersection(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask & _mask_of(other))

    def difference(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask & ~_mask_of(other))

    def complement(self, n: int) -> "VertexSet":
        return VertexSet.from_mask(((1 << n) - 1) & ~self._mask)

    def add(self, v: int) -> "VertexSet":
        return VertexSet.from_mask(self._mask | (1 << v))

    def discard(self, v: int) -> "VertexSet":
        return VertexSet.from_mask(self._mask & ~(1 << v))

    def issubset(self, other: "VertexSet") -> bool:
        return self._mask & ~_mask_of(other) == 0

    def issuperset(self, other: "VertexSet") -> bool:
        return _mask_of(other) & ~self._mask == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self._mask & _mask_of(other) == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset
    __ge__ = issuperset

    def __lt__(self, other: "VertexSet") -> bool:
        return self.issubset(other) and self._mask != _mask_of(other)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool((self._mask >> v) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self._mask)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __bool__(self) -> bool:
        return self._mask != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self._mask == other._mask
        if isinstance(other, (set, frozenset)):
            return frozenset(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self))

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(str(v) for v in self)}}})"

    def to_tuple(self) -> Tuple[int, ...]:
        return tuple(self)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Size first, then lexicographic on member ids"""
        return (len(self), self.to_tuple())


def _mask_of(members: Union[VertexSet, Iterable[int]]) -> int:
    if isinstance(members, VertexSet):
        return members.mask
    return VertexSet(members).mask


def order_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Sort key on raw masks matching VertexSet.sort_key"""
    return (mask.bit_count(), tuple(iter_bits(mask)))


VertexLike = Union[VertexSet, Iterable[int]]


class Graph:
    """Simple undirected graph; immutable once built

    Use build_graph() or the constructors below rather than calling this
    directly: the constructor trusts its adjacency masks.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adjacency: Sequence[int]):
        self._n = n
        self._adj = tuple(adjacency)

    @property
    def order(self) -> int:
        return self._n

    n = order

    @property
    def adjacency(self) -> Tuple[int, ...]:
        """Per-vertex neighbor masks"""
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet.from_mask(self.full_mask)

    def vertex_set(self, members: VertexLike) -> VertexSet:
        """Validate members against this graph and return them as a VertexSet"""
        mask = _mask_of(members)
        if mask >> self._n:
            bad = [v for v in iter_bits(mask) if v >= self._n]
            raise GraphError(f"vertex ids {bad} out of range for a graph of order {self._n}")
        return VertexSet.from_mask(mask)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for a graph of order {self._n}")

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet.from_mask(self._adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def degree_sequence(self) -> List[int]:
        return [a.bit_count() for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self._adj[u] >> v) & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v in ascending order"""
        return [(u, v) for u in range(self._n) for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degree_sequence()) // 2

    def is_universal(self, v: int) -> bool:
        return self.degree(v) == self._n - 1

    def universal_vertices(self) -> VertexSet:
        return VertexSet(v for v in range(self._n) if self._adj[v].bit_count() == self._n - 1)

    def isolates(self) -> VertexSet:
        return VertexSet(v for v in range(self._n) if self._adj[v] == 0)

    def leaves(self) -> VertexSet:
        return VertexSet(v for v in range(self._n) if self._adj[v].bit_count() == 1)

    def branchpoints(self) -> VertexSet:
        return VertexSet(v for v in range(self._n) if self._adj[v].bit_count() >= 3)

    def is_connected(self) -> bool:
        return _reach(self._adj, 1) == self.full_mask

    def induced_subgraph(self, members: VertexLike) -> "Graph":
        """Subgraph on members, relabeled in ascending id order"""
        keep = list(self.vertex_set(members))
        if not keep:
            raise GraphError("induced subgraph must keep at least one vertex")
        position = {v: i for i, v in enumerate(keep)}
        adjacency = [0] * len(keep)
        for v in keep:
            for w in iter_bits(self._adj[v]):
                if w in position:
                    adjacency[position[v]] |= 1 << position[w]
        return Graph(len(keep), adjacency)

    def permute(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertex v as perm[v]"""
        if sorted(perm) != list(range(self._n)):
            raise GraphError(f"{list(perm)} is not a permutation of 0..{self._n - 1}")
        adjacency = [0] * self._n
        for v in range(self._n):
            for w in iter_bits(self._adj[v]):
                adjacency[perm[v]] |= 1 << perm[w]
        return Graph(self._n, adjacency)

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self._n, [full & ~a & ~(1 << v) for v, a in enumerate(self._adj)])

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Build from a networkx graph, labeling nodes in sorted order"""
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return build_graph(len(nodes), [(index[u], index[v]) for u, v in g.edges()])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def _reach(adjacency: Sequence[int], start: int) -> int:
    """Mask of vertices reachable from the start mask"""
    seen = start
    frontier = start
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= adjacency[v]
        frontier = grown & ~seen
        seen |= frontier
    return seen


def build_graph(n: int, edges: Iterable[Tuple[int, int]] = ()) -> Graph:
    """Build a graph of order n; duplicate and reversed pairs collapse"""
    if n < 1:
        raise GraphError(f"graph order must be at least 1, got {n}")
    check_order(n)
    adjacency = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
    return Graph(n, adjacency)


# Structural operations

def neighbors(graph: Graph, v: int) -> VertexSet:
    return graph.neighbors(v)


def degree(graph: Graph, v: int) -> int:
    return graph.degree(v)


def is_universal(graph: Graph, v: int) -> bool:
    return graph.is_universal(v)


def isolates(graph: Graph) -> VertexSet:
    return graph.isolates()


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G on ids 0..|G|-1, then H shifted by |G|"""
    check_order(g.order + h.order)
    shift = g.order
    return Graph(g.order + h.order, list(g.adjacency) + [a << shift for a in h.adjacency])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between G and H; G first, then H"""
    n = g.order + h.order
    check_order(n)
    shift = g.order
    g_mask = g.full_mask
    h_mask = h.full_mask << shift
    adjacency = [a | h_mask for a in g.adjacency] + [(a << shift) | g_mask for a in h.adjacency]
    return Graph(n, adjacency)


def corona(g: Graph, h: Graph) -> Graph:
    """One copy of H per vertex of G, fully joined to that vertex

    G keeps ids 0..|G|-1; the copy attached to vertex i occupies
    |G| + i*|H| .. |G| + (i+1)*|H| - 1.
    """
    n = g.order * (1 + h.order)
    check_order(n)
    adjacency = list(g.adjacency) + [0] * (g.order * h.order)
    for i in range(g.order):
        shift = g.order + i * h.order
        copy_mask = h.full_mask << shift
        adjacency[i] |= copy_mask
        for j, a in enumerate(h.adjacency):
            adjacency[shift + j] = (a << shift) | (1 << i)
    return Graph(n, adjacency)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (u, v) gets id u*|H| + v"""
    m = h.order
    n = g.order * m
    check_order(n)
    adjacency = [0] * n
    for u in range(g.order):
        for v in range(m):
            mask = h.adjacency[v] << (u * m)
            for w in iter_bits(g.adjacency[u]):
                mask |= 1 << (w * m + v)
            adjacency[u * m + v] = mask
    return Graph(n, adjacency)


def add_universal_vertex(g: Graph) -> Graph:
    """G ∨ K1; the new vertex gets id n"""
    return join(g, Graph(1, [0]))


def delete_vertex_mapping(n: int, v: int) -> Dict[int, int]:
    """Old id -> new id after deleting v from a graph of order n"""
    return {u: (u if u < v else u - 1) for u in range(n) if u != v}


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove v; ids above v shift down by one (see delete_vertex_mapping)"""
    if g.order < 2:
        raise GraphError("cannot delete the only vertex of a graph")
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} out of range for a graph of order {g.order}")
    return g.induced_subgraph(VertexSet.from_mask(g.full_mask & ~(1 << v)))


class ComponentDecomposition:
    """Connected components as vertex sets, ordered by least vertex id"""

    def __init__(self, blocks: Sequence[VertexSet]):
        self.blocks: Tuple[VertexSet, ...] = tuple(blocks)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __getitem__(self, i: int) -> VertexSet:
        return self.blocks[i]

    def is_trivial(self, i: int) -> bool:
        return len(self.blocks[i]) == 1

    @property
    def trivial(self) -> List[VertexSet]:
        return [b for b in self.blocks if len(b) == 1]

    @property
    def nontrivial(self) -> List[VertexSet]:
        return [b for b in self.blocks if len(b) > 1]

    def __repr__(self) -> str:
        return f"ComponentDecomposition({list(self.blocks)})"


def components(g: Graph) -> ComponentDecomposition:
    blocks = []
    remaining = g.full_mask
    while remaining:
        block = _reach(g.adjacency, remaining & -remaining)
        blocks.append(VertexSet.from_mask(block))
        remaining &= ~block
    return ComponentDecomposition(blocks)


# Family generators

_FAMILIES: Dict[str, Callable[..., Graph]] = {}


def family(name: str):
    """Register a generator under name; its parameter count is checked by generate()"""

    def register(func: Callable[..., Graph]) -> Callable[..., Graph]:
        _FAMILIES[name] = func
        return func

    return register


def family_names() -> List[str]:
    return sorted(_FAMILIES)


def generate(name: str, *params: int) -> Graph:
    """Canonical labeled instance of a named family"""
    try:
        func = _FAMILIES[name]
    except KeyError:
        raise FamilyError(f"unknown graph family {name!r}; known: {', '.join(family_names())}") from None
    sig = inspect.signature(func)
    positional = [p for p in sig.parameters.values() if p.kind is not inspect.Parameter.VAR_POSITIONAL]
    variadic = len(positional) < len(sig.parameters)
    required = [p.name for p in positional if p.default is inspect.Parameter.empty]
    if not variadic and len(params) != len(required):
        raise FamilyError(
            f"family {name!r} expects {len(required)} parameter(s) "
            f"({', '.join(required)}), got {len(params)}"
        )
    return func(*params)


def _require(name: str, condition: bool, message: str) -> None:
    if not condition:
        raise FamilyError(f"{name}: {message}")


@family("complete")
def complete(n: int) -> Graph:
    _require("complete", n >= 1, f"n must be at least 1, got {n}")
    check_order(n)
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


@family("empty")
def empty(n: int) -> Graph:
    _require("empty", n >= 1, f"n must be at least 1, got {n}")
    return build_graph(n)


@family("path")
def path(n: int) -> Graph:
    _require("path", n >= 1, f"n must be at least 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


@family("cycle")
def cycle(n: int) -> Graph:
    _require("cycle", n >= 3, f"n must be at least 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


@family("star")
def star(n: int) -> Graph:
    """K̄_{n-1} ∨ K1: leaves 0..n-2, center n-1"""
    _require("star", n >= 2, f"n must be at least 2, got {n}")
    return add_universal_vertex(empty(n - 1))


@family("wheel")
def wheel(n: int) -> Graph:
    """C_{n-1} ∨ K1: rim 0..n-2, hub n-1"""
    _require("wheel", n >= 4, f"n must be at least 4, got {n}")
    return add_universal_vertex(cycle(n - 1))


@family("spider")
def spider(*legs: int) -> Graph:
    """Center 0; leg i is a path laid out consecutively, its first vertex adjacent to 0"""
    _require("spider", len(legs) >= 3, f"needs at least 3 legs, got {len(legs)}")
    _require("spider", all(a >= 1 for a in legs), f"leg lengths must be at least 1, got {list(legs)}")
    n = 1 + sum(legs)
    check_order(n)
    edges = []
    start = 1
    for a in legs:
        edges.append((0, start))
        edges.extend((start + i, start + i + 1) for i in range(a - 1))
        start += a
    return build_graph(n, edges)


@family("complete_union_isolates")
def complete_union_isolates(m: int, k: int) -> Graph:
    """K_m on 0..m-1 followed by k isolated vertices"""
    _require("complete_union_isolates", m >= 1 and k >= 0, f"needs m >= 1 and k >= 0, got {m}, {k}")
    if k == 0:
        return complete(m)
    return disjoint_union(complete(m), empty(k))


@family("corona_clique")
def corona_clique(m: int) -> Graph:
    """K_m ∘ K1: clique 0..m-1, the leaf of clique vertex i is m+i"""
    _require("corona_clique", m >= 1, f"m must be at least 1, got {m}")
    return corona(complete(m), complete(1))


@family("prism")
def prism(m: int) -> Graph:
    """C5 □ K_m"""
    _require("prism", m >= 1, f"m must be at least 1, got {m}")
    return cartesian_product(cycle(5), complete(m))


@family("join_clique_empty")
def join_clique_empty(a: int, b: int) -> Graph:
    """K_a ∨ K̄_b: clique 0..a-1, independent side a..a+b-1"""
    _require("join_clique_empty", a >= 1 and b >= 1, f"needs a, b >= 1, got {a}, {b}")
    return join(complete(a), empty(b))


@family("join_clique_cycle")
def join_clique_cycle(a: int, b: int) -> Graph:
    """K_a ∨ C_b: clique 0..a-1, cycle a..a+b-1"""
    _require("join_clique_cycle", a >= 1 and b >= 3, f"needs a >= 1 and b >= 3, got {a}, {b}")
    return join(complete(a), cycle(b))


@family("cycle_union")
def cycle_union(k: int, m: int) -> Graph:
    """k disjoint copies of C_m"""
    _require("cycle_union", k >= 1, f"k must be at least 1, got {k}")
    check_order(k * max(m, 3))
    result: Optional[Graph] = None
    for _ in range(k):
        result = cycle(m) if result is None else disjoint_union(result, cycle(m))
    assert result is not None
    return result


__all__ = [
    'ComponentDecomposition',
    'Graph',
    'VertexLike',
    'VertexSet',
    'add_universal_vertex',
    'build_graph',
    'cartesian_product',
    'complete',
    'complete_union_isolates',
    'components',
    'corona',
    'corona_clique',
    'cycle',
    'cycle_union',
    'degree',
    'delete_vertex',
    'delete_vertex_mapping',
    'disjoint_union',
    'empty',
    'family',
    'family_names',
    'generate',
    'is_universal',
    'isolates',
    'iter_bits',
    'join',
    'join_clique_cycle',
    'join_clique_empty',
    'neighbors',
    'order_key',
    'path',
    'popcount',
    'prism',
    'spider',
    'star',
    'wheel',
]
