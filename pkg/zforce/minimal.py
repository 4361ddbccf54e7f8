"""zforce minimal - minimal zero forcing sets, Z(G) and Z̄(G)

Exact exponential routes over the subset lattice of small graphs. Z̄(G)
and the list of minimal zero forcing sets can also be obtained as the minimal
transversals of the minimal-fort hypergraph; the default route runs both
routes up to order 10 and insists they agree.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, prod
from typing import Dict, List, Tuple

from joblib import Parallel, delayed

from .config import check_enumeration, get_limits
from .errors import GraphError, NotZeroForcingError, ZforceError
from .forcing import closure_mask, is_zero_forcing_mask
from .forts import disjoint_fort_packing, enumerate_forts, minimal_transversals
from .graph import Graph, VertexLike, VertexSet, components, iter_bits, order_key

logger = logging.getLogger(__name__)

ROUTES = ("auto", "scan", "forts", "both")
# "auto" cross-checks the fort route up to this order
CROSS_CHECK_ORDER = 10
# the fort-packing lower bound needs a full fort scan; skip it above this order
PACKING_BOUND_ORDER = 16


@dataclass(frozen=True)
class ZfsSummary:
    z: int
    zbar: int
    minimal_count: int
    witness_min: VertexSet
    witness_max_minimal: VertexSet

    @property
    def gap(self) -> int:
        return self.zbar - self.z


def _check_size(graph: Graph) -> None:
    n = graph.order
    check_enumeration(n)
    if n > get_limits().enumeration_warn:
        logger.warning("exhaustive scan over 2^%d subsets; expect a long runtime", n)


def _table_chunk(adjacency: Tuple[int, ...], lo: int, hi: int) -> bytes:
    full = (1 << len(adjacency)) - 1
    return bytes(closure_mask(adjacency, mask) == full for mask in range(lo, hi))


def zfs_table(graph: Graph) -> bytes:
    """Byte per subset mask: 1 iff that subset is a zero forcing set"""
    _check_size(graph)
    return _cached_table(graph)


@lru_cache(maxsize=32)
def _cached_table(graph: Graph) -> bytes:
    total = 1 << graph.order
    workers = get_limits().workers
    if workers > 1 and graph.order >= 14:
        step = -(-total // workers)
        chunks = Parallel(n_jobs=workers)(
            delayed(_table_chunk)(graph.adjacency, lo, min(lo + step, total))
            for lo in range(0, total, step)
        )
        table = b"".join(chunks)
    else:
        table = _table_chunk(graph.adjacency, 0, total)
    logger.debug("zero forcing table for order %d: %d forcing subsets", graph.order, sum(table))
    return table


def _is_minimal_mask(table: bytes, mask: int) -> bool:
    if not table[mask]:
        return False
    return all(not table[mask & ~(1 << v)] for v in iter_bits(mask))


def is_minimal_zfs(graph: Graph, s: VertexLike) -> bool:
    """Zero forcing, and no single vertex can be dropped

    Zero forcing is superset-monotone, so single deletions decide minimality.
    """
    mask = graph.vertex_set(s).mask
    if not is_zero_forcing_mask(graph, mask):
        return False
    return all(not is_zero_forcing_mask(graph, mask & ~(1 << v)) for v in iter_bits(mask))


def shrink_to_minimal(graph: Graph, b: VertexLike) -> VertexSet:
    """Drop vertices of B in ascending id order while the rest still forces"""
    mask = graph.vertex_set(b).mask
    if not is_zero_forcing_mask(graph, mask):
        raise NotZeroForcingError(f"{VertexSet.from_mask(mask)} is not a zero forcing set")
    for v in iter_bits(mask):
        smaller = mask & ~(1 << v)
        if is_zero_forcing_mask(graph, smaller):
            mask = smaller
    return VertexSet.from_mask(mask)


def zero_forcing_lower_bound(graph: Graph) -> int:
    """max(δ(G), size of a greedy packing of disjoint minimal forts)"""
    bound = min(graph.degree_sequence())
    if graph.order <= min(PACKING_BOUND_ORDER, get_limits().fort_enumeration_cap):
        forts = enumerate_forts(graph, minimal_only=True)
        bound = max(bound, len(disjoint_fort_packing(forts)))
    return max(bound, 1)


def zero_forcing_number(graph: Graph) -> Tuple[int, VertexSet]:
    """Z(G) with the lexicographically least minimum zero forcing set"""
    _check_size(graph)
    n = graph.order
    for k in range(zero_forcing_lower_bound(graph), n + 1):
        for members in combinations(range(n), k):
            mask = 0
            for v in members:
                mask |= 1 << v
            if is_zero_forcing_mask(graph, mask):
                return k, VertexSet.from_mask(mask)
    raise ZforceError(f"no zero forcing set found for {graph!r}")


def _scan_minimal_masks(graph: Graph) -> List[int]:
    table = zfs_table(graph)
    found = [mask for mask in range(1 << graph.order) if _is_minimal_mask(table, mask)]
    return sorted(found, key=order_key)


def _fort_minimal_masks(graph: Graph) -> List[int]:
    _check_size(graph)
    forts = enumerate_forts(graph, minimal_only=True)
    return minimal_transversals(forts.masks)


def _resolve_route(graph: Graph, route: str) -> str:
    if route not in ROUTES:
        raise ZforceError(f"unknown route {route!r}; expected one of {', '.join(ROUTES)}")
    if route == "auto":
        return "both" if graph.order <= CROSS_CHECK_ORDER else "scan"
    return route


def minimal_masks(graph: Graph, route: str = "auto") -> List[int]:
    """Masks of all minimal zero forcing sets, by size then lexicographically"""
    route = _resolve_route(graph, route)
    if route == "forts":
        return _fort_minimal_masks(graph)
    scanned = _scan_minimal_masks(graph)
    if route == "both":
        transversals = _fort_minimal_masks(graph)
        if transversals != scanned:
            raise ZforceError(
                f"subset scan and fort transversals disagree on {graph!r}: "
                f"{len(scanned)} vs {len(transversals)} minimal sets"
            )
    return scanned


def enumerate_minimal_zfs(graph: Graph, route: str = "auto") -> List[VertexSet]:
    return [VertexSet.from_mask(m) for m in minimal_masks(graph, route)]


def max_minimal_zfs(graph: Graph, route: str = "auto") -> Tuple[int, VertexSet]:
    """Z̄(G) with the lexicographically least minimal zero forcing set of that size"""
    masks = minimal_masks(graph, route)
    zbar = max(m.bit_count() for m in masks)
    witness = next(m for m in masks if m.bit_count() == zbar)
    return zbar, VertexSet.from_mask(witness)


def count_minimal_zfs(graph: Graph) -> int:
    """Product of per-component counts; isolated vertices contribute 1"""
    counts = []
    for block in components(graph):
        if len(block) == 1:
            counts.append(1)
        else:
            counts.append(len(_scan_minimal_masks(graph.induced_subgraph(block))))
    return prod(counts)


def minimal_zfs_by_size(graph: Graph) -> Dict[int, int]:
    histogram: Dict[int, int] = {}
    for mask in minimal_masks(graph, "scan"):
        histogram[mask.bit_count()] = histogram.get(mask.bit_count(), 0) + 1
    return histogram


def zbar_polynomial_bound(graph: Graph) -> int:
    """Number of nonempty subsets of size at most Z̄(G)

    Every minimal zero forcing set is one of them, so a bounded Z̄ gives
    polynomially many minimal zero forcing sets.
    """
    zbar, _ = max_minimal_zfs(graph, "scan")
    return sum(comb(graph.order, i) for i in range(1, zbar + 1))


def every_zfs_contains_minimum(graph: Graph) -> bool:
    """Literal check over all zero forcing sets, independent of Z̄"""
    table = zfs_table(graph)
    z, _ = zero_forcing_number(graph)
    total = 1 << graph.order
    contains = bytearray(total)
    for mask in range(total):
        if not table[mask]:
            continue
        if mask.bit_count() == z:
            contains[mask] = 1
        elif any(contains[mask & ~(1 << v)] for v in iter_bits(mask)):
            contains[mask] = 1
        else:
            return False
    return True


def in_every_minimal_zfs(graph: Graph, v: int) -> bool:
    if not 0 <= v < graph.order:
        raise GraphError(f"vertex {v} out of range for a graph of order {graph.order}")
    return all((mask >> v) & 1 for mask in minimal_masks(graph, "scan"))


def summarize(graph: Graph, route: str = "auto") -> ZfsSummary:
    z, witness_min = zero_forcing_number(graph)
    masks = minimal_masks(graph, route)
    zbar = max(m.bit_count() for m in masks)
    return ZfsSummary(
        z=z,
        zbar=zbar,
        minimal_count=len(masks),
        witness_min=witness_min,
        witness_max_minimal=VertexSet.from_mask(next(m for m in masks if m.bit_count() == zbar)),
    )


def z_equals_zbar(graph: Graph) -> bool:
    """Z(G) == Z̄(G)"""
    z, _ = zero_forcing_number(graph)
    zbar, _ = max_minimal_zfs(graph, "scan")
    return z == zbar


__all__ = [
    'ROUTES',
    'ZfsSummary',
    'count_minimal_zfs',
    'enumerate_minimal_zfs',
    'every_zfs_contains_minimum',
    'in_every_minimal_zfs',
    'is_minimal_zfs',
    'z_equals_zbar',
    'max_minimal_zfs',
    'minimal_masks',
    'minimal_zfs_by_size',
    'shrink_to_minimal',
    'summarize',
    'zbar_polynomial_bound',
    'zero_forcing_lower_bound',
    'zero_forcing_number',
    'zfs_table',
]
