"""zforce forts - fort recognition, enumeration and fort covers

A fort is a nonempty vertex set F such that no vertex outside F has exactly
one neighbor in F. Every zero forcing set meets every fort, and the minimal
zero forcing sets are exactly the minimal covers of the fort collection.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from joblib import Parallel, delayed

from .config import get_limits
from .errors import CapExceededError, GraphError, NotZeroForcingError
from .forcing import closure_mask
from .graph import Graph, VertexLike, VertexSet, iter_bits, order_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fort:
    members: VertexSet

    def __post_init__(self):
        if not self.members:
            raise GraphError("a fort must be nonempty")

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class FortCollection:
    """Forts of one graph, ordered by size then lexicographically"""

    order: int
    forts: Tuple[Fort, ...]
    minimal_only: bool

    def __iter__(self) -> Iterator[Fort]:
        return iter(self.forts)

    def __len__(self) -> int:
        return len(self.forts)

    def __getitem__(self, i: int) -> Fort:
        return self.forts[i]

    @property
    def masks(self) -> Tuple[int, ...]:
        return tuple(f.members.mask for f in self.forts)

    @classmethod
    def from_masks(cls, order: int, masks: Sequence[int], minimal_only: bool) -> "FortCollection":
        ordered = sorted(masks, key=order_key)
        return cls(order, tuple(Fort(VertexSet.from_mask(m)) for m in ordered), minimal_only)


def is_fort_mask(adjacency: Sequence[int], mask: int) -> bool:
    if not mask:
        return False
    outside = ((1 << len(adjacency)) - 1) & ~mask
    for v in iter_bits(outside):
        inside = adjacency[v] & mask
        if inside and not inside & (inside - 1):
            return False
    return True


def is_fort(graph: Graph, f: VertexLike) -> bool:
    return is_fort_mask(graph.adjacency, graph.vertex_set(f).mask)


def _scan_forts(adjacency: Tuple[int, ...], lo: int, hi: int) -> List[int]:
    return [mask for mask in range(lo, hi) if is_fort_mask(adjacency, mask)]


def minimal_masks(masks: Sequence[int]) -> List[int]:
    """Inclusion-minimal members of a mask family, in size-then-lexicographic order"""
    kept: List[int] = []
    for mask in sorted(set(masks), key=order_key):
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    return kept


def enumerate_forts(graph: Graph, minimal_only: bool = False, workers: int = 1) -> FortCollection:
    """All forts, or all inclusion-minimal forts, by scanning nonempty subsets

    The subset range is split into disjoint chunks when workers > 1; the
    merged result is sorted, so the output does not depend on worker count.
    """
    n = graph.order
    cap = get_limits().fort_enumeration_cap
    if n > cap:
        raise CapExceededError("fort enumeration order", n, cap)
    total = 1 << n
    if workers > 1 and n >= 12:
        step = -(-total // workers)
        chunks = Parallel(n_jobs=workers)(
            delayed(_scan_forts)(graph.adjacency, lo, min(lo + step, total))
            for lo in range(1, total, step)
        )
        masks = [m for chunk in chunks for m in chunk]
    else:
        masks = _scan_forts(graph.adjacency, 1, total)
    logger.debug("scanned %d subsets of a graph of order %d, %d forts", total - 1, n, len(masks))
    if minimal_only:
        masks = minimal_masks(masks)
    return FortCollection.from_masks(n, masks, minimal_only)


def fort_from_failed_closure(graph: Graph, s: VertexLike) -> Fort:
    """V minus cl(S), which is a fort disjoint from S whenever S does not force"""
    mask = graph.vertex_set(s).mask
    blue = closure_mask(graph.adjacency, mask)
    if blue == graph.full_mask:
        raise NotZeroForcingError(f"{VertexSet.from_mask(mask)} is a zero forcing set; no fort avoids it")
    return Fort(VertexSet.from_mask(graph.full_mask & ~blue))


def is_cover(s: VertexLike, forts: FortCollection) -> bool:
    """True iff S meets every listed fort"""
    mask = VertexSet(s).mask
    return all(f & mask for f in forts.masks)


def is_minimal_cover(s: VertexLike, forts: FortCollection) -> bool:
    """A cover from which no single vertex can be dropped

    Covering is superset-monotone, so single deletions decide minimality.
    """
    mask = VertexSet(s).mask
    fort_masks = forts.masks
    if not all(f & mask for f in fort_masks):
        return False
    for v in iter_bits(mask):
        smaller = mask & ~(1 << v)
        if all(f & smaller for f in fort_masks):
            return False
    return True


def disjoint_fort_packing(forts: FortCollection) -> List[Fort]:
    """Greedy family of pairwise disjoint forts, smallest first

    Its size is a lower bound on the zero forcing number.
    """
    used = 0
    packing = []
    for fort in forts:
        if not fort.members.mask & used:
            packing.append(fort)
            used |= fort.members.mask
    return packing


def minimal_transversals(fort_masks: Sequence[int]) -> List[int]:
    """Minimal hitting sets of a fort family, as masks in size-then-lexicographic order

    Branches on the least uncovered fort (in the given order) and tries each
    of its vertices; generated sets that are not minimal covers are dropped.
    """
    forts = list(fort_masks)
    found = set()

    def branch(chosen: int, start: int) -> None:
        for i in range(start, len(forts)):
            if not forts[i] & chosen:
                for v in iter_bits(forts[i]):
                    branch(chosen | (1 << v), i + 1)
                return
        found.add(chosen)

    if forts:
        branch(0, 0)
    else:
        found.add(0)
    result = []
    for mask in found:
        if all(any(f & (mask & ~(1 << v)) == 0 for f in forts) for v in iter_bits(mask)):
            result.append(mask)
    return sorted(result, key=order_key)


__all__ = [
    'Fort',
    'FortCollection',
    'disjoint_fort_packing',
    'enumerate_forts',
    'fort_from_failed_closure',
    'is_cover',
    'is_fort',
    'is_fort_mask',
    'is_minimal_cover',
    'minimal_masks',
    'minimal_transversals',
]
