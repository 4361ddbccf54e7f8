"""zforce forcing - the zero forcing color change rule

A blue vertex with exactly one white neighbor forces that neighbor blue.
closure() records a chronological list of forces; the deterministic schedule
always fires the lowest-id eligible source.
"""
import logging
import random
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import NotZeroForcingError
from .graph import Graph, VertexLike, VertexSet, iter_bits

logger = logging.getLogger(__name__)


class ForceStep(NamedTuple):
    source: int
    target: int

    def __repr__(self) -> str:
        return f"({self.source}->{self.target})"


@dataclass(frozen=True)
class ClosureResult:
    """cl(S) with the forces that produced it and their terminus"""

    closure: VertexSet
    forces: Tuple[ForceStep, ...]
    terminus: VertexSet

    @property
    def sources(self) -> VertexSet:
        return VertexSet(step.source for step in self.forces)


def run_forces(adjacency: Sequence[int], start: int, rng: Optional[random.Random] = None) -> Tuple[int, List[ForceStep]]:
    """Apply the color change rule from the start mask until it stalls

    White-neighbor counts are maintained incrementally, so each force costs
    O(deg(target)). Without rng the lowest-id eligible source fires; with rng
    the source is drawn uniformly among eligible ones.
    """
    blue = start
    white_count = [(a & ~blue).bit_count() for a in adjacency]
    candidates = 0
    for v in iter_bits(blue):
        if white_count[v] == 1:
            candidates |= 1 << v
    forces: List[ForceStep] = []
    while candidates:
        if rng is None:
            source = (candidates & -candidates).bit_length() - 1
        else:
            source = rng.choice(list(iter_bits(candidates)))
        target_bit = adjacency[source] & ~blue
        target = target_bit.bit_length() - 1
        blue |= target_bit
        forces.append(ForceStep(source, target))
        for w in iter_bits(adjacency[target]):
            white_count[w] -= 1
            if white_count[w] == 0:
                candidates &= ~(1 << w)
            elif white_count[w] == 1 and (blue >> w) & 1:
                candidates |= 1 << w
        if white_count[target] == 1:
            candidates |= target_bit
    return blue, forces


def closure_mask(adjacency: Sequence[int], start: int) -> int:
    """cl(S) as a mask, without recording forces

    Same white-neighbor bookkeeping as run_forces; the subset scans in
    minimal.py spend most of their time here.
    """
    blue = start
    white_count = [(a & ~blue).bit_count() for a in adjacency]
    candidates = 0
    for v in iter_bits(blue):
        if white_count[v] == 1:
            candidates |= 1 << v
    while candidates:
        low = candidates & -candidates
        candidates ^= low
        target_bit = adjacency[low.bit_length() - 1] & ~blue
        blue |= target_bit
        target = target_bit.bit_length() - 1
        for w in iter_bits(adjacency[target]):
            white_count[w] -= 1
            if white_count[w] == 0:
                candidates &= ~(1 << w)
            elif white_count[w] == 1 and (blue >> w) & 1:
                candidates |= 1 << w
        if white_count[target] == 1:
            candidates |= target_bit
    return blue


def closure(graph: Graph, s: VertexLike, rng: Optional[random.Random] = None) -> ClosureResult:
    """cl(S), a chronological list of forces, and the terminus of those forces"""
    start = graph.vertex_set(s).mask
    blue, forces = run_forces(graph.adjacency, start, rng)
    sources = 0
    for step in forces:
        sources |= 1 << step.source
    return ClosureResult(
        closure=VertexSet.from_mask(blue),
        forces=tuple(forces),
        terminus=VertexSet.from_mask(blue & ~sources),
    )


def is_zero_forcing_set(graph: Graph, s: VertexLike) -> bool:
    return closure_mask(graph.adjacency, graph.vertex_set(s).mask) == graph.full_mask


def is_zero_forcing_mask(graph: Graph, mask: int) -> bool:
    """Unchecked fast path for enumeration loops"""
    return closure_mask(graph.adjacency, mask) == graph.full_mask


def force_terminus(blue: VertexLike, forces: Iterable[ForceStep]) -> VertexSet:
    """Vertices of the colored set that perform none of the given forces"""
    result = VertexSet(blue)
    for step in forces:
        result = result.discard(step.source)
    return result


def reversal(graph: Graph, s: VertexLike) -> VertexSet:
    """Terminus of the deterministic force set of S"""
    return closure(graph, s).terminus


def validate_forces(graph: Graph, s: VertexLike, forces: Sequence[ForceStep]) -> bool:
    """Check that forces can be performed in order starting from S"""
    blue = graph.vertex_set(s).mask
    for source, target in forces:
        if not (blue >> source) & 1:
            return False
        white = graph.adjacency[source] & ~blue
        if white != 1 << target:
            return False
        blue |= white
    return True


def redirected_reversal(graph: Graph, s: VertexLike, v: int) -> VertexSet:
    """A same-size zero forcing set avoiding v, built from a terminus

    If v performs a force in the chronological list of S, the terminus
    already avoids v. Otherwise the force that colors the last white neighbor
    of v is handed to v before taking the terminus.
    """
    start = graph.vertex_set(s)
    if v not in start:
        raise NotZeroForcingError(f"vertex {v} is not in {start}")
    result = closure(graph, start)
    if result.closure.mask != graph.full_mask:
        raise NotZeroForcingError(f"{start} is not a zero forcing set")
    forces = list(result.forces)
    if any(step.source == v for step in forces):
        return result.terminus
    neighborhood = graph.adjacency[v]
    last = None
    for i, step in enumerate(forces):
        if (neighborhood >> step.target) & 1:
            last = i
    if last is None:
        raise NotZeroForcingError(f"vertex {v} has no neighbor outside {start}")
    forces[last] = ForceStep(v, forces[last].target)
    return force_terminus(graph.vertices(), forces)


def propagation_steps(graph: Graph, s: VertexLike) -> int:
    """Rounds of simultaneous forcing until the process stalls"""
    blue = graph.vertex_set(s).mask
    rounds = 0
    while True:
        gained = 0
        for v in iter_bits(blue):
            white = graph.adjacency[v] & ~blue
            if white and not white & (white - 1):
                gained |= white
        if not gained:
            return rounds
        blue |= gained
        rounds += 1


__all__ = [
    'ClosureResult',
    'ForceStep',
    'closure',
    'closure_mask',
    'force_terminus',
    'is_zero_forcing_mask',
    'is_zero_forcing_set',
    'propagation_steps',
    'redirected_reversal',
    'reversal',
    'run_forces',
    'validate_forces',
]
