"""zforce claims - verification drivers for the structural results on minimal zero forcing sets

Each driver is registered with @claim and receives an Evidence collector
followed by its own keyword parameters. verify_claim() binds parameters,
times the run and packs the outcome into a VerificationReport.

Exhaustive drivers go through sweep(), which walks every graph encoding
order by order in fixed-size chunks of encodings. Chunks can run on joblib
workers; results are merged in encoding order so a report never depends on
the worker count.
"""
import inspect
import itertools
import logging
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from joblib import Parallel, delayed
from tqdm import tqdm

from .config import get_limits
from .constructions import (
    all_spider_witness_sets,
    component_reversal_sets,
    counterexample_graph,
    counterexample_witness,
    five_leg_spider,
    gap_family,
    gap_witness_sets,
    graph_codes,
    graph_from_code,
    is_clique_with_isolates,
    leg_subsets,
    prism_witness_sets,
    random_graph,
    twin_spider,
    universal_chain_step,
)
from .errors import CapExceededError, UnknownClaimError, UsageError
from .forcing import is_zero_forcing_set
from .forts import enumerate_forts, is_minimal_cover
from .graph import (
    Graph,
    VertexSet,
    add_universal_vertex,
    complete,
    corona_clique,
    cycle,
    cycle_union,
    delete_vertex,
    disjoint_union,
    empty,
    generate,
    join_clique_cycle,
    join_clique_empty,
    prism,
)
from .minimal import (
    count_minimal_zfs,
    every_zfs_contains_minimum,
    in_every_minimal_zfs,
    is_minimal_zfs,
    max_minimal_zfs,
    minimal_masks,
    zbar_polynomial_bound,
    zero_forcing_number,
)

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
# encodings per sweep task; fixed so reports do not depend on worker count
SWEEP_CHUNK = 512

ParamValue = Union[int, str, bool, range]


@dataclass
class VerificationReport:
    claim: str
    params: Dict[str, Any]
    verdict: str
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    counterexample: Optional[Dict[str, Any]] = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self, deterministic: bool = False) -> Dict[str, Any]:
        """Report schema {claim, params, verdict, witnesses, counterexample, elapsed}"""
        return {
            "claim": self.claim,
            "params": dict(self.params),
            "verdict": self.verdict,
            "witnesses": list(self.witnesses),
            "counterexample": self.counterexample,
            "elapsed": None if deterministic else round(self.elapsed, 6),
        }


class Evidence:
    """Witnesses and the first counterexample gathered by a driver"""

    def __init__(self):
        self.witnesses: List[Dict[str, Any]] = []
        self.counterexample: Optional[Dict[str, Any]] = None

    @property
    def failed(self) -> bool:
        return self.counterexample is not None

    def witness(self, **item: Any) -> None:
        self.witnesses.append(_jsonable(item))

    def expect(self, condition: bool, **item: Any) -> bool:
        """Record item as the counterexample unless condition holds; the first failure wins"""
        if not condition and self.counterexample is None:
            self.counterexample = _jsonable(item)
            logger.info("counterexample: %s", self.counterexample)
        return condition


def _jsonable(value: Any) -> Any:
    if isinstance(value, Graph):
        from .formats import write_graph6

        return write_graph6(value)
    if isinstance(value, VertexSet):
        return list(value)
    if isinstance(value, range):
        return format_range(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    return value


# Parameters

def parse_range(value: ParamValue) -> range:
    """Inclusive range from an int, "a..b" or "a"; a range passes through"""
    if isinstance(value, range):
        return value
    if isinstance(value, bool):
        raise UsageError(f"expected an integer or a range, got {value!r}")
    if isinstance(value, int):
        return range(value, value + 1)
    text = str(value).strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        single = int(text)
    except ValueError:
        raise UsageError(f"expected an integer or a range like 5..10, got {value!r}") from None
    return range(single, single + 1)


def format_range(r: range) -> str:
    if len(r) == 1:
        return str(r.start)
    return f"{r.start}..{r.stop - 1}"


def _as_int(name: str, value: ParamValue) -> int:
    if isinstance(value, bool):
        raise UsageError(f"parameter {name} expects an integer, got {value!r}")
    try:
        return int(value)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        raise UsageError(f"parameter {name} expects an integer, got {value!r}") from None


def _as_bool(name: str, value: ParamValue) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"parameter {name} expects a boolean, got {value!r}")


def _coerce(name: str, default: Any, value: ParamValue) -> Any:
    """Coerce a parameter to the kind of its default"""
    if isinstance(default, bool):
        return _as_bool(name, value)
    if isinstance(default, range) or (isinstance(default, str) and ".." in default):
        return parse_range(value)
    if isinstance(default, int) or default is None:
        return None if value is None else _as_int(name, value)
    return value


# Registry

Driver = Callable[..., None]
_CLAIMS: Dict[str, Driver] = {}


def claim(claim_id: str):
    """Register a driver; its first parameter receives the Evidence collector"""

    def register(func: Driver) -> Driver:
        params = list(inspect.signature(func).parameters.values())
        if not params or params[0].name != "evidence":
            raise TypeError(f"claim driver {func.__name__} must take evidence as its first parameter")
        for p in params[1:]:
            if p.default is inspect.Parameter.empty:
                raise TypeError(f"claim driver {func.__name__}: parameter {p.name} needs a default")
        _CLAIMS[claim_id] = func
        return func

    return register


def claim_ids() -> List[str]:
    return sorted(_CLAIMS)


def claim_parameters(claim_id: str) -> Dict[str, Any]:
    """Default parameters of a driver"""
    driver = _lookup(claim_id)
    params = list(inspect.signature(driver).parameters.values())[1:]
    return {p.name: p.default for p in params}


def _lookup(claim_id: str) -> Driver:
    try:
        return _CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaimError(f"unknown claim {claim_id!r}; known: {', '.join(claim_ids())}") from None


def verify_claim(claim_id: str, **params: ParamValue) -> VerificationReport:
    """Run one driver and report pass with witnesses, or fail with a counterexample"""
    driver = _lookup(claim_id)
    defaults = claim_parameters(claim_id)
    unknown = sorted(set(params) - set(defaults))
    if unknown:
        raise UsageError(
            f"claim {claim_id!r} does not take {', '.join(unknown)}; "
            f"parameters: {', '.join(defaults) or 'none'}"
        )
    bound = {name: _coerce(name, default, params.get(name, default)) for name, default in defaults.items()}
    logger.info("verifying %s with %s", claim_id, _jsonable(bound))
    evidence = Evidence()
    start = time.perf_counter()
    driver(evidence, **bound)
    elapsed = time.perf_counter() - start
    verdict = FAIL if evidence.failed else PASS
    logger.info("%s: %s in %.3fs", claim_id, verdict, elapsed)
    return VerificationReport(
        claim=claim_id,
        params=_jsonable(bound),
        verdict=verdict,
        witnesses=evidence.witnesses,
        counterexample=evidence.counterexample,
        elapsed=elapsed,
    )


# Sweeps

Check = Callable[[Graph], Tuple[bool, Optional[str]]]


@dataclass
class SweepResult:
    """Graphs checked, graphs on which the checked property held, and the first failure"""

    checked: int = 0
    matched: int = 0
    failure: Optional[Dict[str, Any]] = None


def sweep_orders(max_n: int, min_n: int = 1) -> range:
    cap = get_limits().sweep_max_order
    if max_n > cap:
        raise CapExceededError("sweep order", max_n, cap)
    return range(min_n, max_n + 1)


def _sweep_chunk(check: Check, n: int, codes: Sequence[int]) -> Tuple[int, int, Optional[Tuple[int, str]]]:
    checked = matched = 0
    for code in codes:
        checked += 1
        hit, failure = check(graph_from_code(n, code))
        if failure is not None:
            return checked, matched, (code, failure)
        matched += hit
    return checked, matched, None


def sweep(
    check: Check,
    orders: Sequence[int],
    up_to_iso: bool = False,
    workers: Optional[int] = None,
    progress: Optional[bool] = None,
) -> SweepResult:
    """Apply check to every graph of the given orders and stop at the first failing order

    check returns (matched, failure message or None). Within an order every
    chunk runs; the earliest failing encoding is reported.
    """
    workers = get_limits().workers if workers is None else workers
    progress = get_limits().progress if progress is None else progress
    result = SweepResult()
    for n in orders:
        codes = graph_codes(n, up_to_iso)
        chunks = [codes[i:i + SWEEP_CHUNK] for i in range(0, len(codes), SWEEP_CHUNK)]
        jobs = [delayed(_sweep_chunk)(check, n, chunk) for chunk in chunks]
        if workers > 1 and len(jobs) > 1:
            outcomes = Parallel(n_jobs=workers)(tqdm(jobs, desc=f"order {n}", disable=not progress))
        else:
            outcomes = [_sweep_chunk(check, n, chunk) for chunk in tqdm(chunks, desc=f"order {n}", disable=not progress)]
        for checked, matched, failure in outcomes:
            result.checked += checked
            result.matched += matched
            if failure is not None and result.failure is None:
                code, message = failure
                g = graph_from_code(n, code)
                result.failure = _jsonable({"order": n, "code": code, "graph6": g, "reason": message})
        logger.debug("order %d: %d graphs, %d matched", n, result.checked, result.matched)
        if result.failure is not None:
            break
    return result


def _sweep_claim(evidence: Evidence, check: Check, max_n: int, up_to_iso: bool, min_n: int = 1) -> None:
    outcome = sweep(check, sweep_orders(max_n, min_n), up_to_iso)
    evidence.witness(orders=format_range(range(min_n, max_n + 1)), checked=outcome.checked, matched=outcome.matched)
    if outcome.failure is not None:
        evidence.expect(False, **outcome.failure)


# Sweep checks; module level so joblib can pickle them

def check_zbar_extremal(g: Graph) -> Tuple[bool, Optional[str]]:
    zbar, witness = max_minimal_zfs(g, "scan")
    shaped = is_clique_with_isolates(g)
    if (zbar == g.order - 1) != shaped:
        return shaped, f"Z̄ = {zbar} (witness {list(witness)}), clique plus isolates = {shaped}"
    return shaped, None


def check_zbar_equals_z(g: Graph) -> Tuple[bool, Optional[str]]:
    z, _ = zero_forcing_number(g)
    zbar, _ = max_minimal_zfs(g, "scan")
    contains = every_zfs_contains_minimum(g)
    if (z == zbar) != contains:
        return z == zbar, f"Z = {z}, Z̄ = {zbar}, every ZFS contains a minimum = {contains}"
    return z == zbar, None


def check_delete_universal(g: Graph) -> Tuple[bool, Optional[str]]:
    if g.order < 2:
        return False, None
    universal = list(g.universal_vertices())
    if not universal:
        return False, None
    z, _ = zero_forcing_number(g)
    zbar, _ = max_minimal_zfs(g, "scan")
    if z != zbar:
        return False, None
    for v in universal:
        h = delete_vertex(g, v)
        hz, _ = zero_forcing_number(h)
        hzbar, _ = max_minimal_zfs(h, "scan")
        if hz != hzbar:
            return True, f"deleting universal vertex {v}: Z = {hz}, Z̄ = {hzbar}"
    return True, None


def check_minimal_cover(g: Graph) -> Tuple[bool, Optional[str]]:
    forts = enumerate_forts(g, minimal_only=True)
    minimal = 0
    for mask in range(1 << g.order):
        s = VertexSet.from_mask(mask)
        by_forcing = is_minimal_zfs(g, s)
        if by_forcing != is_minimal_cover(s, forts):
            return False, f"{list(s)}: minimal zero forcing = {by_forcing}, minimal fort cover = {not by_forcing}"
        minimal += by_forcing
    return minimal > 0, None


def check_isolates(g: Graph) -> Tuple[bool, Optional[str]]:
    isolated = g.isolates()
    for v in range(g.order):
        if in_every_minimal_zfs(g, v) != (v in isolated):
            return bool(isolated), f"vertex {v}: degree {g.degree(v)}, in every minimal ZFS = {v not in isolated}"
    return bool(isolated), None


def check_polynomial_bound(g: Graph) -> Tuple[bool, Optional[str]]:
    count = len(minimal_masks(g, "scan"))
    bound = zbar_polynomial_bound(g)
    if count > bound:
        return False, f"{count} minimal sets exceed the bound {bound}"
    return count == bound, None


def check_universal_arithmetic(g: Graph) -> Tuple[bool, Optional[str]]:
    isolates = len(g.isolates())
    z, _ = zero_forcing_number(g)
    zh, _ = zero_forcing_number(add_universal_vertex(g))
    expected = z + 1 if isolates == 0 else z if isolates == 1 else z - 1
    if zh != expected:
        return False, f"{isolates} isolates, Z(G) = {z}, Z(G ∨ K1) = {zh}, expected {expected}"
    return isolates == 0, None


def check_routes(g: Graph) -> Tuple[bool, Optional[str]]:
    scanned = minimal_masks(g, "scan")
    transversals = minimal_masks(g, "forts")
    if scanned != transversals:
        return False, f"subset scan found {len(scanned)} minimal sets, fort transversals {len(transversals)}"
    return True, None


# Drivers

def _summary(g: Graph) -> Tuple[int, int]:
    z, _ = zero_forcing_number(g)
    zbar, _ = max_minimal_zfs(g, "scan")
    return z, zbar


@claim("zbar_extremal")
def zbar_extremal(evidence: Evidence, max_n: int = 6, up_to_iso: bool = False) -> None:
    """Z̄(G) = n - 1 iff G is K_m plus isolated vertices, m >= 2"""
    _sweep_claim(evidence, check_zbar_extremal, max_n, up_to_iso)


@claim("zbar_equals_z_iff")
def zbar_equals_z_iff(evidence: Evidence, max_n: int = 6, up_to_iso: bool = False) -> None:
    """Z̄(G) = Z(G) iff every zero forcing set contains a minimum one"""
    _sweep_claim(evidence, check_zbar_equals_z, max_n, up_to_iso)


@claim("corollary_families")
def corollary_families(
    evidence: Evidence,
    cycle: str = "3..10",
    empty: str = "1..8",
    star: str = "3..10",
    wheel: str = "4..10",
    complete: str = "2..10",
) -> None:
    ranges = {"cycle": cycle, "empty": empty, "star": star, "wheel": wheel, "complete": complete}
    for name, orders in ranges.items():
        for n in orders:  # type: ignore[union-attr]
            g = generate(name, n)
            z, zbar = _summary(g)
            if evidence.expect(z == zbar, family=name, n=n, graph6=g, z=z, zbar=zbar):
                evidence.witness(family=name, n=n, z=z)


@claim("join_families")
def join_families(evidence: Evidence, a: str = "3..5", b: str = "3..5") -> None:
    """Z = Z̄ for K_a ∨ K̄_b, and Z = Z̄ = a + 2 for K_a ∨ C_b"""
    for x, y in itertools.product(a, b):  # type: ignore[arg-type]
        g = join_clique_empty(x, y)
        z, zbar = _summary(g)
        evidence.expect(z == zbar, graph="K_a ∨ K̄_b", a=x, b=y, graph6=g, z=z, zbar=zbar)
        h = join_clique_cycle(x, y)
        hz, hzbar = _summary(h)
        evidence.expect(hz == hzbar == x + 2, graph="K_a ∨ C_b", a=x, b=y, graph6=h, z=hz, zbar=hzbar)
        evidence.witness(a=x, b=y, z_empty_side=z, z_cycle_side=hz)


@claim("add_universal_gap")
def add_universal_gap(evidence: Evidence, n: str = "7..10") -> None:
    """Z(G_n) = Z̄(G_n) = 3 while Z̄(G_n ∨ K1) >= 5 > 4 = Z(G_n ∨ K1)"""
    witness = counterexample_witness()
    for order in n:  # type: ignore[union-attr]
        g = counterexample_graph(order, validate=False)
        h = add_universal_vertex(g)
        z, zbar = _summary(g)
        zh, zbarh = _summary(h)
        ok = all([
            evidence.expect(z == 3 and zbar == 3, n=order, graph6=g, z=z, zbar=zbar),
            evidence.expect(is_zero_forcing_set(g, [0, 1, 2]), n=order, graph6=g, reason="{0,1,2} does not force"),
            evidence.expect(zh == 4 and zbarh >= 5, n=order, graph6=h, z=zh, zbar=zbarh),
            evidence.expect(is_minimal_zfs(h, witness), n=order, graph6=h, set=witness, reason="witness not minimal"),
        ])
        if ok:
            evidence.witness(n=order, z=z, zbar=zbar, z_join=zh, zbar_join=zbarh, minimal_set=witness)


@claim("delete_universal_preserves")
def delete_universal_preserves(evidence: Evidence, max_n: int = 6, up_to_iso: bool = False) -> None:
    """Z̄ = Z survives deleting a universal vertex"""
    _sweep_claim(evidence, check_delete_universal, max_n, up_to_iso)


@claim("minimal_cover_equiv")
def minimal_cover_equiv(evidence: Evidence, max_n: int = 5, up_to_iso: bool = False) -> None:
    """S is a minimal zero forcing set iff S is a minimal cover of the minimal forts"""
    _sweep_claim(evidence, check_minimal_cover, max_n, up_to_iso)


@claim("isolate_iff")
def isolate_iff(evidence: Evidence, max_n: int = 5, up_to_iso: bool = False) -> None:
    """v lies in every minimal zero forcing set iff v is isolated"""
    _sweep_claim(evidence, check_isolates, max_n, up_to_iso)


def _connected_graphs(max_order: int, up_to_iso: bool) -> List[Graph]:
    graphs = []
    for n in range(1, max_order + 1):
        for code in graph_codes(n, up_to_iso):
            g = graph_from_code(n, code)
            if g.is_connected():
                graphs.append(g)
    return graphs


@claim("component_product")
def component_product(evidence: Evidence, max_order: int = 4, up_to_iso: bool = True) -> None:
    """Minimal zero forcing sets of G1 ∪ G2 number count(G1) * count(G2)"""
    graphs = _connected_graphs(max_order, up_to_iso)
    counts = [len(minimal_masks(g, "scan")) for g in graphs]
    pairs = 0
    for (g1, c1), (g2, c2) in itertools.product(zip(graphs, counts), repeat=2):
        union = disjoint_union(g1, g2)
        total = len(minimal_masks(union, "scan"))
        pairs += 1
        if not evidence.expect(total == c1 * c2, graph6=union, left=g1, right=g2, count=total, product=c1 * c2):
            break
    evidence.witness(connected_graphs=len(graphs), pairs=pairs)


@claim("reversal_2k")
def reversal_2k(evidence: Evidence, k: int = 3, m: int = 2) -> None:
    """k copies of K_m have at least 2^k minimum zero forcing sets from per-component reversals"""
    if k < 1 or m < 2:
        raise UsageError(f"reversal_2k needs k >= 1 and m >= 2, got k={k}, m={m}")
    g = complete(m)
    for _ in range(k - 1):
        g = disjoint_union(g, complete(m))
    z, _ = zero_forcing_number(g)
    sets = component_reversal_sets(g)
    for s in sets:
        evidence.expect(len(s) == z and is_zero_forcing_set(g, s), graph6=g, set=s, z=z)
    distinct = set(sets)
    evidence.expect(len(distinct) >= 2 ** k, graph6=g, distinct=len(distinct), required=2 ** k)
    evidence.witness(graph6=g, z=z, distinct=len(distinct), sets=sorted(distinct, key=VertexSet.sort_key))


@claim("spider_exponential")
def spider_exponential(evidence: Evidence, k: int = 3, full_count: bool = True) -> None:
    """The sets S(I, j) of S_{5,...,5} are minimal; at least 2^(k-1) of them per excluded leg"""
    g = five_leg_spider(k)
    families = all_spider_witness_sets(k)
    seen = set()
    for j, sets in families.items():
        for s in sets:
            evidence.expect(is_minimal_zfs(g, s), k=k, j=j, set=s, reason="not a minimal zero forcing set")
        evidence.expect(len(sets) >= 2 ** (k - 1), k=k, j=j, distinct=len(sets))
        seen.update(sets)
        evidence.witness(j=j, distinct=len(sets), example=sets[0])
    total = sum(len(sets) for sets in families.values())
    evidence.expect(len(seen) == total, k=k, reason=f"{total - len(seen)} sets repeat across excluded legs")
    if full_count:
        count = count_minimal_zfs(g)
        evidence.expect(count >= 2 ** (k - 1), k=k, count=count)
        evidence.witness(order=g.order, minimal_count=count)


@claim("spider_polynomial_twin")
def spider_polynomial_twin(evidence: Evidence, k: int = 3) -> None:
    """S_{1,...,1,4k+1} matches S_{5,...,5} in order, leaves and branchpoints but has fewer minimal sets"""
    g = five_leg_spider(k)
    twin = twin_spider(k)
    shape = (g.order, len(g.leaves()), len(g.branchpoints()))
    twin_shape = (twin.order, len(twin.leaves()), len(twin.branchpoints()))
    evidence.expect(shape == twin_shape, spider=shape, twin=twin_shape, reason="shapes differ")
    count = count_minimal_zfs(g)
    twin_count = count_minimal_zfs(twin)
    evidence.expect(twin_count < count, spider_count=count, twin_count=twin_count, graph6=twin)
    evidence.witness(order=g.order, leaves=shape[1], spider_count=count, twin_count=twin_count)


@claim("prism_exponential")
def prism_exponential(evidence: Evidence, m: str = "2..3") -> None:
    """C5 □ K_m has Z = 2m and 2^m distinct minimum sets S(I)"""
    for size in m:  # type: ignore[union-attr]
        g = prism(size)
        z, witness = zero_forcing_number(g)
        evidence.expect(z == 2 * size, m=size, graph6=g, z=z, witness=witness)
        sets = [prism_witness_sets(size, legs) for legs in leg_subsets(size)]
        for s in sets:
            evidence.expect(len(s) == z and is_zero_forcing_set(g, s), m=size, set=s, z=z)
        evidence.expect(len(set(sets)) == 2 ** size, m=size, distinct=len(set(sets)))
        evidence.witness(m=size, order=g.order, z=z, distinct=len(set(sets)))


@claim("corona_exponential")
def corona_exponential(evidence: Evidence, m: str = "2..7", complete_orders: str = "2..8") -> None:
    """Z̄ = n/2 allows 2^(m-1) minimal sets in K_m ∘ K1 but only n of them in K_n"""
    for size in m:  # type: ignore[union-attr]
        g = corona_clique(size)
        masks = minimal_masks(g, "scan")
        zbar = max(mask.bit_count() for mask in masks)
        ok = evidence.expect(zbar == size, m=size, graph6=g, zbar=zbar)
        ok &= evidence.expect(len(masks) >= 2 ** (size - 1), m=size, count=len(masks), required=2 ** (size - 1))
        if ok:
            evidence.witness(graph="K_m ∘ K1", m=size, order=g.order, zbar=zbar, minimal_count=len(masks))
    for n in complete_orders:  # type: ignore[union-attr]
        g = complete(n)
        count = count_minimal_zfs(g)
        if evidence.expect(count == n, graph="K_n", n=n, count=count):
            evidence.witness(graph="K_n", n=n, minimal_count=count)


@claim("cycle_count")
def cycle_count(evidence: Evidence, n: str = "5..12") -> None:
    """C_n has n minimal zero forcing sets and Z = Z̄ = 2"""
    for order in n:  # type: ignore[union-attr]
        g = cycle(order)
        count = count_minimal_zfs(g)
        z, zbar = _summary(g)
        if evidence.expect(count == order and z == zbar == 2, n=order, count=count, z=z, zbar=zbar):
            evidence.witness(n=order, count=count)


@claim("gap_n_minus_7")
def gap_n_minus_7(evidence: Evidence, n: str = "7..11") -> None:
    """(2K2) ∨ P_{n-4} has Z = 5 and Z̄ = n - 2"""
    for order in n:  # type: ignore[union-attr]
        g = gap_family(order, validate=False)
        z, zbar = _summary(g)
        evidence.expect(z == 5 and zbar == order - 2, n=order, graph6=g, z=z, zbar=zbar)
        largest, smallest = gap_witness_sets(order)
        for s in largest:
            evidence.expect(len(s) == order - 2 and is_minimal_zfs(g, s), n=order, set=s, reason="not minimal")
        for s in smallest:
            evidence.expect(len(s) == z and is_zero_forcing_set(g, s), n=order, set=s, reason="not minimum")
        evidence.witness(n=order, z=z, zbar=zbar, gap=zbar - z)


@claim("zbar_polynomial_bound")
def zbar_polynomial_bound_claim(evidence: Evidence, max_n: int = 5, up_to_iso: bool = False) -> None:
    """The number of minimal sets never exceeds the count of subsets of size at most Z̄"""
    _sweep_claim(evidence, check_polynomial_bound, max_n, up_to_iso)


@claim("disconnected_transitive")
def disconnected_transitive(evidence: Evidence, k: str = "1..3", m: str = "3..6") -> None:
    """k C3 has 3^k minimal sets while C_m ∪ C_m has only m^2"""
    for copies in k:  # type: ignore[union-attr]
        g = cycle_union(copies, 3)
        count = len(minimal_masks(g, "scan"))
        if evidence.expect(count == 3 ** copies, graph="k C3", k=copies, count=count):
            evidence.witness(graph="k C3", k=copies, count=count)
    for size in m:  # type: ignore[union-attr]
        g = cycle_union(2, size)
        count = len(minimal_masks(g, "scan"))
        if evidence.expect(count == size ** 2, graph="2 C_m", m=size, count=count):
            evidence.witness(graph="2 C_m", m=size, count=count)


@claim("universal_chain")
def universal_chain(evidence: Evidence, steps: int = 3, empty_orders: str = "2..3", cycle_orders: str = "4..5") -> None:
    """Adding universal vertices to K1, empty graphs and cycles keeps Z = Z̄ at every step"""
    starts = [("K1", complete(1))]
    starts += [(f"empty({n})", empty(n)) for n in empty_orders]  # type: ignore[union-attr]
    starts += [(f"cycle({n})", cycle(n)) for n in cycle_orders]  # type: ignore[union-attr]
    for name, g in starts:
        for step in range(steps):
            h = add_universal_vertex(g)
            if not evidence.expect(universal_chain_step(g, h), start=name, step=step + 1, graph6=h):
                break
            g = h
        else:
            evidence.witness(start=name, steps=steps, final_order=g.order)


@claim("add_universal_arithmetic")
def add_universal_arithmetic(evidence: Evidence, max_n: int = 5, up_to_iso: bool = False) -> None:
    """Z(G ∨ K1) is Z(G) + 1, Z(G) or Z(G) - 1 for zero, one, or several isolates"""
    _sweep_claim(evidence, check_universal_arithmetic, max_n, up_to_iso)


@claim("route_agreement")
def route_agreement(
    evidence: Evidence,
    max_n: int = 6,
    up_to_iso: bool = True,
    samples: int = 200,
    orders: str = "7..10",
    seed: Optional[int] = None,
) -> None:
    """Subset scan and fort transversals list the same minimal sets"""
    _sweep_claim(evidence, check_routes, max_n, up_to_iso)
    if evidence.failed:
        return
    rng = random.Random(get_limits().seed if seed is None else seed)
    choices = list(orders)  # type: ignore[arg-type]
    for i in range(samples):
        g = random_graph(rng.choice(choices), rng)
        _, failure = check_routes(g)
        if not evidence.expect(failure is None, sample=i, graph6=g, reason=failure):
            return
    evidence.witness(random_samples=samples, orders=format_range(range(choices[0], choices[-1] + 1)))


__all__ = [
    'Evidence',
    'FAIL',
    'PASS',
    'SweepResult',
    'VerificationReport',
    'check_delete_universal',
    'check_isolates',
    'check_minimal_cover',
    'check_polynomial_bound',
    'check_routes',
    'check_universal_arithmetic',
    'check_zbar_equals_z',
    'check_zbar_extremal',
    'claim',
    'claim_ids',
    'claim_parameters',
    'format_range',
    'parse_range',
    'sweep',
    'sweep_orders',
    'verify_claim',
]
