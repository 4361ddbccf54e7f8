"""zforce command line

    zforce znumber --gen cycle:7
    zforce zbar --gen complete_union_isolates:4,2
    zforce closure --input graphs.g6 --set 0,3,5
    zforce verify cycle_count --n 5..10 --format report
    zforce sweep zbar_extremal --max-n 6 --workers 4
"""
import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from . import claims
from .config import get_limits, override_limits
from .constructions import graph_codes, graph_from_code
from .errors import NotZeroForcingError, UsageError, ZforceError
from .forcing import closure, is_zero_forcing_set, propagation_steps, reversal
from .forts import enumerate_forts
from .formats import (
    format_set,
    parse_family_spec,
    parse_vertex_set,
    read_graphs,
    render_table,
    report_to_json,
    write_edge_list,
    write_graph6,
)
from .graph import Graph, VertexSet, family_names
from .minimal import (
    ROUTES,
    count_minimal_zfs,
    enumerate_minimal_zfs,
    is_minimal_zfs,
    max_minimal_zfs,
    minimal_masks,
    shrink_to_minimal,
    zero_forcing_number,
)

logger = logging.getLogger(__name__)

FORMATS = ("human", "report")

# sweep property -> (claim driver, per-graph check)
SWEEPS: Dict[str, Tuple[str, claims.Check]] = {
    "zbar_extremal": ("zbar_extremal", claims.check_zbar_extremal),
    "zbar_equals_z": ("zbar_equals_z_iff", claims.check_zbar_equals_z),
    "delete_universal": ("delete_universal_preserves", claims.check_delete_universal),
    "minimal_cover": ("minimal_cover_equiv", claims.check_minimal_cover),
    "isolates": ("isolate_iff", claims.check_isolates),
    "polynomial_bound": ("zbar_polynomial_bound", claims.check_polynomial_bound),
    "universal_arithmetic": ("add_universal_arithmetic", claims.check_universal_arithmetic),
    "routes": ("route_agreement", claims.check_routes),
}


@dataclass
class RunConfig:
    command: str
    gen: Optional[str] = None
    input: Optional[str] = None
    vertex_set: Optional[str] = None
    output_format: str = "human"
    max_n: Optional[int] = None
    cap: Optional[int] = None
    workers: Optional[int] = None
    seed: Optional[int] = None
    stream: bool = False
    deterministic: bool = False
    up_to_iso: bool = False
    long: bool = False
    route: str = "auto"
    minimal_only: bool = False
    edges: bool = False
    progress: bool = False
    target: Optional[str] = None
    params: Dict[str, str] = field(default_factory=dict)

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}, got {self.output_format!r}")
        if self.route not in ROUTES:
            raise UsageError(f"--route must be one of {', '.join(ROUTES)}, got {self.route!r}")
        if self.gen and self.input:
            raise UsageError("--gen and --input are mutually exclusive")
        return self


Emit = Callable[[str], None]
Command = Callable[[RunConfig, Emit], int]
COMMANDS: Dict[str, Command] = {}


def command(name: str):
    def register(func: Command) -> Command:
        COMMANDS[name] = func
        return func

    return register


# Graph commands

GraphCommand = Callable[[Graph, RunConfig], List[Tuple[str, Any]]]


def graph_command(name: str):
    """Register a per-graph command; its rows are rendered once per input graph"""

    def register(func: GraphCommand) -> GraphCommand:
        def run_on_graphs(config: RunConfig, emit: Emit) -> int:
            blocks = []
            for label, g in _load_graphs(config):
                rows = func(g, config)
                blocks.append((label, rows))
            emit(_render_blocks(blocks, config))
            return 0

        COMMANDS[name] = run_on_graphs
        return func

    return register


def _load_graphs(config: RunConfig) -> List[Tuple[str, Graph]]:
    if config.gen:
        return [(config.gen, parse_family_spec(config.gen))]
    if config.input:
        graphs = read_graphs(config.input)
        if not graphs:
            raise UsageError(f"{config.input} holds no graphs")
        return [(f"{config.input}:{i + 1}", g) for i, g in enumerate(graphs)]
    raise UsageError(f"{config.command} needs a graph: pass --gen family:params or --input path")


def _require_set(g: Graph, config: RunConfig) -> VertexSet:
    if config.vertex_set is None:
        raise UsageError(f"{config.command} needs --set")
    return g.vertex_set(parse_vertex_set(config.vertex_set))


def _plain(value: Any) -> Any:
    if isinstance(value, VertexSet):
        return list(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _human(value: Any) -> str:
    if isinstance(value, VertexSet):
        return format_set(value)
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return " ".join(_human(v) for v in value)
    return str(value)


def _render_blocks(blocks: Sequence[Tuple[str, List[Tuple[str, Any]]]], config: RunConfig) -> str:
    if config.output_format == "report":
        objects = [{"graph": label, **{key: _plain(v) for key, v in rows}} for label, rows in blocks]
        return json.dumps(objects[0] if len(objects) == 1 else objects, ensure_ascii=False, indent=2)
    parts = []
    for label, rows in blocks:
        table = render_table([(key, _human(v)) for key, v in rows])
        parts.append(table if len(blocks) == 1 else f"# {label}\n{table}")
    return "\n\n".join(parts)


@graph_command("closure")
def closure_command(g: Graph, config: RunConfig) -> List[Tuple[str, Any]]:
    s = _require_set(g, config)
    result = closure(g, s)
    return [
        ("closure", result.closure),
        ("forces", [repr(step) for step in result.forces]),
        ("zero forcing", result.closure.mask == g.full_mask),
        ("propagation steps", propagation_steps(g, s)),
    ]


@graph_command("check-zfs")
def check_zfs_command(g: Graph, config: RunConfig) -> List[Tuple[str, Any]]:
    s = _require_set(g, config)
    return [("zero forcing", is_zero_forcing_set(g, s)), ("minimal", is_minimal_zfs(g, s))]


@graph_command("reverse")
def reverse_command(g: Graph, config: RunConfig) -> List[Tuple[str, Any]]:
    s = _require_set(g, config)
    if not is_zero_forcing_set(g, s):
        raise NotZeroForcingError(f"{format_set(s)} is not a zero forcing set")
    return [("reversal", reversal(g, s))]


@graph_command("forts")
def forts_command(g: Graph, config: RunConfig) -> List[Tuple[str, Any]]:
    forts = enumerate_forts(g, minimal_only=config.minimal_only, workers=get_limits().workers)
    label = "minimal forts" if config.minimal_only else "forts"
    return [(label, len(forts))] + [(f"fort {i + 1}", f.members) for i, f in enumerate(forts)]


@graph_command("znumber")
def znumber_command(g: Graph, config: RunConfig) -> List[Tuple[str, Any]]:
    z, witness = zero_forcing_number(g)
    return [("Z", z), ("witness", witness)]


@graph_command("zbar")
def zbar_command(g: Graph, config: RunConfig) -> List[Tuple[str, Any]]:
    zbar, witness = max_minimal_zfs(g, config.route)
    return [("Z̄", zbar), ("witness", witness)]


@graph_command("count-minimal")
def count_minimal_command(g: Graph, config: RunConfig) -> List[Tuple[str, Any]]:
    return [("minimal zero forcing sets", count_minimal_zfs(g))]


@graph_command("shrink")
def shrink_command(g: Graph, config: RunConfig) -> List[Tuple[str, Any]]:
    return [("minimal", shrink_to_minimal(g, _require_set(g, config)))]


@command("enumerate-minimal")
def enumerate_minimal_command(config: RunConfig, emit: Emit) -> int:
    for label, g in _load_graphs(config):
        sets = enumerate_minimal_zfs(g, config.route)
        if config.stream:
            for s in sets:
                emit(json.dumps(list(s)) if config.output_format == "report" else format_set(s))
            continue
        if config.output_format == "report":
            emit(json.dumps({"graph": label, "count": len(sets), "sets": [list(s) for s in sets]}, indent=2))
        else:
            emit(render_table([("minimal zero forcing sets", len(sets))]))
            emit("\n".join(format_set(s) for s in sets))
    return 0


@command("gen")
def gen_command(config: RunConfig, emit: Emit) -> int:
    if not config.gen:
        raise UsageError(f"gen needs --gen family:params; families: {', '.join(family_names())}")
    g = parse_family_spec(config.gen)
    emit(write_edge_list(g).rstrip("\n") if config.edges else write_graph6(g))
    return 0


def _emit_report(report: claims.VerificationReport, config: RunConfig, emit: Emit) -> None:
    if config.output_format == "report":
        emit(report_to_json(report, config.deterministic))
        return
    params = " ".join(f"{k}={v}" for k, v in report.params.items())
    rows: List[Tuple[str, Any]] = [
        ("claim", report.claim),
        ("params", params or "-"),
        ("verdict", report.verdict),
        ("witnesses", len(report.witnesses)),
    ]
    if not config.deterministic:
        rows.append(("elapsed", f"{report.elapsed:.3f}s"))
    if report.counterexample is not None:
        rows.append(("counterexample", json.dumps(report.counterexample, ensure_ascii=False)))
    emit(render_table(rows))


@command("verify")
def verify_command(config: RunConfig, emit: Emit) -> int:
    if not config.target:
        raise UsageError(f"verify needs a claim id; claims: {', '.join(claims.claim_ids())}")
    params: Dict[str, Any] = dict(config.params)
    if config.max_n is not None and "max_n" in claims.claim_parameters(config.target):
        params.setdefault("max_n", config.max_n)
    if config.up_to_iso and "up_to_iso" in claims.claim_parameters(config.target):
        params.setdefault("up_to_iso", True)
    report = claims.verify_claim(config.target, **params)
    _emit_report(report, config, emit)
    return 0 if report.passed else 1


@command("sweep")
def sweep_command(config: RunConfig, emit: Emit) -> int:
    if config.target not in SWEEPS:
        raise UsageError(f"sweep needs a property; properties: {', '.join(SWEEPS)}")
    claim_id, check = SWEEPS[config.target]
    max_n = config.max_n if config.max_n is not None else get_limits().sweep_max_order
    if not config.stream:
        params: Dict[str, Any] = {"max_n": max_n, "up_to_iso": config.up_to_iso}
        if claim_id == "route_agreement":
            params["samples"] = 0
        report = claims.verify_claim(claim_id, **params)
        _emit_report(report, config, emit)
        return 0 if report.passed else 1
    status = 0
    for n in claims.sweep_orders(max_n):
        codes = graph_codes(n, config.up_to_iso)
        for code in tqdm(codes, desc=f"order {n}", disable=not get_limits().progress):
            g = graph_from_code(n, code)
            matched, failure = check(g)
            z, _ = zero_forcing_number(g)
            masks = minimal_masks(g, "scan")
            emit(json.dumps({
                "graph6": write_graph6(g),
                "order": n,
                "z": z,
                "zbar": max(m.bit_count() for m in masks),
                "minimal_count": len(masks),
                "matched": matched,
                "failure": failure,
            }, ensure_ascii=False))
            if failure is not None:
                status = 1
    return status


def run(config: RunConfig, emit: Optional[Emit] = None) -> Tuple[int, str]:
    """Execute one subcommand; output goes to emit when given, else it is returned"""
    config.validate()
    changes: Dict[str, int] = {}
    if config.cap is not None:
        changes["enumeration_cap"] = config.cap
    if config.workers is not None:
        changes["workers"] = config.workers or os.cpu_count() or 1
    if config.seed is not None:
        changes["seed"] = config.seed
    if config.long:
        changes["sweep_max_order"] = get_limits().sweep_long_order
    if config.progress:
        changes["progress"] = True
    chunks: List[str] = []
    with override_limits(**changes):
        status = COMMANDS[config.command](config, emit or chunks.append)
    return status, "\n".join(chunks)


# Argument parsing

def _extra_params(tokens: Sequence[str]) -> Dict[str, str]:
    """--name value and --name=value pairs for claim parameters"""
    params: Dict[str, str] = {}
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if not token.startswith("--") or token == "--":
            raise UsageError(f"unexpected argument {token!r}")
        name, eq, value = token[2:].partition("=")
        if not eq:
            if i + 1 >= len(tokens) or tokens[i + 1].startswith("--"):
                value = "true"
            else:
                i += 1
                value = tokens[i]
        params[name.replace("-", "_")] = value
        i += 1
    return params


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zforce",
        allow_abbrev=False,
        description="Zero forcing sets, forts and Z̄(G) on small graphs")
    parser.add_argument("command", choices=sorted(COMMANDS), help="subcommand")
    parser.add_argument("target", nargs="?", help="claim id for verify, property for sweep")
    parser.add_argument("--gen", help="family spec such as cycle:7 or spider:5,5,5")
    parser.add_argument("--input", help="graph6 file (one graph per line) or edge-list file")
    parser.add_argument("--set", dest="vertex_set", help="vertex ids such as 0,3,5")
    parser.add_argument("--format", dest="output_format", choices=FORMATS, default="human")
    parser.add_argument("--route", choices=ROUTES, default="auto", help="Z̄ route: subset scan, fort transversals or both")
    parser.add_argument("--max-n", type=int, help="largest order for sweeps")
    parser.add_argument("--cap", type=int, help="enumeration cap")
    parser.add_argument("--workers", type=int, help="parallel workers, 0 for all CPUs")
    parser.add_argument("--seed", type=int, help="seed for randomized checks")
    parser.add_argument("--stream", action="store_true", help="one line per item instead of one report")
    parser.add_argument("--deterministic", action="store_true", help="omit timings from reports")
    parser.add_argument("--up-to-iso", action="store_true", help="sweep one graph per isomorphism class")
    parser.add_argument("--long", action="store_true", help="allow order-7 sweeps")
    parser.add_argument("--minimal", dest="minimal_only", action="store_true", help="minimal forts only")
    parser.add_argument("--edges", action="store_true", help="gen: write an edge list instead of graph6")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("-q", "--quiet", action="store_true")
    return parser


def _configure_logging(verbose: int, quiet: bool) -> None:
    level = logging.WARNING
    if quiet:
        level = logging.ERROR
    elif verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    _configure_logging(args.verbose, args.quiet)
    try:
        params = _extra_params(extra)
        if params and args.command != "verify":
            raise UsageError(f"unrecognized arguments: {' '.join(extra)}")
        config = RunConfig(
            command=args.command,
            gen=args.gen,
            input=args.input,
            vertex_set=args.vertex_set,
            output_format=args.output_format,
            max_n=args.max_n,
            cap=args.cap,
            workers=args.workers,
            seed=args.seed,
            stream=args.stream,
            deterministic=args.deterministic,
            up_to_iso=args.up_to_iso,
            long=args.long,
            route=args.route,
            minimal_only=args.minimal_only,
            edges=args.edges,
            progress=sys.stderr.isatty() and not args.quiet,
            target=args.target,
            params=params,
        )
        status, _ = run(config, emit=print)
    except ZforceError as e:
        print(f"zforce: {e}", file=sys.stderr)
        return 2
    return status


__all__ = ['COMMANDS', 'RunConfig', 'SWEEPS', 'build_parser', 'main', 'run']
