"""zforce formats - graph6 and edge-list codecs, family specs and report output"""
import json
import logging
from pathlib import Path
from typing import Iterator, List, Sequence, Tuple, Union

import networkx as nx
from networkx.readwrite.graph6 import data_to_n

from .config import check_order
from .errors import FamilyError, FormatError, GraphError, UsageError
from .graph import Graph, VertexSet, build_graph, generate

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; an optional >>graph6<< header is accepted"""
    line = text.rstrip("\r\n")
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise FormatError("empty graph6 line")
    data = [ord(c) - 63 for c in line]
    if any(not 0 <= d <= 63 for d in data):
        raise FormatError(f"graph6 characters must lie in range(63, 127): {text!r}")
    try:
        n, _ = data_to_n(data)
    except (IndexError, ValueError):
        raise FormatError(f"malformed graph6 order prefix: {text!r}") from None
    if n < 1:
        raise FormatError("graph6 input describes an empty graph")
    check_order(n)
    try:
        g = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError) as e:
        raise FormatError(f"malformed graph6 line {text!r}: {e}") from None
    return Graph.from_networkx(g)


def write_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def parse_edge_list(text: str) -> Graph:
    """Header "n <order>" then one "u v" pair per line; blank lines and # comments are skipped"""
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise FormatError("edge list is empty; expected a header 'n <order>'")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "n" or not header[1].isdigit():
        raise FormatError(f"bad edge list header {lines[0]!r}; expected 'n <order>'")
    n = int(header[1])
    edges: List[Tuple[int, int]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"edge list line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return build_graph(n, edges)
    except GraphError as e:
        raise FormatError(f"edge list: {e}") from None


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.order}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def iter_graphs(text: str) -> Iterator[Graph]:
    """Graphs from file contents: an edge list, or graph6 with one graph per line"""
    stripped = text.lstrip()
    if stripped.startswith("n ") or stripped.startswith("n\t"):
        yield parse_edge_list(text)
        return
    for line in text.splitlines():
        line = line.strip()
        if line and line != GRAPH6_HEADER:
            yield parse_graph6(line)


def read_graphs(path: Union[str, Path]) -> List[Graph]:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except UnicodeDecodeError:
        raise FormatError(f"{path} is not an ASCII graph file") from None
    graphs = list(iter_graphs(text))
    logger.debug("read %d graph(s) from %s", len(graphs), path)
    return graphs


def parse_family_spec(spec: str) -> Graph:
    """"cycle:7", "spider:5,5,5" or "complete_union_isolates:4,2" """
    name, _, raw = spec.partition(":")
    params = []
    for part in filter(None, (p.strip() for p in raw.split(","))):
        try:
            params.append(int(part))
        except ValueError:
            raise UsageError(f"family parameters must be integers, got {part!r} in {spec!r}") from None
    try:
        return generate(name.strip(), *params)
    except FamilyError as e:
        raise UsageError(str(e)) from None


def parse_vertex_set(text: str) -> VertexSet:
    """Comma separated ids such as "0,3,5"; an empty string is the empty set"""
    try:
        return VertexSet(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"vertex set must be comma separated ids, got {text!r}") from None


def format_set(s: VertexSet) -> str:
    return "{" + ", ".join(map(str, s)) + "}"


def report_to_json(report, deterministic: bool = False) -> str:
    return json.dumps(report.to_dict(deterministic), ensure_ascii=False, indent=2)


def render_table(rows: Sequence[Tuple[str, object]]) -> str:
    """One "key = value" line per row"""
    return "\n".join(f"{key} = {value}" for key, value in rows)


__all__ = [
    'GRAPH6_HEADER',
    'format_set',
    'iter_graphs',
    'parse_edge_list',
    'parse_family_spec',
    'parse_graph6',
    'parse_vertex_set',
    'read_graphs',
    'render_table',
    'report_to_json',
    'write_edge_list',
    'write_graph6',
]
