"""
Text format for graphs and voltage graphs.

    # comment
    vertices <n>
    rank <d>                      (voltage graphs only)
    edge <tail> <head> [v_1 .. v_d]
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import ValidationError

from ..errors import GraphFormatError
from ..models import MultiGraph, VoltageGraph


def _parse_int(token: str, line_number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"{what} must be an integer, got {token!r}", line=line_number) from None


def parse_voltage_text(text: str) -> Tuple[MultiGraph, Optional[int], List[Tuple[int, ...]]]:
    """Parse graph text into (graph, rank or None, per-edge voltages)."""
    vertex_count: Optional[int] = None
    rank: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    voltages: List[Tuple[int, ...]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, *args = line.split()

        if keyword == "vertices":
            if vertex_count is not None:
                raise GraphFormatError("duplicate 'vertices' header", line=line_number)
            if len(args) != 1:
                raise GraphFormatError("expected 'vertices <n>'", line=line_number)
            vertex_count = _parse_int(args[0], line_number, "vertex count")
            if vertex_count < 0:
                raise GraphFormatError("vertex count must be nonnegative", line=line_number)
        elif keyword == "rank":
            if rank is not None or edges:
                raise GraphFormatError("'rank' must appear once, before any edge", line=line_number)
            if len(args) != 1:
                raise GraphFormatError("expected 'rank <d>'", line=line_number)
            rank = _parse_int(args[0], line_number, "rank")
            if rank < 1:
                raise GraphFormatError("rank must be at least 1", line=line_number)
        elif keyword == "edge":
            if vertex_count is None:
                raise GraphFormatError("'vertices' header must precede edges", line=line_number)
            if len(args) < 2:
                raise GraphFormatError("expected 'edge <tail> <head> [voltages]'", line=line_number)
            tail = _parse_int(args[0], line_number, "tail")
            head = _parse_int(args[1], line_number, "head")
            for vertex in (tail, head):
                if not 0 <= vertex < vertex_count:
                    raise GraphFormatError(f"vertex {vertex} outside 0..{vertex_count - 1}", line=line_number)
            voltage = tuple(_parse_int(token, line_number, "voltage") for token in args[2:])
            expected = rank if rank is not None else (len(voltages[0]) if voltages else len(voltage))
            if len(voltage) != expected:
                raise GraphFormatError(
                    f"expected {expected} voltage entries, got {len(voltage)}", line=line_number
                )
            edges.append((tail, head))
            voltages.append(voltage)
        else:
            raise GraphFormatError(f"unknown keyword {keyword!r}", line=line_number)

    if vertex_count is None:
        raise GraphFormatError("missing 'vertices' header")
    try:
        graph = MultiGraph(vertex_count=vertex_count, edges=tuple(edges))
    except ValidationError as exc:
        raise GraphFormatError(str(exc)) from exc
    return graph, rank, voltages


def parse_graph(text: str) -> MultiGraph:
    """Parse graph text; voltage columns, if any, are ignored."""
    graph, _, _ = parse_voltage_text(text)
    return graph


def parse_voltage_graph(text: str) -> VoltageGraph:
    """Parse a voltage graph; requires a 'rank' header and d voltages per edge."""
    graph, rank, voltages = parse_voltage_text(text)
    if rank is None:
        raise GraphFormatError("voltage graphs need a 'rank <d>' header")
    return VoltageGraph(base=graph, rank=rank, voltages=tuple(voltages))


def load_graph(path: Union[str, Path]) -> MultiGraph:
    return parse_graph(Path(path).read_text(encoding="ascii"))


def load_voltage_graph(path: Union[str, Path]) -> VoltageGraph:
    return parse_voltage_graph(Path(path).read_text(encoding="ascii"))


def dump_graph(g: MultiGraph, comment: Optional[str] = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"vertices {g.vertex_count}")
    lines.extend(f"edge {tail} {head}" for tail, head in g.edges)
    return "\n".join(lines) + "\n"


def dump_voltage_graph(vg: VoltageGraph, comment: Optional[str] = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"vertices {vg.base.vertex_count}")
    lines.append(f"rank {vg.rank}")
    for (tail, head), voltage in zip(vg.base.edges, vg.voltages):
        lines.append(" ".join(["edge", str(tail), str(head), *map(str, voltage)]))
    return "\n".join(lines) + "\n"
