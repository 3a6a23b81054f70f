"""
Line-oriented text formats for databases and cost tables.

Graphs:
    # comment
    V <vertex-id>
    E <edge-id> <src> <tgt> <label>

Costs:
    <label> <positive-int>
"""

from pathlib import Path
from typing import Dict, List, Set, Tuple

from rpq_lab.core.database import Database, is_token
from rpq_lab.core.errors import GraphFormatError, InputError


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def parse_database(text: str, edge_labels: bool = False) -> Database:
    """Parse the graph format; `edge_labels` allows labels that equal edge identifiers."""
    vertices: Set[str] = set()
    edges: List[Tuple[str, str, str, str]] = []
    seen_edges: Set[str] = set()
    for number, fields in _content_lines(text):
        kind = fields[0]
        if kind == "V" and len(fields) == 2:
            if fields[1] in vertices:
                raise GraphFormatError(f"duplicate vertex {fields[1]}", number)
            vertices.add(fields[1])
        elif kind == "E" and len(fields) == 5:
            if fields[1] in seen_edges:
                raise GraphFormatError(f"duplicate edge {fields[1]}", number)
            seen_edges.add(fields[1])
            edges.append(tuple(fields[1:]))
        else:
            raise GraphFormatError(f"cannot parse {' '.join(fields)!r}", number)
        for token in fields[1:]:
            if not is_token(token):
                raise GraphFormatError(f"invalid identifier {token!r}", number)
    try:
        return Database.build(vertices, edges, edge_labels=edge_labels)
    except InputError as e:
        raise GraphFormatError(str(e))


def format_database(db: Database) -> str:
    lines = [f"V {v}" for v in db.sorted_vertices()]
    lines += [f"E {e.id} {e.src} {e.tgt} {e.label}" for e in db.sorted_edges()]
    return "\n".join(lines) + "\n"


def _read_text(path, what: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {what} file {path}: {e}")
    except UnicodeDecodeError as e:
        raise GraphFormatError(f"{what} file {path} is not valid UTF-8 (byte {e.start})")


def load_database(path) -> Database:
    return parse_database(_read_text(path, "graph"))


def parse_costs(text: str) -> Dict[str, int]:
    costs: Dict[str, int] = {}
    for number, fields in _content_lines(text):
        if len(fields) != 2 or not is_token(fields[0]):
            raise GraphFormatError("cost lines are '<label> <positive-int>'", number)
        if fields[0] in costs:
            raise GraphFormatError(f"duplicate cost for {fields[0]}", number)
        try:
            value = int(fields[1])
        except ValueError:
            raise GraphFormatError(f"cost {fields[1]!r} is not an integer", number)
        if value <= 0:
            raise GraphFormatError(f"cost for {fields[0]} must be positive", number)
        costs[fields[0]] = value
    return costs


def load_costs(path) -> Dict[str, int]:
    return parse_costs(_read_text(path, "cost"))
