"""
Edge-labeled directed multigraphs.

A database has three identifier spaces (vertices, edges, labels) that never
share a token, except in characteristic databases where every edge is labeled
by its own identifier.
"""

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

from rpq_lab.core.errors import InputError

TOKEN_RE = re.compile(r"^[A-Za-z0-9_]+$")


def is_token(text: str) -> bool:
    return bool(TOKEN_RE.fullmatch(text))


def check_token(text: str, kind: str) -> str:
    if not isinstance(text, str) or not is_token(text):
        raise InputError(f"invalid {kind} identifier {text!r}")
    return text


class Edge(NamedTuple):
    id: str
    src: str
    tgt: str
    label: str


@dataclass(frozen=True)
class Database:
    """
    A finite labeled directed multigraph.

    Build instances with `Database.build`, which validates identifiers and
    incidences. Instances are immutable and hashable.
    """

    vertices: FrozenSet[str]
    edge_table: FrozenSet[Edge]
    labels: FrozenSet[str] = frozenset()
    edge_labels: bool = False  # characteristic provenance: labels are edge ids

    @classmethod
    def build(
        cls,
        vertices: Iterable[str] = (),
        edges: Iterable[Tuple[str, str, str, str]] = (),
        labels: Optional[Iterable[str]] = None,
        edge_labels: bool = False,
    ) -> "Database":
        """
        Validate and construct a database.

        Args:
            vertices: vertex identifiers
            edges: (edge id, source, target, label) quadruples
            labels: extra labels to declare; labels used by edges are always included
            edge_labels: allow labels to coincide with edge identifiers

        Returns:
            The database
        """
        vset = frozenset(check_token(v, "vertex") for v in vertices)
        table: Dict[str, Edge] = {}
        for quad in edges:
            edge = Edge(*quad)
            check_token(edge.id, "edge")
            check_token(edge.label, "label")
            if edge.id in table:
                raise InputError(f"duplicate edge {edge.id}")
            for end in (edge.src, edge.tgt):
                if end not in vset:
                    raise InputError(f"edge {edge.id} uses unknown vertex {end}")
            table[edge.id] = edge
        lset = frozenset(e.label for e in table.values())
        if labels is not None:
            lset |= frozenset(check_token(lab, "label") for lab in labels)

        eset = frozenset(table)
        clash = vset & eset
        if not clash:
            clash = vset & lset
        if not clash and not edge_labels:
            clash = eset & lset
        if clash:
            raise InputError(f"identifier used in two namespaces: {sorted(clash)[0]}")
        return cls(vset, frozenset(table.values()), lset, edge_labels)

    @cached_property
    def _edges_by_id(self) -> Dict[str, Edge]:
        return {e.id: e for e in self.edge_table}

    @cached_property
    def _out(self) -> Dict[str, List[Edge]]:
        out: Dict[str, List[Edge]] = {v: [] for v in self.vertices}
        for e in sorted(self.edge_table):
            out[e.src].append(e)
        return out

    @cached_property
    def _in(self) -> Dict[str, List[Edge]]:
        inc: Dict[str, List[Edge]] = {v: [] for v in self.vertices}
        for e in sorted(self.edge_table):
            inc[e.tgt].append(e)
        return inc

    @property
    def edges(self) -> FrozenSet[str]:
        return frozenset(self._edges_by_id)

    @property
    def size(self) -> int:
        """|V| + |E|, the size measure used by the log-length semantics."""
        return len(self.vertices) + len(self.edge_table)

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._edges_by_id

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._edges_by_id[edge_id]
        except KeyError:
            raise InputError(f"unknown edge {edge_id}")

    def src(self, edge_id: str) -> str:
        return self.edge(edge_id).src

    def tgt(self, edge_id: str) -> str:
        return self.edge(edge_id).tgt

    def lbl(self, edge_id: str) -> str:
        return self.edge(edge_id).label

    def out_edges(self, vertex: str) -> List[Edge]:
        """Edges leaving `vertex`, sorted by identifier."""
        return self._out.get(vertex, [])

    def in_edges(self, vertex: str) -> List[Edge]:
        return self._in.get(vertex, [])

    def sorted_vertices(self) -> List[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edge_table)

    def require_vertex(self, vertex: str) -> str:
        if vertex not in self.vertices:
            raise InputError(f"unknown vertex {vertex}")
        return vertex

    def extend(
        self,
        vertices: Iterable[str] = (),
        edges: Iterable[Tuple[str, str, str, str]] = (),
    ) -> "Database":
        """Return a super-database with the given vertices and edges added."""
        return Database.build(
            set(self.vertices) | set(vertices),
            list(self.edge_table) + [tuple(e) for e in edges],
            labels=self.labels,
            edge_labels=self.edge_labels,
        )

    def is_subdatabase_of(self, other: "Database") -> bool:
        return self.vertices <= other.vertices and self.edge_table <= other.edge_table

    def restrict_labels(self) -> FrozenSet[str]:
        """Labels actually carried by some edge."""
        return frozenset(e.label for e in self.edge_table)


EMPTY_DATABASE = Database(frozenset(), frozenset(), frozenset(), False)
