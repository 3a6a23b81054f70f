"""
Lab instances: the data a property check runs on, and its text form.

A counterexample report stores the instance as plain text (graph files, query
strings, identifier maps), so it can be replayed without the generator state
that produced it.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from rpq_lab.core.database import Database
from rpq_lab.core.graph_io import format_database, parse_database
from rpq_lab.core.renaming import Relabeling, Renaming
from rpq_lab.rpq.ast import Regex
from rpq_lab.rpq.parser import parse_query, to_text


@dataclass(frozen=True, eq=False)
class LabInstance:
    """
    One trial's input.

    Attributes:
        name: fixture name, or "random-<i>" for generated trials
        db: the database
        queries: one or more queries; binary properties read the first two
        db_ext: a super-database of `db`, for monotony-style properties
        renaming: for identifier-independence
        relabeling: for label-independence
    """

    name: str
    db: Database
    queries: Tuple[Regex, ...]
    db_ext: Optional[Database] = None
    renaming: Optional[Renaming] = None
    relabeling: Optional[Relabeling] = None

    @property
    def query(self) -> Regex:
        return self.queries[0]

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "name": self.name,
            "graph": format_database(self.db),
            "queries": [to_text(r) for r in self.queries],
        }
        if self.db.edge_labels:
            out["edge_labels"] = True
        if self.db_ext is not None:
            out["graph_ext"] = format_database(self.db_ext)
            if self.db_ext.edge_labels:
                out["graph_ext_edge_labels"] = True
        if self.renaming is not None:
            out["renaming"] = {
                "vertices": dict(sorted(self.renaming.vertex_map.items())),
                "edges": dict(sorted(self.renaming.edge_map.items())),
            }
        if self.relabeling is not None:
            out["relabeling"] = dict(sorted(self.relabeling.label_map.items()))
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LabInstance":
        renaming = None
        if data.get("renaming") is not None:
            renaming = Renaming(dict(data["renaming"]["vertices"]), dict(data["renaming"]["edges"]))
        relabeling = None
        if data.get("relabeling") is not None:
            relabeling = Relabeling(dict(data["relabeling"]))
        db_ext = None
        if data.get("graph_ext") is not None:
            db_ext = parse_database(data["graph_ext"], edge_labels=data.get("graph_ext_edge_labels", False))
        return cls(
            name=data["name"],
            db=parse_database(data["graph"], edge_labels=data.get("edge_labels", False)),
            queries=tuple(parse_query(q) for q in data["queries"]),
            db_ext=db_ext,
            renaming=renaming,
            relabeling=relabeling,
        )

    def describe(self) -> str:
        parts = [self.name, f"|V|={len(self.db.vertices)}", f"|E|={len(self.db.edge_table)}"]
        parts.append("queries: " + " ; ".join(to_text(r) for r in self.queries))
        if self.db_ext is not None:
            parts.append(f"extension adds {len(self.db_ext.edge_table) - len(self.db.edge_table)} edges")
        return ", ".join(parts)
