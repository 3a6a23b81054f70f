"""Renamings of vertex/edge identifiers and relabelings of labels."""

from dataclasses import dataclass, field
from functools import singledispatch
from typing import Dict, Iterable, Mapping

from rpq_lab.core.database import Database
from rpq_lab.core.errors import RenamingError
from rpq_lab.core.walk import Walk


def _check_permutation(mapping: Mapping[str, str], what: str) -> None:
    values = list(mapping.values())
    if len(set(values)) != len(values):
        raise RenamingError(f"{what} is not injective")
    if set(values) != set(mapping):
        raise RenamingError(f"{what} does not permute its support")


@dataclass(frozen=True)
class Renaming:
    """
    A namespace-preserving bijection on vertex and edge identifiers.

    Identity outside the maps' domains, so each map must permute its own keys.
    """

    vertex_map: Dict[str, str] = field(default_factory=dict)
    edge_map: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        _check_permutation(self.vertex_map, "vertex renaming")
        _check_permutation(self.edge_map, "edge renaming")

    @classmethod
    def swaps(cls, vertex_pairs: Iterable = (), edge_pairs: Iterable = ()) -> "Renaming":
        """Build a renaming from transpositions (each pair is swapped)."""
        vmap: Dict[str, str] = {}
        emap: Dict[str, str] = {}
        for target, pairs in ((vmap, vertex_pairs), (emap, edge_pairs)):
            for x, y in pairs:
                if x in target or y in target:
                    raise RenamingError(f"overlapping transpositions on {x}, {y}")
                target[x], target[y] = y, x
        return cls(vmap, emap)

    def vertex(self, v: str) -> str:
        return self.vertex_map.get(v, v)

    def edge(self, e: str) -> str:
        return self.edge_map.get(e, e)

    def inverse(self) -> "Renaming":
        return Renaming(
            {y: x for x, y in self.vertex_map.items()},
            {y: x for x, y in self.edge_map.items()},
        )


@dataclass(frozen=True)
class Relabeling:
    label_map: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        _check_permutation(self.label_map, "relabeling")

    @classmethod
    def swaps(cls, pairs: Iterable = ()) -> "Relabeling":
        mapping: Dict[str, str] = {}
        for x, y in pairs:
            if x in mapping or y in mapping:
                raise RenamingError(f"overlapping transpositions on {x}, {y}")
            mapping[x], mapping[y] = y, x
        return cls(mapping)

    def label(self, a: str) -> str:
        return self.label_map.get(a, a)

    def inverse(self) -> "Relabeling":
        return Relabeling({y: x for x, y in self.label_map.items()})


@singledispatch
def _rename(x, nu: Renaming):
    raise TypeError(f"cannot rename a {type(x).__name__}")


@_rename.register
def _(x: Walk, nu: Renaming) -> Walk:
    return Walk(nu.vertex(x.start), tuple((nu.edge(e), nu.vertex(v)) for e, v in x.steps))


@_rename.register
def _(x: Database, nu: Renaming) -> Database:
    return Database.build(
        (nu.vertex(v) for v in x.vertices),
        ((nu.edge(e.id), nu.vertex(e.src), nu.vertex(e.tgt), e.label) for e in x.edge_table),
        labels=x.labels,
        edge_labels=x.edge_labels,
    )


def apply_renaming(nu: Renaming, x):
    """Apply a renaming to a Database or a Walk; labels are untouched."""
    return _rename(x, nu)


@singledispatch
def relabel(x, lam: Relabeling):
    """Dispatch target for `apply_relabeling`; other modules register their types."""
    raise TypeError(f"cannot relabel a {type(x).__name__}")


@relabel.register
def _(x: Database, lam: Relabeling) -> Database:
    return Database.build(
        x.vertices,
        ((e.id, e.src, e.tgt, lam.label(e.label)) for e in x.edge_table),
        labels=(lam.label(a) for a in x.labels),
        edge_labels=x.edge_labels,
    )


def apply_relabeling(lam: Relabeling, x):
    """Apply a relabeling to a Database or a Regex."""
    return relabel(x, lam)
