"""Characteristic databases and expressions of walks."""

from typing import Sequence

from rpq_lab.core.database import Database
from rpq_lab.core.errors import CharacteristicError
from rpq_lab.core.walk import Walk, incidence, mutually_consistent
from rpq_lab.rpq.ast import Regex, word


def characteristic_database(ws: Sequence[Walk]) -> Database:
    """
    Smallest database containing every walk of `ws`, each edge labeled by its own id.

    Raises:
        CharacteristicError: ws is empty or its walks disagree on an incidence
    """
    if not ws:
        raise CharacteristicError("characteristic database of no walks")
    if not mutually_consistent(ws):
        raise CharacteristicError("walks are not mutually consistent")
    _, ends = incidence(ws)
    vertices = {v for w in ws for v in w.vertex_seq}
    return Database.build(
        vertices,
        ((e, src, tgt, e) for e, (src, tgt) in ends.items()),
        edge_labels=True,
    )


def characteristic_expression(w: Walk) -> Regex:
    if w.is_trivial:
        raise CharacteristicError("a trivial walk has no characteristic expression")
    return word(w.edge_seq)
