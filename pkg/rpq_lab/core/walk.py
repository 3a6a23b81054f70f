"""
Walks: alternating vertex/edge sequences, independent of any database.

Indexing follows the usual convention: `vertex_at(i)` is the i-th vertex
(0-based, so `vertex_at(0)` is the source) and `edge_at(i)` is the i-th edge
(1-based, so `edge_at(1)` is the first edge).
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from rpq_lab.core.database import Database, check_token
from rpq_lab.core.errors import ConcatError, InputError

Step = Tuple[str, str]  # (edge id, vertex reached)


@dataclass(frozen=True)
class Walk:
    start: str
    steps: Tuple[Step, ...] = ()

    @classmethod
    def trivial(cls, vertex: str) -> "Walk":
        return cls(vertex, ())

    @classmethod
    def along(cls, db: Database, start: str, edge_ids: Iterable[str]) -> "Walk":
        """Build the walk that follows `edge_ids` in `db` from `start`."""
        steps: List[Step] = []
        here = start
        for edge_id in edge_ids:
            edge = db.edge(edge_id)
            if edge.src != here:
                raise InputError(f"edge {edge_id} does not leave {here}")
            steps.append((edge_id, edge.tgt))
            here = edge.tgt
        return cls(start, tuple(steps))

    @property
    def length(self) -> int:
        return len(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def src(self) -> str:
        return self.start

    @property
    def tgt(self) -> str:
        return self.steps[-1][1] if self.steps else self.start

    @property
    def ep(self) -> Tuple[str, str]:
        return (self.src, self.tgt)

    @property
    def is_trivial(self) -> bool:
        return not self.steps

    @cached_property
    def vertex_seq(self) -> Tuple[str, ...]:
        return (self.start,) + tuple(v for _, v in self.steps)

    @cached_property
    def edge_seq(self) -> Tuple[str, ...]:
        return tuple(e for e, _ in self.steps)

    def vertex_at(self, i: int) -> str:
        return self.vertex_seq[i]

    def edge_at(self, i: int) -> str:
        return self.steps[i - 1][0]

    @cached_property
    def flat(self) -> Tuple[str, ...]:
        """Alternating identifier sequence v0 e1 v1 ... ek vk."""
        out = [self.start]
        for e, v in self.steps:
            out.append(e)
            out.append(v)
        return tuple(out)

    @cached_property
    def sort_key(self) -> Tuple[int, Tuple[str, ...]]:
        """Canonical shortlex key over the flattened identifiers."""
        return (len(self.steps), self.flat)

    def prefix(self, n: int) -> "Walk":
        return Walk(self.start, self.steps[:n])

    def suffix_from(self, i: int) -> "Walk":
        return Walk(self.vertex_seq[i], self.steps[i:])

    def extend(self, edge_id: str, vertex: str) -> "Walk":
        return Walk(self.start, self.steps + ((edge_id, vertex),))

    def label(self, db: Database) -> Tuple[str, ...]:
        return tuple(db.lbl(e) for e in self.edge_seq)

    def __str__(self) -> str:
        parts = [self.start]
        for e, v in self.steps:
            parts.append(f"-{e}->")
            parts.append(v)
        return " ".join(parts)


def parse_walk(text: str) -> Walk:
    """Parse the `v1 -e1-> v2` serialization."""
    tokens = text.split()
    if not tokens or len(tokens) % 2 == 0:
        raise InputError(f"malformed walk {text!r}")
    start = check_token(tokens[0], "vertex")
    steps: List[Step] = []
    for arrow, vertex in zip(tokens[1::2], tokens[2::2]):
        if not (arrow.startswith("-") and arrow.endswith("->")) or len(arrow) < 4:
            raise InputError(f"malformed step {arrow!r} in walk {text!r}")
        steps.append((check_token(arrow[1:-2], "edge"), check_token(vertex, "vertex")))
    return Walk(start, tuple(steps))


def walk_concat(w: Walk, w2: Walk) -> Walk:
    """Concatenate two walks sharing the junction vertex tgt(w) = src(w2)."""
    if w.tgt != w2.src:
        raise ConcatError(f"cannot concatenate: {w.tgt} != {w2.src}")
    return Walk(w.start, w.steps + w2.steps)


def consistent_with(db: Database, w: Walk) -> bool:
    if w.start not in db.vertices:
        return False
    here = w.start
    for e, v in w.steps:
        if not db.has_edge(e):
            return False
        edge = db.edge(e)
        if edge.src != here or edge.tgt != v:
            return False
        here = v
    return True


def incidence(ws: Iterable[Walk]) -> Tuple[bool, Dict[str, Tuple[str, str]]]:
    """Collect edge incidences of the walks; the flag is False on a conflict."""
    seen: Dict[str, Tuple[str, str]] = {}
    for w in ws:
        for i, e in enumerate(w.edge_seq):
            ends = (w.vertex_seq[i], w.vertex_seq[i + 1])
            if seen.setdefault(e, ends) != ends:
                return False, seen
    return True, seen


def mutually_consistent(ws: Sequence[Walk]) -> bool:
    ok, seen = incidence(ws)
    if not ok:
        return False
    vertices = {v for w in ws for v in w.vertex_seq}
    return not (vertices & set(seen))


# ============================================================================
# ELEMENT VIEWS
# ============================================================================

def vertexset(w: Walk) -> FrozenSet[str]:
    return frozenset(w.vertex_seq)


def edgeset(w: Walk) -> FrozenSet[str]:
    return frozenset(w.edge_seq)


def elemset(w: Walk) -> FrozenSet[str]:
    return frozenset(w.flat)


def elembag(w: Walk) -> Counter:
    return Counter(w.flat)


def bag_leq(small: Counter, big: Counter) -> bool:
    return all(big[x] >= n for x, n in small.items())
