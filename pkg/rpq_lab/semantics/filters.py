"""
Filter-based semantics: keep the matches a per-walk predicate accepts.

Every shipped filter is prefix-closed, so the product search can drop a
rejected prefix together with all of its extensions, and accepted walks have
bounded length, so the search terminates.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Optional

from rpq_lab.core.database import Database
from rpq_lab.core.errors import ContractError
from rpq_lab.core.walk import Walk
from rpq_lab.matcher.matches import Endpoints, iter_matches, product_of
from rpq_lab.matcher.walkset import CappedCollector, WalkSet
from rpq_lab.rpq.ast import Regex

logger = logging.getLogger(__name__)


def filter_trail(w: Walk) -> bool:
    return len(set(w.edge_seq)) == len(w.edge_seq)


def filter_acyclic(w: Walk) -> bool:
    return len(set(w.vertex_seq)) == len(w.vertex_seq)


def filter_swc(w: Walk) -> bool:
    """Acyclic, or a simple cycle: the only repeat allowed is first = last."""
    vs = w.vertex_seq
    head, tail = vs[:-1], vs[1:]
    return len(set(head)) == len(head) and len(set(tail)) == len(tail)


def filter_2ac(w: Walk) -> bool:
    return max(Counter(w.vertex_seq).values()) <= 2


@dataclass(frozen=True)
class WalkFilter:
    """
    A named walk predicate.

    `max_length(db)` bounds the length of every accepted walk over `db`; it is
    only meaningful when `prefix_closed` holds.
    """

    name: str
    accepts: Callable[[Walk], bool]
    max_length: Callable[[Database], int]
    prefix_closed: bool = True

    def __call__(self, w: Walk) -> bool:
        return self.accepts(w)


TRAIL = WalkFilter("trail", filter_trail, lambda db: len(db.edge_table))
ACYCLIC = WalkFilter("acyclic", filter_acyclic, lambda db: max(len(db.vertices) - 1, 0))
SWC = WalkFilter("swc", filter_swc, lambda db: len(db.vertices))
TWO_AC = WalkFilter("2ac", filter_2ac, lambda db: max(2 * len(db.vertices) - 1, 0))


def eval_filter_semantics(
    db: Database,
    regex: Regex,
    f: WalkFilter,
    endpoints: Endpoints = None,
    cap: Optional[int] = None,
) -> WalkSet:
    """
    All matches accepted by `f`.

    Raises:
        ContractError: f is not prefix-closed
        ResultCapError: more than `cap` walks
    """
    if not f.prefix_closed:
        raise ContractError(f"filter {f.name} is not prefix-closed; the search cannot prune with it")
    source, target = endpoints if endpoints is not None else (None, None)
    bound = f.max_length(db)
    out = CappedCollector(cap, f"{f.name} result")
    product = product_of(db, regex)
    for w, _ in iter_matches(product, bound, source, target, prefix_ok=f.accepts):
        out.add(w)
    logger.debug("%s: %d walks (bound %d)", f.name, len(out.walks), bound)
    return out.result()
