"""
Order-based semantics: per endpoint pair, the minimal matches of a suitable order.

A suitable order is a strict partial order on walks that is well-founded on
the walks of each database. The generic engine collects candidates up to the
cycle-removal bound and keeps the minima; shortest and shortlex also have
breadth-first fast paths, and the cost order has a Dijkstra one (see cost.py).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from rpq_lab.core.database import Database
from rpq_lab.core.errors import ResultCapError
from rpq_lab.core.subwalk import subwalk_lt
from rpq_lab.core.walk import Walk, bag_leq, elembag, elemset, mutually_consistent
from rpq_lab.matcher.matches import (
    Endpoints,
    iter_matches,
    minimal_walk_bound,
    product_of,
    shortest_match_lengths,
)
from rpq_lab.matcher.walkset import CappedCollector, WalkSet
from rpq_lab.rpq.ast import Regex

logger = logging.getLogger(__name__)


class Cmp(Enum):
    LESS = "less"
    EQUAL_OR_INCOMPARABLE = "equal-or-incomparable"
    GREATER = "greater"


@dataclass(frozen=True)
class SuitableOrder:
    """
    A strict order `lt` on walks plus metadata.

    Attributes:
        name: display name
        lt: strict comparison; the order is w <= w2 iff w == w2 or lt(w, w2)
        trimmed: comparisons restricted to consistent same-endpoint pairs
        respects_element_inclusion: claimed relation to element-set inclusion,
            None when no claim is made
    """

    name: str
    lt: Callable[[Walk, Walk], bool]
    trimmed: bool = False
    respects_element_inclusion: Optional[bool] = None

    def leq(self, w: Walk, w2: Walk) -> bool:
        return w == w2 or self.lt(w, w2)

    def compare(self, w: Walk, w2: Walk) -> Cmp:
        if w != w2:
            if self.lt(w, w2):
                return Cmp.LESS
            if self.lt(w2, w):
                return Cmp.GREATER
        return Cmp.EQUAL_OR_INCOMPARABLE


def _shorter(w: Walk, w2: Walk) -> bool:
    return len(w) < len(w2)


def _shortlex(w: Walk, w2: Walk) -> bool:
    if len(w) != len(w2):
        return len(w) < len(w2)
    return w.edge_seq < w2.edge_seq


def _bag(w: Walk, w2: Walk) -> bool:
    small, big = elembag(w), elembag(w2)
    return small != big and bag_leq(small, big)


def _shms(w: Walk, w2: Walk) -> bool:
    s, s2 = elemset(w), elemset(w2)
    return s < s2 or (s == s2 and len(w) < len(w2))


SHORTER = SuitableOrder("shorter", _shorter, respects_element_inclusion=False)
SHORTLEX = SuitableOrder("shortlex", _shortlex, respects_element_inclusion=False)
SUBWALK = SuitableOrder("subwalk", subwalk_lt, respects_element_inclusion=True)
BAG = SuitableOrder("bag", _bag, respects_element_inclusion=True)
SHMS = SuitableOrder("shms", _shms, respects_element_inclusion=True)


def order_shorter(w: Walk, w2: Walk) -> Cmp:
    return SHORTER.compare(w, w2)


def order_shortlex(w: Walk, w2: Walk) -> Cmp:
    return SHORTLEX.compare(w, w2)


def order_subwalk(w: Walk, w2: Walk) -> Cmp:
    return SUBWALK.compare(w, w2)


def order_bag(w: Walk, w2: Walk) -> Cmp:
    return BAG.compare(w, w2)


def order_shms(w: Walk, w2: Walk) -> Cmp:
    return SHMS.compare(w, w2)


def walk_cost(db: Database, w: Walk, cost_of: Callable[[str], int]) -> int:
    return sum(cost_of(db.lbl(e)) for e in w.edge_seq)


def order_cost(db: Database, cost_of: Callable[[str], int]) -> SuitableOrder:
    """Strictly cheaper total cost over `db`; edges outside `db` make walks incomparable."""

    def lt(w: Walk, w2: Walk) -> bool:
        if not all(db.has_edge(e) for e in w.edge_seq + w2.edge_seq):
            return False
        return walk_cost(db, w, cost_of) < walk_cost(db, w2, cost_of)

    return SuitableOrder("cost", lt, respects_element_inclusion=False)


def trim(order: SuitableOrder) -> SuitableOrder:
    """Restrict `order` to mutually consistent walks with the same endpoints."""
    if order.trimmed:
        return order
    base = order.lt

    def lt(w: Walk, w2: Walk) -> bool:
        return w.ep == w2.ep and mutually_consistent([w, w2]) and base(w, w2)

    return SuitableOrder(
        f"trim({order.name})", lt, trimmed=True,
        respects_element_inclusion=order.respects_element_inclusion,
    )


def minima(walks: Iterable[Walk], order: SuitableOrder) -> List[Walk]:
    pool = sorted(set(walks), key=lambda w: w.sort_key)
    return [w for w in pool if not any(order.lt(x, w) for x in pool if x != w)]


def minima_per_endpoints(walks: Iterable[Walk], order: SuitableOrder) -> List[Walk]:
    groups: Dict[Tuple[str, str], List[Walk]] = {}
    for w in walks:
        groups.setdefault(w.ep, []).append(w)
    out: List[Walk] = []
    for ep in sorted(groups):
        out.extend(minima(groups[ep], order))
    return out


def eval_order_semantics(
    db: Database,
    regex: Regex,
    order: SuitableOrder,
    endpoints: Endpoints = None,
    cap: Optional[int] = None,
) -> WalkSet:
    """
    Generic engine: minima of `trim(order)` per endpoint pair.

    Candidates are the matches up to `minimal_walk_bound` that never revisit a
    (vertex, determinized state) pair: such a revisit encloses a cycle whose
    removal leaves a smaller match under every shipped order.
    """
    source, target = endpoints if endpoints is not None else (None, None)
    product = product_of(db, regex)
    bound = minimal_walk_bound(db, regex)
    candidates = []
    for w, _ in iter_matches(product, bound, source, target, det_simple=True):
        candidates.append(w)
        if cap is not None and len(candidates) > cap:
            raise ResultCapError(cap, f"{order.name} candidate set")
    logger.debug("%s: %d candidates up to length %d", order.name, len(candidates), bound)
    out = CappedCollector(cap, f"{order.name} result")
    out.update(minima_per_endpoints(candidates, trim(order)))
    return out.result()


def _pairs(db: Database, regex: Regex, endpoints: Endpoints) -> List[Tuple[Tuple[str, str], int]]:
    source, target = endpoints if endpoints is not None else (None, None)
    lengths = shortest_match_lengths(db, regex, [source] if source is not None else None)
    if endpoints is None:
        return sorted(lengths.items())
    return sorted(
        (ep, n) for ep, n in lengths.items()
        if (source is None or ep[0] == source) and (target is None or ep[1] == target)
    )


def eval_shortest(
    db: Database, regex: Regex, endpoints: Endpoints = None, cap: Optional[int] = None
) -> WalkSet:
    """All matches of minimal length per endpoint pair, by breadth-first distances."""
    product = product_of(db, regex)
    out = CappedCollector(cap, "shortest result")
    for (s, t), n in _pairs(db, regex, endpoints):
        out.update(w for w, _ in iter_matches(product, n, s, t))
    return out.result()


def eval_shortlex(
    db: Database, regex: Regex, endpoints: Endpoints = None, cap: Optional[int] = None
) -> WalkSet:
    """
    The single shortlex-minimal match per endpoint pair.

    The search visits edges in identifier order, so the first match of
    minimal length it meets has the smallest edge-identifier sequence.
    """
    product = product_of(db, regex)
    out = CappedCollector(cap, "shortlex result")
    for (s, t), n in _pairs(db, regex, endpoints):
        first = next(iter_matches(product, n, s, t), None)
        if first is not None:
            out.add(first[0])
    return out.result()
