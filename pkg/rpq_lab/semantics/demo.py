"""
Semantics built on top of the others: shortest trails, and three demonstration
semantics (log-length, giving-up, weird) used as controls in the lab.
"""

import logging
from typing import Dict, List, Optional, Tuple

from rpq_lab.core.database import Database
from rpq_lab.core.walk import Walk
from rpq_lab.matcher.matches import Endpoints, match_set_finite, matches_upto, minimal_walk_bound
from rpq_lab.matcher.walkset import CappedCollector, WalkSet
from rpq_lab.rpq.ast import Regex
from rpq_lab.semantics.filters import TRAIL, eval_filter_semantics
from rpq_lab.semantics.orders import eval_shortest

logger = logging.getLogger(__name__)


def shortest_per_endpoints(ws: WalkSet) -> List[Walk]:
    best: Dict[Tuple[str, str], int] = {}
    for w in ws:
        best[w.ep] = min(best.get(w.ep, len(w)), len(w))
    return [w for w in ws if len(w) == best[w.ep]]


def eval_sht(
    db: Database, regex: Regex, endpoints: Endpoints = None, cap: Optional[int] = None
) -> WalkSet:
    """Shortest trails per endpoint pair; a pair whose matches are all non-trails gets nothing."""
    trails = eval_filter_semantics(db, regex, TRAIL, endpoints, cap)
    out = CappedCollector(cap, "shortest-trail result")
    out.update(shortest_per_endpoints(trails))
    return out.result()


def log_length_limit(db: Database) -> int:
    """Largest n with n < log2(|V| + |E|), or -1 when there is none."""
    return (db.size - 1).bit_length() - 1 if db.size > 0 else -1


def eval_ll(
    db: Database, regex: Regex, endpoints: Endpoints = None, cap: Optional[int] = None
) -> WalkSet:
    limit = log_length_limit(db)
    if limit < 0:
        return WalkSet()
    out = CappedCollector(cap, "log-length result")
    out.update(matches_upto(db, regex, limit, endpoints, cap))
    return out.result()


def eval_gu(
    db: Database, regex: Regex, endpoints: Endpoints = None, cap: Optional[int] = None
) -> WalkSet:
    """Every match when there are finitely many, otherwise nothing."""
    if not match_set_finite(db, regex):
        logger.debug("giving-up: infinite match set")
        return WalkSet()
    out = CappedCollector(cap, "giving-up result")
    out.update(matches_upto(db, regex, minimal_walk_bound(db, regex), endpoints, cap))
    return out.result()


def eval_weird(
    db: Database, regex: Regex, endpoints: Endpoints = None, cap: Optional[int] = None
) -> WalkSet:
    """Shortest walks when the match set is finite, trails otherwise."""
    if match_set_finite(db, regex):
        return eval_shortest(db, regex, endpoints, cap)
    return eval_filter_semantics(db, regex, TRAIL, endpoints, cap)
