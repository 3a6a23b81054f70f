"""Single entry point: evaluate a query under a named semantics."""

import logging
from typing import Callable, Dict, Optional

from rpq_lab.config.config import RESULT_CAP
from rpq_lab.core.database import Database
from rpq_lab.matcher.matches import Endpoints
from rpq_lab.matcher.walkset import WalkSet
from rpq_lab.rpq.ast import Regex
from rpq_lab.semantics import covering, demo, filters, orders, runs
from rpq_lab.semantics.cost import eval_chw
from rpq_lab.semantics.spec import SemanticsId, SemanticsSpec

logger = logging.getLogger(__name__)

Evaluator = Callable[[Database, Regex, SemanticsSpec, Endpoints, Optional[int]], WalkSet]


def _filter(f: filters.WalkFilter) -> Evaluator:
    return lambda db, r, spec, ep, cap: filters.eval_filter_semantics(db, r, f, ep, cap)


def _order(order: orders.SuitableOrder) -> Evaluator:
    return lambda db, r, spec, ep, cap: orders.eval_order_semantics(db, r, order, ep, cap)


def _plain(fn) -> Evaluator:
    return lambda db, r, spec, ep, cap: fn(db, r, ep, cap)


EVALUATORS: Dict[SemanticsId, Evaluator] = {
    SemanticsId.TRAIL: _filter(filters.TRAIL),
    SemanticsId.ACYCLIC: _filter(filters.ACYCLIC),
    SemanticsId.SWC: _filter(filters.SWC),
    SemanticsId.TWO_AC: _filter(filters.TWO_AC),
    SemanticsId.SHORTEST: _plain(orders.eval_shortest),
    SemanticsId.SHORTEST_TRAIL: _plain(demo.eval_sht),
    SemanticsId.SHORTLEX: _plain(orders.eval_shortlex),
    SemanticsId.SUBWALK_MIN: _order(orders.SUBWALK),
    SemanticsId.MIN_MULTISET: _order(orders.BAG),
    SemanticsId.SHMS: _order(orders.SHMS),
    SemanticsId.SHVC: _plain(covering.eval_shvc),
    SemanticsId.SHEC: _plain(covering.eval_shec),
    SemanticsId.SHAC: _plain(covering.eval_shac),
    SemanticsId.BINDING_TRAIL: _plain(runs.eval_bt),
    SemanticsId.CHEAPEST: lambda db, r, spec, ep, cap: eval_chw(db, r, spec.cost_of, ep, cap),
    SemanticsId.LOG_LENGTH: _plain(demo.eval_ll),
    SemanticsId.GIVING_UP: _plain(demo.eval_gu),
    SemanticsId.WEIRD: _plain(demo.eval_weird),
}


def order_for(spec: SemanticsSpec, db: Database) -> Optional[orders.SuitableOrder]:
    """The suitable order behind an order-based semantics, None for the others."""
    if spec.id is SemanticsId.SHORTEST:
        return orders.SHORTER
    if spec.id is SemanticsId.SHORTLEX:
        return orders.SHORTLEX
    if spec.id is SemanticsId.SUBWALK_MIN:
        return orders.SUBWALK
    if spec.id is SemanticsId.MIN_MULTISET:
        return orders.BAG
    if spec.id is SemanticsId.SHMS:
        return orders.SHMS
    if spec.id is SemanticsId.CHEAPEST:
        return orders.order_cost(db, spec.cost_of)
    return None


def filter_for(spec: SemanticsSpec) -> Optional[filters.WalkFilter]:
    return {
        SemanticsId.TRAIL: filters.TRAIL,
        SemanticsId.ACYCLIC: filters.ACYCLIC,
        SemanticsId.SWC: filters.SWC,
        SemanticsId.TWO_AC: filters.TWO_AC,
    }.get(spec.id)


def evaluate(
    db: Database,
    regex: Regex,
    spec: SemanticsSpec,
    endpoints: Endpoints = None,
) -> WalkSet:
    """
    Evaluate `regex` over `db` under `spec`.

    Args:
        db: the database
        regex: the query
        spec: semantics and parameters; `spec.cap` overrides RPQLAB_CAP
        endpoints: optional (source, target); either side may be None

    Returns:
        The finite result set

    Raises:
        InputError: unknown endpoint vertex or missing cost
        ResultCapError: the result exceeds the cap
    """
    if endpoints is not None:
        for v in endpoints:
            if v is not None:
                db.require_vertex(v)
    if spec.id is SemanticsId.CHEAPEST:
        spec.check_costs(db)
    cap = spec.cap if spec.cap is not None else RESULT_CAP
    result = EVALUATORS[spec.id](db, regex, spec, endpoints, cap)
    logger.debug("%s: %d walks", spec.name, len(result))
    return result
