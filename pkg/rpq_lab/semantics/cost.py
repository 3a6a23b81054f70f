"""Cheapest-walk semantics: all matches of minimal total label cost per endpoint pair."""

import logging
from typing import Callable, Dict, Optional, Tuple

import networkx as nx

from rpq_lab.core.database import Database, Edge
from rpq_lab.matcher.matches import Endpoints, iter_matches, product_of
from rpq_lab.matcher.product import ProductGraph, State
from rpq_lab.matcher.walkset import CappedCollector, WalkSet
from rpq_lab.rpq.ast import Regex

logger = logging.getLogger(__name__)


def weighted_product(product: ProductGraph, cost_of: Callable[[str], int]) -> nx.DiGraph:
    """
    The product as a weighted digraph.

    Parallel transitions between two product states enter the same position,
    so they read the same label and carry the same weight.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(product.states)
    db = product.db
    for state in product.states:
        for edge_id, nxt in product.succ(state):
            graph.add_edge(state, nxt, weight=cost_of(db.lbl(edge_id)))
    return graph


def cheapest_costs(
    db: Database, regex: Regex, cost_of: Callable[[str], int]
) -> Dict[Tuple[str, str], int]:
    """Minimal match cost per endpoint pair that has a match."""
    product = product_of(db, regex)
    graph = weighted_product(product, cost_of)
    costs: Dict[Tuple[str, str], int] = {}
    for s in db.sorted_vertices():
        reached = nx.single_source_dijkstra_path_length(graph, product.initial(s))
        for (t, q), c in reached.items():
            if product.nfa.is_accepting(q) and c < costs.get((s, t), c + 1):
                costs[(s, t)] = c
    return costs


def eval_chw(
    db: Database,
    regex: Regex,
    cost_of: Callable[[str], int],
    endpoints: Endpoints = None,
    cap: Optional[int] = None,
) -> WalkSet:
    """
    Dijkstra forward for the minimal cost of each pair, Dijkstra backward on
    the reversed product for the pruning bound, then a depth-first pass that
    emits every walk meeting the minimum exactly.

    Raises:
        InputError: a label of `db` has no cost
        ResultCapError: more than `cap` walks
    """
    for label in sorted(db.labels):
        cost_of(label)
    product = product_of(db, regex)
    graph = weighted_product(product, cost_of)
    reverse = graph.reverse(copy=False)
    source, target = endpoints if endpoints is not None else (None, None)

    def edge_cost(edge: Edge) -> int:
        return cost_of(edge.label)

    backward: Dict[str, Dict[State, int]] = {}
    out = CappedCollector(cap, "cheapest result")
    for (s, t), c in sorted(cheapest_costs(db, regex, cost_of).items()):
        if (source is not None and s != source) or (target is not None and t != target):
            continue
        if t not in backward:
            backward[t] = nx.multi_source_dijkstra_path_length(reverse, set(product.accepting_states(t)))
        out.update(w for w, _ in iter_matches(product, c, s, t, cost=edge_cost, dist=backward[t]))
    logger.debug("cheapest: %d walks", len(out.walks))
    return out.result()
