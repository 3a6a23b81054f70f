"""Match sets: bounded enumeration, reachability, finiteness, shortest lengths."""

import logging
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx

from rpq_lab.core.database import Database, Edge
from rpq_lab.core.errors import InputError
from rpq_lab.core.walk import Walk
from rpq_lab.matcher.product import ProductGraph, State
from rpq_lab.matcher.walkset import CappedCollector, WalkSet
from rpq_lab.rpq.ast import Regex, atom_count
from rpq_lab.rpq.glushkov import INITIAL

logger = logging.getLogger(__name__)

Endpoints = Optional[Tuple[str, str]]


@lru_cache(maxsize=256)
def product_of(db: Database, regex: Regex) -> ProductGraph:
    return ProductGraph(db, regex)


def minimal_walk_bound(db: Database, regex: Regex) -> int:
    """
    |V|·(k+1) − 1: every length-, subwalk-, bag- or element-set-minimal match
    is at most this long, since a longer match repeats a product state and the
    enclosed cycle can be cut out.
    """
    return max(len(db.vertices) * (atom_count(regex) + 1) - 1, 0)


def _min_gap(dist: Dict, vertex: str, qs: FrozenSet[int]) -> Optional[int]:
    gaps = [dist[(vertex, q)] for q in qs if (vertex, q) in dist]
    return min(gaps) if gaps else None


def _unit_cost(edge: Edge) -> int:
    return 1


def iter_matches(
    product: ProductGraph,
    bound: int,
    source: Optional[str] = None,
    target: Optional[str] = None,
    det_simple: bool = False,
    prefix_ok: Optional[Callable[[Walk], bool]] = None,
    cost: Optional[Callable[[Edge], int]] = None,
    dist: Optional[Dict[State, int]] = None,
) -> Iterator[Tuple[Walk, FrozenSet[int]]]:
    """
    Depth-first enumeration of the matches whose length (or cost) is at most `bound`.

    Each walk is visited once: the search carries the determinized automaton
    state, so two runs of the same walk never produce two visits. Branches that
    cannot reach acceptance within the remaining budget are cut.

    Args:
        product: product graph of the database and query
        bound: maximum walk length, or maximum cost when `cost` is given
        source: restrict to walks starting here
        target: restrict to walks ending here
        det_simple: skip walks that revisit a (vertex, determinized state) pair;
            used by order-based minimization where such walks are never minimal
        prefix_ok: prune every walk (and its extensions) failing this predicate
        cost: positive edge weight; defaults to 1 per edge
        dist: remaining-budget lower bound per product state, in the same unit
            as `cost`; defaults to hop distance to acceptance

    Yields:
        (walk, determinized state after reading its label), in depth-first order
        over edges sorted by identifier
    """
    db, nfa = product.db, product.nfa
    if dist is None:
        dist = product.dist_to_accept(target)
    if cost is None:
        cost = _unit_cost
    sources = [source] if source is not None else db.sorted_vertices()
    for s in sources:
        q0 = frozenset({INITIAL})
        gap = _min_gap(dist, s, q0)
        if gap is None or gap > bound:
            continue
        root = Walk.trivial(s)
        if prefix_ok is not None and not prefix_ok(root):
            continue
        if nfa.nullable and (target is None or target == s):
            yield root, q0
        on_path = {(s, q0)}
        stack = [(root, q0, 0, iter(db.out_edges(s)))]
        while stack:
            walk, qs, spent, edges = stack[-1]
            edge = next(edges, None)
            if edge is None:
                stack.pop()
                on_path.discard((walk.tgt, qs))
                continue
            nxt = nfa.det_step(qs, edge.label)
            if not nxt:
                continue
            total = spent + cost(edge)
            gap = _min_gap(dist, edge.tgt, nxt)
            if gap is None or total + gap > bound:
                continue
            key = (edge.tgt, nxt)
            if det_simple and key in on_path:
                continue
            longer = walk.extend(edge.id, edge.tgt)
            if prefix_ok is not None and not prefix_ok(longer):
                continue
            if any(nfa.is_accepting(q) for q in nxt) and (target is None or edge.tgt == target):
                yield longer, nxt
            on_path.add(key)
            stack.append((longer, nxt, total, iter(db.out_edges(edge.tgt))))


def matches_upto(
    db: Database,
    regex: Regex,
    bound: int,
    endpoints: Endpoints = None,
    cap: Optional[int] = None,
) -> WalkSet:
    """
    Every match of length at most `bound`, optionally between fixed endpoints.

    Raises:
        InputError: negative bound or unknown endpoint
        ResultCapError: more than `cap` matches
    """
    if bound < 0:
        raise InputError("length bound must be non-negative")
    source, target = endpoints if endpoints is not None else (None, None)
    for v in (source, target):
        if v is not None:
            db.require_vertex(v)
    product = product_of(db, regex)
    out = CappedCollector(cap, "match set")
    out.update(w for w, _ in iter_matches(product, bound, source, target))
    return out.result()


def has_match(db: Database, regex: Regex, source: str, target: str) -> bool:
    db.require_vertex(source)
    db.require_vertex(target)
    product = product_of(db, regex)
    reached = product.dist_from(source)
    return any(state in reached for state in product.accepting_states(target))


def match_set_finite(db: Database, regex: Regex) -> bool:
    """True iff no useful product state lies on a cycle."""
    return nx.is_directed_acyclic_graph(product_of(db, regex).useful_graph())


def shortest_match_lengths(
    db: Database, regex: Regex, sources: Optional[List[str]] = None
) -> Dict[Tuple[str, str], int]:
    """Length of a shortest match per endpoint pair, optionally only from `sources`."""
    product = product_of(db, regex)
    lengths: Dict[Tuple[str, str], int] = {}
    for s in (sources if sources is not None else db.sorted_vertices()):
        for (t, q), d in product.dist_from(s).items():
            if product.nfa.is_accepting(q):
                if d < lengths.get((s, t), d + 1):
                    lengths[(s, t)] = d
    return lengths


def all_endpoint_pairs(db: Database) -> List[Tuple[str, str]]:
    vs = db.sorted_vertices()
    return [(s, t) for s in vs for t in vs]
