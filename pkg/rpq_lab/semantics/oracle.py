"""
Definition-level evaluation.

Each semantics is computed straight from its definition over a bounded match
set, with no pruning beyond the length bound. It is slow and exists to check
the engines in evaluate.py against.

Bounds:
    order-based          |V|·(k+1) − 1 (cycle removal makes every longer match non-minimal)
    covering             2·|V|·(k+1) − 1 (a shortest covering match is simple in the marked product)
    binding-trail        |E|·k
    filters              their own maximal accepted length
    giving-up            finiteness decided by a match with length in [N, 2N − 1], N = |V|·(k+1)
"""

from typing import Callable, Dict, List, Optional, Set, Tuple

from rpq_lab.core.database import Database
from rpq_lab.core.walk import Walk
from rpq_lab.matcher.matches import Endpoints, matches_upto, minimal_walk_bound, product_of
from rpq_lab.matcher.walkset import WalkSet
from rpq_lab.rpq.ast import Regex, atom_count
from rpq_lab.rpq.glushkov import glushkov
from rpq_lab.semantics.demo import log_length_limit, shortest_per_endpoints
from rpq_lab.semantics.evaluate import filter_for, order_for
from rpq_lab.semantics.filters import TRAIL
from rpq_lab.semantics.orders import minima_per_endpoints, trim
from rpq_lab.semantics.runs import binding_trail_bound, has_binding_run
from rpq_lab.semantics.spec import SemanticsId, SemanticsSpec


def covering_bound(db: Database, regex: Regex) -> int:
    return max(2 * len(db.vertices) * (atom_count(regex) + 1) - 1, 0)


def oracle_finite(db: Database, regex: Regex) -> bool:
    """
    Whether the match set is finite, decided by match lengths.

    With N = |V|·(k+1) product states, an infinite match set has a match of
    length at least N, and the shortest such match is shorter than 2N: a longer
    one contains a cycle of length at most N that can be cut out. So it is
    enough to look for a match whose length lies in [N, 2N − 1], layer by layer.
    """
    product = product_of(db, regex)
    n = minimal_walk_bound(db, regex) + 1
    layer = {product.initial(v) for v in db.sorted_vertices()}
    for length in range(1, 2 * n):
        layer = {nxt for state in layer for _, nxt in product.succ(state)}
        if length >= n and any(product.is_accepting(state) for state in layer):
            return False
    return True


def _covering(
    db: Database,
    regex: Regex,
    endpoints: Endpoints,
    elements: List,
    covers: Callable[[Walk, object], bool],
    cap: Optional[int],
) -> Set[Walk]:
    candidates = matches_upto(db, regex, covering_bound(db, regex), endpoints, cap)
    out: Set[Walk] = set()
    for x in elements:
        best: Dict[Tuple[str, str], int] = {}
        hits = [w for w in candidates if covers(w, x)]
        for w in hits:
            best[w.ep] = min(best.get(w.ep, len(w)), len(w))
        out.update(w for w in hits if len(w) == best[w.ep])
    return out


def oracle(
    db: Database,
    regex: Regex,
    spec: SemanticsSpec,
    endpoints: Endpoints = None,
    cap: Optional[int] = None,
) -> WalkSet:
    """
    Evaluate `spec` from its definition.

    `cap` bounds the number of candidate matches enumerated, not the result.

    Raises:
        ResultCapError: more than `cap` candidates
    """
    sid = spec.id
    nfa = glushkov(regex)

    f = filter_for(spec)
    if f is not None:
        return matches_upto(db, regex, f.max_length(db), endpoints, cap).where(f.accepts)

    order = order_for(spec, db)
    if order is not None:
        candidates = matches_upto(db, regex, minimal_walk_bound(db, regex), endpoints, cap)
        return WalkSet(minima_per_endpoints(candidates, trim(order)))

    if sid is SemanticsId.SHORTEST_TRAIL:
        trails = matches_upto(db, regex, TRAIL.max_length(db), endpoints, cap).where(TRAIL.accepts)
        return WalkSet(shortest_per_endpoints(trails))

    if sid is SemanticsId.SHVC:
        return WalkSet(_covering(
            db, regex, endpoints, db.sorted_vertices(), lambda w, x: x in w.vertex_seq, cap
        ))

    trivial = matches_upto(db, regex, 0, endpoints, cap)
    if sid is SemanticsId.SHEC:
        return trivial | WalkSet(_covering(
            db, regex, endpoints, sorted(db.edges), lambda w, x: x in w.edge_seq, cap
        ))

    if sid is SemanticsId.SHAC:
        return trivial | WalkSet(_covering(
            db, regex, endpoints, list(range(1, nfa.k + 1)),
            lambda w, i: i in nfa.covered_positions(w.label(db)), cap,
        ))

    if sid is SemanticsId.BINDING_TRAIL:
        candidates = matches_upto(db, regex, binding_trail_bound(db, regex), endpoints, cap)
        return candidates.where(lambda w: has_binding_run(nfa, w.edge_seq, w.label(db)))

    if sid is SemanticsId.LOG_LENGTH:
        limit = log_length_limit(db)
        return matches_upto(db, regex, limit, endpoints, cap) if limit >= 0 else WalkSet()

    if sid is SemanticsId.GIVING_UP:
        if not oracle_finite(db, regex):
            return WalkSet()
        return matches_upto(db, regex, minimal_walk_bound(db, regex), endpoints, cap)

    if sid is SemanticsId.WEIRD:
        fallback = SemanticsSpec(id=SemanticsId.SHORTEST if oracle_finite(db, regex) else SemanticsId.TRAIL)
        return oracle(db, regex, fallback, endpoints, cap)

    raise ValueError(f"no oracle for {sid.value}")
