"""
Binding-trail semantics.

A run of the position automaton binds each step's edge to the atom position it
enters. A walk is kept when some accepting run never binds the same edge to the
same position twice. Every step consumes a fresh (edge, position) pair, so runs
are at most |E|·k long and the search over runs terminates.
"""

import logging
from typing import FrozenSet, Optional, Sequence, Tuple

from rpq_lab.core.database import Database
from rpq_lab.core.walk import Walk
from rpq_lab.matcher.matches import Endpoints, product_of
from rpq_lab.matcher.walkset import CappedCollector, WalkSet
from rpq_lab.rpq.ast import Regex
from rpq_lab.rpq.glushkov import INITIAL, GlushkovNFA

logger = logging.getLogger(__name__)

Binding = Tuple[str, int]  # (edge id, atom position)


def binding_trail_bound(db: Database, regex: Regex) -> int:
    return len(db.edge_table) * product_of(db, regex).k


def eval_bt(
    db: Database, regex: Regex, endpoints: Endpoints = None, cap: Optional[int] = None
) -> WalkSet:
    """Walks with an accepting run that uses no (edge, position) pair twice."""
    product = product_of(db, regex)
    nfa = product.nfa
    source, target = endpoints if endpoints is not None else (None, None)
    dist = product.dist_to_accept(target)
    out = CappedCollector(cap, "binding-trail result")
    sources = [source] if source is not None else db.sorted_vertices()
    for s in sources:
        if (s, INITIAL) not in dist:
            continue
        root = Walk.trivial(s)
        if nfa.nullable and (target is None or target == s):
            out.add(root)
        used: FrozenSet[Binding] = frozenset()
        stack = [(root, INITIAL, used, iter(product.succ((s, INITIAL))))]
        while stack:
            walk, q, used, moves = stack[-1]
            move = next(moves, None)
            if move is None:
                stack.pop()
                continue
            edge_id, (v2, p) = move
            if (edge_id, p) in used or (v2, p) not in dist:
                continue
            longer = walk.extend(edge_id, v2)
            if nfa.is_accepting(p) and (target is None or v2 == target):
                out.add(longer)
            stack.append((longer, p, used | {(edge_id, p)}, iter(product.succ((v2, p)))))
    logger.debug("binding-trail: %d walks", len(out.walks))
    return out.result()


def has_binding_run(nfa: GlushkovNFA, edge_ids: Sequence[str], labels: Sequence[str]) -> bool:
    """Whether the labeled edge sequence has an accepting run binding no pair twice."""

    def search(i: int, q: int, used: FrozenSet[Binding]) -> bool:
        if i == len(edge_ids):
            return nfa.is_accepting(q)
        for p in nfa.step(q, labels[i]):
            if (edge_ids[i], p) not in used and search(i + 1, p, used | {(edge_ids[i], p)}):
                return True
        return False

    return search(0, INITIAL, frozenset())
