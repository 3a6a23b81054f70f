"""
Decision problems over a fixed database, query and semantics: existence,
membership and extensibility.

Shortest-walk and shortest-vertex-cover semantics use polynomial checks on the
product graph. Filter semantics check the predicate directly. Every other
semantics falls back on its evaluated result set, computed once per endpoint
pair and cached by the solver.
"""

import logging
from typing import Dict, FrozenSet, Optional, Set, Tuple

from rpq_lab.core.database import Database
from rpq_lab.core.errors import InconsistentWalk
from rpq_lab.core.walk import Walk, consistent_with
from rpq_lab.matcher.matches import has_match, match_set_finite, product_of, shortest_match_lengths
from rpq_lab.matcher.walkset import WalkSet
from rpq_lab.rpq.ast import Regex
from rpq_lab.rpq.glushkov import INITIAL
from rpq_lab.semantics.covering import covers_shortest, vertex_marking
from rpq_lab.semantics.evaluate import evaluate, filter_for
from rpq_lab.semantics.spec import COVERING, ORDER_BASED, SemanticsId, SemanticsSpec

logger = logging.getLogger(__name__)

Key = Tuple[Optional[str], Optional[str]]


class ProblemSolver:
    """
    Answers the decision problems for one (database, query, semantics) triple.

    Args:
        db: the database
        regex: the query
        spec: the semantics
    """

    def __init__(self, db: Database, regex: Regex, spec: SemanticsSpec):
        self.db = db
        self.regex = regex
        self.spec = spec
        self.product = product_of(db, regex)
        self._results: Dict[Key, WalkSet] = {}
        self._prefixes: Dict[Key, Set[Walk]] = {}
        self._lengths: Optional[Dict[Tuple[str, str], int]] = None

    # ------------------------------------------------------------------
    # shared helpers
    # ------------------------------------------------------------------

    def results(self, source: Optional[str] = None, target: Optional[str] = None) -> WalkSet:
        key = (source, target)
        if key not in self._results:
            self._results[key] = evaluate(self.db, self.regex, self.spec, (source, target))
        return self._results[key]

    def _result_prefixes(self, source: Optional[str], target: Optional[str]) -> Set[Walk]:
        key = (source, target)
        if key not in self._prefixes:
            self._prefixes[key] = {
                w.prefix(i) for w in self.results(source, target) for i in range(len(w) + 1)
            }
        return self._prefixes[key]

    def _shortest_lengths(self) -> Dict[Tuple[str, str], int]:
        if self._lengths is None:
            self._lengths = shortest_match_lengths(self.db, self.regex)
        return self._lengths

    def _states_after(self, w: Walk) -> FrozenSet[int]:
        qs = frozenset({INITIAL})
        for label in w.label(self.db):
            qs = self.product.nfa.det_step(qs, label)
        return qs

    def _require(self, w: Walk) -> None:
        if not consistent_with(self.db, w):
            raise InconsistentWalk(f"walk {w} is not consistent with the database")

    # ------------------------------------------------------------------
    # problems
    # ------------------------------------------------------------------

    def existence(self, source: Optional[str] = None, target: Optional[str] = None) -> bool:
        """Is some result walk from `source` to `target`? Either side may be left open."""
        for v in (source, target):
            if v is not None:
                self.db.require_vertex(v)
        sid = self.spec.id
        if sid in ORDER_BASED or sid in COVERING or (
            sid is SemanticsId.WEIRD and match_set_finite(self.db, self.regex)
        ):
            # minima exist wherever matches do, and every match covers its own source
            if source is not None and target is not None:
                return has_match(self.db, self.regex, source, target)
            return any(
                (source is None or s == source) and (target is None or t == target)
                for s, t in self._shortest_lengths()
            )
        return len(self.results(source, target)) > 0

    def membership(self, w: Walk) -> bool:
        """Does `w` belong to the result?"""
        self._require(w)
        if not self.product.nfa.accepts(w.label(self.db)):
            return False
        sid = self.spec.id
        f = filter_for(self.spec)
        if f is not None:
            return f(w)
        if sid is SemanticsId.SHORTEST:
            return self._shortest_lengths().get(w.ep) == len(w)
        if sid is SemanticsId.SHVC:
            return covers_shortest(self.db, self.regex, w)
        return w in self.results(w.src, w.tgt)

    def extensibility(self, w: Walk, target: Optional[str] = None) -> bool:
        """Is there w2 with w·w2 in the result (ending at `target` when given)?"""
        self._require(w)
        if target is not None:
            self.db.require_vertex(target)
        qs = self._states_after(w)
        if not qs:
            return False
        sid = self.spec.id
        if sid is SemanticsId.SHORTEST:
            return self._shortest_extensible(w, qs, target)
        if sid is SemanticsId.SHVC:
            return self._shvc_extensible(w, target)
        f = filter_for(self.spec)
        if f is not None and not f(w):
            return False
        return w in self._result_prefixes(w.src, target)

    def _shortest_extensible(self, w: Walk, qs: FrozenSet[int], target: Optional[str]) -> bool:
        targets = [target] if target is not None else self.db.sorted_vertices()
        for t in targets:
            best = self._shortest_lengths().get((w.src, t))
            if best is None:
                continue
            dist = self.product.dist_to_accept(t)
            gaps = [dist[(w.tgt, q)] for q in qs if (w.tgt, q) in dist]
            if gaps and len(w) + min(gaps) == best:
                return True
        return False

    def _shvc_extensible(self, w: Walk, target: Optional[str]) -> bool:
        nfa = self.product.nfa
        targets = [target] if target is not None else self.db.sorted_vertices()
        for x in self.db.sorted_vertices():
            marked = vertex_marking(self.product, x)
            lengths = marked.shortest_covering(w.src)
            marks = frozenset({(INITIAL, marked.start_mark(w.src))})
            for e in w.edge_seq:
                edge = self.db.edge(e)
                marks = frozenset(
                    (p, b or marked.step_mark(edge, p)) for q, b in marks for p in nfa.step(q, edge.label)
                )
            for t in targets:
                if t not in lengths:
                    continue
                dist = marked.backward(t)
                gaps = [dist[(w.tgt, q, b)] for q, b in marks if (w.tgt, q, b) in dist]
                if gaps and len(w) + min(gaps) == lengths[t]:
                    return True
        return False


def existence(
    db: Database, regex: Regex, source: Optional[str], target: Optional[str], spec: SemanticsSpec
) -> bool:
    return ProblemSolver(db, regex, spec).existence(source, target)


def membership(db: Database, regex: Regex, w: Walk, spec: SemanticsSpec) -> bool:
    return ProblemSolver(db, regex, spec).membership(w)


def extensibility(
    db: Database, regex: Regex, w: Walk, target: Optional[str], spec: SemanticsSpec
) -> bool:
    return ProblemSolver(db, regex, spec).extensibility(w, target)
