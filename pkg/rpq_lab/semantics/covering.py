"""
Covering semantics: shortest matches that cover a given element.

For every element x (a vertex for ShVC, an edge for ShEC, an atom position for
ShAC) and every endpoint pair, the result holds all matches of minimal length
among those covering x. The search runs on the product extended with one bit
recording whether x has been covered yet:

    (v, q, covered) --e--> (tgt(e), p, covered or x is hit by the step)

Breadth-first distances in this marked product give the minimal lengths, and a
depth-first pass over determinized (position, bit) sets enumerates every walk
reaching that length exactly once.
"""

import logging
from collections import deque
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from rpq_lab.core.database import Database, Edge
from rpq_lab.core.walk import Walk
from rpq_lab.matcher.matches import Endpoints, product_of
from rpq_lab.matcher.product import ProductGraph
from rpq_lab.matcher.walkset import CappedCollector, WalkSet
from rpq_lab.rpq.ast import Regex
from rpq_lab.rpq.glushkov import INITIAL

logger = logging.getLogger(__name__)

Marked = Tuple[str, int, bool]
StepMark = Callable[[Edge, int], bool]  # (edge taken, position entered) -> hits x


class MarkedProduct:
    """
    The product graph with a coverage bit for one element.

    Args:
        product: the underlying product graph
        start_mark: whether the trivial walk at a vertex already covers x
        step_mark: whether taking an edge into a position covers x
    """

    def __init__(self, product: ProductGraph, start_mark: Callable[[str], bool], step_mark: StepMark):
        self.product = product
        self.start_mark = start_mark
        self.step_mark = step_mark
        self._back: Dict[str, Dict[Marked, int]] = {}

    def start(self, vertex: str) -> Marked:
        return (vertex, INITIAL, self.start_mark(vertex))

    def succ(self, state: Marked) -> Iterator[Tuple[Edge, Marked]]:
        v, q, bit = state
        db = self.product.db
        for edge_id, (v2, p) in self.product.succ((v, q)):
            edge = db.edge(edge_id)
            yield edge, (v2, p, bit or self.step_mark(edge, p))

    def pred(self, state: Marked) -> Iterator[Marked]:
        v2, p, bit = state
        db = self.product.db
        for edge_id, (v, q) in self.product.pred((v2, p)):
            hit = self.step_mark(db.edge(edge_id), p)
            if hit and bit:
                yield (v, q, False)
                yield (v, q, True)
            elif not hit:
                yield (v, q, bit)

    def forward(self, source: str) -> Dict[Marked, int]:
        start = self.start(source)
        dist = {start: 0}
        queue = deque([start])
        while queue:
            state = queue.popleft()
            for _, nxt in self.succ(state):
                if nxt not in dist:
                    dist[nxt] = dist[state] + 1
                    queue.append(nxt)
        return dist

    def backward(self, target: str) -> Dict[Marked, int]:
        """Distance from each marked state to a covered accepting state at `target`."""
        if target not in self._back:
            goals = [(target, q, True) for q in sorted(self.product.nfa.accepting)]
            dist = {g: 0 for g in goals}
            queue = deque(goals)
            while queue:
                state = queue.popleft()
                for prev in self.pred(state):
                    if prev not in dist:
                        dist[prev] = dist[state] + 1
                        queue.append(prev)
            self._back[target] = dist
        return self._back[target]

    def shortest_covering(self, source: str) -> Dict[str, int]:
        """Minimal length of a covering match from `source`, per target."""
        nfa = self.product.nfa
        lengths: Dict[str, int] = {}
        for (v, q, bit), d in self.forward(source).items():
            if bit and nfa.is_accepting(q) and d < lengths.get(v, d + 1):
                lengths[v] = d
        return lengths

    def walks_of_length(self, source: str, target: str, length: int) -> Iterator[Walk]:
        """Every covering match source -> target of exactly `length` edges, once each."""
        db, nfa = self.product.db, self.product.nfa
        dist = self.backward(target)

        def gap(vertex: str, marks: FrozenSet[Tuple[int, bool]]) -> Optional[int]:
            found = [dist[(vertex, q, b)] for q, b in marks if (vertex, q, b) in dist]
            return min(found) if found else None

        def done(walk: Walk, marks: FrozenSet[Tuple[int, bool]]) -> bool:
            return walk.tgt == target and any(b and nfa.is_accepting(q) for q, b in marks)

        root_marks = frozenset({(INITIAL, self.start_mark(source))})
        root_gap = gap(source, root_marks)
        if root_gap is None or root_gap > length:
            return
        root = Walk.trivial(source)
        if length == 0:
            if done(root, root_marks):
                yield root
            return
        stack = [(root, root_marks, iter(db.out_edges(source)))]
        while stack:
            walk, marks, edges = stack[-1]
            edge = next(edges, None)
            if edge is None:
                stack.pop()
                continue
            nxt = frozenset(
                (p, b or self.step_mark(edge, p))
                for q, b in marks
                for p in nfa.step(q, edge.label)
            )
            if not nxt:
                continue
            remaining = length - len(walk) - 1
            g = gap(edge.tgt, nxt)
            if g is None or g > remaining:
                continue
            longer = walk.extend(edge.id, edge.tgt)
            if remaining == 0:
                if done(longer, nxt):
                    yield longer
                continue
            stack.append((longer, nxt, iter(db.out_edges(edge.tgt))))


def _cover_all(
    product: ProductGraph,
    elements: Iterable,
    make: Callable[[object], MarkedProduct],
    endpoints: Endpoints,
    out: CappedCollector,
) -> None:
    db = product.db
    source, target = endpoints if endpoints is not None else (None, None)
    sources = [source] if source is not None else db.sorted_vertices()
    for x in elements:
        marked = make(x)
        for s in sources:
            for t, n in sorted(marked.shortest_covering(s).items()):
                if target is not None and t != target:
                    continue
                out.update(marked.walks_of_length(s, t, n))


def _trivial_matches(product: ProductGraph, endpoints: Endpoints) -> List[Walk]:
    if not product.nfa.nullable:
        return []
    source, target = endpoints if endpoints is not None else (None, None)
    return [
        Walk.trivial(v) for v in product.db.sorted_vertices()
        if (source is None or v == source) and (target is None or v == target)
    ]


def vertex_marking(product: ProductGraph, x: str) -> MarkedProduct:
    return MarkedProduct(product, lambda v: v == x, lambda edge, p: edge.tgt == x)


def edge_marking(product: ProductGraph, x: str) -> MarkedProduct:
    return MarkedProduct(product, lambda v: False, lambda edge, p: edge.id == x)


def position_marking(product: ProductGraph, i: int) -> MarkedProduct:
    return MarkedProduct(product, lambda v: False, lambda edge, p: p == i)


def eval_shvc(
    db: Database, regex: Regex, endpoints: Endpoints = None, cap: Optional[int] = None
) -> WalkSet:
    """Shortest matches covering each vertex."""
    product = product_of(db, regex)
    out = CappedCollector(cap, "shvc result")
    _cover_all(product, db.sorted_vertices(), lambda x: vertex_marking(product, x), endpoints, out)
    logger.debug("shvc: %d walks", len(out.walks))
    return out.result()


def eval_shec(
    db: Database, regex: Regex, endpoints: Endpoints = None, cap: Optional[int] = None
) -> WalkSet:
    """Shortest matches covering each edge, plus the trivial matches (they cover no edge)."""
    product = product_of(db, regex)
    out = CappedCollector(cap, "shec result")
    out.update(_trivial_matches(product, endpoints))
    _cover_all(product, sorted(db.edges), lambda x: edge_marking(product, x), endpoints, out)
    logger.debug("shec: %d walks", len(out.walks))
    return out.result()


def eval_shac(
    db: Database, regex: Regex, endpoints: Endpoints = None, cap: Optional[int] = None
) -> WalkSet:
    """
    Shortest matches covering each atom position: those with an accepting run
    entering the position. The trivial matches are kept too, since an empty
    run enters no position.
    """
    product = product_of(db, regex)
    out = CappedCollector(cap, "shac result")
    out.update(_trivial_matches(product, endpoints))
    positions = range(1, product.nfa.k + 1)
    _cover_all(product, positions, lambda i: position_marking(product, i), endpoints, out)
    logger.debug("shac: %d walks", len(out.walks))
    return out.result()


def covering_lengths(db: Database, regex: Regex, vertex: str) -> Dict[Tuple[str, str], int]:
    """Minimal length of a match covering `vertex`, per endpoint pair."""
    marked = vertex_marking(product_of(db, regex), vertex)
    return {
        (s, t): n
        for s in db.sorted_vertices()
        for t, n in marked.shortest_covering(s).items()
    }


def covers_shortest(db: Database, regex: Regex, w: Walk) -> bool:
    """Whether `w` is a shortest match covering some vertex it visits."""
    product = product_of(db, regex)
    if not product.nfa.accepts(w.label(db)):
        return False
    for x in sorted(set(w.vertex_seq)):
        n = vertex_marking(product, x).shortest_covering(w.src).get(w.tgt)
        if n == len(w):
            return True
    return False
