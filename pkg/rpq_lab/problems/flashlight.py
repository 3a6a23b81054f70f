"""
Flashlight enumeration.

Depth-first search over walk prefixes from the source, following out-edges in
identifier order. A prefix is explored only when the extensibility check says
some result extends it, and it is emitted when it is itself a result. Each
prefix is visited once, so no walk is emitted twice, and the search never goes
deeper than the longest result.
"""

import logging
from typing import Iterator, Optional

from rpq_lab.core.database import Database
from rpq_lab.core.walk import Walk
from rpq_lab.problems.decision import ProblemSolver
from rpq_lab.rpq.ast import Regex
from rpq_lab.semantics.spec import SemanticsSpec

logger = logging.getLogger(__name__)


class Flashlight:
    """
    Streaming enumerator for one query.

    Attributes:
        max_depth: deepest prefix explored so far
        emitted: number of walks emitted so far
    """

    def __init__(self, db: Database, regex: Regex, spec: SemanticsSpec):
        self.db = db
        self.solver = ProblemSolver(db, regex, spec)
        self.max_depth = 0
        self.emitted = 0

    def enumerate(self, source: Optional[str] = None, target: Optional[str] = None) -> Iterator[Walk]:
        for v in (source, target):
            if v is not None:
                self.db.require_vertex(v)
        sources = [source] if source is not None else self.db.sorted_vertices()
        for s in sources:
            root = Walk.trivial(s)
            if self.solver.extensibility(root, target):
                yield from self._forward(root, target)

    def _forward(self, w: Walk, target: Optional[str]) -> Iterator[Walk]:
        # iterative, so deep results do not hit the recursion limit
        stack = [(w, None)]
        while stack:
            walk, edges = stack[-1]
            if edges is None:
                self.max_depth = max(self.max_depth, len(walk))
                if (target is None or walk.tgt == target) and self.solver.membership(walk):
                    self.emitted += 1
                    yield walk
                edges = iter(self.db.out_edges(walk.tgt))
                stack[-1] = (walk, edges)
            edge = next(edges, None)
            if edge is None:
                stack.pop()
                continue
            longer = walk.extend(edge.id, edge.tgt)
            if self.solver.extensibility(longer, target):
                stack.append((longer, None))


def enumerate_flashlight(
    db: Database,
    regex: Regex,
    source: Optional[str],
    target: Optional[str],
    spec: SemanticsSpec,
) -> Iterator[Walk]:
    """Stream the result walks from `source` to `target` (either may be None) in depth-first order."""
    return Flashlight(db, regex, spec).enumerate(source, target)
