"""
Synchronous product of a database with the Glushkov automaton of a query.

A product state is a pair (vertex, automaton state). Following a database edge
e from (v, q) leads to (tgt(e), p) for every position p that q can enter by
reading lbl(e). Accepting product walks are exactly the runs of matches.
"""

import logging
from collections import deque
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from rpq_lab.core.database import Database
from rpq_lab.rpq.ast import Regex
from rpq_lab.rpq.glushkov import INITIAL, GlushkovNFA, glushkov

logger = logging.getLogger(__name__)

State = Tuple[str, int]
Transition = Tuple[str, State]  # (edge id, next state)


class ProductGraph:
    """
    Product of `db` and glushkov(`regex`).

    Args:
        db: the database
        regex: the query
    """

    def __init__(self, db: Database, regex: Regex):
        self.db = db
        self.regex = regex
        self.nfa: GlushkovNFA = glushkov(regex)
        self._succ: Dict[State, List[Transition]] = {}
        self._pred: Dict[State, List[Transition]] = {}
        for v in db.sorted_vertices():
            for q in self.nfa.states:
                self._succ[(v, q)] = []
                self._pred[(v, q)] = []
        for v in db.sorted_vertices():
            for q in self.nfa.states:
                for edge in db.out_edges(v):
                    for p in self.nfa.step(q, edge.label):
                        nxt = (edge.tgt, p)
                        self._succ[(v, q)].append((edge.id, nxt))
                        self._pred[nxt].append((edge.id, (v, q)))
        logger.debug(
            "product built: %d states, %d transitions",
            len(self._succ),
            sum(len(t) for t in self._succ.values()),
        )

    @property
    def k(self) -> int:
        return self.nfa.k

    @property
    def states(self) -> Iterable[State]:
        return self._succ.keys()

    def succ(self, state: State) -> List[Transition]:
        return self._succ.get(state, [])

    def pred(self, state: State) -> List[Transition]:
        return self._pred.get(state, [])

    def initial(self, vertex: str) -> State:
        return (vertex, INITIAL)

    def is_accepting(self, state: State) -> bool:
        return self.nfa.is_accepting(state[1])

    def accepting_states(self, target: Optional[str] = None) -> List[State]:
        vertices = [target] if target is not None else self.db.sorted_vertices()
        return [(v, q) for v in vertices for q in sorted(self.nfa.accepting)]

    def bfs_from(self, sources: Iterable[State]) -> Dict[State, int]:
        dist: Dict[State, int] = {}
        queue = deque()
        for s in sources:
            if s not in dist:
                dist[s] = 0
                queue.append(s)
        while queue:
            state = queue.popleft()
            for _, nxt in self._succ.get(state, ()):
                if nxt not in dist:
                    dist[nxt] = dist[state] + 1
                    queue.append(nxt)
        return dist

    def bfs_to(self, targets: Iterable[State]) -> Dict[State, int]:
        dist: Dict[State, int] = {}
        queue = deque()
        for s in targets:
            if s not in dist:
                dist[s] = 0
                queue.append(s)
        while queue:
            state = queue.popleft()
            for _, prev in self._pred.get(state, ()):
                if prev not in dist:
                    dist[prev] = dist[state] + 1
                    queue.append(prev)
        return dist

    def dist_from(self, source: str) -> Dict[State, int]:
        return self._dist_from_cache(source)

    def dist_to_accept(self, target: Optional[str] = None) -> Dict[State, int]:
        """Distance from each state to an accepting state (at `target` if given)."""
        if target not in self._to_accept:
            self._to_accept[target] = self.bfs_to(self.accepting_states(target))
        return self._to_accept[target]

    @cached_property
    def _to_accept(self) -> Dict[Optional[str], Dict[State, int]]:
        return {}

    @cached_property
    def _from_cache(self) -> Dict[str, Dict[State, int]]:
        return {}

    def _dist_from_cache(self, source: str) -> Dict[State, int]:
        if source not in self._from_cache:
            self._from_cache[source] = self.bfs_from([self.initial(source)])
        return self._from_cache[source]

    @cached_property
    def useful_states(self) -> FrozenSet[State]:
        """States reachable from some initial state and co-reachable to acceptance."""
        forward = self.bfs_from(self.initial(v) for v in self.db.sorted_vertices())
        backward = self.dist_to_accept(None)
        return frozenset(s for s in forward if s in backward)

    def useful_graph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        useful = self.useful_states
        graph.add_nodes_from(useful)
        for state in useful:
            for edge_id, nxt in self._succ[state]:
                if nxt in useful:
                    graph.add_edge(state, nxt, key=edge_id)
        return graph

    def covered_vertices(self) -> Set[str]:
        return {v for v, _ in self.useful_states}

    def covered_edges(self) -> Set[str]:
        useful = self.useful_states
        return {
            edge_id
            for state in useful
            for edge_id, nxt in self._succ[state]
            if nxt in useful
        }

    def covered_positions(self) -> Set[int]:
        """Atom positions entered by some accepting run."""
        return {q for _, q in self.useful_states if q != INITIAL}
