"""
Glushkov (position) automata.

State 0 is the initial state and states 1..k are the atom positions of the
expression. Every transition into position p reads the label of the p-th atom,
so a run over a word is just the sequence of positions it visits.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from rpq_lab.rpq.ast import Atom, Concat, Epsilon, Regex, Star, Union, atoms

INITIAL = 0


@dataclass(frozen=True)
class GlushkovNFA:
    labels: Tuple[str, ...]  # labels[p - 1] is the label read when entering p
    first: FrozenSet[int]
    last: FrozenSet[int]
    follow: Tuple[FrozenSet[int], ...]  # follow[p - 1]
    nullable: bool

    @property
    def k(self) -> int:
        return len(self.labels)

    @property
    def states(self) -> range:
        return range(self.k + 1)

    def label_of(self, p: int) -> str:
        return self.labels[p - 1]

    def successors(self, q: int) -> FrozenSet[int]:
        return self.first if q == INITIAL else self.follow[q - 1]

    def step(self, q: int, label: str) -> List[int]:
        return sorted(p for p in self.successors(q) if self.labels[p - 1] == label)

    def is_accepting(self, q: int) -> bool:
        return q in self.last if q != INITIAL else self.nullable

    @property
    def accepting(self) -> FrozenSet[int]:
        return self.last | ({INITIAL} if self.nullable else frozenset())

    def det_step(self, qs: FrozenSet[int], label: str) -> FrozenSet[int]:
        return frozenset(p for q in qs for p in self.step(q, label))

    def accepts(self, word: Sequence[str]) -> bool:
        current = frozenset({INITIAL})
        for label in word:
            current = self.det_step(current, label)
            if not current:
                return False
        return any(self.is_accepting(q) for q in current)

    def covered_positions(self, word: Sequence[str]) -> Set[int]:
        """Positions entered by at least one accepting run over `word`."""
        forward: List[FrozenSet[int]] = [frozenset({INITIAL})]
        for label in word:
            forward.append(self.det_step(forward[-1], label))
        alive = frozenset(q for q in forward[-1] if self.is_accepting(q))
        used: Set[int] = set()
        for j in range(len(word), 0, -1):
            used |= alive
            alive = frozenset(q for q in forward[j - 1] if self.successors(q) & alive)
        return used if any(self.is_accepting(q) for q in forward[-1]) else set()


def _build(r: Regex, offset: int, follow: Dict[int, Set[int]]):
    """Return (nullable, first, last, atom count) for r, numbering atoms after offset."""
    if isinstance(r, Epsilon):
        return True, frozenset(), frozenset(), 0
    if isinstance(r, Atom):
        p = offset + 1
        follow.setdefault(p, set())
        return False, frozenset({p}), frozenset({p}), 1
    if isinstance(r, Star):
        _, first, last, n = _build(r.inner, offset, follow)
        for p in last:
            follow[p] |= first
        return True, first, last, n
    if isinstance(r, Union):
        n1, f1, l1, c1 = _build(r.left, offset, follow)
        n2, f2, l2, c2 = _build(r.right, offset + c1, follow)
        return n1 or n2, f1 | f2, l1 | l2, c1 + c2
    if isinstance(r, Concat):
        n1, f1, l1, c1 = _build(r.left, offset, follow)
        n2, f2, l2, c2 = _build(r.right, offset + c1, follow)
        for p in l1:
            follow[p] |= f2
        first = f1 | f2 if n1 else f1
        last = l1 | l2 if n2 else l2
        return n1 and n2, first, last, c1 + c2
    raise TypeError(f"not a regex node: {r!r}")


@lru_cache(maxsize=4096)
def glushkov(r: Regex) -> GlushkovNFA:
    follow: Dict[int, Set[int]] = {}
    nullable, first, last, k = _build(r, 0, follow)
    return GlushkovNFA(
        labels=tuple(atoms(r)),
        first=first,
        last=last,
        follow=tuple(frozenset(follow.get(p, ())) for p in range(1, k + 1)),
        nullable=nullable,
    )


def language_contains(r: Regex, word: Sequence[str]) -> bool:
    return glushkov(r).accepts(word)
