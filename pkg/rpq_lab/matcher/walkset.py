"""Finite sets of walks with a canonical iteration order."""

from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from rpq_lab.core.errors import ResultCapError
from rpq_lab.core.walk import Walk


class WalkSet:
    """
    Immutable set of walks iterated in shortlex order of their flattened
    identifier sequence.
    """

    __slots__ = ("_walks", "_ordered")

    def __init__(self, walks: Iterable[Walk] = ()):
        self._walks: FrozenSet[Walk] = frozenset(walks)
        self._ordered: Optional[List[Walk]] = None

    def _order(self) -> List[Walk]:
        if self._ordered is None:
            self._ordered = sorted(self._walks, key=lambda w: w.sort_key)
        return self._ordered

    def __iter__(self) -> Iterator[Walk]:
        return iter(self._order())

    def __len__(self) -> int:
        return len(self._walks)

    def __contains__(self, w: object) -> bool:
        return w in self._walks

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WalkSet):
            return self._walks == other._walks
        if isinstance(other, (set, frozenset)):
            return self._walks == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._walks)

    def __repr__(self) -> str:
        return f"WalkSet({[str(w) for w in self]})"

    def __or__(self, other: "WalkSet") -> "WalkSet":
        return WalkSet(self._walks | other._walks)

    def __and__(self, other: "WalkSet") -> "WalkSet":
        return WalkSet(self._walks & other._walks)

    def __sub__(self, other: "WalkSet") -> "WalkSet":
        return WalkSet(self._walks - other._walks)

    def __le__(self, other: "WalkSet") -> bool:
        return self._walks <= other._walks

    def __lt__(self, other: "WalkSet") -> bool:
        return self._walks < other._walks

    @property
    def walks(self) -> FrozenSet[Walk]:
        return self._walks

    def where(self, predicate: Callable[[Walk], bool]) -> "WalkSet":
        return WalkSet(w for w in self._walks if predicate(w))

    def between(self, source: Optional[str] = None, target: Optional[str] = None) -> "WalkSet":
        return self.where(
            lambda w: (source is None or w.src == source) and (target is None or w.tgt == target)
        )

    def by_endpoints(self) -> Dict[Tuple[str, str], List[Walk]]:
        groups: Dict[Tuple[str, str], List[Walk]] = {}
        for w in self:
            groups.setdefault(w.ep, []).append(w)
        return groups

    def max_length(self) -> int:
        return max((len(w) for w in self._walks), default=-1)

    def lines(self) -> List[str]:
        return [str(w) for w in self]


class CappedCollector:
    """Accumulates walks and raises ResultCapError past the cap."""

    def __init__(self, cap: Optional[int], what: str = "result"):
        self.cap = cap
        self.what = what
        self.walks = set()

    def add(self, w: Walk) -> None:
        self.walks.add(w)
        if self.cap is not None and len(self.walks) > self.cap:
            raise ResultCapError(self.cap, self.what)

    def update(self, ws: Iterable[Walk]) -> None:
        for w in ws:
            self.add(w)

    def result(self) -> WalkSet:
        return WalkSet(self.walks)
