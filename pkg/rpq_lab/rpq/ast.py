"""Regular expression syntax trees over edge labels."""

from dataclasses import dataclass
from functools import reduce
from typing import List, Sequence, Union as TypingUnion

from rpq_lab.core.renaming import Relabeling, relabel


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Atom:
    label: str


@dataclass(frozen=True)
class Star:
    inner: "Regex"


@dataclass(frozen=True)
class Concat:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Union:
    left: "Regex"
    right: "Regex"


Regex = TypingUnion[Epsilon, Atom, Star, Concat, Union]

EPS = Epsilon()


def atoms(r: Regex) -> List[str]:
    """Labels of the atom occurrences, left to right; position i is atoms(r)[i-1]."""
    out: List[str] = []
    stack = [r]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            out.append(node.label)
        elif isinstance(node, Star):
            stack.append(node.inner)
        elif isinstance(node, (Concat, Union)):
            stack.append(node.right)
            stack.append(node.left)
    return out


def atom_count(r: Regex) -> int:
    return len(atoms(r))


def node_count(r: Regex) -> int:
    if isinstance(r, Star):
        return 1 + node_count(r.inner)
    if isinstance(r, (Concat, Union)):
        return 1 + node_count(r.left) + node_count(r.right)
    return 1


def concat_all(parts: Sequence[Regex]) -> Regex:
    if not parts:
        return EPS
    return reduce(Concat, parts)


def union_all(parts: Sequence[Regex]) -> Regex:
    if not parts:
        raise ValueError("union of no expressions")
    return reduce(Union, parts)


def word(labels: Sequence[str]) -> Regex:
    """The expression matching exactly the given label sequence."""
    return concat_all([Atom(a) for a in labels])


def power(r: Regex, n: int) -> Regex:
    return concat_all([r] * n)


def power_upto(r: Regex, n: int) -> Regex:
    """(eps + r)^n, whose language is the words of r* built from at most n factors."""
    return power(Union(EPS, r), n)


def labels_of(r: Regex) -> List[str]:
    return sorted(set(atoms(r)))


def map_labels(r: Regex, fn) -> Regex:
    if isinstance(r, Atom):
        return Atom(fn(r.label))
    if isinstance(r, Star):
        return Star(map_labels(r.inner, fn))
    if isinstance(r, Concat):
        return Concat(map_labels(r.left, fn), map_labels(r.right, fn))
    if isinstance(r, Union):
        return Union(map_labels(r.left, fn), map_labels(r.right, fn))
    return r


for _node_type in (Epsilon, Atom, Star, Concat, Union):
    relabel.register(_node_type, lambda x, lam: map_labels(x, lam.label))
