"""Reference regex matcher by derivatives, independent of the position automaton."""

from itertools import product
from typing import Iterator, Sequence, Tuple

from rpq_lab.rpq.ast import EPS, Atom, Concat, Epsilon, Regex, Star, Union


class _Empty:
    pass


EMPTY = _Empty()


def _concat(left, right):
    if left is EMPTY or right is EMPTY:
        return EMPTY
    if isinstance(left, Epsilon):
        return right
    if isinstance(right, Epsilon):
        return left
    return Concat(left, right)


def _union(left, right):
    if left is EMPTY:
        return right
    if right is EMPTY or left == right:
        return left
    return Union(left, right)


def nullable(r) -> bool:
    if r is EMPTY or isinstance(r, Atom):
        return False
    if isinstance(r, (Epsilon, Star)):
        return True
    if isinstance(r, Concat):
        return nullable(r.left) and nullable(r.right)
    return nullable(r.left) or nullable(r.right)


def derivative(r, label: str):
    if r is EMPTY or isinstance(r, Epsilon):
        return EMPTY
    if isinstance(r, Atom):
        return EPS if r.label == label else EMPTY
    if isinstance(r, Star):
        return _concat(derivative(r.inner, label), r)
    if isinstance(r, Concat):
        head = _concat(derivative(r.left, label), r.right)
        return _union(head, derivative(r.right, label)) if nullable(r.left) else head
    return _union(derivative(r.left, label), derivative(r.right, label))


def matches(r: Regex, word: Sequence[str]) -> bool:
    for label in word:
        r = derivative(r, label)
    return nullable(r)


def words(alphabet: Sequence[str], max_len: int) -> Iterator[Tuple[str, ...]]:
    for n in range(max_len + 1):
        yield from product(alphabet, repeat=n)
