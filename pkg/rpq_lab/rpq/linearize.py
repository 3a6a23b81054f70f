"""Linearization: rename every atom occurrence to a fresh symbol.

Fresh symbols start with "#", which no label token can contain.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from rpq_lab.core.database import is_token
from rpq_lab.core.errors import ContractError
from rpq_lab.rpq.ast import Atom, Concat, Regex, Star, Union, atoms


def fresh_symbol(position: int) -> str:
    return f"#{position}"


@dataclass(frozen=True)
class Linearization:
    regex: Regex
    alpha: Dict[int, str]  # position -> fresh symbol
    beta: Dict[str, str]  # fresh symbol -> original label

    def project(self, word: Sequence[str]) -> Tuple[str, ...]:
        return tuple(self.beta[g] for g in word)

    @property
    def gamma(self) -> List[str]:
        return [self.alpha[i] for i in sorted(self.alpha)]


def linearize(r: Regex) -> Linearization:
    labels = atoms(r)
    bad = sorted({a for a in labels if not is_token(a)})
    if bad:
        raise ContractError(f"cannot linearize non-token labels: {', '.join(bad)}")
    counter: Iterator[int] = iter(range(1, len(labels) + 1))
    alpha: Dict[int, str] = {}
    beta: Dict[str, str] = {}

    def walk(node: Regex) -> Regex:
        if isinstance(node, Atom):
            i = next(counter)
            alpha[i] = fresh_symbol(i)
            beta[alpha[i]] = node.label
            return Atom(alpha[i])
        if isinstance(node, Star):
            return Star(walk(node.inner))
        if isinstance(node, Concat):
            left = walk(node.left)
            return Concat(left, walk(node.right))
        if isinstance(node, Union):
            left = walk(node.left)
            return Union(left, walk(node.right))
        return node

    return Linearization(walk(r), alpha, beta)
