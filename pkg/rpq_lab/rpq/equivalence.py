"""Language equivalence through the product of two subset constructions."""

import logging
from collections import deque
from typing import Dict, FrozenSet, Optional, Tuple

from rpq_lab.rpq.ast import Regex, labels_of
from rpq_lab.rpq.glushkov import INITIAL, glushkov

logger = logging.getLogger(__name__)

Pair = Tuple[FrozenSet[int], FrozenSet[int]]


def distinguishing_word(r1: Regex, r2: Regex) -> Optional[Tuple[str, ...]]:
    """
    Shortest word in exactly one of L(r1), L(r2), or None when they are equal.

    Breadth-first search over pairs of determinized states; dead subsets stay
    as the empty frozenset so the search remains complete.
    """
    n1, n2 = glushkov(r1), glushkov(r2)
    alphabet = sorted(set(labels_of(r1)) | set(labels_of(r2)))
    start: Pair = (frozenset({INITIAL}), frozenset({INITIAL}))
    parent: Dict[Pair, Optional[Tuple[Pair, str]]] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        acc1 = any(n1.is_accepting(q) for q in pair[0])
        acc2 = any(n2.is_accepting(q) for q in pair[1])
        if acc1 != acc2:
            word = []
            node = pair
            while parent[node] is not None:
                node, label = parent[node]
                word.append(label)
            logger.debug("languages differ after exploring %d subset pairs", len(parent))
            return tuple(reversed(word))
        for label in alphabet:
            nxt = (n1.det_step(pair[0], label), n2.det_step(pair[1], label))
            if nxt not in parent:
                parent[nxt] = (pair, label)
                queue.append(nxt)
    return None


def regex_equivalent(r1: Regex, r2: Regex) -> bool:
    return distinguishing_word(r1, r2) is None
