"""
The subwalk order.

w is a subwalk of w2 when w2 is obtained from w by repeatedly inserting closed
walks at vertex occurrences. Deciding it is a reachability question over index
pairs (i, j) with w<i> = w2<j>: either both walks advance along the same edge,
or w2 skips ahead to a later occurrence of the same vertex (a deleted closed
walk).
"""

from typing import Iterable, List, Sequence, Set, Tuple

from rpq_lab.core.walk import Walk


def subwalk_leq(w: Walk, w2: Walk) -> bool:
    if w.ep != w2.ep or len(w) > len(w2):
        return False
    vs, vs2 = w.vertex_seq, w2.vertex_seq
    es, es2 = w.edge_seq, w2.edge_seq
    n, m = len(es), len(es2)
    target = (n, m)
    seen: Set[Tuple[int, int]] = {(0, 0)}
    stack = [(0, 0)]
    while stack:
        i, j = stack.pop()
        if (i, j) == target:
            return True
        moves: List[Tuple[int, int]] = []
        if i < n and j < m and es[i] == es2[j]:
            moves.append((i + 1, j + 1))
        moves.extend((i, j2) for j2 in range(j + 1, m + 1) if vs2[j2] == vs[i])
        for nxt in moves:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return False


def subwalk_lt(w: Walk, w2: Walk) -> bool:
    return w != w2 and subwalk_leq(w, w2)


def direct_subwalks(w: Walk) -> List[Walk]:
    """Walks obtained from w by deleting one closed factor of positive length."""
    vs = w.vertex_seq
    out = []
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if vs[i] == vs[j]:
                out.append(Walk(w.start, w.steps[:i] + w.steps[j:]))
    return out


def all_subwalks(w: Walk) -> Set[Walk]:
    """Every w' with w' below or equal to w, by closure of closed-factor deletions."""
    found = {w}
    stack = [w]
    while stack:
        for smaller in direct_subwalks(stack.pop()):
            if smaller not in found:
                found.add(smaller)
                stack.append(smaller)
    return found


def minimal_elements(ws: Iterable[Walk]) -> List[Walk]:
    """The subwalk-minimal walks of a finite collection, in canonical order."""
    pool = sorted(set(ws), key=lambda w: w.sort_key)
    return [w for w in pool if not any(subwalk_lt(x, w) for x in pool)]
