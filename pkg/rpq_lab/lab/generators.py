"""
Seeded random databases, queries, extensions, renamings and relabelings.

Every generator takes an explicit `random.Random`, so a trial is reproduced by
its seed alone. Vertices are named v1, v2, ..., edges e1, e2, ... and labels
are single letters, so the three identifier spaces never collide.
"""

import random
from typing import List, Optional, Set

from rpq_lab.core.database import Database
from rpq_lab.core.renaming import Relabeling, Renaming
from rpq_lab.lab.models import GenParams
from rpq_lab.rpq.ast import EPS, Atom, Concat, Regex, Star, Union, labels_of


def _fresh(prefix: str, taken: Set[str], count: int) -> List[str]:
    out: List[str] = []
    i = 1
    while len(out) < count:
        name = f"{prefix}{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return out


def gen_database(rng: random.Random, params: GenParams) -> Database:
    n = rng.randint(1, params.max_vertices)
    m = rng.randint(0, params.max_edges)
    vertices = [f"v{i}" for i in range(1, n + 1)]
    labels = params.labels
    edges = [
        (f"e{j}", rng.choice(vertices), rng.choice(vertices), rng.choice(labels))
        for j in range(1, m + 1)
    ]
    return Database.build(vertices, edges)


def gen_regex(rng: random.Random, params: GenParams, depth: Optional[int] = None) -> Regex:
    """A random expression of height at most `depth` (default `params.depth`)."""
    depth = params.depth if depth is None else depth
    labels = params.labels
    if depth <= 0:
        return EPS if rng.random() < 0.1 else Atom(rng.choice(labels))
    roll = rng.random()
    if roll < 0.25:
        return Atom(rng.choice(labels))
    if roll < 0.3:
        return EPS
    if roll < 0.45:
        return Star(gen_regex(rng, params, depth - 1))
    if roll < 0.75:
        return Concat(gen_regex(rng, params, depth - 1), gen_regex(rng, params, depth - 1))
    return Union(gen_regex(rng, params, depth - 1), gen_regex(rng, params, depth - 1))


def gen_extension(rng: random.Random, db: Database, params: GenParams) -> Database:
    """A super-database of `db`: up to two new vertices and one to three new edges."""
    new_vertices = _fresh("v", set(db.vertices), rng.randint(0, 2))
    vertices = db.sorted_vertices() + new_vertices
    new_edges = [
        (e, rng.choice(vertices), rng.choice(vertices), rng.choice(params.labels))
        for e in _fresh("e", set(db.edges), rng.randint(1, 3))
    ]
    return db.extend(new_vertices, new_edges)


def _permutation(rng: random.Random, support: List[str]) -> dict:
    image = list(support)
    rng.shuffle(image)
    return dict(zip(support, image))


def gen_renaming(rng: random.Random, db: Database) -> Renaming:
    """A permutation of the vertex and edge ids, mixed with a few fresh ids."""
    vertices = db.sorted_vertices() + _fresh("v", set(db.vertices), rng.randint(0, 2))
    edges = sorted(db.edges) + _fresh("e", set(db.edges), rng.randint(0, 2))
    return Renaming(_permutation(rng, vertices), _permutation(rng, edges))


def gen_relabeling(rng: random.Random, db: Database, regex: Regex) -> Relabeling:
    """A permutation of the labels in use, plus possibly one fresh label."""
    used = sorted(set(db.labels) | set(labels_of(regex)))
    spare = [chr(ord("a") + i) for i in range(26) if chr(ord("a") + i) not in used]
    support = used + spare[: rng.randint(0, 1)]
    return Relabeling(_permutation(rng, support))


def gen_equivalent(rng: random.Random, regex: Regex) -> Regex:
    """An expression with the same language, by one algebraic rewrite."""
    rewrites = [
        lambda r: Union(r, r),
        lambda r: Concat(r, EPS),
        lambda r: Concat(EPS, r),
    ]
    if isinstance(regex, Star):
        rewrites.append(Star)
    if isinstance(regex, Union):
        rewrites.append(lambda r: Union(r.right, r.left))
    return rng.choice(rewrites)(regex)
