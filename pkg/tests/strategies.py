from hypothesis import strategies as st

from rpq_lab.core.database import Database
from rpq_lab.core.walk import Walk
from rpq_lab.rpq.ast import EPS, Atom, Concat, Star, Union

LABELS = ("a", "b")


@st.composite
def databases(draw, max_vertices: int = 3, max_edges: int = 4, labels=LABELS) -> Database:
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    vertices = [f"v{i}" for i in range(1, n + 1)]
    m = draw(st.integers(min_value=0, max_value=max_edges))
    edges = [
        (f"e{j}", draw(st.sampled_from(vertices)), draw(st.sampled_from(vertices)), draw(st.sampled_from(labels)))
        for j in range(1, m + 1)
    ]
    return Database.build(vertices, edges)


def regexes(labels=LABELS, max_leaves: int = 4):
    leaves = st.sampled_from([Atom(a) for a in labels] + [EPS])
    return st.recursive(
        leaves,
        lambda children: st.one_of(
            st.builds(Star, children),
            st.builds(Concat, children, children),
            st.builds(Union, children, children),
        ),
        max_leaves=max_leaves,
    )


@st.composite
def walks(draw, db: Database, max_length: int = 4) -> Walk:
    """A walk consistent with `db`, following out-edges from a random vertex."""
    w = Walk.trivial(draw(st.sampled_from(db.sorted_vertices())))
    for _ in range(draw(st.integers(min_value=0, max_value=max_length))):
        out = db.out_edges(w.tgt)
        if not out:
            break
        edge = draw(st.sampled_from(out))
        w = w.extend(edge.id, edge.tgt)
    return w


@st.composite
def databases_with_walks(draw, max_vertices: int = 3, max_edges: int = 4):
    db = draw(databases(max_vertices, max_edges))
    return db, draw(walks(db))


@st.composite
def databases_with_walk_pairs(draw, max_vertices: int = 3, max_edges: int = 4):
    db = draw(databases(max_vertices, max_edges))
    return db, draw(walks(db)), draw(walks(db))


SH_EXT_GRAPH = """\
# a two-edge a-path with a b-shortcut
V v1
V v2
V v3
E e1 v1 v2 a
E e2 v2 v3 a
E e3 v1 v3 b
"""

LOOP_GRAPH = """\
V v
E e v v a
"""
