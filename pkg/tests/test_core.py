import pytest
from hypothesis import given

from rpq_lab.core.characteristic import characteristic_database, characteristic_expression
from rpq_lab.core.database import Database
from rpq_lab.core.errors import (
    CharacteristicError,
    ConcatError,
    GraphFormatError,
    InputError,
    RenamingError,
)
from rpq_lab.core.graph_io import format_database, load_costs, load_database, parse_costs, parse_database
from rpq_lab.core.renaming import Relabeling, Renaming, apply_relabeling, apply_renaming
from rpq_lab.core.subwalk import (
    all_subwalks,
    direct_subwalks,
    minimal_elements,
    subwalk_leq,
    subwalk_lt,
)
from rpq_lab.core.walk import (
    Walk,
    bag_leq,
    consistent_with,
    elembag,
    elemset,
    mutually_consistent,
    parse_walk,
    walk_concat,
)
from rpq_lab.lab.fixtures import abcd_db, loop_db, sh_db, sh_db_ext
from rpq_lab.rpq.parser import parse_query

from .strategies import SH_EXT_GRAPH, databases_with_walk_pairs, databases_with_walks


def a_path() -> Walk:
    return Walk.along(sh_db(), "v1", ["e1", "e2"])


# ============================================================================
# DATABASE
# ============================================================================

def test_build_collects_labels_and_size():
    db = sh_db_ext()
    assert db.labels == frozenset({"a", "b"})
    assert db.size == 6
    assert db.edges == frozenset({"e1", "e2", "e3"})
    assert [e.id for e in db.out_edges("v1")] == ["e1", "e3"]
    assert db.out_edges("v3") == []


@pytest.mark.parametrize(
    "vertices, edges",
    [
        (["v1"], [("e1", "v1", "v2", "a")]),
        (["v1"], [("e1", "v1", "v1", "a"), ("e1", "v1", "v1", "b")]),
        (["a"], [("e1", "a", "a", "a")]),
        (["v1"], [("v1", "v1", "v1", "a")]),
        (["v-1"], []),
    ],
)
def test_build_rejects_bad_input(vertices, edges):
    with pytest.raises(InputError):
        Database.build(vertices, edges)


def test_extend_and_subdatabase():
    assert sh_db().is_subdatabase_of(sh_db_ext())
    assert not sh_db_ext().is_subdatabase_of(sh_db())
    grown = loop_db().extend(["w"], [("f", "w", "v", "b")])
    assert grown.vertices == frozenset({"v", "w"})
    assert grown.lbl("f") == "b"


def test_require_vertex():
    assert sh_db().require_vertex("v2") == "v2"
    with pytest.raises(InputError):
        sh_db().require_vertex("v9")


# ============================================================================
# WALKS
# ============================================================================

def test_walk_accessors():
    w = a_path()
    assert str(w) == "v1 -e1-> v2 -e2-> v3"
    assert len(w) == 2
    assert w.ep == ("v1", "v3")
    assert w.vertex_at(0) == "v1"
    assert w.edge_at(1) == "e1"
    assert w.label(sh_db()) == ("a", "a")
    assert Walk.trivial("v1").is_trivial


def test_parse_walk_matches_string_form():
    w = a_path()
    assert parse_walk(str(w)) == w
    assert parse_walk("v") == Walk.trivial("v")


@pytest.mark.parametrize("text", ["", "v1 -e1->", "v1 e1 v2", "v1 -e1-> v-2"])
def test_parse_walk_rejects_malformed(text):
    with pytest.raises(InputError):
        parse_walk(text)


def test_along_rejects_edge_not_leaving_vertex():
    with pytest.raises(InputError):
        Walk.along(sh_db(), "v1", ["e2"])


def test_walk_concat():
    first = Walk.along(sh_db(), "v1", ["e1"])
    second = Walk.along(sh_db(), "v2", ["e2"])
    assert walk_concat(first, second) == a_path()
    with pytest.raises(ConcatError):
        walk_concat(second, first)


def test_consistency():
    shortcut = parse_walk("v1 -e3-> v3")
    assert not consistent_with(sh_db(), shortcut)
    assert consistent_with(sh_db_ext(), shortcut)
    assert not consistent_with(sh_db(), parse_walk("v2 -e1-> v3"))
    assert mutually_consistent([a_path(), shortcut])
    assert not mutually_consistent([parse_walk("x -e-> y"), parse_walk("x -e-> z")])
    assert not mutually_consistent([parse_walk("x -e-> y"), parse_walk("e")])


def test_element_views():
    loop = Walk.along(loop_db(), "v", ["e", "e"])
    assert elemset(loop) == frozenset({"v", "e"})
    assert elembag(loop)["v"] == 3
    assert bag_leq(elembag(Walk.trivial("v")), elembag(loop))
    assert not bag_leq(elembag(loop), elembag(Walk.trivial("v")))


# ============================================================================
# RENAMING AND RELABELING
# ============================================================================

def test_renaming_walk_and_database():
    nu = Renaming.swaps(vertex_pairs=[("v1", "v3")], edge_pairs=[("e1", "e2")])
    renamed = apply_renaming(nu, a_path())
    assert str(renamed) == "v3 -e2-> v2 -e1-> v1"
    db = apply_renaming(nu, sh_db())
    assert db.src("e2") == "v3"
    assert consistent_with(db, renamed)
    assert apply_renaming(nu.inverse(), renamed) == a_path()


def test_renaming_must_permute():
    with pytest.raises(RenamingError):
        Renaming({"v1": "v2"})
    with pytest.raises(RenamingError):
        Renaming.swaps(vertex_pairs=[("v1", "v2"), ("v2", "v3")])


def test_relabeling_database_and_query():
    lam = Relabeling.swaps([("a", "b")])
    db = apply_relabeling(lam, sh_db_ext())
    assert db.lbl("e1") == "b"
    assert db.lbl("e3") == "a"
    assert apply_relabeling(lam, parse_query("a a + b")) == parse_query("b b + a")
    with pytest.raises(RenamingError):
        Relabeling({"a": "b"})


# ============================================================================
# CHARACTERISTIC DATABASE AND EXPRESSION
# ============================================================================

def test_characteristic_database_labels_edges_by_id():
    db = characteristic_database([a_path()])
    assert db.vertices == frozenset({"v1", "v2", "v3"})
    assert db.lbl("e1") == "e1"
    assert db.edge_labels
    assert consistent_with(db, a_path())


def test_characteristic_database_errors():
    with pytest.raises(CharacteristicError):
        characteristic_database([])
    with pytest.raises(CharacteristicError):
        characteristic_database([parse_walk("x -e-> y"), parse_walk("x -e-> z")])


def test_characteristic_expression():
    assert characteristic_expression(a_path()) == parse_query("e1 e2")
    with pytest.raises(CharacteristicError):
        characteristic_expression(Walk.trivial("v1"))


# ============================================================================
# SUBWALKS
# ============================================================================

def test_subwalk_order_on_two_cycle():
    db = abcd_db()
    direct = Walk.along(db, "v1", ["e1", "e4"])
    detour = Walk.along(db, "v1", ["e1", "e2", "e3", "e4"])
    assert subwalk_leq(direct, detour)
    assert subwalk_lt(direct, detour)
    assert not subwalk_leq(detour, direct)
    assert not subwalk_lt(detour, detour)
    assert direct_subwalks(detour) == [direct]
    assert all_subwalks(detour) == {direct, detour}
    assert minimal_elements([detour, direct]) == [direct]


def test_trivial_walk_is_below_loop():
    assert subwalk_lt(Walk.trivial("v"), Walk.along(loop_db(), "v", ["e"]))


@given(databases_with_walks())
def test_direct_subwalks_are_smaller_and_consistent(db_and_walk):
    db, w = db_and_walk
    assert subwalk_leq(w, w)
    for smaller in direct_subwalks(w):
        assert consistent_with(db, smaller)
        assert smaller.ep == w.ep
        assert subwalk_lt(smaller, w)
        assert bag_leq(elembag(smaller), elembag(w))


@given(databases_with_walk_pairs())
def test_subwalk_order_matches_deletion_closure(db_walks):
    _, w, other = db_walks
    below = all_subwalks(w)
    pool = sorted(below | all_subwalks(other) | {other}, key=lambda x: x.sort_key)
    for u in pool:
        assert subwalk_leq(u, w) == (u in below)
        assert subwalk_lt(u, w) == (u in below and u != w)


@given(databases_with_walk_pairs())
def test_subwalk_order_is_a_partial_order(db_walks):
    _, w, other = db_walks
    pool = sorted(all_subwalks(w) | all_subwalks(other), key=lambda x: x.sort_key)
    leq = {(x, y): subwalk_leq(x, y) for x in pool for y in pool}
    for x in pool:
        assert leq[x, x]
        for y in pool:
            if leq[x, y] and leq[y, x]:
                assert x == y
            for z in pool:
                if leq[x, y] and leq[y, z]:
                    assert leq[x, z]


# ============================================================================
# GRAPH FILES
# ============================================================================

def test_parse_and_format_database():
    db = parse_database(SH_EXT_GRAPH)
    assert db == sh_db_ext()
    assert parse_database(format_database(db)) == db


@pytest.mark.parametrize(
    "text, line",
    [
        ("V v1\nX bad\n", 2),
        ("V v1\nV v1\n", 2),
        ("V v-1\n", 1),
        ("V v1\nE e1 v1 v1 a\nE e1 v1 v1 b\n", 3),
        ("V v1\nE e1 v1 v2 a\n", None),
    ],
)
def test_graph_format_errors(text, line):
    with pytest.raises(GraphFormatError) as err:
        parse_database(text)
    assert err.value.line == line


def test_load_database_missing_file(tmp_path):
    with pytest.raises(InputError):
        load_database(tmp_path / "missing.txt")


def test_load_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_bytes(b"V v1 \xff\xfe\n")
    with pytest.raises(GraphFormatError, match="not valid UTF-8"):
        load_database(path)
    with pytest.raises(GraphFormatError):
        load_costs(path)


def test_parse_costs():
    assert parse_costs("# costs\na 2\nb 1\n") == {"a": 2, "b": 1}
    for bad in ("a 0\n", "a x\n", "a 1 2\n", "a 1\na 2\n"):
        with pytest.raises(GraphFormatError):
            parse_costs(bad)
