import pytest
from hypothesis import given

from rpq_lab.core.errors import InputError, ResultCapError
from rpq_lab.core.walk import Walk, consistent_with, parse_walk
from rpq_lab.lab.fixtures import abcd_db, loop_db, sh_db, sh_db_ext
from rpq_lab.matcher.matches import (
    has_match,
    match_set_finite,
    matches_upto,
    minimal_walk_bound,
    product_of,
    shortest_match_lengths,
)
from rpq_lab.matcher.walkset import CappedCollector, WalkSet
from rpq_lab.rpq.glushkov import language_contains
from rpq_lab.rpq.parser import parse_query
from rpq_lab.semantics.oracle import oracle_finite

from .strategies import databases, regexes

A_STAR = parse_query("a*")


def test_matches_upto_in_canonical_order():
    assert matches_upto(loop_db(), A_STAR, 2).lines() == ["v", "v -e-> v", "v -e-> v -e-> v"]
    assert matches_upto(sh_db_ext(), parse_query("a a + b"), 5).lines() == [
        "v1 -e3-> v3",
        "v1 -e1-> v2 -e2-> v3",
    ]


def test_matches_upto_with_endpoints():
    db = abcd_db()
    got = matches_upto(db, parse_query("a (b c)* d"), 4, ("v1", "v4"))
    assert got == {
        Walk.along(db, "v1", ["e1", "e4"]),
        Walk.along(db, "v1", ["e1", "e2", "e3", "e4"]),
    }
    assert len(matches_upto(db, parse_query("a (b c)* d"), 4, ("v2", None))) == 0


def test_matches_upto_errors():
    with pytest.raises(InputError):
        matches_upto(loop_db(), A_STAR, -1)
    with pytest.raises(InputError):
        matches_upto(loop_db(), A_STAR, 1, ("w", None))
    with pytest.raises(ResultCapError):
        matches_upto(loop_db(), A_STAR, 5, cap=3)


def test_reachability_and_lengths():
    db = sh_db_ext()
    r = parse_query("a a + b")
    assert has_match(db, r, "v1", "v3")
    assert not has_match(db, r, "v3", "v1")
    assert shortest_match_lengths(db, r) == {("v1", "v3"): 1}
    assert shortest_match_lengths(db, r, sources=["v2"]) == {}


def test_minimal_walk_bound():
    assert minimal_walk_bound(loop_db(), A_STAR) == 1
    assert minimal_walk_bound(sh_db_ext(), parse_query("a a + b")) == 11


@pytest.mark.parametrize(
    "db, query, finite",
    [
        (loop_db(), "a*", False),
        (loop_db(), "a", True),
        (loop_db(), "b*", True),
        (sh_db(), "a*", True),
        (abcd_db(), "a (b c)* d", False),
        (abcd_db(), "a (b c)* c", True),
    ],
)
def test_match_set_finite(db, query, finite):
    assert match_set_finite(db, parse_query(query)) is finite


@given(databases(), regexes())
def test_finiteness_agrees_with_length_layers(db, r):
    assert match_set_finite(db, r) == oracle_finite(db, r)


@given(databases(), regexes())
def test_bounded_matches_are_consistent_matches(db, r):
    try:
        found = matches_upto(db, r, 3, cap=500)
    except ResultCapError:
        return
    for w in found:
        assert len(w) <= 3
        assert consistent_with(db, w)
        assert language_contains(r, w.label(db))


def test_product_graph_states():
    product = product_of(loop_db(), A_STAR)
    assert product.k == 1
    assert product.initial("v") == ("v", 0)
    assert product.is_accepting(("v", 0))
    assert product.is_accepting(("v", 1))


# ============================================================================
# WALK SETS
# ============================================================================

def test_walkset_operations():
    short = parse_walk("v1 -e3-> v3")
    long = parse_walk("v1 -e1-> v2 -e2-> v3")
    both = WalkSet([long, short])
    assert list(both) == [short, long]
    assert both == {short, long}
    assert both - WalkSet([short]) == {long}
    assert WalkSet([short]) <= both
    assert WalkSet([short]) < both
    assert both & WalkSet([short]) == {short}
    assert both.max_length() == 2
    assert WalkSet().max_length() == -1
    assert both.between("v1", "v3") == both
    assert len(both.between(source="v2")) == 0
    assert both.by_endpoints() == {("v1", "v3"): [short, long]}


def test_capped_collector():
    out = CappedCollector(1, "test set")
    out.add(Walk.trivial("v"))
    out.add(Walk.trivial("v"))
    with pytest.raises(ResultCapError):
        out.add(Walk.trivial("w"))
    assert len(CappedCollector(None).result()) == 0
