import pytest
from hypothesis import event, given

from rpq_lab.core.errors import ResultCapError
from rpq_lab.lab import fixtures as fx
from rpq_lab.matcher.matches import minimal_walk_bound
from rpq_lab.rpq.parser import parse_query
from rpq_lab.semantics.evaluate import evaluate
from rpq_lab.semantics.oracle import covering_bound, oracle
from rpq_lab.semantics.spec import SemanticsId, SemanticsSpec

from .strategies import databases, regexes

ORACLE_CAP = 3000


def spec_for(sid: SemanticsId) -> SemanticsSpec:
    if sid is SemanticsId.CHEAPEST:
        return SemanticsSpec(id=sid, costs={"a": 2}, default_cost=1)
    return SemanticsSpec(id=sid)


def both(db, r, sid):
    spec = spec_for(sid)
    return evaluate(db, r, spec.with_cap(ORACLE_CAP)), oracle(db, r, spec, cap=ORACLE_CAP)


def test_bounds():
    db, r = fx.sh_db_ext(), parse_query("a a + b")
    assert minimal_walk_bound(db, r) == 11
    assert covering_bound(db, r) == 23


@pytest.mark.parametrize("sid", list(SemanticsId))
@pytest.mark.parametrize(
    "db, query",
    [
        (fx.sh_db_ext(), "a a + b"),
        (fx.loop_db(), "a*"),
        (fx.abcd_db(), "a (b c)* d"),
        (fx.vsc_db(), "a b + a e f b"),
        (fx.shms_db(), "a b c + a a c"),
        (fx.acbt_db(), "(a (b + eps))*"),
    ],
)
def test_engine_matches_oracle_on_fixtures(sid, db, query):
    got, want = both(db, parse_query(query), sid)
    assert got == want


@pytest.mark.parametrize("sid", list(SemanticsId))
@given(databases(max_vertices=3, max_edges=3), regexes(max_leaves=3))
def test_engine_matches_oracle(sid, db, r):
    try:
        got, want = both(db, r, sid)
    except ResultCapError:
        event("candidate cap reached")
        return
    assert got == want
