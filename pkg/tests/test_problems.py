import pytest
from hypothesis import given

from rpq_lab.core.errors import InconsistentWalk, InputError, ResultCapError
from rpq_lab.core.walk import Walk, parse_walk
from rpq_lab.lab import fixtures as fx
from rpq_lab.problems.decision import ProblemSolver, existence, extensibility, membership
from rpq_lab.problems.flashlight import Flashlight, enumerate_flashlight
from rpq_lab.rpq.parser import parse_query
from rpq_lab.semantics.evaluate import evaluate
from rpq_lab.semantics.spec import SemanticsId, SemanticsSpec

from .strategies import databases, regexes

QUERY = parse_query("a a + b")
SHORTEST = SemanticsSpec.of("shortest")
TRAIL = SemanticsSpec.of("trail")
SHORTCUT = parse_walk("v1 -e3-> v3")
A_PATH = parse_walk("v1 -e1-> v2 -e2-> v3")


def test_existence():
    db = fx.sh_db_ext()
    assert existence(db, QUERY, "v1", "v3", SHORTEST)
    assert not existence(db, QUERY, "v3", "v1", SHORTEST)
    assert existence(db, QUERY, None, "v3", TRAIL)
    assert not existence(db, QUERY, "v2", None, TRAIL)
    with pytest.raises(InputError):
        existence(db, QUERY, "v9", None, TRAIL)


def test_membership():
    db = fx.sh_db_ext()
    assert membership(db, QUERY, SHORTCUT, SHORTEST)
    assert not membership(db, QUERY, A_PATH, SHORTEST)
    assert membership(db, QUERY, A_PATH, TRAIL)
    assert not membership(db, QUERY, Walk.trivial("v1"), TRAIL)
    with pytest.raises(InconsistentWalk):
        membership(fx.sh_db(), QUERY, SHORTCUT, TRAIL)


def test_extensibility():
    db = fx.sh_db_ext()
    first_a = parse_walk("v1 -e1-> v2")
    assert extensibility(db, QUERY, Walk.trivial("v1"), "v3", SHORTEST)
    assert not extensibility(db, QUERY, first_a, "v3", SHORTEST)
    assert extensibility(db, QUERY, first_a, "v3", TRAIL)
    assert extensibility(db, QUERY, first_a, None, TRAIL)
    assert not extensibility(db, QUERY, first_a, "v2", TRAIL)
    assert not extensibility(db, QUERY, Walk.trivial("v3"), None, TRAIL)


def test_solver_caches_results():
    solver = ProblemSolver(fx.sh_db_ext(), QUERY, TRAIL)
    assert solver.results("v1", None) is solver.results("v1", None)
    assert solver.results() == {SHORTCUT, A_PATH}


@pytest.mark.parametrize(
    "sid", [SemanticsId.SHORTEST, SemanticsId.SHVC, SemanticsId.TRAIL, SemanticsId.SUBWALK_MIN]
)
@given(databases(max_vertices=3, max_edges=3), regexes(max_leaves=3))
def test_membership_and_existence_agree_with_evaluation(sid, db, r):
    spec = SemanticsSpec(id=sid, cap=2000)
    try:
        result = evaluate(db, r, spec)
    except ResultCapError:
        return
    solver = ProblemSolver(db, r, spec)
    for w in result:
        assert solver.membership(w)
        assert solver.existence(w.src, w.tgt)
        for i in range(len(w) + 1):
            assert solver.extensibility(w.prefix(i), w.tgt)
    for s in db.sorted_vertices():
        assert solver.existence(s, None) == any(w.src == s for w in result)


# ============================================================================
# FLASHLIGHT
# ============================================================================

def test_flashlight_order_is_depth_first():
    light = Flashlight(fx.sh_db_ext(), QUERY, TRAIL)
    assert list(light.enumerate("v1")) == [A_PATH, SHORTCUT]
    assert light.emitted == 2
    assert light.max_depth == 2


def test_flashlight_prunes_non_extensible_prefixes():
    light = Flashlight(fx.sh_db_ext(), QUERY, SHORTEST)
    assert list(light.enumerate("v1", "v3")) == [SHORTCUT]
    assert light.max_depth == 1


def test_flashlight_on_loop():
    walks = list(enumerate_flashlight(fx.loop_db(), parse_query("a*"), "v", None, TRAIL))
    assert [str(w) for w in walks] == ["v", "v -e-> v"]


def test_flashlight_unknown_source():
    with pytest.raises(InputError):
        list(enumerate_flashlight(fx.loop_db(), parse_query("a*"), "w", None, TRAIL))


@pytest.mark.parametrize("sid", [SemanticsId.SHORTEST, SemanticsId.TRAIL, SemanticsId.SHVC])
@given(databases(max_vertices=3, max_edges=3), regexes(max_leaves=3))
def test_flashlight_emits_the_result_once(sid, db, r):
    spec = SemanticsSpec(id=sid, cap=2000)
    try:
        result = evaluate(db, r, spec)
    except ResultCapError:
        return
    light = Flashlight(db, r, spec)
    emitted = list(light.enumerate())
    assert len(emitted) == len(set(emitted))
    assert set(emitted) == result.walks
    # only prefixes of results are explored
    assert light.max_depth <= max((len(w) for w in result), default=0)
