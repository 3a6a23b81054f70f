import pytest
from pydantic import ValidationError

from rpq_lab.core.errors import InputError, ResultCapError
from rpq_lab.core.walk import Walk, parse_walk
from rpq_lab.lab import fixtures as fx
from rpq_lab.rpq.parser import parse_query
from rpq_lab.semantics.demo import log_length_limit
from rpq_lab.semantics.evaluate import evaluate
from rpq_lab.semantics.filters import ACYCLIC, SWC, TRAIL, TWO_AC
from rpq_lab.semantics.orders import Cmp, order_bag, order_shms, order_shortlex, order_subwalk
from rpq_lab.semantics.spec import SemanticsId, SemanticsSpec

SHORTCUT = "v1 -e3-> v3"
A_PATH = "v1 -e1-> v2 -e2-> v3"
LOOP_ONCE = "v -e-> v"
LOOP_TWICE = "v -e-> v -e-> v"


def lines(db, query, token, **params):
    return evaluate(db, parse_query(query), SemanticsSpec.of(token, **params)).lines()


# ============================================================================
# SEMANTICS IDS AND SPECS
# ============================================================================

@pytest.mark.parametrize(
    "token, sid",
    [
        ("shortest", SemanticsId.SHORTEST),
        ("Sh", SemanticsId.SHORTEST),
        ("SHVC", SemanticsId.SHVC),
        (" trail ", SemanticsId.TRAIL),
        ("2Ac", SemanticsId.TWO_AC),
        ("ChW", SemanticsId.CHEAPEST),
    ],
)
def test_from_token(token, sid):
    assert SemanticsId.from_token(token) is sid


def test_from_token_rejects_unknown():
    with pytest.raises(InputError):
        SemanticsId.from_token("longest")


def test_short_names_are_unique():
    shorts = [sid.short for sid in SemanticsId]
    assert len(set(shorts)) == len(shorts) == 18


@pytest.mark.parametrize(
    "token, params",
    [
        ("trail", {"costs": {"a": 1}}),
        ("shortest", {"default_cost": 1}),
        ("cheapest", {"costs": {"a": 0}}),
        ("cheapest", {"default_cost": -1}),
        ("shortest", {"cap": 0}),
    ],
)
def test_spec_validation(token, params):
    with pytest.raises(ValidationError):
        SemanticsSpec.of(token, **params)


def test_cost_lookup():
    spec = SemanticsSpec.of("cheapest", costs={"a": 3}, default_cost=1)
    assert spec.cost_of("a") == 3
    assert spec.cost_of("z") == 1
    with pytest.raises(InputError):
        SemanticsSpec.of("cheapest", costs={"a": 3}).cost_of("b")


def test_spec_is_frozen_and_recappable():
    spec = SemanticsSpec.of("trail")
    assert spec.with_cap(5).cap == 5
    assert spec.cap is None
    assert spec.name == "Tr"


# ============================================================================
# RESULTS ON THE SHORTCUT FIXTURE
# ============================================================================

@pytest.mark.parametrize(
    "token, expected",
    [
        ("shortest", [SHORTCUT]),
        ("shortlex", [SHORTCUT]),
        ("shortest-trail", [SHORTCUT]),
        ("weird", [SHORTCUT]),
        ("trail", [SHORTCUT, A_PATH]),
        ("acyclic", [SHORTCUT, A_PATH]),
        ("subwalk-min", [SHORTCUT, A_PATH]),
        ("min-multiset", [SHORTCUT, A_PATH]),
        ("shms", [SHORTCUT, A_PATH]),
        ("shvc", [SHORTCUT, A_PATH]),
        ("shec", [SHORTCUT, A_PATH]),
        ("shac", [SHORTCUT, A_PATH]),
        ("binding-trail", [SHORTCUT, A_PATH]),
        ("log-length", [SHORTCUT, A_PATH]),
        ("giving-up", [SHORTCUT, A_PATH]),
    ],
)
def test_shortcut_extension(token, expected):
    assert lines(fx.sh_db_ext(), "a a + b", token) == expected


def test_shortest_before_the_shortcut():
    assert lines(fx.sh_db(), "a a + b", "shortest") == [A_PATH]


@pytest.mark.parametrize(
    "costs, expected",
    [({"a": 2, "b": 1}, [SHORTCUT]), ({"a": 1, "b": 5}, [A_PATH]), ({"a": 1, "b": 2}, [SHORTCUT, A_PATH])],
)
def test_cheapest_follows_costs(costs, expected):
    assert lines(fx.sh_db_ext(), "a a + b", "cheapest", costs=costs) == expected


def test_cheapest_needs_every_label_cost():
    with pytest.raises(InputError):
        lines(fx.sh_db_ext(), "a a + b", "cheapest", costs={"a": 1})
    assert lines(fx.sh_db_ext(), "a a + b", "cheapest", costs={"a": 1}, default_cost=2) == [SHORTCUT, A_PATH]


# ============================================================================
# RESULTS ON THE SELF-LOOP
# ============================================================================

@pytest.mark.parametrize(
    "token, expected",
    [
        ("shortest", ["v"]),
        ("shortlex", ["v"]),
        ("acyclic", ["v"]),
        ("subwalk-min", ["v"]),
        ("min-multiset", ["v"]),
        ("shms", ["v"]),
        ("shvc", ["v"]),
        ("shortest-trail", ["v"]),
        ("log-length", ["v"]),
        ("trail", ["v", LOOP_ONCE]),
        ("swc", ["v", LOOP_ONCE]),
        ("2ac", ["v", LOOP_ONCE]),
        ("binding-trail", ["v", LOOP_ONCE]),
        ("shec", ["v", LOOP_ONCE]),
        ("shac", ["v", LOOP_ONCE]),
        ("weird", ["v", LOOP_ONCE]),
        ("giving-up", []),
    ],
)
def test_loop_star(token, expected):
    assert lines(fx.loop_db(), "a*", token) == expected


def test_loop_single_atom():
    assert lines(fx.loop_db(), "a", "acyclic") == []
    assert lines(fx.loop_db(), "a", "log-length") == []
    assert lines(fx.loop_db(), "a", "swc") == [LOOP_ONCE]
    assert lines(fx.loop_db(), "a", "shortest") == [LOOP_ONCE]


def test_loop_twice():
    assert lines(fx.loop_db(), "a a", "trail") == []
    assert lines(fx.loop_db(), "a a", "shortest") == [LOOP_TWICE]
    assert lines(fx.loop_db(), "a a", "binding-trail") == [LOOP_TWICE]


# ============================================================================
# SEPARATING FIXTURES
# ============================================================================

def test_two_cycle_detour():
    db = fx.abcd_db()
    direct = str(Walk.along(db, "v1", ["e1", "e4"]))
    detour = str(Walk.along(db, "v1", ["e1", "e2", "e3", "e4"]))
    assert lines(db, "a (b c)* d", "shortest") == [direct]
    assert lines(db, "a (b c)* d", "trail") == [direct, detour]
    assert lines(db, "a (b c)* d", "swc") == [direct]
    assert lines(db, "a (b c)* d", "subwalk-min") == [direct]
    assert lines(db, "a (b c)* d", "shvc") == [direct, detour]


def test_vertex_covering_reaches_beyond_shortest():
    db = fx.vsc_db()
    assert lines(db, "a b + a e f b", "shortest") == ["v1 -ea-> v2 -eb-> v4"]
    assert lines(db, "a b + a e f b", "shvc") == [
        "v1 -ea-> v2 -eb-> v4",
        "v1 -ea-> v2 -ee-> v3 -ef-> v2 -eb-> v4",
    ]


def test_bag_minimal_is_not_subwalk_minimal():
    db = fx.bag_db()
    query = "a b c d e f + a d c f"
    short = "s -e1-> x -e4-> y -e3-> x -e6-> t"
    long = "s -e1-> x -e2-> y -e3-> x -e4-> y -e5-> x -e6-> t"
    assert lines(db, query, "min-multiset") == [short]
    assert lines(db, query, "subwalk-min") == [short, long]


def test_element_set_order_prefers_fewer_elements():
    db = fx.shms_db()
    query = "a b c + a a c"
    repeat = "s -e-> s -e-> s -f-> t"
    mixed = "s -e-> s -g-> s -f-> t"
    assert lines(db, query, "shms") == [repeat]
    assert lines(db, query, "min-multiset") == [repeat, mixed]


def test_atom_covering_escapes_binding_trails():
    db = fx.acbt_db()
    walk = "u -e-> x -f-> u -e-> x"
    assert walk in lines(db, "(a (b + eps))*", "shac")
    assert walk not in lines(db, "(a (b + eps))*", "binding-trail")


def test_shortlex_breaks_ties_by_edge_id():
    assert lines(fx.parallel_db(), "a", "shortlex") == ["s -e1-> t"]
    assert lines(fx.parallel_db(), "a", "shortest") == ["s -e1-> t", "s -e2-> t"]


# ============================================================================
# ENDPOINTS, CAPS, LIMITS
# ============================================================================

def test_endpoints_restrict_results():
    db = fx.sh_db_ext()
    r = parse_query("a + b")
    spec = SemanticsSpec.of("trail")
    assert evaluate(db, r, spec, ("v2", None)).lines() == ["v2 -e2-> v3"]
    assert evaluate(db, r, spec, (None, "v2")).lines() == ["v1 -e1-> v2"]
    with pytest.raises(InputError):
        evaluate(db, r, spec, ("v9", None))


def test_cap_raises():
    with pytest.raises(ResultCapError):
        evaluate(fx.loop_db(), parse_query("a*"), SemanticsSpec.of("trail", cap=1))


@pytest.mark.parametrize(
    "edges, padding, size, limit",
    [(0, 0, 1, -1), (1, 0, 3, 1), (3, 0, 7, 2), (2, 2, 7, 2), (3, 1, 8, 2), (4, 0, 9, 3)],
)
def test_log_length_limit(edges, padding, size, limit):
    db = fx.path_db(edges, padding)
    assert db.size == size
    assert log_length_limit(db) == limit


def test_filter_bounds():
    db = fx.sh_db_ext()
    assert TRAIL.max_length(db) == 3
    assert ACYCLIC.max_length(db) == 2
    assert SWC.max_length(db) == 3
    assert TWO_AC.max_length(db) == 5


def test_filters_on_walks():
    assert TRAIL.accepts(parse_walk(LOOP_ONCE))
    assert not TRAIL.accepts(parse_walk(LOOP_TWICE))
    assert not ACYCLIC.accepts(parse_walk(LOOP_ONCE))
    assert SWC.accepts(parse_walk(LOOP_ONCE))
    assert not SWC.accepts(parse_walk(LOOP_TWICE))
    assert TWO_AC.accepts(parse_walk("u -e1-> v -e2-> u -e1-> v"))


# ============================================================================
# ORDERS
# ============================================================================

def test_order_comparisons():
    db = fx.abcd_db()
    direct = Walk.along(db, "v1", ["e1", "e4"])
    detour = Walk.along(db, "v1", ["e1", "e2", "e3", "e4"])
    assert order_subwalk(direct, detour) is Cmp.LESS
    assert order_subwalk(detour, direct) is Cmp.GREATER
    assert order_bag(direct, detour) is Cmp.LESS
    assert order_shms(direct, detour) is Cmp.LESS
    assert order_shortlex(parse_walk("s -e2-> t"), parse_walk("s -e1-> t")) is Cmp.GREATER
    assert order_bag(parse_walk("s -e1-> t"), parse_walk("s -e2-> t")) is Cmp.EQUAL_OR_INCOMPARABLE
