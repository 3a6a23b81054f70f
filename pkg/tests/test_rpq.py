import random

import pytest
from hypothesis import given
from hypothesis.strategies import integers

from rpq_lab.core.errors import ContractError, ParseError
from rpq_lab.lab.generators import gen_equivalent
from rpq_lab.rpq.ast import EPS, Atom, Concat, Star, Union, atom_count, labels_of, power_upto
from rpq_lab.rpq.equivalence import distinguishing_word, regex_equivalent
from rpq_lab.rpq.glushkov import glushkov, language_contains
from rpq_lab.rpq.linearize import linearize
from rpq_lab.rpq.parser import parse_query, to_text

from .derivatives import matches, words
from .strategies import LABELS, regexes

a, b, c = Atom("a"), Atom("b"), Atom("c")


# ============================================================================
# PARSER
# ============================================================================

@pytest.mark.parametrize(
    "text, tree",
    [
        ("a a + b", Union(Concat(a, a), b)),
        ("a b c", Concat(a, Concat(b, c))),
        ("a + b + c", Union(a, Union(b, c))),
        ("(a + b)* c", Concat(Star(Union(a, b)), c)),
        ("a**", Star(Star(a))),
        ("eps", EPS),
        ("aa", Atom("aa")),
        ("  a\t( b )  ", Concat(a, b)),
    ],
)
def test_parse_query(text, tree):
    assert parse_query(text) == tree


@pytest.mark.parametrize(
    "text, position",
    [("a +", 3), ("a $", 2), ("(a", 2), (")", 0), ("a b)", 3), ("", 0), ("é", 0), ("aé b", 1), ("a ²", 2)],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(ParseError) as err:
        parse_query(text)
    assert err.value.position == position


@pytest.mark.parametrize(
    "text",
    ["(a + b)* c", "a (b + c)", "a + b c", "(a b) c", "(a + b) + c", "(a b)*", "eps a"],
)
def test_to_text_is_canonical(text):
    assert to_text(parse_query(text)) == text


@given(regexes())
def test_to_text_parses_back(r):
    assert parse_query(to_text(r)) == r


# ============================================================================
# SYNTAX HELPERS
# ============================================================================

def test_atoms_and_labels():
    r = parse_query("a (b + c)* a")
    assert atom_count(r) == 4
    assert labels_of(r) == ["a", "b", "c"]


def test_power_upto_matches_bounded_repetitions():
    r = power_upto(a, 2)
    assert r == Concat(Union(EPS, a), Union(EPS, a))
    assert language_contains(r, [])
    assert language_contains(r, ["a", "a"])
    assert not language_contains(r, ["a", "a", "a"])


# ============================================================================
# POSITION AUTOMATON
# ============================================================================

def test_glushkov_structure():
    nfa = glushkov(parse_query("a (b + c)*"))
    assert nfa.k == 3
    assert nfa.labels == ("a", "b", "c")
    assert nfa.first == frozenset({1})
    assert nfa.last == frozenset({1, 2, 3})
    assert nfa.follow == (frozenset({2, 3}),) * 3
    assert not nfa.nullable
    assert nfa.accepts(["a", "b", "c"])
    assert not nfa.accepts(["b"])
    assert not nfa.accepts([])


def test_star_makes_initial_state_accepting():
    nfa = glushkov(parse_query("a*"))
    assert nfa.nullable
    assert nfa.is_accepting(0)
    assert nfa.accepting == frozenset({0, 1})


def test_covered_positions():
    nfa = glushkov(parse_query("a a + b"))
    assert nfa.covered_positions(["a", "a"]) == {1, 2}
    assert nfa.covered_positions(["b"]) == {3}
    assert nfa.covered_positions(["a"]) == set()


def test_covered_positions_collects_every_accepting_run():
    nfa = glushkov(parse_query("a + a"))
    assert nfa.covered_positions(["a"]) == {1, 2}


@given(regexes())
def test_automaton_agrees_with_derivatives(r):
    nfa = glushkov(r)
    for word in words(LABELS, 4):
        expected = matches(r, word)
        assert nfa.accepts(word) == expected, word
        assert language_contains(r, word) == expected, word


# ============================================================================
# EQUIVALENCE
# ============================================================================

@pytest.mark.parametrize(
    "left, right",
    [("a* a*", "a*"), ("a + a", "a"), ("(a + b)*", "(a* b*)*"), ("a eps", "a"), ("eps*", "eps")],
)
def test_equivalent_expressions(left, right):
    assert regex_equivalent(parse_query(left), parse_query(right))


def test_distinguishing_word_is_shortest():
    assert distinguishing_word(parse_query("a"), parse_query("a a")) == ("a",)
    assert distinguishing_word(parse_query("a*"), parse_query("a a*")) == ()
    assert distinguishing_word(parse_query("a b + b"), parse_query("b + a b")) is None


@given(regexes(), regexes())
def test_distinguishing_word_separates_languages(r1, r2):
    w = distinguishing_word(r1, r2)
    if w is None:
        return
    assert language_contains(r1, w) != language_contains(r2, w)


@given(regexes(), integers(min_value=0, max_value=2**16))
def test_rewrites_preserve_language(r, seed):
    assert regex_equivalent(r, gen_equivalent(random.Random(seed), r))


# ============================================================================
# LINEARIZATION
# ============================================================================

def test_linearize():
    lin = linearize(parse_query("a a + b"))
    assert lin.regex == Union(Concat(Atom("#1"), Atom("#2")), Atom("#3"))
    assert lin.gamma == ["#1", "#2", "#3"]
    assert lin.project(["#1", "#2"]) == ("a", "a")
    assert lin.project(["#3"]) == ("b",)


@given(regexes())
def test_linearized_positions_are_distinct(r):
    lin = linearize(r)
    assert len(set(lin.gamma)) == atom_count(r)
    assert len(lin.gamma) == atom_count(r)


@given(regexes())
def test_linearization_projects_onto_the_language(r):
    lin = linearize(r)
    projected = {lin.project(g) for g in words(lin.gamma, 3) if matches(lin.regex, g)}
    assert projected == {w for w in words(LABELS, 3) if matches(r, w)}


def test_linearize_keeps_underscore_labels_apart():
    r = parse_query("__pos1 a")
    lin = linearize(r)
    assert lin.project(lin.gamma) == ("__pos1", "a")
    assert "__pos1" not in lin.gamma


def test_linearize_rejects_non_token_labels():
    with pytest.raises(ContractError):
        linearize(Concat(Atom("#1"), a))
