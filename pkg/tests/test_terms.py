import random

import pytest
from hypothesis import given, settings

from caustic.algebra import (
    ONE,
    ZERO,
    App,
    Atom,
    CausalGraph,
    CausalValue,
    Product,
    Sum,
    eval_term,
    format_term,
    graph_to_term,
    parse_term,
    value_of,
    value_to_term,
)
from caustic.errors import TermSyntaxError

from axioms import AXIOMS, failures
from generators import graphs, random_graph, terms, values


@pytest.mark.parametrize("name", sorted(AXIOMS))
def test_axiom(name):
    rng = random.Random(name)
    for _ in range(60):
        lhs, rhs = AXIOMS[name](rng)
        assert eval_term(lhs) == eval_term(rhs), (format_term(lhs), format_term(rhs))


def test_all_axioms_other_seed():
    assert failures(seed=7, rounds=40) == []


def test_chain_law_needs_non_unit_middle():
    # with d = 1 the two sides differ: c·e links c to e, (c·1)*(1·e) does not
    c, e = Atom("c"), Atom("e")
    assert eval_term(App(App(c, Product()), e)) != eval_term(Product((App(c, Product()), App(Product(), e))))


def test_eval_leaves():
    assert eval_term(Sum()) == ZERO
    assert eval_term(Product()) == ONE
    assert eval_term(Atom("x")) == CausalValue.label("x")


def test_parse_precedence():
    assert parse_term("a + b * c . d") == Sum((Atom("a"), Product((Atom("b"), App(Atom("c"), Atom("d"))))))
    assert parse_term("r^a") == App(Atom("r"), Atom("a"))
    assert parse_term("a·b") == parse_term("a.b")
    assert parse_term("(a + b).c") == App(Sum((Atom("a"), Atom("b"))), Atom("c"))
    assert parse_term("0") == Sum() and parse_term("1") == Product()


def test_parse_sugar_binds_tightest():
    assert value_of("harvey.r3^tails.r2^shoot.r1^dead") == value_of("harvey.(r3.tails).(r2.shoot).(r1.dead)")


@pytest.mark.parametrize("text", ["", "a +", "(a", "a b", "a.)", "A", "a ^ b ^"])
def test_parse_errors(text):
    with pytest.raises(TermSyntaxError):
        parse_term(text)


@given(terms())
@settings(max_examples=200)
def test_format_parse_roundtrip(t):
    for ascii in (False, True):
        assert eval_term(parse_term(format_term(t, ascii=ascii))) == eval_term(t)


def test_format_minimal_parentheses():
    assert format_term(parse_term("(a + b).c")) == "(a + b)·c"
    assert format_term(parse_term("a*b + c"), ascii=True) == "a * b + c"
    assert format_term(parse_term("a.(b.c)"), ascii=True) == "a.(b.c)"


def test_value_to_term_constants():
    assert value_to_term(ZERO) == Sum()
    assert value_to_term(ONE) == Product()


def test_graph_to_term_shape():
    g = CausalGraph.of([("a", "b"), ("c", "c")])
    assert graph_to_term(g) == Product((App(Atom("a"), Atom("b")), Atom("c")))


@pytest.mark.parametrize("seed", range(200))
def test_graph_roundtrip(seed):
    g = random_graph(random.Random(seed))
    assert eval_term(value_to_term(CausalValue.of([g]))).graphs == {g}


@given(graphs())
def test_graph_roundtrip_hypothesis(g):
    assert eval_term(graph_to_term(g)) == CausalValue.of([g])


@given(values())
def test_value_roundtrip(v):
    assert eval_term(value_to_term(v)) == v
