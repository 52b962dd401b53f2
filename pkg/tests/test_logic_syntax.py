import pytest
from hypothesis import given, settings, strategies as st

from hyperset.errors import LanguageError, ParseError
from hyperset.logic.parser import parse, pretty
from hyperset.logic.syntax import (
    And,
    Atom,
    Bottom,
    D,
    E,
    Eq,
    Exists,
    Forall,
    Implies,
    Not,
    Or,
    Top,
    check_language,
    conj,
    disj,
    free_vars,
    language_of,
    quantifier_rank,
    variables,
)

VARS = st.sampled_from(["x", "y", "z", "w0", "u_1"])

formulas = st.recursive(
    st.one_of(
        st.builds(Atom, st.sampled_from(["D", "S", "E"]), VARS, VARS),
        st.builds(Eq, VARS, VARS),
        st.just(Top()),
        st.just(Bottom()),
    ),
    lambda sub: st.one_of(
        st.builds(Not, sub),
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Implies, sub, sub),
        st.builds(Exists, VARS, sub),
        st.builds(Forall, VARS, sub),
    ),
    max_leaves=12,
)


@settings(max_examples=400)
@given(formulas)
def test_print_then_parse_is_identity(f):
    assert parse(pretty(f)) == f


@settings(max_examples=100)
@given(formulas)
def test_printing_is_deterministic_ascii(f):
    text = pretty(f)
    assert text == pretty(parse(text))
    assert text.isascii()


def test_precedence():
    assert parse("!D(x,y) & D(y,x) | x=y") == Or(And(Not(D("x", "y")), D("y", "x")), Eq("x", "y"))
    assert parse("D(x,x) -> D(y,y) -> x=y") == Implies(D("x", "x"), Implies(D("y", "y"), Eq("x", "y")))
    assert parse("exists x. D(x,y) & x=y") == Exists("x", And(D("x", "y"), Eq("x", "y")))
    assert parse("x != y") == Not(Eq("x", "y"))


def test_quantifier_in_left_operand_is_parenthesized():
    f = And(Exists("x", D("x", "x")), D("y", "y"))
    assert pretty(f) == "((exists x. D(x,x)) & D(y,y))"
    assert parse(pretty(f)) == f


@pytest.mark.parametrize("text", ["", "D(x,", "D(x,y) &", "exists . D(x,x)", "x", "(D(x,y)", "D(x,y))", "x = exists", "D(x,y) $"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_free_variables_and_rank():
    f = parse("forall x. (D(x,y) -> exists z. D(z,x))")
    assert free_vars(f) == {"y"}
    assert variables(f) == {"x", "y", "z"}
    assert quantifier_rank(f) == 2


def test_languages():
    assert language_of(parse("D(x,y)")) == "L1"
    assert language_of(parse("S(x,y) & D(x,x)")) == "L0"
    assert language_of(parse("E(x,y)")) == "LNBG"
    with pytest.raises(LanguageError):
        check_language(parse("E(x,y)"), "L1")
    with pytest.raises(LanguageError):
        language_of(And(E("x", "y"), D("x", "y")))


def test_empty_connectives():
    assert conj([]) == Top()
    assert disj([]) == Bottom()
