import pytest
from hypothesis import given
from hypothesis import strategies as st

from gochow import catalog
from gochow.exprparse import (BinOp, Neg, Num, ParseError, Pow, Var, parse_expression,
                              parse_poly_expression, to_text)
from gochow.polycore import GradedContext

CTX = GradedContext.of(("l", 1), ("c1", 1), ("c2", 2))


def test_relation_examples():
    rels = catalog.go_relations(1)
    assert parse_poly_expression("2*c1 - 2*l", CTX) == -(CTX.var("l") * 2 - CTX.var("c1") * 2)
    assert parse_poly_expression("2*c1 - 2*l", catalog.go_context(1)) == -rels[0]
    assert parse_poly_expression("l^2 - c1*l", catalog.go_context(1)) == rels[1]


def test_precedence():
    assert parse_expression("-l^2") == Neg(Pow(Var("l"), 2))
    assert parse_expression("1 - 2 - 3") == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse_expression("a + b*c") == BinOp("+", Var("a"), BinOp("*", Var("b"), Var("c")))
    l = CTX.var("l")
    assert parse_poly_expression("-l^2", CTX) == -(l ** 2)
    assert parse_poly_expression("(l + c1)^2", CTX) == (l + CTX.var("c1")) ** 2


@pytest.mark.parametrize("text, fragment, column", [
    ("c1^-1", "negative exponent", 4),
    ("c1^(-2)", "negative exponent", 5),
    ("2 c1", "implicit multiplication", 3),
    ("2*c1 +", "unexpected end of input", 7),
    ("(l + c1", "expected ')'", 8),
    ("l $ c1", "unexpected character", 3),
    ("c1^l", "exponent must be an integer", 4),
])
def test_errors(text, fragment, column):
    with pytest.raises(ParseError) as info:
        parse_poly_expression(text, CTX)
    assert fragment in str(info.value)
    assert info.value.position + 1 == column


def test_unknown_variable():
    with pytest.raises(ParseError, match="unknown variable 'x'"):
        parse_poly_expression("l + x", CTX)


def test_zero_exponent_allowed():
    assert parse_poly_expression("c2^0", CTX) == CTX.one()
    assert parse_poly_expression("c2^-0", CTX) == CTX.one()


names = st.sampled_from(["l", "c1", "c2", "t1", "x_2"])
leaves = st.one_of(st.integers(0, 50).map(Num), names.map(Var))
trees = st.recursive(
    leaves,
    lambda kids: st.one_of(
        kids.map(Neg),
        st.tuples(st.sampled_from("+-*"), kids, kids).map(lambda t: BinOp(*t)),
        st.tuples(kids, st.integers(0, 5)).map(lambda t: Pow(*t))),
    max_leaves=12)


@given(trees)
def test_print_parse_round_trip(tree):
    assert parse_expression(to_text(tree)) == tree
