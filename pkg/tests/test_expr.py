import pytest
from hypothesis import given
from hypothesis import strategies as st

from yangmix.expr import SYMBOLS, ExprParseError, OperatorExpr, parse_operator_expr


@pytest.mark.parametrize("text, terms", [
    ("V+ + V-", ((1.0, "V+"), (1.0, "V-"))),
    ("I- + U- + V-", ((1.0, "I-"), (1.0, "U-"), (1.0, "V-"))),
    ("2*I8 - 0.5*I3", ((2.0, "I8"), (-0.5, "I3"))),
    ("  I3", ((1.0, "I3"),)),
    ("I++U-", ((1.0, "I+"), (1.0, "U-"))),
    ("I+-U-", ((1.0, "I+"), (-1.0, "U-"))),
    ("1e-3 * V+ - .5*I8", ((1e-3, "V+"), (-0.5, "I8"))),
])
def test_parse(text, terms):
    assert parse_operator_expr(text).terms == terms


@pytest.mark.parametrize("text, offset, expected", [
    ("", 0, "ladder symbol"),
    ("V+ +", 4, "ladder symbol"),
    ("I- + * V+", 5, "ladder symbol"),
    ("2 I8", 2, "'*'"),
    ("I+ U-", 3, "'+', '-' or end"),
    ("--I3", 1, "ladder symbol"),
    ("X+", 0, "ladder symbol"),
    ("2*", 2, "ladder symbol"),
])
def test_parse_errors(text, offset, expected):
    with pytest.raises(ExprParseError) as info:
        parse_operator_expr(text)
    assert info.value.offset == offset
    assert expected in str(info.value)


def test_error_offset_counts_bytes():
    with pytest.raises(ExprParseError) as info:
        parse_operator_expr("I3 + λ")
    assert info.value.offset == 5
    with pytest.raises(ExprParseError) as info:
        parse_operator_expr("λ")
    assert info.value.offset == 0


def test_operator_expr_validation():
    with pytest.raises(ValueError):
        OperatorExpr(())
    with pytest.raises(ValueError):
        OperatorExpr(((1.0, "W+"),))
    with pytest.raises(ValueError):
        OperatorExpr(((float("inf"), "I3"),))


coeffs = st.floats(-100, 100, allow_nan=False).filter(lambda c: c != 0)
exprs = st.lists(st.tuples(coeffs, st.sampled_from(SYMBOLS)), min_size=1, max_size=6).map(
    lambda ts: OperatorExpr(tuple(ts)))


@given(exprs)
def test_str_roundtrip(expr):
    back = parse_operator_expr(str(expr))
    assert [s for _, s in back.terms] == [s for _, s in expr.terms]
    for (c1, _), (c2, _) in zip(back.terms, expr.terms):
        assert c1 == pytest.approx(c2, rel=1e-5)


def test_leading_sign():
    assert parse_operator_expr("-2*I8 + I3").terms == ((-2.0, "I8"), (1.0, "I3"))
    assert parse_operator_expr(" + V+").terms == ((1.0, "V+"),)
