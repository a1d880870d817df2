from fractions import Fraction
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hombol.constructions import lie_sts_from_jordan, yau_twist_binary
from hombol.core import SuperVector
from hombol.dsl import (
    DslCheckRequest,
    ParseError,
    check_identities,
    check_identity,
    evaluate_identity,
    load_builtin,
    parse_identity,
    parse_identity_file,
    print_expr,
    print_identity,
)
from hombol.dsl.ast import Bracket, Identity, KoszulSign, Scaled, Sum, Triple, Twist, Var, Zero
from hombol.errors import MissingOperation
from hombol.fixtures import fixture, mutate
from hombol.identities import check_suite
from hombol.products import super_jordan
from hombol.sampling import random_identity

SHB4 = "{x,y,z} == 0 - (-1)^(|x|*|y|) * {y,x,z}"


# -- parsing

def test_parse_shb4():
    ident = parse_identity(SHB4)
    x, y, z = Var("x"), Var("y"), Var("z")
    assert ident.lhs == Triple(x, y, z)
    assert ident.rhs == Sum(((1, Zero()), (-1, KoszulSign((("x", "y"),), Triple(y, x, z)))))
    assert ident.variables() == ("x", "y", "z")
    assert ident.degree_symbols() == {"x", "y"}


def test_parse_twist_powers_and_rationals():
    ident = parse_identity("a^2([x,y]) == 1/2 * [a(x), a(y)] - -3 * x")
    assert ident.lhs == Twist(2, Bracket(Var("x"), Var("y")))
    assert ident.rhs == Sum((
        (1, Scaled(Fraction(1, 2), Bracket(Twist(1, Var("x")), Twist(1, Var("y"))))),
        (-1, Scaled(Fraction(-3), Var("x"))),
    ))


def test_leading_minus_and_parentheses():
    ident = parse_identity("-[x,y] == (x - y)")
    assert ident.lhs == Sum(((1, Zero()), (-1, Bracket(Var("x"), Var("y")))))
    assert ident.rhs == Sum(((1, Var("x")), (-1, Var("y"))))


def test_printer():
    e = KoszulSign((("x", "y"), ("z",)), Bracket(Var("u"), Var("v")))
    assert print_expr(e) == "(-1)^(|x|*|y| + |z|) * [u,v]"
    assert print_identity(parse_identity(SHB4)) == SHB4


@pytest.mark.parametrize("text,line,column", [
    ("{x,y} == 0", 1, 5),
    ("[x,y] == ", 1, 10),
    ("[x,y]\n  == [y,,x]", 2, 9),
    ("x == 2 x", 1, 6),
    ("x == 1/0 * x", 1, 8),
    ("x == (-1)^(|w|) * x", 1, 1),
    ("x = y", 1, 3),
    ("[x,y] == 0 0", 1, 12),
])
def test_parse_errors_report_position(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_identity(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert str(err.value).startswith(f"{line}:{column}:")


def test_parse_error_lists_expected():
    with pytest.raises(ParseError) as err:
        parse_identity("{x,y} == 0")
    assert err.value.expected == ("','",)


def test_parse_file():
    text = (
        "# comment\n"
        "\n"
        "A: [x,y] == 0 - [y,x]   # trailing\n"
        "B: {x,y,z}\n"
        "     == {y,x,z}\n"
    )
    got = parse_identity_file(text)
    assert [i.name for i in got] == ["A", "B"]
    assert got[1].rhs == Triple(Var("y"), Var("x"), Var("z"))


def test_parse_file_errors():
    with pytest.raises(ParseError) as err:
        parse_identity_file("  [x,y] == 0\n")
    assert err.value.line == 1
    with pytest.raises(ParseError) as err:
        parse_identity_file("A: x == x\nA: y == y\n")
    assert "duplicate" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_identity_file("A: x == x\nnot an entry\n")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        parse_identity_file("A: x == x\nB: [x,\n   y == 0\n")
    assert err.value.line == 3


# -- evaluation

def test_evaluation_examples():
    bol = fixture("example-4.1-bol")
    shb3 = parse_identity("[x,y] == 0 - (-1)^(|x|*|y|) * [y,x]")
    req = DslCheckRequest(shb3, bol)
    assert evaluate_identity(req, {"x": 1, "y": 2}) == SuperVector.zero(3)
    sb3 = load_builtin("bol")[2]
    assert sb3.name == "SB3"
    assert evaluate_identity(DslCheckRequest(sb3, bol), (0, 1, 1)) == SuperVector.zero(3)
    # without the sign the odd pair (j, k) is a counterexample: [j,k] + [k,j] = 12i
    plain = parse_identity("[x,y] == 0 - [y,x]", "plain")
    assert evaluate_identity(DslCheckRequest(plain, bol), (1, 2)) == SuperVector((12, 0, 0))
    rep = check_identity(DslCheckRequest(plain, bol))
    assert rep["plain"].failing_args == {(1, 2), (2, 1)}


def test_binding_order():
    bol = fixture("example-4.1-bol")
    ident = parse_identity("[x,y] == 0")
    assert evaluate_identity(DslCheckRequest(ident, bol, ("y", "x")), (2, 1)) == SuperVector((6, 0, 0))
    with pytest.raises(ValueError):
        DslCheckRequest(ident, bol, ("x",))


def test_missing_operation():
    with pytest.raises(MissingOperation):
        DslCheckRequest(parse_identity("{x,y,z} == 0"), fixture("example-4.1-star"))
    lsts = lie_sts_from_jordan(super_jordan(fixture("example-4.1-star")))
    with pytest.raises(MissingOperation):
        DslCheckRequest(parse_identity("[x,y] == 0"), lsts)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 49), x=st.integers(0, 2), y=st.integers(0, 2))
def test_sign_depends_only_on_degree(seed, x, y):
    # j and k are both odd, so rebinding between them keeps the sign
    a = mutate(fixture("example-4.1-bol"), seed)
    ident = parse_identity("(-1)^(|x|*|y|) * [x,y] == [x,y]")
    got = evaluate_identity(DslCheckRequest(ident, a), (x, y))
    odd_pair = a.degrees[x] * a.degrees[y] == 1
    assert got == (a.binary.product(x, y) * -2 if odd_pair else SuperVector.zero(3))


# -- built-in identity files agree with the hard-coded checkers

def _dsl_signature(a, suite):
    return check_identities(load_builtin(suite), a, suite).signature()


def _algebras():
    star = fixture("example-4.1-star")
    bols = [fixture("example-3.1"), fixture("example-3.1-printed"), fixture("example-4.1-bol")]
    homs = [fixture("example-4.1-hom-bol", a=2, b=0), fixture("example-4.1-hom-bol", a=2, b=3)]
    out = [(b, "bol") for b in bols] + [(h, "hom-bol") for h in homs] + [(star, "right-alt")]
    out += [(mutate(a, s), suite) for a, suite in list(out) for s in range(3)]
    tw = yau_twist_binary(star, fixture("example-4.1-beta", a=2))
    out.append((tw, "right-alt"))
    out.append((lie_sts_from_jordan(super_jordan(tw)), "hlsts"))
    out.append((lie_sts_from_jordan(super_jordan(star)), "lsts"))
    return out


@pytest.mark.parametrize("k", range(len(_algebras())))
def test_builtins_match_hard_coded(k):
    a, suite = _algebras()[k]
    assert _dsl_signature(a, suite) == check_suite(a, suite).signature()


def test_builtin_round_trip():
    for suite in ("right-alt", "bol", "hom-bol", "lsts", "hlsts"):
        for ident in load_builtin(suite):
            again = parse_identity(print_identity(ident), ident.name)
            assert again == ident


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_random_round_trip(seed):
    ident = random_identity(random.Random(seed), 4)
    assert parse_identity(print_identity(ident)) == ident


def test_identity_is_a_value():
    assert parse_identity(SHB4) == parse_identity("{x,y,z}==0-(-1)^(|x|*|y|)*{y,x,z}")
    assert isinstance(parse_identity(SHB4), Identity)
