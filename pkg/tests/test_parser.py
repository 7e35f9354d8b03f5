import random

import pytest

from uqa.checks import random_element
from uqa.cominuscule import krahmer_element
from uqa.parser import ParseError, parse_element, parse_scalar
from uqa.rootdata import LeviSpec
from uqa.scalar import Q, q_integer


def test_generators(A2):
    assert parse_element("E1", A2) == A2.E(1)
    assert parse_element("F2", A2) == A2.F(2)
    assert parse_element("K1", A2) == A2.Ki(1)
    assert parse_element("K1^-1", A2) == A2.Ki(1, -1)
    assert parse_element("K(-2*w2)", A2) == A2.K(A2.datum.fundamental(2) * -2)


def test_fiber_element_text(A2):
    v = parse_element("(q^-2 - 1) K(-2*w2) F2 K(a2)", A2)
    assert v == krahmer_element(A2, 1, LeviSpec.complement(A2.datum, 2))


def test_commutator_text(A2):
    v = parse_element("E1 F1 - F1 E1", A2)
    assert v == (A2.Ki(1) - A2.Ki(1, -1)).scale((Q - Q ** -1).inverse())


def test_scalars():
    assert parse_scalar("(q^2 - 1)/(q - 1)") == Q + 1
    assert parse_scalar("q + q^-1") == q_integer(2)
    assert parse_scalar("-2^2") == -4
    assert parse_scalar("2 q") == Q * 2
    assert parse_scalar("1/(q+q^-1)") == q_integer(2).inverse()


def test_precedence(A2):
    assert parse_element("2*E1 + 3", A2) == A2.E(1).scale(2) + 3
    assert parse_element("-E1 F1", A2) == -(A2.E(1) * A2.F(1))
    assert parse_element("E1*-F1", A2) == -(A2.E(1) * A2.F(1))
    assert parse_element("(E1 + F1)^2", A2) == (A2.E(1) + A2.F(1)) ** 2
    assert parse_element("E1/(q+1)", A2) == A2.E(1).scale((Q + 1).inverse())


@pytest.mark.parametrize("text,pos", [
    ("E3", 0),
    ("E1 +", 4),
    ("E1 / E2", 3),
    ("E1^-1", 2),
    ("q $", 2),
    ("(E1", 3),
    ("K(w7)", 2),
    ("E1 / 0", 3),
])
def test_errors_carry_position(A2, text, pos):
    with pytest.raises(ParseError) as info:
        parse_element(text, A2)
    assert info.value.pos == pos


def test_generators_not_allowed_in_scalar():
    with pytest.raises(ParseError):
        parse_scalar("q E1")


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_round_trip(name, request):
    alg = request.getfixturevalue(name)
    rng = random.Random(99)
    for _ in range(100):
        v = random_element(alg, rng, 3, 3)
        if rng.random() < 0.3:
            v = v.scale((Q + 2).inverse())
        text = alg.format(v)
        assert parse_element(text, alg) == v
        assert alg.format(parse_element(text, alg)) == text
