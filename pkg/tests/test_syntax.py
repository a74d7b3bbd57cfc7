from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubiccert.errors import ParseError
from cubiccert.quadforms import DiagonalQuadraticForm, PfisterForm
from cubiccert.realtopo import RationalCubic
from cubiccert.syntax import (
    format_cubic,
    format_field,
    format_form,
    format_monomial,
    format_pfister,
    parse_cubic,
    parse_field,
    parse_form,
    parse_monomial,
    parse_pfister,
)
from cubiccert.tower import BaseField, TowerField

from strategies import monomials, towers

CANONICAL_FIELDS = ["C", "R", "Fq(7)", "Fq(7)[[l1]][[l2]]", "C[[l1]][[l2]][[l3]]", "Qp(7;7)[[l1]]", "Qp(5;25)", "Fq(49)[[x]]"]


@pytest.mark.parametrize("text", CANONICAL_FIELDS)
def test_field_round_trip(text):
    assert format_field(parse_field(text)) == text


def test_field_examples():
    F = parse_field("Fq(7)[[l1]][[l2]]")
    assert F == TowerField(BaseField.finite(7), ("l1", "l2"))
    assert parse_field(" Qp( 7 ) [[l1]]") == TowerField(BaseField.padic(7), ("l1",))


@pytest.mark.parametrize(
    "text, column",
    [
        ("Fq(6)[[l1]]", 4),
        ("Fq(7)[[l1]", 10),
        ("Qp(7;9)", 6),
        ("Qp(6)", 4),
        ("Q", 1),
        ("C[[l1]][[l1]]", 10),
        ("C[[pi]]", 4),
        ("C[[l1]] junk", 9),
    ],
)
def test_field_errors_carry_positions(text, column):
    with pytest.raises(ParseError) as info:
        parse_field(text)
    assert info.value.line == 1 and info.value.column == column
    diag = info.value.diagnostic().splitlines()
    assert diag[1].strip() == text.strip()
    assert diag[2].index("^") - 2 == column - 1


CANONICAL_MONOMIALS = ["1", "-1", "3", "-3/2", "l1", "-l1", "3*l1^2*l2^-1", "-l1*l2", "1/2*l2^3"]


@pytest.mark.parametrize("text", CANONICAL_MONOMIALS)
def test_monomial_round_trip(text):
    F = parse_field("C[[l1]][[l2]]")
    assert format_monomial(parse_monomial(text, F), F) == text


def test_monomial_with_zeta_and_pi():
    F = parse_field("Qp(7;7)[[l1]]")
    x = parse_monomial("3*zeta^2*pi^-1*l1", F)
    assert (x.coeff, x.zeta, x.pi, x.exps) == (Fraction(3), 2, -1, (1,))
    assert format_monomial(x, F) == "3*zeta^2*pi^-1*l1"


@pytest.mark.parametrize(
    "text, field",
    [("l3", "C[[l1]]"), ("0", "C"), ("7", "Fq(7)"), ("pi", "Fq(7)"), ("zeta", "C"), ("1/0", "C"), ("2*", "C")],
)
def test_monomial_errors(text, field):
    with pytest.raises(ParseError):
        parse_monomial(text, parse_field(field))


def test_form_and_pfister_round_trip():
    F = parse_field("C[[l1]][[l2]]")
    for text in ["<1,l1,l2,l1*l2>", "<-1>", "<3*l1^2*l2^-1,2>"]:
        assert format_form(parse_form(text, F)) == text
    for text in ["<<l1,l2>>", "<<>>", "<<-l1*l2>>"]:
        assert format_pfister(parse_pfister(text, F)) == text
    assert parse_pfister("<<l1,l2>>", F).slots == tuple(parse_monomial(v, F) for v in ("l1", "l2"))
    with pytest.raises(ParseError):
        parse_form("<<l1>>", F)
    with pytest.raises(ParseError):
        parse_form("<>", F)


@pytest.mark.parametrize(
    "text, canonical",
    [
        ("u^3 - u", "u^3 - u"),
        ("u^3-u", "u^3 - u"),
        ("u(u-1)(u+1)", "u^3 - u"),
        ("(u-1)(u^2+1)", "u^3 - u^2 + u - 1"),
        ("u^3+1", "u^3 + 1"),
        ("-3/2*u + 2", "-3/2*u + 2"),
        ("2*(u-1)^2", "2*u^2 - 4*u + 2"),
        ("0", "0"),
    ],
)
def test_cubic_parsing(text, canonical):
    assert format_cubic(parse_cubic(text)) == canonical
    assert format_cubic(parse_cubic(canonical)) == canonical


@pytest.mark.parametrize("text", ["u^4", "u^2*u^2", "x^3", "u^3 +", "(u", "1.5*u"])
def test_cubic_errors(text):
    with pytest.raises(ParseError):
        parse_cubic(text)


@given(towers(max_height=3).flatmap(lambda F: st.tuples(st.just(F), monomials(F))))
def test_parse_inverts_format_for_monomials(pair):
    F, x = pair
    assert parse_monomial(format_monomial(x, F), F) == x


@given(towers(max_height=3).flatmap(lambda F: st.tuples(st.just(F), st.lists(monomials(F), min_size=1, max_size=4))))
def test_parse_inverts_format_for_forms(pair):
    F, coeffs = pair
    q = DiagonalQuadraticForm(F, tuple(coeffs))
    assert parse_form(format_form(q), F) == q
    phi = PfisterForm(F, tuple(coeffs))
    assert parse_pfister(format_pfister(phi), F) == phi
    assert parse_field(format_field(F)) == F


@given(st.lists(st.fractions(max_denominator=12).filter(lambda x: abs(x) < 50), min_size=0, max_size=4))
def test_parse_inverts_format_for_cubics(coeffs):
    f = RationalCubic(tuple(coeffs))
    assert parse_cubic(format_cubic(f)) == f
