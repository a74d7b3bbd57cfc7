from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubiccert.errors import AdmissibilityError, DomainError, ShapeError
from cubiccert.tower import (
    BaseField,
    ClassVector,
    Monomial,
    TowerField,
    basis_names,
    class_dim,
    class_of,
    generator,
    is_lth_power,
    laurent_tower,
    lth_powers,
    prime_power,
    representative,
    uniformizer,
)

from strategies import CUBE_BASES, monomials, towers

C2 = laurent_tower(2, "l")
F7 = TowerField(BaseField.finite(7))


def test_prime_power():
    assert prime_power(7) == (7, 1)
    assert prime_power(64) == (2, 6)
    assert prime_power(49) == (7, 2)
    assert prime_power(6) is None
    assert prime_power(1) is None


def test_base_field_validation():
    with pytest.raises(DomainError):
        BaseField.finite(6)
    with pytest.raises(DomainError):
        BaseField.padic(7, 25)
    assert str(BaseField.padic(7)) == "Qp(7;7)"


@pytest.mark.parametrize(
    "base, ell, ok",
    [
        (BaseField.complex(), 3, True),
        (BaseField.real(), 2, True),
        (BaseField.real(), 3, False),
        (BaseField.finite(7), 3, True),
        (BaseField.finite(5), 3, False),
        (BaseField.finite(4), 3, True),
        (BaseField.padic(7), 3, True),
        (BaseField.padic(3, 9), 3, False),
        (BaseField.padic(5), 3, False),
        (BaseField.complex(), 4, False),
    ],
)
def test_admissibility(base, ell, ok):
    assert base.is_admissible(ell) is ok
    if not ok:
        with pytest.raises(AdmissibilityError):
            class_dim(TowerField(base), ell)


def test_class_dim_examples():
    assert class_dim(C2, 3) == 2
    assert class_dim(laurent_tower(1, "l", BaseField.finite(7)), 3) == 2
    assert class_dim(TowerField(BaseField.padic(7)), 3) == 2
    assert class_dim(TowerField(BaseField.real(), ("l1",)), 2) == 2


def test_padic_class_group_matches_hensel_count():
    # Q7*/cubes: x = 7^v * c with c a unit; two such are congruent mod cubes
    # iff the valuations agree mod 3 and c1/c2 is a cube mod 7 (Hensel).
    F = TowerField(BaseField.padic(7))
    cubes = lth_powers(7, 3)
    elems = [(v, c) for v in range(3) for c in range(1, 7)]
    for v1, c1 in elems:
        for v2, c2 in elems:
            x = Monomial(Fraction(7) ** v1 * c1)
            y = Monomial(Fraction(7) ** v2 * c2)
            same = v1 == v2 and (c1 * pow(c2, -1, 7)) % 7 in cubes
            assert (class_of(x, F, 3) == class_of(y, F, 3)) is same
    assert len({class_of(Monomial(Fraction(7) ** v * c), F, 3) for v, c in elems}) == 3**2


def test_class_of_examples():
    x = Monomial.variable(C2, "l1") * Monomial.variable(C2, "l2", 2)
    assert class_of(x, C2, 3).coords == (1, 2)
    assert class_of(Monomial.constant(C2), C2, 3).is_zero()


def test_finite_generator_and_class_of_three():
    # cube classes of F7*: {1,6}, {3,4}, {2,5}
    assert lth_powers(7, 3) == {1, 6}
    assert generator(F7.base, 3) == Monomial(Fraction(2))
    assert class_of(Monomial(Fraction(3)), F7, 3).coords == (2,)
    assert (2 * 2 * pow(3, -1, 7)) % 7 in lth_powers(7, 3)


def test_is_lth_power_examples():
    assert is_lth_power(Monomial(Fraction(6)), F7, 3)
    C1 = laurent_tower(1, "l")
    assert not is_lth_power(Monomial.variable(C1, "l1"), C1, 3)
    assert is_lth_power(Monomial.variable(C1, "l1", 3), C1, 3)


@pytest.mark.parametrize("q, ell", [(7, 3), (13, 3), (31, 5), (29, 7), (11, 5)])
def test_finite_classes_agree_with_enumeration(q, ell):
    F = TowerField(BaseField.finite(q))
    powers = lth_powers(q, ell)
    for c in range(1, q):
        assert is_lth_power(Monomial(Fraction(c)), F, ell) is (c in powers)
        for d in range(1, q):
            same = c * pow(d, -1, q) % q in powers
            assert (class_of(Monomial(Fraction(c)), F, ell) == class_of(Monomial(Fraction(d)), F, ell)) is same


def test_generator_falls_back_to_zeta_when_prime_field_is_all_cubes():
    # F5* has order 4, so every c in F5* satisfies c^8 = 1 and is a cube in F25*
    assert all(pow(c, 8, 5) == 1 for c in range(1, 5))
    F = TowerField(BaseField.finite(25))
    g = generator(F.base, 3)
    assert g.zeta == 1
    assert class_of(g, F, 3).coords == (1,)
    assert all(is_lth_power(Monomial(Fraction(c)), F, 3) for c in range(1, 5))


def test_zero_and_malformed_elements():
    with pytest.raises(DomainError):
        Monomial(Fraction(0))
    with pytest.raises(DomainError):
        class_of(Monomial(Fraction(7)), F7, 3)
    with pytest.raises(ShapeError):
        class_of(Monomial(Fraction(1), (1,)), F7, 3)
    with pytest.raises(DomainError):
        class_of(Monomial(Fraction(1), (), zeta=1), laurent_tower(0), 3)
    with pytest.raises(DomainError):
        uniformizer(F7)


def test_basis_names_and_strings():
    F = laurent_tower(2, "l", BaseField.padic(7))
    assert basis_names(F, 3) == ("u", "pi", "l1", "l2")
    assert str(F) == "Qp(7;7)[[l1]][[l2]]"
    assert str(laurent_tower(3, "l")) == "C[[l1]][[l2]][[l3]]"


def test_fresh_variable():
    assert laurent_tower(3).fresh_variable() == "t4"
    assert laurent_tower(2, "l").fresh_variable() == "l3"
    assert TowerField(BaseField.complex()).fresh_variable() == "t1"
    assert TowerField(BaseField.complex(), ("a", "t2")).fresh_variable() == "t3"
    assert TowerField(BaseField.complex(), ("t3",)).fresh_variable() == "t2"


@given(st.data())
def test_class_of_is_a_homomorphism(data):
    F = data.draw(towers(CUBE_BASES))
    x, y = data.draw(monomials(F)), data.draw(monomials(F))
    assert class_of(x * y, F, 3) == class_of(x, F, 3) + class_of(y, F, 3)
    assert class_of(x.inverse(), F, 3) == -class_of(x, F, 3)


@given(st.data())
def test_lth_powers_are_trivial(data):
    F = data.draw(towers(CUBE_BASES))
    x = data.draw(monomials(F))
    assert class_of(x**3, F, 3).is_zero()


@given(st.data())
def test_representative_inverts_class_of(data):
    F = data.draw(towers(CUBE_BASES))
    coords = data.draw(st.lists(st.integers(0, 2), min_size=class_dim(F, 3), max_size=class_dim(F, 3)))
    assert class_of(representative(F, 3, coords), F, 3) == ClassVector(3, tuple(coords))
