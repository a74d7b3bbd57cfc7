"""Diagonal quadratic forms with monomial coefficients over tower fields.

Anisotropy is decided by iterating Springer's theorem: over ``F'((v))`` a
form ``q1 + v*q2`` (coefficients ``v``-free) is anisotropic iff both ``q1``
and ``q2`` are anisotropic over ``F'``.  Monomial coefficients make every
split exact.  A p-adic base (p odd) is split once more along ``pi`` into its
residue field; a finite field of odd order has u-invariant 2.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, ShapeError, UnsupportedError
from .tower import (
    COMPLEX,
    FINITE,
    PADIC,
    REAL,
    BaseField,
    Monomial,
    TowerField,
    check_element,
    class_of,
    generator,
    pi_valuation,
    uniformizer,
    unit_log,
)


@dataclass(frozen=True)
class DiagonalQuadraticForm:
    field: TowerField
    coeffs: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        for c in self.coeffs:
            check_element(self.field, c)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: DiagonalQuadraticForm) -> DiagonalQuadraticForm:
        """Orthogonal sum."""
        if self.field != other.field:
            raise ShapeError("forms over different fields")
        return DiagonalQuadraticForm(self.field, self.coeffs + other.coeffs)

    def scaled(self, c: Monomial) -> DiagonalQuadraticForm:
        return DiagonalQuadraticForm(self.field, tuple(c * a for a in self.coeffs))


@dataclass(frozen=True)
class PfisterForm:
    """``<<a_1, ..., a_m>> = <1, -a_1> (x) ... (x) <1, -a_m>``."""

    field: TowerField
    slots: tuple[Monomial, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "slots", tuple(self.slots))
        for a in self.slots:
            check_element(self.field, a)

    @property
    def fold(self) -> int:
        return len(self.slots)


def _require_odd(base: BaseField) -> None:
    if base.kind in (FINITE, PADIC) and base.residue_characteristic == 2:
        raise UnsupportedError(f"base {base} has residue characteristic 2")


def expand_pfister(phi: PfisterForm) -> DiagonalQuadraticForm:
    """Diagonal entries ``prod_{i in S} (-a_i)``; bit ``i`` of the index selects slot ``i``."""
    one = Monomial.constant(phi.field)
    entries = []
    for mask in range(1 << phi.fold):
        x = one
        for i, a in enumerate(phi.slots):
            if mask >> i & 1:
                x = x * -a
        entries.append(x)
    return DiagonalQuadraticForm(phi.field, tuple(entries))


def springer_split(q: DiagonalQuadraticForm) -> tuple[DiagonalQuadraticForm, DiagonalQuadraticForm]:
    """Residue forms ``(q1, q2)`` over the sub-tower with ``q ~ q1 + v*q2``.

    Even powers of the outermost variable ``v`` are squares and cleared; odd
    powers leave one factor ``v`` which the second residue form absorbs.
    """
    F = q.field
    if not F.height:
        raise DomainError(f"{F} has no tower variable to split along")
    sub = F.drop_outermost()
    even, odd = [], []
    for c in q.coeffs:
        (odd if c.exps[-1] % 2 else even).append(c.drop())
    return DiagonalQuadraticForm(sub, tuple(even)), DiagonalQuadraticForm(sub, tuple(odd))


def _finite_anisotropic(q_order: int, logs: Sequence[int]) -> bool:
    """Diagonal form over ``F_q`` (q odd) with entries given by discrete logs."""
    if len(logs) <= 1:
        return True
    if len(logs) >= 3:
        return False
    # <c1, c2> is anisotropic iff -c1*c2 is a non-square; log(-1) = (q-1)/2
    return ((q_order - 1) // 2 + logs[0] + logs[1]) % 2 == 1


def _base_anisotropic(base: BaseField, coeffs: Sequence[Monomial]) -> bool:
    if not coeffs:
        return True
    if base.kind == COMPLEX:
        return len(coeffs) <= 1
    if base.kind == REAL:
        return len({c.coeff > 0 for c in coeffs}) == 1
    if base.kind == FINITE:
        return _finite_anisotropic(base.q, [unit_log(base, c) for c in coeffs])
    units = [unit_log(base, c) for c in coeffs if pi_valuation(base, c) % 2 == 0]
    uniformized = [unit_log(base, c) for c in coeffs if pi_valuation(base, c) % 2]
    return _finite_anisotropic(base.q, units) and _finite_anisotropic(base.q, uniformized)


def _anisotropic(F: TowerField, coeffs: Sequence[Monomial]) -> bool:
    if not coeffs:
        return True
    if not F.height:
        return _base_anisotropic(F.base, coeffs)
    sub = F.drop_outermost()
    even = [c.drop() for c in coeffs if c.exps[-1] % 2 == 0]
    odd = [c.drop() for c in coeffs if c.exps[-1] % 2]
    return _anisotropic(sub, even) and _anisotropic(sub, odd)


def is_anisotropic(q: DiagonalQuadraticForm) -> bool:
    _require_odd(q.field.base)
    return _anisotropic(q.field, q.coeffs)


def is_isotropic(q: DiagonalQuadraticForm) -> bool:
    return not is_anisotropic(q)


def u_invariant(F: TowerField) -> float:
    """Largest dimension of an anisotropic form; doubles with each Laurent variable."""
    _require_odd(F.base)
    base = {COMPLEX: 1, REAL: math.inf, FINITE: 2, PADIC: 4}[F.base.kind]
    return base * 2**F.height


def pfister_represents(phi: PfisterForm, rho: Monomial) -> bool:
    """Whether ``rho`` lies in the value group of ``phi``."""
    check_element(phi.field, rho)
    expansion = expand_pfister(phi)
    if is_isotropic(expansion):
        return True
    return is_isotropic(expansion + DiagonalQuadraticForm(phi.field, (-rho,)))


def square_class(x: Monomial, F: TowerField) -> tuple[int, ...]:
    return class_of(x, F, 2).coords


def is_pfister_subform_syntactic(q: DiagonalQuadraticForm, phi: PfisterForm) -> bool:
    """Each entry of ``q`` equals a distinct entry of ``phi``'s expansion up to a square.

    Sufficient for ``q`` to be a subform of ``phi``; not a full decision.
    """
    if q.field != phi.field:
        raise ShapeError("form and Pfister form over different fields")
    available = Counter(square_class(c, phi.field) for c in expand_pfister(phi).coeffs)
    wanted = Counter(square_class(c, q.field) for c in q.coeffs)
    return all(available[k] >= n for k, n in wanted.items())


def canonical_pfister_slots(F: TowerField, fold: int) -> tuple[Monomial, ...] | None:
    """Slots of a canonical anisotropic ``fold``-fold Pfister form over ``F``.

    Base slots first (finite: a non-square unit; p-adic: a non-square unit and
    ``pi``; real: ``-1`` repeated), then the tower variables.  None when the
    field has too few slots.
    """
    _require_odd(F.base)
    slots: list[Monomial] = []
    if F.base.kind == FINITE:
        slots.append(generator(F.base, 2, F))
    elif F.base.kind == PADIC:
        slots += [generator(F.base, 2, F), uniformizer(F)]
    elif F.base.kind == REAL:
        slots += [Monomial.constant(F, -1)] * max(0, fold - F.height)
    slots += [Monomial.variable(F, v) for v in F.variables]
    if len(slots) < fold:
        return None
    return tuple(slots[:fold])
