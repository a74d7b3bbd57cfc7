"""Base fields, iterated Laurent-series towers and monomial elements.

A tower ``k((l1))...((ln))`` is described by a :class:`BaseField` and an
ordered tuple of variable names, innermost first.  Field elements are
restricted to monomials ``c * zeta^z * pi^j * l1^e1 * ... * ln^en``; for
those the class in ``F*/F*^ell`` is exact and computable.

Finite-field units are handled through discrete logarithms with respect to
a fixed primitive element ``zeta`` of ``F_q*`` whose norm to the prime field
is the smallest primitive root ``r`` mod ``p``.  An integer ``c`` prime to
``p`` then has ``log_zeta(c) = (q-1)/(p-1) * log_r(c mod p)``, so no explicit
model of ``F_q`` is needed.  For p-adic bases the uniformizer is ``pi = p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from sympy.ntheory import discrete_log, isprime, perfect_power, primitive_root

from .errors import AdmissibilityError, DomainError, ShapeError

COMPLEX = "C"
REAL = "R"
FINITE = "Fq"
PADIC = "Qp"
KINDS = (COMPLEX, REAL, FINITE, PADIC)


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, f)`` with ``q == p**f`` and ``p`` prime, or None."""
    if q < 2:
        return None
    if isprime(q):
        return q, 1
    pp = perfect_power(q)
    if not pp:
        return None
    base, e = pp
    # perfect_power may return a composite base, e.g. 64 -> (8, 2)
    sub = prime_power(base)
    if sub is None:
        return None
    return sub[0], sub[1] * e


@dataclass(frozen=True)
class BaseField:
    kind: str
    q: int = 0
    p: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"unknown base field kind {self.kind!r}")
        if self.kind in (FINITE, PADIC):
            pp = prime_power(self.q)
            if pp is None:
                raise DomainError(f"{self.q} is not a prime power")
            if self.kind == FINITE:
                object.__setattr__(self, "p", pp[0])
            elif self.p != pp[0]:
                raise DomainError(f"residue cardinality {self.q} is not a power of p={self.p}")

    @classmethod
    def complex(cls) -> BaseField:
        return cls(COMPLEX)

    @classmethod
    def real(cls) -> BaseField:
        return cls(REAL)

    @classmethod
    def finite(cls, q: int) -> BaseField:
        return cls(FINITE, q=q)

    @classmethod
    def padic(cls, p: int, q: int | None = None) -> BaseField:
        return cls(PADIC, q=p if q is None else q, p=p)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == FINITE else 0

    @property
    def residue_characteristic(self) -> int:
        return self.p if self.kind in (FINITE, PADIC) else 0

    def is_admissible(self, ell: int) -> bool:
        """ell is prime to the characteristic and the ell-th roots of unity lie in the base."""
        if ell < 2 or not isprime(ell):
            return False
        if self.kind == COMPLEX:
            return True
        if self.kind == REAL:
            return ell == 2
        if self.kind == FINITE:
            return (self.q - 1) % ell == 0
        return ell != self.p and (self.q - 1) % ell == 0

    def require_admissible(self, ell: int) -> None:
        if not self.is_admissible(ell):
            raise AdmissibilityError(f"base {self} is not admissible for ell={ell}")

    def base_class_dim(self, ell: int) -> int:
        self.require_admissible(ell)
        return {COMPLEX: 0, REAL: 1, FINITE: 1, PADIC: 2}[self.kind]

    def __str__(self) -> str:
        if self.kind == FINITE:
            return f"Fq({self.q})"
        if self.kind == PADIC:
            return f"Qp({self.p};{self.q})"
        return self.kind


@dataclass(frozen=True)
class TowerField:
    base: BaseField
    variables: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise DomainError(f"repeated tower variable in {self.variables}")

    @property
    def height(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise DomainError(f"{name!r} is not a variable of {self}") from None

    def truncate(self, height: int) -> TowerField:
        """The sub-tower formed by the innermost ``height`` variables."""
        return TowerField(self.base, self.variables[:height])

    def drop_outermost(self) -> TowerField:
        if not self.variables:
            raise DomainError("tower has no variables")
        return self.truncate(self.height - 1)

    def extend(self, *names: str) -> TowerField:
        return TowerField(self.base, self.variables + tuple(names))

    def fresh_variable(self) -> str:
        """A new outer variable name following the tower's ``<prefix><i>`` pattern."""
        prefix = "t"
        if self.variables:
            head = self.variables[0].rstrip("0123456789")
            expected = tuple(f"{head}{i}" for i in range(1, self.height + 1))
            if head and self.variables == expected:
                prefix = head
        name = f"{prefix}{self.height + 1}"
        while name in self.variables:
            name += "_"
        return name

    def __str__(self) -> str:
        return str(self.base) + "".join(f"[[{v}]]" for v in self.variables)


def laurent_tower(n: int, prefix: str = "t", base: BaseField | None = None) -> TowerField:
    """``base((t1))...((tn))``; with the default complex base this is ``E_n``."""
    return TowerField(base or BaseField.complex(), tuple(f"{prefix}{i}" for i in range(1, n + 1)))


@dataclass(frozen=True)
class Monomial:
    """A nonzero element ``coeff * zeta^zeta * pi^pi * prod(l_i^e_i)``.

    ``exps`` is aligned with the variables of the ambient tower.  ``zeta`` is
    the fixed primitive element of the residue field (finite and p-adic
    bases); ``pi`` is the p-adic uniformizer.
    """

    coeff: Fraction = Fraction(1)
    exps: tuple[int, ...] = ()
    zeta: int = 0
    pi: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))
        if self.coeff == 0:
            raise DomainError("zero is not a unit")

    @classmethod
    def variable(cls, F: TowerField, name: str, power: int = 1) -> Monomial:
        exps = [0] * F.height
        exps[F.index(name)] = power
        return cls(Fraction(1), tuple(exps))

    @classmethod
    def constant(cls, F: TowerField, c: int | Fraction = 1) -> Monomial:
        return cls(Fraction(c), (0,) * F.height)

    def __mul__(self, other: Monomial) -> Monomial:
        if len(self.exps) != len(other.exps):
            raise ShapeError("monomials over different towers")
        return Monomial(
            self.coeff * other.coeff,
            tuple(a + b for a, b in zip(self.exps, other.exps)),
            self.zeta + other.zeta,
            self.pi + other.pi,
        )

    def __neg__(self) -> Monomial:
        return Monomial(-self.coeff, self.exps, self.zeta, self.pi)

    def __pow__(self, k: int) -> Monomial:
        return Monomial(self.coeff**k, tuple(e * k for e in self.exps), self.zeta * k, self.pi * k)

    def inverse(self) -> Monomial:
        return self ** -1

    def involves(self, index: int) -> bool:
        return self.exps[index] != 0

    def lift(self, extra: int = 1) -> Monomial:
        """The same element seen in a tower with ``extra`` more outer variables."""
        return Monomial(self.coeff, self.exps + (0,) * extra, self.zeta, self.pi)

    def drop(self, count: int = 1) -> Monomial:
        """Forget the ``count`` outermost exponents (caller checks they vanish)."""
        return Monomial(self.coeff, self.exps[: len(self.exps) - count], self.zeta, self.pi)


@dataclass(frozen=True)
class ClassVector:
    """An element of ``F*/F*^ell`` as coordinates over the canonical basis."""

    ell: int
    coords: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) % self.ell for c in self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other: ClassVector) -> None:
        if self.ell != other.ell or self.dim != other.dim:
            raise ShapeError("class vectors of different shape")

    def __add__(self, other: ClassVector) -> ClassVector:
        self._check(other)
        return ClassVector(self.ell, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> ClassVector:
        return ClassVector(self.ell, tuple(-a for a in self.coords))

    def __sub__(self, other: ClassVector) -> ClassVector:
        return self + (-other)

    def scale(self, k: int) -> ClassVector:
        return ClassVector(self.ell, tuple(k * a for a in self.coords))


# --- finite residue fields -------------------------------------------------


@lru_cache(maxsize=None)
def _prime_root(p: int) -> int:
    return primitive_root(p)


def _residue_log(c: Fraction, q: int, p: int) -> int:
    """log_zeta of the residue of a p-unit rational ``c``, modulo ``q - 1``."""
    if c.numerator % p == 0 or c.denominator % p == 0:
        raise DomainError(f"{c} is not a unit modulo {p}")
    if p == 2:
        return 0
    r = _prime_root(p)
    value = c.numerator * pow(c.denominator, -1, p) % p
    return (q - 1) // (p - 1) * discrete_log(p, value, r) % (q - 1)


def _p_valuation(c: Fraction, p: int) -> tuple[int, Fraction]:
    v = 0
    num, den = c.numerator, c.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def unit_log(base: BaseField, x: Monomial) -> int:
    """Discrete log (mod q-1) of the residue of the unit part of ``x``."""
    if base.kind == FINITE:
        return (_residue_log(x.coeff, base.q, base.p) + x.zeta) % (base.q - 1)
    if base.kind == PADIC:
        _, unit = _p_valuation(x.coeff, base.p)
        return (_residue_log(unit, base.q, base.p) + x.zeta) % (base.q - 1)
    raise DomainError(f"no residue field for base {base}")


def pi_valuation(base: BaseField, x: Monomial) -> int:
    if base.kind != PADIC:
        raise DomainError(f"base {base} has no uniformizer")
    v, _ = _p_valuation(x.coeff, base.p)
    return v + x.pi


@lru_cache(maxsize=None)
def _generator_log(q: int, p: int, ell: int) -> tuple[int | None, int]:
    """Canonical generator of ``F_q*/F_q*^ell``: ``(integer or None for zeta, its log)``.

    The smallest positive integer that is not an ell-th power; when every
    prime-field element is an ell-th power the primitive element zeta is used.
    """
    for c in range(1, p):
        lg = _residue_log(Fraction(c), q, p)
        if lg % ell:
            return c, lg
    return None, 1


def generator(base: BaseField, ell: int, F: TowerField | None = None) -> Monomial:
    """The canonical non-ell-th-power unit of a finite or p-adic base."""
    if base.kind not in (FINITE, PADIC):
        raise DomainError(f"base {base} has no unit generator")
    base.require_admissible(ell)
    c, _ = _generator_log(base.q, base.p, ell)
    height = F.height if F is not None else 0
    if c is None:
        return Monomial(Fraction(1), (0,) * height, zeta=1)
    return Monomial(Fraction(c), (0,) * height)


def uniformizer(F: TowerField) -> Monomial:
    if F.base.kind != PADIC:
        raise DomainError(f"base {F.base} has no uniformizer")
    return Monomial(Fraction(1), (0,) * F.height, pi=1)


def check_element(F: TowerField, x: Monomial) -> None:
    """Raise unless ``x`` is a well-formed nonzero element of ``F``."""
    if len(x.exps) != F.height:
        raise ShapeError(f"monomial has {len(x.exps)} exponents, tower {F} has {F.height}")
    kind = F.base.kind
    if x.zeta and kind not in (FINITE, PADIC):
        raise DomainError(f"zeta is not defined over base {F.base}")
    if x.pi and kind != PADIC:
        raise DomainError(f"pi is not defined over base {F.base}")
    if kind == FINITE and (x.coeff.numerator % F.base.p == 0 or x.coeff.denominator % F.base.p == 0):
        raise DomainError(f"coefficient {x.coeff} is zero or undefined in {F.base}")


def basis_names(F: TowerField, ell: int) -> tuple[str, ...]:
    """Names of the canonical basis of ``F*/F*^ell``: base generators, then variables."""
    F.base.require_admissible(ell)
    base = {COMPLEX: (), REAL: ("-1",), FINITE: ("u",), PADIC: ("u", "pi")}[F.base.kind]
    return base + F.variables


def class_dim(F: TowerField, ell: int) -> int:
    return F.base.base_class_dim(ell) + F.height


def class_of(x: Monomial, F: TowerField, ell: int) -> ClassVector:
    """Coordinates of ``x`` in ``F*/F*^ell`` (base generators first, then variables)."""
    F.base.require_admissible(ell)
    check_element(F, x)
    base = F.base
    coords: list[int] = []
    if base.kind == REAL:
        coords.append(1 if x.coeff < 0 else 0)
    elif base.kind in (FINITE, PADIC):
        _, glog = _generator_log(base.q, base.p, ell)
        coords.append(unit_log(base, x) * pow(glog, -1, ell))
        if base.kind == PADIC:
            coords.append(pi_valuation(base, x))
    coords.extend(x.exps)
    return ClassVector(ell, tuple(coords))


def is_lth_power(x: Monomial, F: TowerField, ell: int) -> bool:
    return class_of(x, F, ell).is_zero()


def lth_powers(q: int, ell: int) -> set[int]:
    """ell-th powers in ``F_p*`` by direct enumeration (q prime)."""
    return {pow(x, ell, q) for x in range(1, q)}


def representative(F: TowerField, ell: int, cls: Iterable[int]) -> Monomial:
    """A representative monomial for a class vector (inverse of :func:`class_of`)."""
    coords = list(cls)
    dim = class_dim(F, ell)
    if len(coords) != dim:
        raise ShapeError(f"expected {dim} coordinates, got {len(coords)}")
    x = Monomial.constant(F)
    offset = 0
    if F.base.kind == REAL:
        if coords[0] % 2:
            x = -x
        offset = 1
    elif F.base.kind in (FINITE, PADIC):
        x = x * generator(F.base, ell, F) ** (coords[0] % ell)
        offset = 1
        if F.base.kind == PADIC:
            x = x * uniformizer(F) ** (coords[1] % ell)
            offset = 2
    for i, e in enumerate(coords[offset:]):
        if e:
            x = x * Monomial.variable(F, F.variables[i], e)
    return x
