"""Mod-ell Galois cohomology of tower fields as an exterior algebra.

For ell odd with the ell-th roots of unity in the base, ``H*(F, Z/ell)`` of
every supported tower is the exterior algebra over ``Z/ell`` on the basis of
``F*/F*^ell`` (base generators first, then tower variables).  Classes are
stored in monomial normal form: a map from strictly increasing index tuples
to nonzero coefficients.  Generators with index ``>= dim`` are geometric
tokens, inert labels for function-field classes outside ``F*/F*^ell``.

Residue convention: on a monomial containing the outermost generator ``v``
the residue deletes ``v`` and multiplies by ``(-1)^k`` where ``k`` is the
number of generators after ``v`` in the sorted tuple.  With this choice
``lift(specialize(a, v)) + lift(residue(a, v)) * (v) == a``.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from sympy.ntheory import isprime

from .errors import PreconditionError, ShapeError
from .tower import ClassVector, TowerField, basis_names

Mono = tuple[int, ...]


@dataclass(frozen=True)
class GeometricToken:
    label: str

    def __str__(self) -> str:
        return self.label


def _merge_sign(a: Mono, b: Mono) -> int:
    """Sign of the permutation sorting ``a + b`` (0 when they share an index)."""
    inversions = 0
    for j in b:
        pos = bisect_right(a, j)
        if pos and a[pos - 1] == j:
            return 0
        inversions += len(a) - pos
    return -1 if inversions % 2 else 1


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    """An element of ``H^degree(F, Z/ell)`` in exterior-monomial normal form."""

    ell: int
    dim: int
    degree: int
    terms: Mapping[Mono, int]
    names: tuple[str, ...] | None = None
    tokens: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.ell % 2 == 0 or not isprime(self.ell):
            raise ShapeError(f"modulus must be an odd prime, got {self.ell}")
        if self.names is not None and len(self.names) != self.dim:
            raise ShapeError(f"{len(self.names)} basis names for dimension {self.dim}")
        top = self.dim + len(self.tokens)
        clean: dict[Mono, int] = {}
        for mono, c in self.terms.items():
            mono = tuple(mono)
            if len(mono) != self.degree:
                raise ShapeError(f"monomial {mono} in a class of degree {self.degree}")
            if any(b <= a for a, b in zip(mono, mono[1:])):
                raise ShapeError(f"monomial {mono} is not strictly increasing")
            if mono and (mono[0] < 0 or mono[-1] >= top):
                raise ShapeError(f"monomial {mono} has an index outside [0, {top})")
            c %= self.ell
            if c:
                clean[mono] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    # --- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ell: int, dim: int, degree: int, names=None, tokens=()) -> CohomologyClass:
        return cls(ell, dim, degree, {}, names, tuple(tokens))

    @classmethod
    def one(cls, ell: int, dim: int, names=None) -> CohomologyClass:
        return cls(ell, dim, 0, {(): 1}, names)

    @classmethod
    def from_vector(cls, c: ClassVector, names=None) -> CohomologyClass:
        return cls(c.ell, c.dim, 1, {(i,): a for i, a in enumerate(c.coords)}, names)

    @classmethod
    def token(cls, ell: int, dim: int, label: str, names=None) -> CohomologyClass:
        return cls(ell, dim, 1, {(dim,): 1}, names, (label,))

    # --- structure --------------------------------------------------------

    @property
    def generator_names(self) -> tuple[str, ...]:
        base = self.names if self.names is not None else tuple(f"e{i}" for i in range(self.dim))
        return base + self.tokens

    def is_zero(self) -> bool:
        return not self.terms

    def _like(self, terms: Mapping[Mono, int], degree: int | None = None) -> CohomologyClass:
        return CohomologyClass(
            self.ell, self.dim, self.degree if degree is None else degree, terms, self.names, self.tokens
        )

    def _align(self, other: CohomologyClass) -> tuple[CohomologyClass, CohomologyClass]:
        """Bring both operands to a common token list."""
        if self.ell != other.ell or self.dim != other.dim:
            raise ShapeError(
                f"classes over (ell={self.ell}, d={self.dim}) and (ell={other.ell}, d={other.dim})"
            )
        if self.names is not None and other.names is not None and self.names != other.names:
            raise ShapeError("classes over differently named bases")
        names = self.names if self.names is not None else other.names
        tokens = self.tokens + tuple(t for t in other.tokens if t not in self.tokens)
        return self._retoken(tokens, names), other._retoken(tokens, names)

    def _retoken(self, tokens: tuple[str, ...], names) -> CohomologyClass:
        if tokens == self.tokens and names == self.names:
            return self
        remap = {self.dim + i: self.dim + tokens.index(t) for i, t in enumerate(self.tokens)}
        terms: dict[Mono, int] = {}
        for mono, c in self.terms.items():
            moved = [remap.get(i, i) for i in mono]
            order = sorted(range(len(moved)), key=moved.__getitem__)
            terms[tuple(sorted(moved))] = c * _perm_sign(order)
        return CohomologyClass(self.ell, self.dim, self.degree, terms, names, tokens)

    # --- arithmetic -------------------------------------------------------

    def __add__(self, other: CohomologyClass) -> CohomologyClass:
        a, b = self._align(other)
        if a.degree != b.degree and a.terms and b.terms:
            raise ShapeError(f"cannot add degrees {a.degree} and {b.degree}")
        degree = a.degree if a.terms or not b.terms else b.degree
        terms = dict(a.terms)
        for mono, c in b.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return a._like(terms, degree)

    def __neg__(self) -> CohomologyClass:
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: CohomologyClass) -> CohomologyClass:
        return self + (-other)

    def scale(self, k: int) -> CohomologyClass:
        return self._like({m: k * c for m, c in self.terms.items()})

    def __mul__(self, other: CohomologyClass) -> CohomologyClass:
        return cup(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        try:
            a, b = self._align(other)
        except ShapeError:
            return False
        if not a.terms and not b.terms:
            return a.degree == b.degree
        return a.terms == b.terms

    def __hash__(self) -> int:
        return hash((self.ell, self.dim, self.degree, frozenset(self.tokens), len(self.terms)))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        gens = self.generator_names
        parts = []
        for mono, c in self.terms.items():
            body = "^".join(gens[i] for i in mono) if mono else "1"
            parts.append(f"{c}*({body})")
        return " + ".join(parts)

    __repr__ = __str__


def _perm_sign(order: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(order)
    for i in range(len(order)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cup(alpha: CohomologyClass, beta: CohomologyClass) -> CohomologyClass:
    """Graded-alternating product; degrees add."""
    a, b = alpha._align(beta)
    terms: dict[Mono, int] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            s = _merge_sign(ma, mb)
            if s:
                mono = tuple(sorted(ma + mb))
                terms[mono] = terms.get(mono, 0) + s * ca * cb
    return a._like(terms, a.degree + b.degree)


def symbol(
    classes: Sequence[ClassVector],
    tokens: Sequence[GeometricToken | str] = (),
    names: Sequence[str] | None = None,
    *,
    ell: int | None = None,
    dim: int | None = None,
) -> CohomologyClass:
    """Cup product ``(t_1, ..., t_r, c_1, ..., c_s)`` of tokens then degree-one classes.

    ``ell`` and ``dim`` are only needed when ``classes`` is empty.
    """
    shapes = {(c.ell, c.dim) for c in classes}
    if len(shapes) > 1:
        raise ShapeError(f"class vectors of mixed shape {sorted(shapes)}")
    if shapes:
        ell, dim = shapes.pop()
    if ell is None or dim is None:
        raise ShapeError("empty symbol needs explicit ell and dim")
    names = tuple(names) if names is not None else None
    result = CohomologyClass.one(ell, dim, names)
    for t in tokens:
        result = cup(result, CohomologyClass.token(ell, dim, str(t), names))
    for c in classes:
        result = cup(result, CohomologyClass.from_vector(c, names))
    return result


def field_symbol(F: TowerField, ell: int, classes: Sequence[ClassVector], tokens=()) -> CohomologyClass:
    """:func:`symbol` with basis names taken from the tower."""
    names = basis_names(F, ell)
    return symbol(classes, tokens, names, ell=ell, dim=len(names))


def _outer_index(alpha: CohomologyClass, v: int | str) -> int:
    if isinstance(v, str):
        if v not in alpha.generator_names[: alpha.dim]:
            raise PreconditionError(f"{v!r} is not a field generator of this class")
        v = alpha.generator_names.index(v)
    if v != alpha.dim - 1:
        raise PreconditionError(
            f"residue/specialize need the outermost generator (index {alpha.dim - 1}), got {v}; "
            "iterate outermost-in"
        )
    return v


def _drop_generator(alpha: CohomologyClass, terms: Mapping[Mono, int], degree: int) -> CohomologyClass:
    """Re-index onto the sub-tower where generator ``dim - 1`` no longer exists."""
    v = alpha.dim - 1
    shifted = {tuple(i - 1 if i > v else i for i in m): c for m, c in terms.items()}
    names = alpha.names[:-1] if alpha.names is not None else None
    return CohomologyClass(alpha.ell, alpha.dim - 1, degree, shifted, names, alpha.tokens)


def residue(alpha: CohomologyClass, v: int | str) -> CohomologyClass:
    """Residue at the outermost generator: delete ``v`` with sign ``(-1)^(#after)``."""
    v = _outer_index(alpha, v)
    if alpha.degree == 0:
        raise PreconditionError("residue of a degree-0 class")
    terms: dict[Mono, int] = {}
    for mono, c in alpha.terms.items():
        if v in mono:
            pos = mono.index(v)
            after = len(mono) - pos - 1
            terms[mono[:pos] + mono[pos + 1 :]] = -c if after % 2 else c
    return _drop_generator(alpha, terms, alpha.degree - 1)


def specialize(alpha: CohomologyClass, v: int | str) -> CohomologyClass:
    """The part of ``alpha`` not involving ``v``, over the sub-tower."""
    v = _outer_index(alpha, v)
    terms = {m: c for m, c in alpha.terms.items() if v not in m}
    return _drop_generator(alpha, terms, alpha.degree)


def lift(alpha: CohomologyClass, name: str | None = None) -> CohomologyClass:
    """View a class of the sub-tower inside the tower with one more outer generator."""
    d = alpha.dim
    terms = {tuple(i + 1 if i >= d else i for i in m): c for m, c in alpha.terms.items()}
    names = None
    if alpha.names is not None:
        names = alpha.names + (name if name is not None else f"e{d}",)
    return CohomologyClass(alpha.ell, d + 1, alpha.degree, terms, names, alpha.tokens)


def generator_class(alpha_like: CohomologyClass, index: int) -> CohomologyClass:
    """The degree-one class ``(e_index)`` in the ambient space of ``alpha_like``."""
    return CohomologyClass(
        alpha_like.ell, alpha_like.dim, 1, {(index,): 1}, alpha_like.names, alpha_like.tokens
    )


def is_zero(alpha: CohomologyClass) -> bool:
    return alpha.is_zero()


def nonvanishing_witness(alpha: CohomologyClass) -> list[tuple[str, ...]]:
    """Surviving monomials, by generator name (empty iff the class is zero)."""
    gens = alpha.generator_names
    return [tuple(gens[i] for i in mono) for mono in alpha.terms]


def from_terms(
    ell: int, dim: int, degree: int, terms: Iterable[tuple[Sequence[int], int]], names=None, tokens=()
) -> CohomologyClass:
    """Build a class from possibly unsorted monomials, applying exterior signs."""
    acc: dict[Mono, int] = {}
    for mono, c in terms:
        mono = tuple(mono)
        if len(set(mono)) < len(mono):
            continue
        order = sorted(range(len(mono)), key=mono.__getitem__)
        key = tuple(sorted(mono))
        acc[key] = acc.get(key, 0) + c * _perm_sign(order)
    return CohomologyClass(ell, dim, degree, acc, names, tuple(tokens))
