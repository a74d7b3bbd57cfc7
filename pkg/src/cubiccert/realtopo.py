"""Exact real-root counting and component counts for ``sum x_i^2 * v = f(u, v)``.

Polynomials in one variable ``u`` are tuples of :class:`fractions.Fraction`
coefficients, lowest degree first.  No floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from sympy import divisors

from .errors import DomainError, PreconditionError, SingularModelError

Bound = Optional[Fraction]  # None encodes -oo on the left, +oo on the right
Root = Union[Fraction, tuple[Fraction, Fraction]]


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class RationalCubic:
    """A polynomial of degree at most 3 in ``u`` with rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        c = _trim(self.coeffs)
        if len(c) > 4:
            raise DomainError(f"degree {len(c) - 1} exceeds 3")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_roots(cls, *roots: Fraction) -> RationalCubic:
        poly: tuple[Fraction, ...] = (Fraction(1),)
        for r in roots:
            poly = _mul(poly, (Fraction(-r), Fraction(1)))
        return cls(poly)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: Fraction) -> Fraction:
        return _eval(self.coeffs, x)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "u" if k == 1 else f"u^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out = body if sign == "+" else f"-{body}"
            else:
                out += f" {sign} {body}"
        return out


def _eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _derivative(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return _trim([k * p[k] for k in range(1, len(p))])


def _rem(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    r = list(_trim(a))
    b = _trim(b)
    while len(r) >= len(b):
        factor = r[-1] / b[-1]
        shift = len(r) - len(b)
        for i, c in enumerate(b):
            r[shift + i] -= factor * c
        r = list(_trim(r))
    return tuple(r)


def _gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _rem(a, b)
    return tuple(c / a[-1] for c in a) if a else a


def _quo(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    r = list(_trim(a))
    b = _trim(b)
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 1)
    while len(r) >= len(b):
        factor = r[-1] / b[-1]
        shift = len(r) - len(b)
        q[shift] = factor
        for i, c in enumerate(b):
            r[shift + i] -= factor * c
        r = list(_trim(r))
    return _trim(q)


def _squarefree_part(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """``p / gcd(p, p')``: same distinct roots, all simple (Sturm needs this at multiple roots)."""
    g = _gcd(p, _derivative(p))
    return _quo(p, g) if len(g) > 1 else _trim(p)


def sturm_chain(p: Sequence[Fraction]) -> list[tuple[Fraction, ...]]:
    chain = [_trim(p), _derivative(p)]
    while chain[-1]:
        nxt = tuple(-c for c in _rem(chain[-2], chain[-1]))
        if not nxt:
            break
        chain.append(nxt)
    return [c for c in chain if c]


def _sign_at(p: Sequence[Fraction], x: Bound, left: bool) -> int:
    if x is None:
        lead = p[-1]
        deg = len(p) - 1
        s = 1 if lead > 0 else -1
        return -s if left and deg % 2 else s
    v = _eval(p, x)
    return (v > 0) - (v < 0)


def _variations(chain: Sequence[Sequence[Fraction]], x: Bound, left: bool) -> int:
    signs = [s for s in (_sign_at(p, x, left) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_root_count(f: RationalCubic, interval: tuple[Bound, Bound] = (None, None)) -> int:
    """Distinct real roots in the half-open interval ``(lo, hi]`` (None = infinite)."""
    if f.is_zero():
        raise DomainError("the zero polynomial has no finite root count")
    lo, hi = (None if b is None else Fraction(b) for b in interval)
    if lo is not None and hi is not None and lo >= hi:
        return 0
    chain = sturm_chain(_squarefree_part(f.coeffs))
    return _variations(chain, lo, True) - _variations(chain, hi, False)


def cauchy_bound(f: RationalCubic) -> Fraction:
    """Every real root has absolute value strictly below this bound."""
    lead = abs(f.coeffs[-1])
    return 1 + max((abs(c) / lead for c in f.coeffs[:-1]), default=Fraction(0))


def rational_roots(f: RationalCubic) -> list[Fraction]:
    """Exact rational roots, by the rational root theorem on the integer model."""
    if f.degree < 1:
        return []
    den = 1
    for c in f.coeffs:
        den = math.lcm(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    low = next(i for i, c in enumerate(ints) if c)
    roots = [Fraction(0)] if low else []
    ints = ints[low:]
    if len(ints) > 1:
        for num in divisors(abs(ints[0])):
            for d in divisors(abs(ints[-1])):
                for r in (Fraction(num, d), Fraction(-num, d)):
                    if r not in roots and _eval(ints, r) == 0:
                        roots.append(r)
    return sorted(roots)


def isolate_real_roots(f: RationalCubic, width: Fraction = Fraction(1, 16)) -> list[Root]:
    """Each distinct real root, as an exact rational or an isolating interval ``(lo, hi]``.

    Irrational roots are bisected until the interval is at most ``width`` wide.
    """
    if f.is_zero():
        raise DomainError("the zero polynomial has no isolated roots")
    exact = rational_roots(f)
    bound = cauchy_bound(f)
    out: list[Root] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = real_root_count(f, (lo, hi))
        if n == 0:
            continue
        if n == 1:
            hits = [r for r in exact if lo < r <= hi]
            if hits:
                out.append(hits[0])
                continue
            if hi - lo <= width:
                out.append((lo, hi))
                continue
        mid = (lo + hi) / 2
        stack += [(mid, hi), (lo, mid)]
    return sorted(out, key=lambda r: r if isinstance(r, Fraction) else r[0])


def is_squarefree(f: RationalCubic) -> bool:
    return len(_gcd(f.coeffs, _derivative(f.coeffs))) <= 1


@dataclass(frozen=True)
class ComponentReport:
    n: int
    f: RationalCubic
    roots: tuple[Root, ...]
    intervals: tuple[tuple[Root, Optional[Root]], ...]  # f >= 0 on [a, b]; None = +oo

    @property
    def count(self) -> int:
        return len(self.intervals)


def component_report(n: int, f: RationalCubic) -> ComponentReport:
    """Real components of the projective cubic ``sum_{i<=n} x_i^2 * v = v^3 f(u/v)``.

    The affine slice ``sum x_i^2 = f(u)`` lies over the intervals where
    ``f >= 0``; each bounded interval gives a sphere-like piece and the
    unbounded one closes up through the real points at infinity ``u = v = 0``.
    """
    if n < 2:
        raise PreconditionError(f"need at least two squares, got n={n}")
    if f.degree != 3 or f.coeffs[-1] != 1:
        raise PreconditionError(f"{f} is not a monic cubic")
    if not is_squarefree(f):
        raise SingularModelError(f"{f} has a repeated root; the real model is singular")
    roots = tuple(isolate_real_roots(f))
    if len(roots) == 3:
        intervals = ((roots[0], roots[1]), (roots[2], None))
    else:
        intervals = ((roots[0], None),)
    return ComponentReport(n, f, roots, intervals)


def components_count(n: int, f: RationalCubic) -> int:
    return component_report(n, f).count
