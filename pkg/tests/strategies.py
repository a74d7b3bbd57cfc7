"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from cubiccert.tower import BaseField, Monomial, TowerField, laurent_tower

ODD_BASES = [
    BaseField.complex(),
    BaseField.real(),
    BaseField.finite(5),
    BaseField.finite(7),
    BaseField.finite(13),
    BaseField.padic(5),
    BaseField.padic(7),
]
CUBE_BASES = [BaseField.complex(), BaseField.finite(7), BaseField.finite(13), BaseField.padic(7), BaseField.padic(13)]


def towers(bases=ODD_BASES, max_height: int = 3):
    return st.builds(
        lambda b, n: laurent_tower(n, "l", b),
        st.sampled_from(bases),
        st.integers(0, max_height),
    )


def monomials(F: TowerField, max_exp: int = 4):
    kind = F.base.kind
    if kind in ("C", "R"):
        coeff = st.sampled_from([1, -1, 2, -3, Fraction(1, 2), 5])
    else:
        coeff = st.integers(1, 60).filter(lambda c: c % F.base.p).map(Fraction)
        if kind == "Qp":
            coeff = st.builds(lambda c, v: c * Fraction(F.base.p) ** v, coeff, st.integers(-2, 2))
    zeta = st.integers(-3, 3) if kind in ("Fq", "Qp") else st.just(0)
    pi = st.integers(-3, 3) if kind == "Qp" else st.just(0)
    exps = st.lists(st.integers(-max_exp, max_exp), min_size=F.height, max_size=F.height).map(tuple)
    return st.builds(Monomial, coeff, exps, zeta, pi)


def classes(ell: int = 3, dim: int = 5, degree: int | None = None, max_degree: int = 3):
    """Random classes of H^m in normal form (as CohomologyClass)."""
    from itertools import combinations

    from cubiccert.symbols import CohomologyClass

    def build(m, picks):
        monos = list(combinations(range(dim), m))
        terms = {monos[i % len(monos)]: c for i, c in picks}
        return CohomologyClass(ell, dim, m, terms)

    deg = st.just(degree) if degree is not None else st.integers(0, min(max_degree, dim))
    return deg.flatmap(
        lambda m: st.lists(st.tuples(st.integers(0, 100), st.integers(0, ell - 1)), max_size=6).map(
            lambda picks: build(m, picks)
        )
    )


def random_class(rng, ell: int, dim: int, degree: int):
    """Plain-random counterpart of :func:`classes` for seeded bulk loops."""
    from itertools import combinations

    from cubiccert.symbols import CohomologyClass

    monos = list(combinations(range(dim), degree))
    k = rng.randint(0, len(monos))
    terms = {m: rng.randrange(ell) for m in rng.sample(monos, k)}
    return CohomologyClass(ell, dim, degree, terms)
