"""Brute-force oracles that check the exact decision procedures independently.

None of these reuse the code paths they check:

* ``TruncatedIsotropySearch`` looks for isotropic vectors of diagonal forms
  over ``F_p((l))`` among vectors of polynomials of bounded degree, by a
  meet-in-the-middle enumeration.
* ``dense_*`` model exterior classes as antisymmetric coordinate tensors and
  compute products by the shuffle formula.
* ``grid_root_count`` counts roots of an integer polynomial by scanning
  exact values on a rational grid.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

import numpy as np

# --- isotropy over F_p and F_p((l)) ----------------------------------------


def finite_field_isotropic(coeffs: Sequence[int], p: int) -> tuple[int, ...] | None:
    """An isotropic vector of ``sum c_i x_i^2`` over ``F_p`` (p prime), or None."""
    for x in itertools.product(range(p), repeat=len(coeffs)):
        if any(x) and sum(c * xi * xi for c, xi in zip(coeffs, x)) % p == 0:
            return x
    return None


class TruncatedIsotropySearch:
    """Exhaustive isotropy search for ``sum c_i l^{e_i} x_i(l)^2`` over ``F_p((l))``.

    Each ``x_i`` ranges over all polynomials with exponents ``0..max_exp`` and
    coefficients in ``F_p``.  A component type is a pair ``(c, e)``.  Values
    are polynomials of degree ``<= 2*max_exp + max(e)``, encoded base ``p``.
    """

    def __init__(self, p: int, max_exp: int = 3, max_shift: int = 1):
        self.p = p
        self.max_exp = max_exp
        self.length = 2 * max_exp + max_shift + 1
        self.polys = np.array(list(itertools.product(range(p), repeat=max_exp + 1)), dtype=np.int64)
        squares = np.zeros((len(self.polys), 2 * max_exp + 1), dtype=np.int64)
        for i in range(max_exp + 1):
            for j in range(max_exp + 1):
                squares[:, i + j] += self.polys[:, i] * self.polys[:, j]
        self.squares = squares % p
        self.weights = p ** np.arange(self.length, dtype=np.int64)
        self._cache: dict[tuple, tuple[np.ndarray, np.ndarray, int | None]] = {}

    def _component(self, c: int, e: int) -> np.ndarray:
        out = np.zeros((len(self.polys), self.length), dtype=np.int64)
        out[:, e : e + self.squares.shape[1]] = self.squares * c
        return out % self.p

    def _half(self, types: tuple[tuple[int, int], ...]):
        """Sorted distinct value codes of a partial sum, first index per code, and
        the index of a nonzero vector with value zero (or None)."""
        key = tuple(sorted(types))
        if key in self._cache:
            return self._cache[key]
        values = np.zeros((1, self.length), dtype=np.int64)
        for c, e in key:
            comp = self._component(c, e)
            values = ((values[:, None, :] + comp[None, :, :]) % self.p).reshape(-1, self.length)
        codes = values @ self.weights
        zero_hits = np.flatnonzero(codes[1:] == 0)
        zero_witness = int(zero_hits[0]) + 1 if len(zero_hits) else None
        uniq, first = np.unique(codes, return_index=True)
        self._cache[key] = (uniq, first, zero_witness)
        return self._cache[key]

    def _decode(self, types, index: int) -> list[tuple[int, ...]]:
        key = sorted(types)
        base = len(self.polys)
        digits = []
        for _ in key:
            digits.append(index % base)
            index //= base
        by_key = [tuple(int(a) for a in self.polys[d]) for d in reversed(digits)]
        # undo the sort of types so vectors line up with the caller's order
        order = sorted(range(len(types)), key=lambda i: types[i])
        out: list[tuple[int, ...]] = [()] * len(types)
        for slot, original in enumerate(order):
            out[original] = by_key[slot]
        return out

    def search(self, types: Sequence[tuple[int, int]]) -> list[tuple[int, ...]] | None:
        """An isotropic vector (one coefficient tuple per component) or None."""
        types = [(c % self.p, e) for c, e in types]
        half = len(types) // 2
        left, right = types[:half], types[half:]
        neg_right = [(-c % self.p, e) for c, e in right]
        ucodes_l, first_l, zero_l = self._half(tuple(left))
        ucodes_r, first_r, zero_r = self._half(tuple(neg_right))
        zero_poly = (0,) * (self.max_exp + 1)
        if zero_l is not None:
            return self._decode(left, zero_l) + [zero_poly] * len(right)
        if zero_r is not None:
            return [zero_poly] * len(left) + self._decode(neg_right, zero_r)
        common, il, ir = np.intersect1d(ucodes_l, ucodes_r, assume_unique=True, return_indices=True)
        nonzero = np.flatnonzero(common != 0)
        if not len(nonzero):
            return None
        k = nonzero[0]
        return self._decode(left, int(first_l[il[k]])) + self._decode(neg_right, int(first_r[ir[k]]))

    def is_isotropic(self, types: Sequence[tuple[int, int]]) -> bool:
        return self.search(types) is not None

    def evaluate(self, types: Sequence[tuple[int, int]], vector: Sequence[Sequence[int]]) -> list[int]:
        """Coefficients of ``sum c_i l^{e_i} x_i^2`` for an explicit vector."""
        out = [0] * self.length
        for (c, e), x in zip(types, vector):
            for i, a in enumerate(x):
                for j, b in enumerate(x):
                    out[e + i + j] += c * a * b
        return [v % self.p for v in out]


# --- dense exterior algebra --------------------------------------------------


def _perm_parity(perm: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def to_dense(terms: dict[tuple[int, ...], int], dim: int, degree: int) -> np.ndarray:
    """Antisymmetric tensor with ``T[sigma(m)] = sgn(sigma) * c`` for each monomial ``m``."""
    T = np.zeros((dim,) * degree, dtype=np.int64)
    for mono, c in terms.items():
        for perm in itertools.permutations(range(degree)):
            T[tuple(mono[i] for i in perm)] += _perm_parity(perm) * c
    return T


@lru_cache(maxsize=None)
def _shuffles(p: int, q: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Axis permutations placing the ``p`` left factors at each subset of positions."""
    out = []
    for left in itertools.combinations(range(p + q), p):
        right = [i for i in range(p + q) if i not in left]
        positions = list(left) + right  # source axis k lands at positions[k]
        axes = [0] * (p + q)
        for src, dst in enumerate(positions):
            axes[dst] = src
        out.append((tuple(axes), _perm_parity(positions)))
    return tuple(out)


def dense_wedge(A: np.ndarray, B: np.ndarray, ell: int) -> np.ndarray:
    """Wedge product of antisymmetric tensors by the (p, q)-shuffle formula."""
    p, q = A.ndim, B.ndim
    outer = np.multiply.outer(A, B)
    T = np.zeros(outer.shape, dtype=np.int64)
    for axes, sign in _shuffles(p, q):
        T += sign * np.transpose(outer, axes)
    return T % ell


def dense_residue(A: np.ndarray, v: int) -> np.ndarray:
    """Contract the last slot with ``e_v``; other indices restricted below ``v``."""
    sub = A[..., v]
    return sub[(slice(0, v),) * sub.ndim] if sub.ndim else sub


def dense_specialize(A: np.ndarray, v: int) -> np.ndarray:
    return A[(slice(0, v),) * A.ndim]


# --- grid root scan ------------------------------------------------------------


def grid_root_count(coeffs: Sequence[int], lo: int, hi: int, scale: int) -> int:
    """Roots of an integer polynomial in ``(lo/scale, hi/scale]`` seen on the grid ``k/scale``.

    A root counts when the polynomial vanishes exactly at a grid point or
    changes sign between two adjacent grid points.
    """
    k = np.arange(lo, hi + 1, dtype=np.int64)
    deg = len(coeffs) - 1
    vals = np.zeros_like(k)
    for i, c in enumerate(coeffs):
        vals += int(c) * k**i * scale ** (deg - i)
    signs = np.sign(vals)
    zeros = int(np.count_nonzero(signs[1:] == 0))
    changes = int(np.count_nonzero(signs[:-1] * signs[1:] < 0))
    return zeros + changes
