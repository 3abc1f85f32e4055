"""Factorizations of a full cycle into two near-central factors.

Counts pairs ``pi1 * pi2 == C`` with ``C = (1 2 ... n)``, ``pi1`` in a
tagged class ``(lam, i)`` and ``pi2`` in ``(mu, j)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple

import numpy as np

from .characters import R_poly, S_poly, reduced_H
from .combinatorics import (
    Permutation,
    TaggedClass,
    all_permutations,
    tagged,
    tagged_class_size,
    tagged_classes,
)
from .z1 import ResourceGuardError

MAX_BRUTE_N = 8


class FactorizationQuery(NamedTuple):
    left: TaggedClass
    right: TaggedClass

    @property
    def n(self) -> int:
        return self.left.n

    @classmethod
    def make(cls, left_shape, left_tag: int, right_shape, right_tag: int) -> FactorizationQuery:
        q = cls(tagged(left_shape, left_tag), tagged(right_shape, right_tag))
        q.validate()
        return q

    def validate(self) -> None:
        if self.left.n != self.right.n:
            raise ValueError(f"classes of different degree: {self.left}, {self.right}")

    def swapped(self) -> FactorizationQuery:
        return FactorizationQuery(self.right, self.left)


def full_cycle(n: int) -> Permutation:
    return Permutation.from_cycles(n, [tuple(range(1, n + 1))])


def _series(base, cls: TaggedClass, n: int) -> list[Fraction]:
    shape, i = cls
    poly = base(n, i) * reduced_H(shape.remove_part(i), n)
    return [poly[k] for k in range(n)]


def decomposition_count(q: FactorizationQuery) -> Fraction:
    """Number of factorizations of a full cycle, from the hook series.

    The ``xy R R`` and ``S S`` parts of the bivariate series factor into
    products of univariate coefficients, so each ``[x^k y^k]`` is the
    product of two one-variable extractions.
    """
    q.validate()
    n = q.n
    if n == 1:
        return Fraction(1)
    r_left, r_right = _series(R_poly, q.left, n), _series(R_poly, q.right, n)
    s_left, s_right = _series(S_poly, q.left, n), _series(S_poly, q.right, n)
    total = Fraction(0)
    for k in range(1, n):
        # [x^k y^k] xy R(x) R(y) is the (k-1)-st coefficient of each factor
        coeff = r_left[k - 1] * r_right[k - 1] - s_left[k] * s_right[k]
        total += Fraction((-1) ** (k - 1), comb(n - 2, k - 1)) * coeff
    value = total * tagged_class_size(q.left) * tagged_class_size(q.right)
    value /= (n - 1) ** 2 * factorial(n)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"decomposition count {value} for {q} is not a non-negative integer")
    return value


def _class_codes(n: int):
    """Every permutation of S_n as a row, with the index of its tagged class."""
    perms = np.array(list(all_permutations(n)), dtype=np.int64).reshape(-1, n) - 1
    classes = tagged_classes(n)
    index = {c: k for k, c in enumerate(classes)}
    codes = np.array([index[Permutation(p + 1).tagged_class()] for p in perms], dtype=np.int64)
    return perms, codes, index


def brute_decomposition_table(n: int, max_n: int = MAX_BRUTE_N) -> dict[tuple[TaggedClass, TaggedClass], int]:
    """All counts at once: one pass over ``pi1`` in S_n."""
    if n > max_n:
        raise ResourceGuardError(f"brute-force decompositions at n={n} exceed the limit {max_n}")
    perms, codes, index = _class_codes(n)
    classes = tagged_classes(n)
    # pi2 = pi1^{-1} C, i.e. pi2(x) = pi1^{-1}(x + 1)
    inv = np.argsort(perms, axis=1)
    shift = np.roll(np.arange(n), -1)
    pi2 = inv[:, shift]
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    lookup = dict(zip((perms @ weights).tolist(), codes.tolist()))
    right = np.array([lookup[key] for key in (pi2 @ weights).tolist()], dtype=np.int64)
    m = len(classes)
    table = np.zeros((m, m), dtype=np.int64)
    np.add.at(table, (codes, right), 1)
    return {(a, b): int(table[index[a], index[b]]) for a in classes for b in classes}


def brute_decompositions(q: FactorizationQuery, max_n: int = MAX_BRUTE_N) -> int:
    """Count ``pi1`` in the left class with ``pi1^{-1} C`` in the right class."""
    q.validate()
    n = q.n
    if n > max_n:
        raise ResourceGuardError(f"brute-force decompositions at n={n} exceed the limit {max_n}")
    c = full_cycle(n)
    left = q.left
    count = 0
    for pi1 in all_permutations(n):
        if pi1.cycle_length_of(n) != left.tag or pi1.cycle_type() != left.shape:
            continue
        if (pi1.inverse() * c).tagged_class() == q.right:
            count += 1
    return count


def decomposition_table(n: int) -> dict[tuple[TaggedClass, TaggedClass], int]:
    """Closed-form counts for every ordered pair of tagged classes."""
    classes = tagged_classes(n)
    return {
        (a, b): int(decomposition_count(FactorizationQuery(a, b))) for a in classes for b in classes
    }


def is_obstructed(q: FactorizationQuery) -> bool:
    """Length or parity rules out any factorization of an ``n``-cycle."""
    n = q.n
    rank = (n - len(q.left.shape)) + (n - len(q.right.shape))
    return rank < n - 1 or (rank - (n - 1)) % 2 == 1
