"""Rooted dipoles with prescribed root and non-root jumps.

A dipole with ``n`` edges is a pair of full cycles (the rotations at its
two vertices); the faces are the cycles of their product and the genus
is ``(n - #faces) / 2``.  The brute-force counters enumerate these pairs
directly.  :func:`dipole_count_formula` and :func:`genus_series` are the
closed forms for non-root jump ``q = n - 1``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .characters import (
    HOOK_COL,
    HOOK_ROW,
    NEAR_HOOK,
    family_class,
    family_range,
    genchar_hook_series,
    genchar_strahov,
    genchar_two_part,
    two_part_class,
)
from .combinatorics import (
    Partition,
    Permutation,
    TaggedClass,
    dimension,
    hook,
    tagged_class_size,
    tagged_classes,
)
from .poly import T, Poly, binomial_poly, combine, falling_product
from .z1 import ResourceGuardError

MAX_BRUTE_N = 9


@dataclass
class DipoleCounts:
    """Counts of dipoles by face class and by genus."""

    n: int
    p: int
    q: int
    labelled: bool
    faces: dict[TaggedClass, int] = field(default_factory=dict)
    genus: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.genus.values())

    def merge(self, other: DipoleCounts) -> None:
        for c, v in other.faces.items():
            self.faces[c] = self.faces.get(c, 0) + v
        for g, v in other.genus.items():
            self.genus[g] = self.genus.get(g, 0) + v

    def scaled(self, factor: int) -> DipoleCounts:
        return DipoleCounts(
            self.n,
            self.p,
            self.q,
            self.labelled,
            {c: v * factor for c, v in self.faces.items()},
            {g: v * factor for g, v in self.genus.items()},
        )

    def sorted(self) -> DipoleCounts:
        order = {c: k for k, c in enumerate(tagged_classes(self.n))}
        return DipoleCounts(
            self.n,
            self.p,
            self.q,
            self.labelled,
            dict(sorted(self.faces.items(), key=lambda kv: order[kv[0]])),
            dict(sorted(self.genus.items())),
        )


def canonical_root_cycle(n: int, p: int) -> Permutation:
    """``C_p = (n, 1, ..., p-1, n-1, p, ..., n-2)``, the full cycle with ``C_p^p(n) = n-1``."""
    if n < 2 or not 1 <= p <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= p <= n-1, got n={n}, p={p}")
    cycle = [n, *range(1, p), n - 1, *range(p, n - 1)]
    perm = Permutation.from_cycles(n, [cycle])
    assert (perm**p)(n) == n - 1
    return perm


def jump_cycles(n: int, jump: int) -> list[Permutation]:
    """All full cycles ``s`` with ``s^jump(n) == n - 1``, in a fixed order."""
    out = []
    for rest in itertools.permutations(range(1, n - 1)):
        cycle = [n, *rest[: jump - 1], n - 1, *rest[jump - 1 :]]
        out.append(Permutation.from_cycles(n, [cycle]))
    return out


def _genus(n: int, faces: int) -> int:
    if (n - faces) % 2:
        raise ArithmeticError(f"odd Euler characteristic: n={n}, faces={faces}")
    return (n - faces) // 2


def _scan(n: int, p: int, firsts: tuple[int, ...]) -> DipoleCounts:
    root = canonical_root_cycle(n, p)
    counts = DipoleCounts(n, p, n - 1, labelled=False)
    for first in firsts:
        others = [x for x in range(1, n - 1) if x != first]
        for rest in itertools.permutations(others):
            # s^{-1}(n) = n-1: the cycle of s runs n -> first -> ... -> n-1 -> n
            sigma = Permutation.from_cycles(n, [(n, first, *rest, n - 1)])
            face = sigma * root
            cls = face.tagged_class()
            counts.faces[cls] = counts.faces.get(cls, 0) + 1
            g = _genus(n, len(cls.shape))
            counts.genus[g] = counts.genus.get(g, 0) + 1
    return counts


def _scan_unlabelled(n: int, p: int, jobs: int = 1) -> DipoleCounts:
    if n == 2:
        face = Permutation.from_cycles(2, [(2, 1)]) * canonical_root_cycle(2, p)
        cls = face.tagged_class()
        return DipoleCounts(2, p, 1, False, {cls: 1}, {_genus(2, len(cls.shape)): 1})
    firsts = tuple(range(1, n - 1))
    if jobs <= 1:
        return _scan(n, p, firsts)
    chunks = [firsts[k::jobs] for k in range(jobs) if firsts[k::jobs]]
    total = DipoleCounts(n, p, n - 1, labelled=False)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_scan, [n] * len(chunks), [p] * len(chunks), chunks):
            total.merge(part)
    return total


def brute_force_p_q_dipoles(
    n: int, p: int, q: int | None = None, *, max_n: int = MAX_BRUTE_N, jobs: int = 1
) -> DipoleCounts:
    """Count ``(p, q, n)``-dipoles by exhaustive enumeration.

    For ``q == n - 1`` (the default) the ordinary edges are unlabelled: the
    root rotation is fixed to :func:`canonical_root_cycle` and the
    ``(n-2)!`` non-root rotations ``s`` with ``s^{-1}(n) = n-1`` are
    scanned; faces are the cycles of ``s * C_p``.  For other ``q`` the
    labelled count is returned: pairs ``(s1, s2)`` of full cycles with
    ``s1^q(n) = n-1`` and ``s2^p(n) = n-1``, faces from ``s1 * s2``.
    """
    if q is None:
        q = n - 1
    if n < 2 or not 1 <= p <= n - 1 or not 1 <= q <= n - 1:
        raise ValueError(f"invalid dipole parameters n={n}, p={p}, q={q}")
    if n > max_n:
        raise ResourceGuardError(f"brute-force dipole scan refused for n={n} (limit {max_n})")
    if q == n - 1:
        return _scan_unlabelled(n, p, jobs).sorted()
    return brute_force_labelled(n, p, q, max_n=max_n).sorted()


def brute_force_labelled(
    n: int, p: int, q: int, *, max_n: int = MAX_BRUTE_N, naive: bool = False
) -> DipoleCounts:
    """Labelled ``(p, q, n)``-dipole counts.

    Relabelling ``{1..n-2}`` acts freely and transitively on the root
    rotations and preserves face classes, so by default the root rotation
    is fixed to ``C_p`` and the result multiplied by ``(n-2)!``.  With
    ``naive=True`` every pair is enumerated.
    """
    if n > max_n:
        raise ResourceGuardError(f"brute-force dipole scan refused for n={n} (limit {max_n})")
    counts = DipoleCounts(n, p, q, labelled=True)
    roots = jump_cycles(n, p) if naive else [canonical_root_cycle(n, p)]
    for s1 in jump_cycles(n, q):
        for s2 in roots:
            cls = (s1 * s2).tagged_class()
            counts.faces[cls] = counts.faces.get(cls, 0) + 1
            g = _genus(n, len(cls.shape))
            counts.genus[g] = counts.genus.get(g, 0) + 1
    return counts if naive else counts.scaled(factorial(n - 2))


# --- closed forms -----------------------------------------------------------


def _two_part_value(family: str, k: int, p: int, n: int) -> Fraction:
    if family == NEAR_HOOK and p < 2:
        return genchar_strahov(family_class(family, n, k), two_part_class(n, p))
    return genchar_two_part(family, k, p, n)


def _upper_value(family: str, k: int, cls: TaggedClass, n: int) -> Fraction:
    if family == NEAR_HOOK:
        return genchar_strahov(family_class(family, n, k), cls)
    return genchar_hook_series(n, k, family, cls.shape, cls.tag)


def dipole_count_formula(lam, i: int, p: int) -> Fraction:
    """Number of ``(p, n-1, n)``-dipoles with face class ``(lam, i)``.

    Sums over the three families of upper classes that survive the
    evaluation at ``((n-1,1),1)``: hooks tagged by their first row, hooks
    tagged by 1, and near-hooks tagged by 2.
    """
    lam = Partition(lam)
    n = lam.n
    if i not in lam or not 1 <= p <= n - 1:
        raise ValueError(f"invalid arguments ({lam}, {i}), p={p}")
    cls = TaggedClass(lam, i)
    total = Fraction(0)
    for k in family_range(HOOK_ROW, n):
        term = _upper_value(HOOK_ROW, k, cls, n) * _two_part_value(HOOK_ROW, k, p, n)
        total += (-1) ** k * term / dimension(hook(n - 1, k)) * Fraction(n - 1, n - k - 1)
    for k in family_range(HOOK_COL, n):
        term = _upper_value(HOOK_COL, k, cls, n) * _two_part_value(HOOK_COL, k, p, n)
        total += (-1) ** (k - 1) * term / dimension(hook(n - 1, k - 1)) * Fraction(n - 1, k)
    for k in family_range(NEAR_HOOK, n):
        term = _upper_value(NEAR_HOOK, k, cls, n) * _two_part_value(NEAR_HOOK, k, p, n)
        ratio = Fraction(n * k * (n - k - 2), (n - k - 1) * (k + 1))
        total += (-1) ** k * term / dimension(hook(n - 1, k)) * ratio
    value = total * tagged_class_size(cls) * factorial(n - 2) / factorial(n)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"dipole count {value} for ({lam},{i}), p={p} is not a count")
    return value


def formula_face_counts(n: int, p: int) -> dict[TaggedClass, int]:
    """Nonzero values of :func:`dipole_count_formula` over all face classes."""
    out = {}
    for cls in tagged_classes(n):
        v = dipole_count_formula(cls.shape, cls.tag, p)
        if v:
            out[cls] = int(v)
    return out


def _times_t(coeffs: tuple[int, ...], factor: int) -> list[int]:
    return [0] + [factor * c for c in coeffs]


def _small_branch(n: int, p: int) -> Poly:
    # every term is written over the common denominator n!
    terms = [(Fraction(1), falling_product(n - 1, n)), (Fraction(1), falling_product(0, n))]
    for k in range(p, n - p):
        terms.append(
            (Fraction((n - 1) * (n - p), k * (n - k - 1)), falling_product(n - k - 1, n))
        )
    for k in range(p - 1, n - p):
        terms.append(
            (-Fraction(n - p, (n - k - 1) * (k + 1)), _times_t(falling_product(n - k - 2, n - 1), n))
        )
    return combine(terms, factorial(n))


def _large_branch(n: int, p: int) -> Poly:
    terms = [(Fraction(1), falling_product(n - 1, n)), (Fraction(1), falling_product(0, n))]
    for k in range(n - p, p):
        terms.append(
            (-Fraction((n - 1) * (n - p), k * (n - k - 1)), falling_product(n - k - 1, n))
        )
    for k in range(n - p, p - 1):
        terms.append(
            (Fraction(n - p, (n - k - 1) * (k + 1)), _times_t(falling_product(n - k - 2, n - 1), n))
        )
    return combine(terms, factorial(n))


def genus_series_branches(n: int, p: int) -> dict[str, Poly]:
    """Every printed branch of ``D_{n,p}`` whose stated range contains ``p``.

    The small branch is stated for ``2 <= p <= n/2`` and the large one for
    ``n/2 <= p <= n-1``, so both are returned when ``p == n/2``.
    """
    if n < 4 or not 2 <= p <= n - 1:
        raise ValueError(f"genus series needs n >= 4 and 2 <= p <= n-1 (n={n}, p={p})")
    out = {}
    if 2 * p <= n:
        out["small"] = _small_branch(n, p)
    if 2 * p >= n:
        out["large"] = _large_branch(n, p)
    return out


def genus_series(n: int, p: int) -> Poly:
    """``D_{n,p}(t)``: ``(n-2)! [t^{n-2g}] D_{n,p}`` dipoles have genus ``g``.

    Defined for ``n >= 4`` and ``2 <= p <= n-1``.  At ``p == n/2`` the
    small-``p`` branch is used: the large-``p`` branch drops the
    near-hook term at ``k = p - 1`` there and gives non-integral counts.
    """
    if n < 4 or not 2 <= p <= n - 1:
        raise ValueError(f"genus series needs n >= 4 and 2 <= p <= n-1 (n={n}, p={p})")
    return _small_branch(n, p) if 2 * p <= n else _large_branch(n, p)


def genus_counts(n: int, p: int) -> dict[int, int]:
    """Genus histogram from :func:`genus_series`; zero counts omitted."""
    series = genus_series(n, p)
    out = {}
    for g in range(0, (n - 1) // 2 + 1):
        value = series[n - 2 * g] * factorial(n - 2)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral count {value} at genus {g}")
        if value:
            out[g] = int(value)
    return out


def genus_counts_from_faces(n: int, p: int) -> dict[int, int]:
    """Genus histogram obtained by summing :func:`dipole_count_formula` over face classes."""
    out: dict[int, int] = {}
    for cls, v in formula_face_counts(n, p).items():
        g = _genus(n, len(cls.shape))
        out[g] = out.get(g, 0) + v
    return dict(sorted(out.items()))


def symmetry_check(n: int) -> dict[int, bool]:
    """For each ``2 <= p <= n-1``: whether ``D_{n,p} == D_{n,n+1-p}``."""
    if n < 4:
        raise ValueError("symmetry check needs n >= 4")
    return {p: genus_series(n, p) == genus_series(n, n + 1 - p) for p in range(2, n)}


def binomial_identity_holds(n: int, k: int) -> bool:
    """``t binom(t+n-k-2, n-1) == n binom(t+n-k-1, n) - (n-k-1) binom(t+n-k-2, n-1)``."""
    lhs = T * binomial_poly(n - k - 2, n - 1)
    rhs = binomial_poly(n - k - 1, n) * n - binomial_poly(n - k - 2, n - 1) * (n - k - 1)
    return lhs == rhs


def face_asymmetry_witness(max_n: int = 7):
    """First ``(n, p, class, count_p, count_p')`` where the face counts of ``p`` and ``n+1-p`` differ."""
    for n in range(4, max_n + 1):
        for p in range(2, n):
            mirror = n + 1 - p
            if mirror == p:
                continue
            for cls in tagged_classes(n):
                a = dipole_count_formula(cls.shape, cls.tag, p)
                b = dipole_count_formula(cls.shape, cls.tag, mirror)
                if a != b:
                    return n, p, cls, int(a), int(b)
    return None
