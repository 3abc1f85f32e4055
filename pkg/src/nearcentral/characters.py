"""Ordinary and generalized characters of the symmetric group.

Generalized characters ``gamma^{lam,i}_{mu,j}`` are indexed by an upper
tagged class ``(lam, i)`` (the idempotent) and a lower tagged class
``(mu, j)`` (where it is evaluated).  Three independent routes are
provided:

* :func:`genchar_oracle` -- partial traces of Young's seminormal
  representation matrices,
* :func:`genchar_strahov` -- the generalized Murnaghan-Nakayama rule,
* closed forms for the hook and near-hook families, series in ``R_{n,j}``
  and ``S_{n,j}``, and evaluations at the classes ``((n-1,1),1)`` and
  ``((n),n)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

from .combinatorics import (
    Partition,
    Permutation,
    TaggedClass,
    class_representative,
    hook,
    near_hook,
    partitions_of,
    syt_enumerate,
)
from .poly import ONE_PLUS_T, Poly

HOOK_ROW = "hook-row"
HOOK_COL = "hook-col"
NEAR_HOOK = "near-hook"
FAMILIES = (HOOK_ROW, HOOK_COL, NEAR_HOOK)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# --- ordinary characters ---------------------------------------------------


def H_poly(mu: Iterable[int]) -> Poly:
    """``H_mu(y) = prod_i (1 - (-y)^{mu_i})``."""
    result = Poly.constant(1)
    for part in mu:
        result = result * (Poly.constant(1) - Poly.monomial(part, _sign(part)))
    return result


def reduced_H(mu: Iterable[int], degree: int) -> Poly:
    """``(1+y)^{-1} H_mu(y)`` as a power series truncated after ``y^degree``.

    For non-empty ``mu`` this is an exact polynomial division; its
    coefficients are the hook characters of ``mu``.  The empty partition
    gives the truncated geometric series ``1 - y + y^2 - ...``.
    """
    mu = tuple(mu)
    if mu:
        return H_poly(mu).exact_div(ONE_PLUS_T)
    return Poly(_sign(e) for e in range(degree + 1))


def hook_character(n: int, k: int, mu: Sequence[int]) -> int:
    """``chi^{(n-k,1^k)}_mu = [y^k] (1+y)^{-1} H_mu(y)``."""
    mu = Partition(mu)
    if mu.n != n or not 0 <= k <= n - 1:
        raise ValueError(f"bad hook character arguments n={n}, k={k}, mu={mu}")
    value = H_poly(mu).exact_div(ONE_PLUS_T)[k]
    assert value.denominator == 1
    return int(value)


def char_full_cycle(lam: Sequence[int]) -> int:
    """``chi^lam`` at an ``n``-cycle: ``(-1)^k`` on the hook ``(n-k,1^k)``, else 0."""
    lam = Partition(lam)
    if lam.is_hook():
        return _sign(len(lam) - 1)
    return 0


def _beta_set(lam: Sequence[int], length: int) -> tuple[int, ...]:
    lam = list(lam) + [0] * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beta = _beta_set(lam, length)
    occupied = set(beta)
    total = 0
    # removing an r-rim hook == sliding one bead r places down the abacus
    for b in beta:
        if b - r < 0 or (b - r) in occupied:
            continue
        height = sum(1 for x in beta if b - r < x < b)
        new_beta = sorted((x if x != b else b - r for x in beta), reverse=True)
        new_lam = tuple(x - (length - 1 - i) for i, x in enumerate(new_beta))
        new_lam = tuple(x for x in new_lam if x > 0)
        total += _sign(height) * _mn(new_lam, rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character ``chi^lam_mu`` by the Murnaghan-Nakayama rule."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise ValueError(f"{lam} and {mu} partition different integers")
    return _mn(tuple(lam), tuple(mu))


# --- Young's seminormal form ------------------------------------------------


@lru_cache(maxsize=None)
def _tableau_index(lam: Partition) -> dict:
    return {t.rows: idx for idx, t in enumerate(syt_enumerate(lam))}


@lru_cache(maxsize=None)
def _generator(lam: Partition, k: int) -> tuple[tuple[Fraction, int, Fraction], ...]:
    """Sparse columns of the seminormal matrix of ``s_k = (k, k+1)``.

    Entry ``idx`` is ``(diag, partner, off)``: column ``idx`` has ``diag`` on
    the diagonal and ``off`` in row ``partner`` (``partner == -1`` when
    swapping ``k, k+1`` gives a non-standard tableau).
    """
    index = _tableau_index(lam)
    cols = []
    for t in syt_enumerate(lam):
        d = t.content(k + 1) - t.content(k)
        diag = Fraction(1, d)
        swapped = t.swap(k, k + 1)
        partner = index.get(swapped.rows, -1)
        if partner < 0:
            off = Fraction(0)
        elif d > 0:
            off = Fraction(1)
        else:
            off = 1 - diag * diag
        cols.append((diag, partner, off))
    return tuple(cols)


def seminormal_rep(lam: Sequence[int], perm: Permutation) -> list[list[Fraction]]:
    """Matrix of the irreducible representation ``lam`` at ``perm``.

    Rows and columns follow :func:`syt_enumerate`.  The matrix satisfies
    ``R(s * t) == R(s) @ R(t)`` for the right-to-left composition.
    """
    lam = Partition(lam)
    if lam.n != len(perm):
        raise ValueError(f"{lam} is not a partition of {len(perm)}")
    dim = len(syt_enumerate(lam))
    mat = [[Fraction(int(r == c)) for c in range(dim)] for r in range(dim)]
    for k in perm.adjacent_word():
        gen = _generator(lam, k)
        # right-multiply by the sparse generator, column by column
        new_cols = []
        for col, (diag, partner, off) in enumerate(gen):
            new_cols.append(
                [
                    row[col] * diag + (row[partner] * off if partner >= 0 else 0)
                    for row in mat
                ]
            )
        mat = [[new_cols[c][r] for c in range(dim)] for r in range(dim)]
    return mat


def _tag_block(lam: Partition, i: int) -> list[int]:
    tagged_rows = {t.rows for t in syt_enumerate(lam, tag=i)}
    return [idx for idx, t in enumerate(syt_enumerate(lam)) if t.rows in tagged_rows]


def partial_trace(lam: Sequence[int], i: int, perm: Permutation) -> Fraction:
    """Sum of diagonal entries of ``seminormal_rep(lam, perm)`` over SYT_{lam,i}."""
    lam = Partition(lam)
    mat = seminormal_rep(lam, perm)
    return sum((mat[idx][idx] for idx in _tag_block(lam, i)), Fraction(0))


def genchar_oracle(
    rho: TaggedClass, cls: TaggedClass, representative: Permutation | None = None
) -> Fraction:
    """Generalized character from the seminormal representation."""
    lam, i = rho
    if lam.n != cls.shape.n:
        raise ValueError("upper and lower classes live in different S_n")
    if representative is None:
        representative = class_representative(cls)
    elif representative.tagged_class() != (cls.shape, cls.tag):
        raise ValueError(f"{representative} is not in C_{cls}")
    return partial_trace(lam, i, representative)


# --- Strahov's Murnaghan-Nakayama rule ------------------------------------


class SkewShape:
    """The skew diagram ``outer / inner``."""

    def __init__(self, outer: Sequence[int], inner: Sequence[int]):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")
        inner_rows = list(self.inner) + [0] * (len(self.outer) - len(self.inner))
        self.cells = frozenset(
            (r, c)
            for r, length in enumerate(self.outer)
            for c in range(inner_rows[r], length)
        )

    def __len__(self) -> int:
        return len(self.cells)

    def is_broken_border_strip(self) -> bool:
        return not any(
            {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= self.cells for r, c in self.cells
        )

    def components(self) -> list[set[tuple[int, int]]]:
        """Edge-connected components; cells touching only at corners are separate."""
        remaining = set(self.cells)
        comps = []
        while remaining:
            stack = [remaining.pop()]
            comp = set(stack)
            while stack:
                r, c = stack.pop()
                for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                    if nb in remaining:
                        remaining.remove(nb)
                        comp.add(nb)
                        stack.append(nb)
            comps.append(comp)
        return comps

    def height(self) -> int:
        return sum(
            max(r for r, _ in comp) - min(r for r, _ in comp) for comp in self.components()
        )

    def sharp_corners(self) -> list[tuple[int, int]]:
        return sorted(
            (r, c)
            for r, c in self.cells
            if (r + 1, c) in self.cells and (r, c + 1) in self.cells
        )

    def dull_boxes(self) -> list[tuple[int, int]]:
        return sorted(
            (r, c)
            for r, c in self.cells
            if (r + 1, c) not in self.cells and (r, c + 1) not in self.cells
        )


def strahov_weight(lam: Sequence[int], nu: Sequence[int], i: int) -> Fraction:
    """The coefficient ``phi_{lam/nu, i}`` of the generalized rule."""
    lam = Partition(lam)
    skew = SkewShape(lam, nu)
    if not skew.is_broken_border_strip():
        return Fraction(0)
    c0 = lam.tag_content(i)
    distinguished = (lam.tag_row(i), i - 1)
    value = Fraction(_sign(skew.height()))
    for r, c in skew.sharp_corners():
        value *= c0 - (c - r)
    for r, c in skew.dull_boxes():
        if (r, c) != distinguished:
            value /= c0 - (c - r)
    return value


@lru_cache(maxsize=None)
def _strahov(lam: Partition, i: int, mu: Partition, j: int) -> Fraction:
    outer_minus = lam.i_minus(i)
    rest = mu.remove_part(j)
    total = Fraction(0)
    for nu in partitions_of(lam.n - j):
        if outer_minus.contains(nu):
            chi = mn_character(nu, rest)
            if chi:
                total += strahov_weight(lam, nu, i) * chi
    return total


def genchar_strahov(rho: TaggedClass, cls: TaggedClass) -> Fraction:
    """Generalized character by the generalized Murnaghan-Nakayama rule."""
    lam, i = Partition(rho[0]), rho[1]
    mu, j = Partition(cls[0]), cls[1]
    if i not in lam or j not in mu:
        raise ValueError(f"invalid tagged classes {rho}, {cls}")
    if lam.n != mu.n:
        raise ValueError("upper and lower classes live in different S_n")
    return _strahov(lam, i, mu, j)


genchar = genchar_strahov


# --- closed forms ------------------------------------------------------------


def genchar_at_K_n11(mu: Sequence[int], j: int) -> Fraction:
    """``gamma^{mu,j}`` evaluated at the class ``((n-1,1),1)``."""
    mu = Partition(mu)
    n = mu.n
    if j not in mu or n < 2:
        raise ValueError(f"bad arguments {mu}, {j}")
    if mu.is_hook():
        k = len(mu) - 1
        if j == n - k and (k == 0 or j != 1):
            return Fraction(_sign(k))
        if j == 1:
            return Fraction(_sign(k - 1))
    elif j == 2 and len(mu) >= 2 and mu[1] == 2 and (len(mu) == 2 or mu[2] == 1):
        k = len(mu) - 1
        return Fraction(_sign(k))
    return Fraction(0)


def genchar_at_full_cycle(mu: Sequence[int], j: int) -> Fraction:
    """``gamma^{mu,j}`` evaluated at the class ``((n),n)``."""
    mu = Partition(mu)
    n = mu.n
    if j not in mu:
        raise ValueError(f"{j} is not a part of {mu}")
    if n == 1:
        return Fraction(1)
    if mu.is_hook():
        k = len(mu) - 1
        if j == n - k and (k == 0 or j != 1):
            return Fraction(_sign(k) * (n - k - 1), n - 1)
        if j == 1:
            return Fraction(_sign(k) * k, n - 1)
    return Fraction(0)


def R_poly(n: int, j: int) -> Poly:
    """``R_{n,j}(x) = ((n-1) + n x + (-x)^j) / (1 + x)``, divided exactly."""
    num = Poly([n - 1, n]) + Poly.monomial(j, _sign(j))
    return num.exact_div(ONE_PLUS_T)


def S_poly(n: int, j: int) -> Poly:
    """``S_{n,j}(x) = (-1)^{j-1} ((-1)^j x + n x^j + (n-1) x^{j+1}) / (1 + x)``."""
    num = Poly.monomial(1, _sign(j)) + Poly.monomial(j, n) + Poly.monomial(j + 1, n - 1)
    return num.exact_div(ONE_PLUS_T) * _sign(j - 1)


def genchar_hook_series(n: int, k: int, which: str, mu: Sequence[int], j: int) -> Fraction:
    """Hook generalized characters as coefficients of ``R`` or ``S`` series.

    The value is ``[x^k] R_{n,j}(x) (1+x)^{-1} H_{mu minus j}(x) / (n-1)``
    (``S_{n,j}`` for the column tag).  The ``(1+x)^{-1}`` makes the
    coefficients of the second factor the hook characters of
    ``mu minus j``.

    ``which`` selects the upper class: ``"hook-row"`` is
    ``((n-k,1^k), n-k)`` with ``0 <= k <= n-2``; ``"hook-col"`` is
    ``((n-k,1^k), 1)`` with ``1 <= k <= n-1``.
    """
    mu = Partition(mu)
    if mu.n != n or j not in mu:
        raise ValueError(f"bad class ({mu}, {j}) for n={n}")
    if which == HOOK_ROW:
        if not 0 <= k <= n - 2:
            raise ValueError(f"k={k} out of range for {which}")
        series = R_poly(n, j)
    elif which == HOOK_COL:
        if not 1 <= k <= n - 1:
            raise ValueError(f"k={k} out of range for {which}")
        series = S_poly(n, j)
    else:
        raise ValueError(f"unknown hook family {which!r}")
    return (series * reduced_H(mu.remove_part(j), k))[k] / (n - 1)


def family_class(family: str, n: int, k: int) -> TaggedClass:
    """The upper tagged class of a hook or near-hook family member."""
    if family == HOOK_ROW:
        return TaggedClass(hook(n, k), n - k)
    if family == HOOK_COL:
        return TaggedClass(hook(n, k), 1)
    if family == NEAR_HOOK:
        return TaggedClass(near_hook(n, k), 2)
    raise ValueError(f"unknown family {family!r}")


def family_range(family: str, n: int) -> range:
    """Valid ``k`` for each family."""
    return {
        HOOK_ROW: range(0, n - 1),
        HOOK_COL: range(1, n),
        NEAR_HOOK: range(1, n - 2),
    }[family]


def _hook_row_tables(n: int, k: int, q: int) -> list[Fraction]:
    values = []
    if k <= n - k - 1:
        if q <= k:
            values.append(Fraction(_sign(k - 1) * q, n - 1))
        elif q < n - k:
            values.append(Fraction(_sign(k) * (n - k - 1), n - 1))
        else:
            values.append(Fraction(_sign(k) * q, n - 1))
    if k >= n - k - 1:
        if q < n - k:
            values.append(Fraction(_sign(k - 1) * q, n - 1))
        elif q <= k:
            values.append(Fraction(_sign(k - 1) * (n - k - 1), n - 1))
        else:
            values.append(Fraction(_sign(k) * q, n - 1))
    return values


def _hook_col_tables(n: int, k: int, q: int) -> list[Fraction]:
    values = []
    if k <= n - k - 1:
        if q <= k:
            values.append(Fraction(_sign(k) * q, n - 1))
        elif q < n - k:
            values.append(Fraction(_sign(k) * k, n - 1))
        else:
            values.append(Fraction(_sign(k - 1) * q, n - 1))
    if k >= n - k - 1:
        if q < n - k:
            values.append(Fraction(_sign(k) * q, n - 1))
        elif q <= k:
            values.append(Fraction(_sign(k - 1) * k, n - 1))
        else:
            values.append(Fraction(_sign(k - 1) * q, n - 1))
    return values


def _near_hook_tables(n: int, k: int, q: int) -> list[Fraction]:
    scale = k * (n - k - 2)
    values = []
    if k <= n - k - 2:
        if q <= k:
            values.append(Fraction(_sign(k) * q, scale))
        elif q < n - k - 1:
            values.append(Fraction(0))
        else:
            values.append(Fraction(_sign(k + 1) * q, scale))
    if k >= n - k - 2:
        if q <= n - k - 2:
            values.append(Fraction(_sign(k) * q, scale))
        elif q <= k:
            values.append(Fraction(0))
        else:
            values.append(Fraction(_sign(k + 1) * q, scale))
    return values


def two_part_tables(family: str, k: int, p: int, n: int) -> list[Fraction]:
    """Every case-table value that applies to ``(family, k)`` at class ``((n-p,p),p)``."""
    if k not in family_range(family, n):
        raise ValueError(f"k={k} out of range for {family} at n={n}")
    if not 1 <= p <= n - 1 or (family == NEAR_HOOK and p < 2):
        raise ValueError(f"p={p} out of range for {family} at n={n}")
    q = n - p
    if family == HOOK_ROW:
        return _hook_row_tables(n, k, q)
    if family == HOOK_COL:
        return _hook_col_tables(n, k, q)
    return _near_hook_tables(n, k, q)


def genchar_two_part(family: str, k: int, p: int, n: int) -> Fraction:
    """``gamma^{rho}_{(n-p,p),p}`` for a hook or near-hook ``rho`` from the case tables."""
    values = two_part_tables(family, k, p, n)
    if any(v != values[0] for v in values):
        raise ArithmeticError(f"case tables disagree for {family}, k={k}, p={p}, n={n}")
    return values[0]


def two_part_class(n: int, p: int) -> TaggedClass:
    """The tagged class ``((p, n-p), p)``."""
    return TaggedClass(Partition((p, n - p)), p)


# --- content polynomials --------------------------------------------------


def content_polynomial(rho: Sequence[int]) -> Poly:
    """``prod over cells (t + content)``."""
    result = Poly.constant(1)
    for c in Partition(rho).contents():
        result = result * Poly([c, 1])
    return result


def content_poly_sum(rho: Sequence[int], ell: int, m: int) -> Fraction:
    """``[t^m] prod_cells (t + content)``; independent of ``ell`` but checked against it."""
    rho = Partition(rho)
    if ell not in rho:
        raise ValueError(f"{ell} is not a part of {rho}")
    return content_polynomial(rho)[m]


def dimension_ratio(rho: TaggedClass) -> Fraction:
    """``d_rho / d_{ell_-(rho)}``."""
    from .combinatorics import dimension

    lam, ell = rho
    return Fraction(dimension(lam), dimension(lam.i_minus(ell)))


def jm_content_product(mu: Sequence[int], j: int) -> Fraction:
    """``gamma^{mu,j}_{(n-1,1),1}`` by evaluating contents of a tableau.

    ``K_{(n-1,1),1} = J_2 ... J_{n-1}``, so the value is
    ``d_{j_-(mu)} / (n-2)! * prod_{2<=k<=n-1} c_T(k)`` for any ``T`` in
    SYT_{mu,j}.
    """
    from math import factorial

    from .combinatorics import dimension

    mu = Partition(mu)
    n = mu.n
    t = syt_enumerate(mu, tag=j)[0]
    contents = t.content_vector()
    return Fraction(dimension(mu.i_minus(j)) * prod(contents[1 : n - 1]), factorial(n - 2))


# --- dispatch over every route ----------------------------------------------


def family_of(rho: TaggedClass) -> tuple[str, int] | None:
    """``(family, k)`` when ``rho`` is a hook or near-hook family member."""
    lam, i = Partition(rho[0]), rho[1]
    n = lam.n
    if n < 2:
        return None
    if lam.is_hook():
        k = len(lam) - 1
        if i == 1 and k >= 1:
            return HOOK_COL, k
        if i == n - k and k <= n - 2:
            return HOOK_ROW, k
        return None
    k = len(lam) - 1
    if i == 2 and n >= 4 and k in family_range(NEAR_HOOK, n) and lam == near_hook(n, k):
        return NEAR_HOOK, k
    return None


def closed_form_values(rho: TaggedClass, cls: TaggedClass) -> dict[str, Fraction]:
    """Every closed-form evaluation of ``gamma^rho_cls`` that applies.

    Keys name the route; a case table that applies twice (on a branch
    boundary) is reported once per branch.
    """
    lam, i = Partition(rho[0]), rho[1]
    mu, j = Partition(cls[0]), cls[1]
    n = lam.n
    out: dict[str, Fraction] = {}
    if n >= 2 and mu == Partition((n - 1, 1)) and j == 1:
        out["at-(n-1,1)"] = genchar_at_K_n11(lam, i)
        out["jm-contents"] = jm_content_product(lam, i)
    if mu == Partition((n,)):
        out["at-full-cycle"] = genchar_at_full_cycle(lam, i)
    fam = family_of(TaggedClass(lam, i))
    if fam is None:
        return out
    family, k = fam
    if family in (HOOK_ROW, HOOK_COL):
        out["hook-series"] = genchar_hook_series(n, k, family, mu, j)
    if len(mu) == 2 and not (family == NEAR_HOOK and j < 2):
        for b, value in enumerate(two_part_tables(family, k, j, n), start=1):
            out[f"two-part-{b}"] = value
    return out
