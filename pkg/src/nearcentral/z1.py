"""The group algebra of S_n and its centralizer Z_1(n).

``Z_1(n)`` is spanned by the tagged class sums ``K_{lam,i}``.  Products
are available three ways: brute-force convolution of group algebra
elements, structure constants counted over S_n (optionally cached on
disk), and the character formula :func:`connection_coefficient`.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
import tempfile
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from .characters import dimension_ratio, genchar_strahov, partial_trace
from .combinatorics import (
    Partition,
    Permutation,
    TaggedClass,
    all_permutations,
    class_elements,
    class_representative,
    dimension,
    tagged_class_size,
    tagged_classes,
    tagged_from_json,
)

log = logging.getLogger(__name__)

# n! x n! convolution of arbitrary elements
MAX_GROUP_ALGEBRA_N = 6
# class-by-element counting of structure constants
MAX_CLASS_PRODUCT_N = 8


class NotCentralizerElement(ValueError):
    """Raised when a group algebra element is not constant on tagged classes."""


class ResourceGuardError(RuntimeError):
    """Raised when a brute-force computation exceeds its configured size limit."""


def _check_limit(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise ResourceGuardError(f"{what} refused for n={n} (limit {limit})")


class GroupAlgebraElement:
    """Sparse rational combination of permutations of ``{1..n}``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, Fraction | int] | None = None):
        self.n = n
        self.terms: dict[Permutation, Fraction] = {}
        for perm, c in (terms or {}).items():
            if len(perm) != n:
                raise ValueError(f"{perm} is not in S_{n}")
            if c:
                self.terms[perm] = Fraction(c)

    @classmethod
    def identity(cls, n: int) -> GroupAlgebraElement:
        return cls(n, {Permutation.identity(n): 1})

    @classmethod
    def from_perms(cls, n: int, perms: Iterable[Permutation], coeff=1) -> GroupAlgebraElement:
        out: dict[Permutation, Fraction] = {}
        for p in perms:
            out[p] = out.get(p, Fraction(0)) + coeff
        return cls(n, out)

    def coefficient(self, perm: Permutation) -> Fraction:
        return self.terms.get(perm, Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return GroupAlgebraElement(self.n, out)

    def __sub__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return self + other.scale(-1)

    def scale(self, c) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.n, {p: v * c for p, v in self.terms.items()})

    def __mul__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if other.n != self.n:
            raise ValueError("elements of different group algebras")
        # a factor no bigger than a sum of transpositions keeps the cost near n!
        sparse = self.n * (self.n - 1) // 2
        if min(len(self.terms), len(other.terms)) > max(sparse, 1):
            _check_limit(self.n, MAX_GROUP_ALGEBRA_N, "group algebra product")
        # integer arithmetic over a common denominator
        da = lcm(*(c.denominator for c in self.terms.values())) if self.terms else 1
        db = lcm(*(c.denominator for c in other.terms.values())) if other.terms else 1
        left = [(p, int(c * da)) for p, c in self.terms.items()]
        right = [(p, int(c * db)) for p, c in other.terms.items()]
        acc: dict[tuple, int] = {}
        for p, a in left:
            for q, b in right:
                key = tuple(p[x - 1] for x in q)
                acc[key] = acc.get(key, 0) + a * b
        denom = da * db
        return GroupAlgebraElement(
            self.n,
            {Permutation._trusted(k): Fraction(v, denom) for k, v in acc.items() if v},
        )

    __rmul__ = scale

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        shown = ", ".join(f"{c}*{p}" for p, c in sorted(self.terms.items())[:6])
        more = "" if len(self.terms) <= 6 else f", ... ({len(self.terms)} terms)"
        return f"GroupAlgebraElement(n={self.n}: {shown}{more})"


def jm_element(n: int, k: int) -> GroupAlgebraElement:
    """Jucys-Murphy element ``J_k = sum_{i<k} (i, k)``; ``J_1 = 0``."""
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    return GroupAlgebraElement.from_perms(
        n, (Permutation.transposition(n, i, k) for i in range(1, k))
    )


def jm_product(n: int, lo: int = 2, hi: int | None = None) -> GroupAlgebraElement:
    """``J_lo J_{lo+1} ... J_hi`` (default ``J_2 ... J_{n-1}``)."""
    hi = n - 1 if hi is None else hi
    result = GroupAlgebraElement.identity(n)
    for k in range(lo, hi + 1):
        result = result * jm_element(n, k)
    return result


class Z1Element:
    """Sparse rational combination of tagged class sums ``K_{lam,i}``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[TaggedClass, Fraction | int] | None = None):
        self.n = n
        self.terms: dict[TaggedClass, Fraction] = {}
        for c, v in (terms or {}).items():
            c = TaggedClass(Partition(c[0]), c[1])
            if c.shape.n != n or c.tag not in c.shape:
                raise ValueError(f"{c} is not a tagged class of S_{n}")
            if v:
                self.terms[c] = self.terms.get(c, Fraction(0)) + Fraction(v)

    @classmethod
    def basis(cls, c: TaggedClass) -> Z1Element:
        return cls(c.shape.n, {c: 1})

    @classmethod
    def identity(cls, n: int) -> Z1Element:
        return cls.basis(TaggedClass(Partition([1] * n), 1))

    def coefficient(self, c: TaggedClass) -> Fraction:
        return self.terms.get(TaggedClass(Partition(c[0]), c[1]), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, Z1Element) and self.n == other.n and self.terms == other.terms

    def __add__(self, other: Z1Element) -> Z1Element:
        out = dict(self.terms)
        for c, v in other.terms.items():
            out[c] = out.get(c, 0) + v
        return Z1Element(self.n, out)

    def scale(self, s) -> Z1Element:
        return Z1Element(self.n, {c: v * s for c, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return z1_multiply(self, other)

    def expand(self) -> GroupAlgebraElement:
        _check_limit(self.n, MAX_CLASS_PRODUCT_N, "expansion into S_n")
        out = {}
        for c, v in self.terms.items():
            for p in class_elements(c):
                out[p] = v
        return GroupAlgebraElement(self.n, out)

    def __repr__(self) -> str:
        body = ", ".join(f"{v}*K[{c}]" for c, v in self.terms.items())
        return f"Z1Element(n={self.n}: {body})"


def z1_project(a: GroupAlgebraElement) -> Z1Element:
    """Rewrite an ``S_{n-1}``-invariant element in the ``K_{lam,i}`` basis."""
    by_class: dict[TaggedClass, dict[Fraction, int]] = {}
    for perm, c in a.terms.items():
        counts = by_class.setdefault(perm.tagged_class(), {})
        counts[c] = counts.get(c, 0) + 1
    terms = {}
    for cls, counts in by_class.items():
        if len(counts) != 1:
            raise NotCentralizerElement(f"coefficients differ within C_{cls}")
        (value, seen), = counts.items()
        if seen != tagged_class_size(cls):
            raise NotCentralizerElement(f"support covers only part of C_{cls}")
        terms[cls] = value
    return Z1Element(a.n, terms)


# --- structure constants ----------------------------------------------------


def _encode(arr: np.ndarray, n: int) -> np.ndarray:
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return arr.astype(np.int64) @ weights


@lru_cache(maxsize=None)
def _count_structure_constants(n: int) -> np.ndarray:
    """``table[a, b, c]``: pairs ``(s, t)`` in ``C_a x C_b`` with ``s t`` a fixed element of ``C_c``."""
    _check_limit(n, MAX_CLASS_PRODUCT_N, "structure constant scan")
    classes = tagged_classes(n)
    index = {c: k for k, c in enumerate(classes)}
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    codes = _encode(perms, n)
    cls_of = np.array(
        [index[Permutation._trusted(tuple(int(x) + 1 for x in row)).tagged_class()] for row in perms]
    )
    inverses = np.empty_like(perms)
    rows = np.arange(len(perms))[:, None]
    inverses[rows, perms] = np.arange(n, dtype=np.int8)
    m = len(classes)
    table = np.zeros((m, m, m), dtype=np.int64)
    for c_idx, c in enumerate(classes):
        target = np.array(class_representative(c), dtype=np.int8) - 1
        # s = target * t^{-1} ranges over S_n together with t
        s = target[inverses]
        s_cls = cls_of[np.searchsorted(codes, _encode(s, n))]
        np.add.at(table[:, :, c_idx], (s_cls, cls_of), 1)
    return table


class StructureConstantCache:
    """On-disk JSON cache of Z_1(n) structure constants, one file per ``n``.

    Files are written to a temporary name and atomically renamed, so
    concurrent readers never see a partial table.
    """

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    def path(self, n: int) -> Path:
        return self.directory / f"z1_structure_n{n}.json"

    @staticmethod
    def serialize(n: int, table: np.ndarray) -> str:
        classes = tagged_classes(n)
        records = []
        for a, ca in enumerate(classes):
            for b, cb in enumerate(classes):
                terms = [
                    {"class": cc.to_json(), "c": int(table[a, b, c])}
                    for c, cc in enumerate(classes)
                    if table[a, b, c]
                ]
                records.append(
                    {"n": n, "left": ca.to_json(), "right": cb.to_json(), "terms": terms}
                )
        return json.dumps(records, sort_keys=True, separators=(",", ":")) + "\n"

    @staticmethod
    def deserialize(n: int, text: str) -> np.ndarray:
        classes = tagged_classes(n)
        index = {c: k for k, c in enumerate(classes)}
        table = np.zeros((len(classes),) * 3, dtype=np.int64)
        for rec in json.loads(text):
            if rec["n"] != n:
                raise ValueError(f"cache record for n={rec['n']} in file for n={n}")
            a = index[tagged_from_json(rec["left"])]
            b = index[tagged_from_json(rec["right"])]
            for term in rec["terms"]:
                table[a, b, index[tagged_from_json(term["class"])]] = term["c"]
        return table

    def load(self, n: int) -> np.ndarray | None:
        path = self.path(n)
        if not path.exists():
            return None
        return self.deserialize(n, path.read_text(encoding="utf-8"))

    def store(self, n: int, table: np.ndarray) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path(n)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(self.serialize(n, table))
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path


def _default_cache() -> StructureConstantCache | None:
    directory = os.environ.get("NEARCENTRAL_CACHE_DIR")
    return StructureConstantCache(directory) if directory else None


def structure_constants(n: int, cache: StructureConstantCache | None = None) -> np.ndarray:
    """Brute-force structure constants of Z_1(n), indexed like :func:`tagged_classes`."""
    cache = cache or _default_cache()
    if cache is not None:
        table = cache.load(n)
        if table is not None:
            return table
    table = _count_structure_constants(n)
    if cache is not None:
        cache.store(n, table)
        log.info("stored Z_1(%d) structure constants in %s", n, cache.path(n))
    return table


def brute_structure_constant(a: TaggedClass, b: TaggedClass, c: TaggedClass) -> int:
    n = a.shape.n
    index = {x: k for k, x in enumerate(tagged_classes(n))}
    return int(structure_constants(n)[index[a], index[b], index[c]])


def connection_coefficient(a: TaggedClass, b: TaggedClass, c: TaggedClass) -> Fraction:
    """``[K_c] K_a K_b`` from generalized characters."""
    n = a.shape.n
    if not b.shape.n == c.shape.n == n:
        raise ValueError("tagged classes of different S_n")
    total = Fraction(0)
    for rho in tagged_classes(n):
        ga = genchar_strahov(rho, a)
        if not ga:
            continue
        gb = genchar_strahov(rho, b)
        if not gb:
            continue
        gc = genchar_strahov(rho, c)
        d_minus = dimension(rho.shape.i_minus(rho.tag))
        total += ga * gb * gc / d_minus * dimension_ratio(rho)
    value = total * tagged_class_size(a) * tagged_class_size(b) / factorial(n)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"connection coefficient {value} is not a non-negative integer")
    return value


def z1_multiply(a: Z1Element, b: Z1Element, use_formula: bool | None = None) -> Z1Element:
    """Product in Z_1(n).

    Up to ``MAX_CLASS_PRODUCT_N`` the brute-force structure constants are
    used; beyond it, or with ``use_formula=True``, the character formula.
    """
    if a.n != b.n:
        raise ValueError("elements of different algebras")
    n = a.n
    if use_formula is None:
        use_formula = n > MAX_CLASS_PRODUCT_N
    out: dict[TaggedClass, Fraction] = {}
    if use_formula:
        for ca, va in a.terms.items():
            for cb, vb in b.terms.items():
                for cc in tagged_classes(n):
                    coef = connection_coefficient(ca, cb, cc)
                    if coef:
                        out[cc] = out.get(cc, 0) + va * vb * coef
        return Z1Element(n, out)
    table = structure_constants(n)
    classes = tagged_classes(n)
    index = {c: k for k, c in enumerate(classes)}
    for ca, va in a.terms.items():
        for cb, vb in b.terms.items():
            row = table[index[ca], index[cb]]
            for k in np.nonzero(row)[0]:
                out[classes[k]] = out.get(classes[k], 0) + va * vb * int(row[k])
    return Z1Element(n, out)


# --- idempotents ---------------------------------------------------------


def gamma_element(lam, i: int) -> GroupAlgebraElement:
    """The idempotent ``Gamma^{lam,i}``, summing the seminormal units of SYT_{lam,i}.

    The coefficient of ``p`` is ``d_lam / n!`` times the partial trace of
    the representation matrix of ``p^{-1}`` over SYT_{lam,i}; diagonal
    entries do not depend on the choice between seminormal and
    orthogonal bases.
    """
    lam = Partition(lam)
    n = lam.n
    _check_limit(n, MAX_GROUP_ALGEBRA_N, "idempotent expansion")
    scale = Fraction(dimension(lam), factorial(n))
    return GroupAlgebraElement(
        n, {p: scale * partial_trace(lam, i, p.inverse()) for p in all_permutations(n)}
    )
