"""Partitions, tagged classes, permutations and standard Young tableaux.

Permutations act on ``{1, ..., n}`` and compose right-to-left:
``(s * t)(x) == s(t(x))``.  Every product in the package (brute-force
scans, group algebra multiplication, representation matrices) uses this
one convention.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple, Sequence


class Partition(tuple):
    """An integer partition, stored as a weakly decreasing tuple of parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        """Number of parts, m(lambda)."""
        return len(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def distinct_parts(self) -> list[int]:
        """Distinct part values in decreasing order."""
        return sorted(set(self), reverse=True)

    def i_minus(self, i: int) -> Partition:
        """Replace one part ``i`` by ``i - 1`` (dropping it when ``i == 1``)."""
        if i not in self:
            raise ValueError(f"{i} is not a part of {self}")
        parts = list(self)
        parts.remove(i)
        if i > 1:
            parts.append(i - 1)
        return Partition(parts)

    def remove_part(self, j: int) -> Partition:
        """Remove one copy of part ``j``, giving a partition of ``n - j``."""
        if j not in self:
            raise ValueError(f"{j} is not a part of {self}")
        parts = list(self)
        parts.remove(j)
        return Partition(parts)

    def contains(self, other: Sequence[int]) -> bool:
        """Cellwise containment of Ferrers diagrams, ``other`` inside ``self``."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > c) for c in range(self[0]))

    def cells(self) -> list[tuple[int, int]]:
        """Cells ``(row, col)``, zero-based, in reading order."""
        return [(r, c) for r, length in enumerate(self) for c in range(length)]

    def contents(self) -> list[int]:
        return [c - r for r, c in self.cells()]

    def is_hook(self) -> bool:
        return len(self) <= 1 or self[1] == 1

    def tag_row(self, i: int) -> int:
        """Zero-based index of the lowest row of length ``i``.

        The symbol ``n`` of a tableau in SYT_{lambda,i} always sits at the
        end of this row, since that is the only removable cell among the
        rows of length ``i``.
        """
        if i not in self:
            raise ValueError(f"{i} is not a part of {self}")
        return max(r for r, length in enumerate(self) if length == i)

    def tag_content(self, i: int) -> int:
        """Content of ``n`` in any tableau of SYT_{lambda,i}."""
        return (i - 1) - self.tag_row(i)

    def to_json(self) -> list[int]:
        return list(self)


class TaggedClass(NamedTuple):
    """The pair ``(lambda, i)``: cycle type with the symbol ``n`` on an ``i``-cycle."""

    shape: Partition
    tag: int

    @property
    def n(self) -> int:
        return self.shape.n

    def __str__(self) -> str:
        return f"{self.shape};{self.tag}"

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "tag": self.tag}

    def key(self) -> str:
        """Canonical string key used in JSON tables."""
        return json.dumps(self.to_json(), separators=(",", ":"))


def tagged(shape: Iterable[int], tag: int) -> TaggedClass:
    """Build a validated :class:`TaggedClass`."""
    shape = Partition(shape)
    if tag not in shape:
        raise ValueError(f"tag {tag} is not a part of {shape}")
    return TaggedClass(shape, int(tag))


def tagged_from_json(obj: dict) -> TaggedClass:
    return tagged(obj["shape"], obj["tag"])


def rational_to_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)


# --- enumeration -----------------------------------------------------------


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def partitions_of(n: int, num_parts: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    With ``num_parts`` only partitions with exactly that many parts are
    returned.  ``n == 0`` gives the single empty partition.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    parts = _all_partitions(n)
    if num_parts is None:
        return list(parts)
    return [p for p in parts if len(p) == num_parts]


@lru_cache(maxsize=None)
def _tagged_classes(n: int) -> tuple[TaggedClass, ...]:
    return tuple(
        TaggedClass(lam, i) for lam in _all_partitions(n) for i in lam.distinct_parts()
    )


def tagged_classes(n: int) -> list[TaggedClass]:
    """All tagged classes of S_n: partitions in reverse-lex order, tags decreasing."""
    return list(_tagged_classes(n))


# --- class sizes and dimensions -------------------------------------------


def class_size(lam: Sequence[int]) -> int:
    """Number of permutations of cycle type ``lam``."""
    lam = Partition(lam)
    denom = prod(i**m * factorial(m) for i, m in lam.multiplicities().items())
    return factorial(lam.n) // denom


def tagged_class_size(c: TaggedClass) -> int:
    """``|C_{lambda,i}| = |C_lambda| * i * m_i(lambda) / n``."""
    shape, i = c
    if i not in shape:
        raise ValueError(f"tag {i} is not a part of {shape}")
    num = class_size(shape) * i * shape.multiplicity(i)
    assert num % shape.n == 0
    return num // shape.n


@lru_cache(maxsize=None)
def dimension(lam: Sequence[int]) -> int:
    """``d_lambda`` via the hook-length formula."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = prod(
        (lam[r] - c - 1) + (conj[c] - r - 1) + 1 for r, c in lam.cells()
    )
    return factorial(lam.n) // hooks


def hook(n: int, k: int) -> Partition:
    """The hook ``(n - k, 1^k)``."""
    return Partition([n - k] + [1] * k)


def near_hook(n: int, k: int) -> Partition:
    """The near-hook ``(n - k - 1, 2, 1^(k-1))``."""
    return Partition([n - k - 1, 2] + [1] * (k - 1))


# --- permutations ----------------------------------------------------------


class Permutation(tuple):
    """A permutation of ``{1..n}`` stored as its one-line images."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build from disjoint cycles; ``(a, b, c)`` sends a->b->c->a."""
        images = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if a in seen or not 1 <= a <= n:
                    raise ValueError(f"bad cycle {cyc}")
                seen.add(a)
                images[a - 1] = b
        return cls(images)

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        return cls.from_cycles(n, [(a, b)])

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"

    def __str__(self) -> str:
        cycles = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) or "()"

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(other) != len(self):
            raise ValueError("permutations of different degree")
        return Permutation._trusted(tuple(self[x - 1] for x in other))

    def __pow__(self, k: int) -> Permutation:
        result = Permutation.identity(len(self))
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, x in enumerate(self, start=1):
            inv[x - 1] = i
        return Permutation._trusted(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element."""
        seen = [False] * (len(self) + 1)
        out = []
        for start in range(1, len(self) + 1):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self[x - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition(len(c) for c in self.cycles())

    def cycle_length_of(self, x: int) -> int:
        length, y = 1, self[x - 1]
        while y != x:
            y = self[y - 1]
            length += 1
        return length

    def num_cycles(self) -> int:
        return len(self.cycles())

    def tagged_class(self) -> TaggedClass:
        return TaggedClass(self.cycle_type(), self.cycle_length_of(len(self)))

    def adjacent_word(self) -> list[int]:
        """Indices ``k`` with ``self == s_{k1} * s_{k2} * ...``, ``s_k = (k, k+1)``.

        Found by bubble sort; the word is reduced and deterministic.
        """
        arr = list(self)
        word = []
        # sort arr by right-multiplying with adjacent transpositions
        changed = True
        while changed:
            changed = False
            for k in range(1, len(arr)):
                if arr[k - 1] > arr[k]:
                    arr[k - 1], arr[k] = arr[k], arr[k - 1]
                    word.append(k)
                    changed = True
        # self * s_w1 * s_w2 ... = id, so self = ... s_w2 s_w1
        return word[::-1]


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(images)


def class_representative(c: TaggedClass) -> Permutation:
    """A fixed element of C_{lambda,i}: cycles on consecutive symbols, ``n`` last."""
    shape, i = c
    n = shape.n
    parts = list(shape)
    parts.remove(i)
    cycles, start = [], 1
    for length in parts:
        cycles.append(tuple(range(start, start + length)))
        start += length
    cycles.append(tuple(range(start, n + 1)))
    return Permutation.from_cycles(n, cycles)


def class_elements(c: TaggedClass) -> list[Permutation]:
    """All members of C_{lambda,i}, by conjugating the representative by S_{n-1}."""
    rep = class_representative(c)
    n = c.n
    out = set()
    for h in itertools.permutations(range(1, n)):
        conj = [0] * n
        hn = h + (n,)
        for x in range(1, n + 1):
            conj[hn[x - 1] - 1] = hn[rep[x - 1] - 1]
        out.add(Permutation._trusted(tuple(conj)))
    return sorted(out)


# --- tableaux -------------------------------------------------------------


class StandardYoungTableau(NamedTuple):
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.shape.n

    def position(self, k: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows):
            if k in row:
                return r, row.index(k)
        raise ValueError(f"{k} not in tableau")

    def content(self, k: int) -> int:
        r, c = self.position(k)
        return c - r

    def content_vector(self) -> tuple[int, ...]:
        cv = [0] * self.n
        for r, row in enumerate(self.rows):
            for c, k in enumerate(row):
                cv[k - 1] = c - r
        return tuple(cv)

    def is_standard(self) -> bool:
        for r, row in enumerate(self.rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
            if r and any(row[c] <= self.rows[r - 1][c] for c in range(len(row))):
                return False
        return sorted(itertools.chain(*self.rows)) == list(range(1, self.n + 1))

    def swap(self, a: int, b: int) -> StandardYoungTableau:
        """Exchange the labels ``a`` and ``b`` (result may be non-standard)."""
        swap = {a: b, b: a}
        return StandardYoungTableau(
            self.shape, tuple(tuple(swap.get(x, x) for x in row) for row in self.rows)
        )

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, row)) for row in self.rows)


@lru_cache(maxsize=None)
def _syt(shape: Partition) -> tuple[StandardYoungTableau, ...]:
    n = shape.n
    if n == 0:
        return (StandardYoungTableau(shape, ()),)
    out = []
    # n sits in a removable corner; recurse on the shape with that corner removed
    for r, length in enumerate(shape):
        if r + 1 < len(shape) and shape[r + 1] == length:
            continue
        smaller = shape.i_minus(length) if length > 1 else shape.remove_part(1)
        for t in _syt(smaller):
            rows = [list(row) for row in t.rows]
            while len(rows) <= r:
                rows.append([])
            rows[r].append(n)
            out.append(StandardYoungTableau(shape, tuple(tuple(row) for row in rows)))
    out.sort(key=lambda t: t.rows)
    return tuple(out)


def syt_enumerate(lam: Sequence[int], tag: int | None = None) -> list[StandardYoungTableau]:
    """Standard Young tableaux of shape ``lam``, in a fixed sorted order.

    With ``tag`` given, only tableaux with ``n`` at the end of a row of
    length ``tag`` (the set SYT_{lambda,tag}).
    """
    lam = Partition(lam)
    tableaux = _syt(lam)
    if tag is None:
        return list(tableaux)
    row = lam.tag_row(tag)
    return [t for t in tableaux if t.rows[row][-1] == lam.n]
