"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class Poly:
    """Polynomial in one indeterminate; ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        """Coefficient of ``t**k`` (zero outside the support)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(m))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> Poly:
        return Poly(x / c for x in self.coeffs)

    def __pow__(self, k: int) -> Poly:
        result = Poly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, t: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            q = rem[k + dd] / lead
            quot[k] = q
            if q:
                for i, c in enumerate(divisor.coeffs):
                    rem[k + i] -= q * c
        return Poly(quot), Poly(rem[:dd])

    def exact_div(self, divisor: Poly) -> Poly:
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*t^{k}")
        return " + ".join(terms)


def _as_poly(x) -> Poly:
    return x if isinstance(x, Poly) else Poly.constant(x)


T = Poly([0, 1])
ONE_PLUS_T = Poly([1, 1])


@lru_cache(maxsize=4096)
def falling_product(a: int, b: int) -> tuple[int, ...]:
    """Integer coefficients of ``prod_{r<b} (t + a - r)``, i.e. ``b! binom(t+a, b)``."""
    coeffs = [1]
    for r in range(b):
        shifted = [0] + coeffs
        coeffs = [s + (a - r) * c for s, c in zip(shifted, coeffs + [0])]
    return tuple(coeffs)


@lru_cache(maxsize=4096)
def binomial_poly(a: int, b: int) -> Poly:
    """``binom(t + a, b) = prod_{r<b} (t + a - r) / b!`` as a degree-``b`` polynomial."""
    return Poly(Fraction(c, factorial(b)) for c in falling_product(a, b))


def combine(terms: Iterable[tuple[Fraction, Iterable[int]]], denominator: int = 1) -> Poly:
    """``sum(scalar * poly) / denominator`` for integer-coefficient ``poly``.

    Accumulates over a common denominator in integers, which is much
    faster than summing :class:`Poly` objects with large rational
    coefficients.
    """
    terms = [(Fraction(s), list(p)) for s, p in terms]
    common = 1
    for s, _ in terms:
        common = common * s.denominator // gcd(common, s.denominator)
    acc: list[int] = []
    for s, coeffs in terms:
        w = s.numerator * (common // s.denominator)
        if len(acc) < len(coeffs):
            acc.extend([0] * (len(coeffs) - len(acc)))
        for k, c in enumerate(coeffs):
            acc[k] += w * c
    return Poly(Fraction(c, common * denominator) for c in acc)
