"""Agreement suites: closed forms against independent oracles.

Each suite yields ``(n, checked, mismatches)`` per degree.  Brute-force
work is refused above ``max_brute_n`` with :class:`ResourceGuardError`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterator

from .characters import (
    HOOK_COL,
    HOOK_ROW,
    NEAR_HOOK,
    closed_form_values,
    content_poly_sum,
    content_polynomial,
    family_range,
    genchar_oracle,
    genchar_strahov,
    two_part_tables,
)
from .combinatorics import (
    Partition,
    TaggedClass,
    dimension,
    hook,
    near_hook,
    tagged_class_size,
    tagged_classes,
)
from .decompositions import FactorizationQuery, brute_decomposition_table, decomposition_count
from .dipoles import (
    binomial_identity_holds,
    brute_force_p_q_dipoles,
    formula_face_counts,
    genus_counts,
    genus_series_branches,
    symmetry_check,
)
from .poly import T, binomial_poly
from .z1 import (
    GroupAlgebraElement,
    NotCentralizerElement,
    ResourceGuardError,
    Z1Element,
    connection_coefficient,
    gamma_element,
    jm_product,
    structure_constants,
    z1_project,
)

SUITES = ("genchar", "idempotents", "connection", "dipoles", "decompositions", "symmetry", "identities")

# the dense n! x n! idempotent products are kept to desk scale
IDEMPOTENT_MAX_N = 5

Result = Iterator[tuple[int, int, int]]


def _guard(n: int, max_brute_n: int, what: str) -> None:
    if n > max_brute_n:
        raise ResourceGuardError(f"{what} at n={n} exceeds --max-brute-n={max_brute_n}")


def genchar_suite(n_max: int, max_brute_n: int = 8, **_) -> Result:
    """Strahov rule, seminormal oracle and every applicable closed form."""
    for n in range(1, n_max + 1):
        _guard(n, max_brute_n, "seminormal oracle")
        checked = bad = 0
        for rho in tagged_classes(n):
            for cls in tagged_classes(n):
                values = [genchar_strahov(rho, cls), genchar_oracle(rho, cls)]
                values += closed_form_values(rho, cls).values()
                checked += len(values) - 1
                bad += sum(v != values[0] for v in values[1:])
        yield n, checked, bad


def idempotent_suite(n_max: int, max_brute_n: int = 8, **_) -> Result:
    """``Gamma^a Gamma^b = delta_ab Gamma^a``, ``sum Gamma = 1``, each in Z_1(n)."""
    for n in range(1, min(n_max, IDEMPOTENT_MAX_N) + 1):
        _guard(n, max_brute_n, "idempotent expansion")
        gammas = {c: gamma_element(*c) for c in tagged_classes(n)}
        checked = bad = 0
        total = GroupAlgebraElement(n)
        for a, ga in gammas.items():
            total = total + ga
            try:
                z1_project(ga)
            except NotCentralizerElement:
                bad += 1
            checked += 1
            for b, gb in gammas.items():
                expected = ga if a == b else GroupAlgebraElement(n)
                checked += 1
                bad += (ga * gb) != expected
        checked += 1
        bad += total != GroupAlgebraElement.identity(n)
        yield n, checked, bad


def connection_suite(n_max: int, max_brute_n: int = 8, **_) -> Result:
    """Character formula against counted structure constants, every triple."""
    for n in range(1, n_max + 1):
        _guard(n, max_brute_n, "structure constant count")
        table = structure_constants(n)
        classes = tagged_classes(n)
        checked = bad = 0
        for x, a in enumerate(classes):
            for y, b in enumerate(classes):
                for z, c in enumerate(classes):
                    checked += 1
                    try:
                        value = connection_coefficient(a, b, c)
                    except ArithmeticError:
                        bad += 1
                        continue
                    bad += value != table[x, y, z]
        yield n, checked, bad


def dipole_suite(n_max: int, max_brute_n: int = 8, jobs: int = 1, **_) -> Result:
    """Face-class and genus formulas against exhaustive enumeration; totals ``(n-2)!``."""
    for n in range(2, n_max + 1):
        _guard(n, max_brute_n, "dipole scan")
        checked = bad = 0
        for p in range(1, n):
            bf = brute_force_p_q_dipoles(n, p, max_n=max_brute_n, jobs=jobs)
            checked += 2
            bad += formula_face_counts(n, p) != bf.faces
            bad += bf.total != factorial(n - 2)
            if n >= 4 and p >= 2:
                checked += 1
                bad += genus_counts(n, p) != bf.genus
        yield n, checked, bad


def decomposition_suite(n_max: int, max_brute_n: int = 8, **_) -> Result:
    """Full-cycle factorization counts against a scan of S_n, zeros included."""
    for n in range(1, n_max + 1):
        _guard(n, max_brute_n, "factorization scan")
        bf = brute_decomposition_table(n, max_n=max_brute_n)
        checked = bad = 0
        for (a, b), v in bf.items():
            checked += 1
            try:
                bad += decomposition_count(FactorizationQuery(a, b)) != v
            except ArithmeticError:
                bad += 1
        yield n, checked, bad


def symmetry_suite(n_max: int, **_) -> Result:
    for n in range(4, n_max + 1):
        results = symmetry_check(n)
        yield n, len(results), sum(not ok for ok in results.values())


def content_sum_mismatches(n: int) -> tuple[int, int]:
    """Weighted generalized character sums against content polynomials."""
    checked = bad = 0
    classes = tagged_classes(n)
    for rho in classes:
        d_minus = dimension(rho.shape.i_minus(rho.tag))
        for m in range(n + 1):
            total = sum(
                (
                    Fraction(tagged_class_size(c), d_minus) * genchar_strahov(rho, c)
                    for c in classes
                    if len(c.shape) == m
                ),
                Fraction(0),
            )
            checked += 1
            bad += total != content_poly_sum(rho.shape, rho.tag, m)
    return checked, bad


def family_content_mismatches(n: int) -> tuple[int, int]:
    """Content polynomials of hooks and near-hooks as binomial polynomials."""
    checked = bad = 0
    for k in range(n):
        checked += 1
        bad += content_polynomial(hook(n, k)) != binomial_poly(n - k - 1, n) * factorial(n)
    if n >= 4:
        for k in family_range(NEAR_HOOK, n):
            checked += 1
            expected = T * binomial_poly(n - k - 2, n - 1) * factorial(n - 1)
            bad += content_polynomial(near_hook(n, k)) != expected
    return checked, bad


def jm_mismatch(n: int) -> int:
    """``J_2 ... J_{n-1}`` against the class sum ``K_{(n-1,1),1}``."""
    cls = TaggedClass(Partition((n - 1, 1)), 1)
    return int(jm_product(n) != Z1Element.basis(cls).expand())


def case_boundary_mismatches(n: int) -> tuple[int, int]:
    """Both case tables wherever their ranges overlap."""
    checked = bad = 0
    for family in (HOOK_ROW, HOOK_COL, NEAR_HOOK):
        for k in family_range(family, n):
            for p in range(2 if family == NEAR_HOOK else 1, n):
                values = two_part_tables(family, k, p, n)
                if len(values) > 1:
                    checked += 1
                    bad += any(v != values[0] for v in values)
    return checked, bad


def genus_branch_mismatches(n: int) -> tuple[int, int]:
    """Both genus-series branches at ``p = n/2``, where both are stated."""
    checked = bad = 0
    if n >= 4 and n % 2 == 0:
        branches = genus_series_branches(n, n // 2)
        checked += 1
        bad += branches["small"] != branches["large"]
    return checked, bad


def identity_suite(n_max: int, **_) -> Result:
    """JM product, content polynomial sums, the binomial identity and table boundaries.

    The genus-series branch comparison is reported separately by
    :func:`genus_branch_mismatches`.
    """
    for n in range(2, n_max + 1):
        checked, bad = 1, jm_mismatch(n)
        for check in (content_sum_mismatches, family_content_mismatches, case_boundary_mismatches):
            c, b = check(n)
            checked += c
            bad += b
        for k in range(0, n - 1):
            checked += 1
            bad += not binomial_identity_holds(n, k)
        yield n, checked, bad


_RUNNERS = {
    "genchar": genchar_suite,
    "idempotents": idempotent_suite,
    "connection": connection_suite,
    "dipoles": dipole_suite,
    "decompositions": decomposition_suite,
    "symmetry": symmetry_suite,
    "identities": identity_suite,
}


def run_suite(name: str, n_max: int, max_brute_n: int = 8, jobs: int = 1) -> Result:
    return _RUNNERS[name](n_max, max_brute_n=max_brute_n, jobs=jobs)
