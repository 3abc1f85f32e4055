"""Acceptance gate: every criterion at its stated size, exact arithmetic.

Each check returns ``(ok, detail)``; one pass/fail line per criterion is
printed in the pytest terminal summary (or directly when this file is
run as a script).
"""

from __future__ import annotations

import time
from collections import Counter
from math import factorial

import pytest

from nearcentral.characters import (
    HOOK_COL,
    HOOK_ROW,
    NEAR_HOOK,
    closed_form_values,
    family_of,
    genchar_oracle,
    genchar_strahov,
)
from nearcentral.combinatorics import tagged_classes
from nearcentral.decompositions import FactorizationQuery, brute_decomposition_table, decomposition_count
from nearcentral.dipoles import (
    brute_force_p_q_dipoles,
    dipole_count_formula,
    face_asymmetry_witness,
    formula_face_counts,
    genus_counts,
    genus_series,
    symmetry_check,
)
from nearcentral.verify import (
    binomial_identity_holds,
    case_boundary_mismatches,
    connection_suite,
    content_sum_mismatches,
    family_content_mismatches,
    genus_branch_mismatches,
    idempotent_suite,
    jm_mismatch,
)

RESULTS: list[str] = []


def criterion_1():
    """Generalized characters: Strahov rule, oracle and every applicable closed form, n <= 6."""
    bad, routes = 0, Counter()
    for n in range(1, 7):
        for rho in tagged_classes(n):
            fam = family_of(rho)
            for cls in tagged_classes(n):
                ref = genchar_strahov(rho, cls)
                bad += genchar_oracle(rho, cls) != ref
                for route, value in closed_form_values(rho, cls).items():
                    if route.startswith("two-part") and fam:
                        route = f"{route}:{fam[0]}"
                    routes[route] += 1
                    bad += value != ref
    needed = {"at-(n-1,1)", "at-full-cycle", "hook-series"}
    needed |= {f"two-part-1:{f}" for f in (HOOK_ROW, HOOK_COL, NEAR_HOOK)}
    missing = needed - set(routes)
    detail = f"{sum(routes.values())} closed-form values, {bad} mismatches"
    if missing:
        detail += f", routes never exercised: {sorted(missing)}"
    return bad == 0 and not missing, detail


def criterion_2():
    """Orthogonal idempotents summing to the identity, n <= 5."""
    rows = list(idempotent_suite(5))
    bad = sum(r[2] for r in rows)
    return bad == 0 and rows[-1][0] == 5, f"{sum(r[1] for r in rows)} checks, {bad} mismatches"


def criterion_3():
    """Connection coefficients equal counted structure constants, every triple, n <= 6."""
    rows = list(connection_suite(6, max_brute_n=6))
    bad = sum(r[2] for r in rows)
    return bad == 0, f"{sum(r[1] for r in rows)} triples, {bad} mismatches or non-integral values"


def criterion_4():
    """Dipole counts per face class (1 <= p) and per genus (2 <= p), totals (n-2)!, n in 4..8."""
    bad = checked = 0
    for n in range(4, 9):
        for p in range(1, n):
            bf = brute_force_p_q_dipoles(n, p)
            faces = formula_face_counts(n, p)
            checked += 3
            bad += faces != bf.faces
            bad += bf.total != factorial(n - 2)
            # classes absent from the scan must get a formula value of zero
            bad += any(dipole_count_formula(c.shape, c.tag, p) != bf.faces.get(c, 0) for c in tagged_classes(n))
            if p >= 2:
                checked += 1
                bad += genus_counts(n, p) != bf.genus
    return bad == 0, f"{checked} comparisons, {bad} mismatches"


def criterion_5():
    """D_{n,p} = D_{n,n+1-p} for n <= 40, plus a face-class asymmetry witness."""
    bad = sum(not ok for n in range(4, 41) for ok in symmetry_check(n).values())
    witness = face_asymmetry_witness(7)
    ok = bad == 0 and witness is not None and witness[3] != witness[4]
    n, p, cls, a, b = witness
    detail = f"{bad} asymmetric pairs; witness n={n}, p={p}, class {cls}: {a} vs {b} at p'={n + 1 - p}"
    return ok, detail


def criterion_6():
    """Full-cycle factorization counts equal brute force for all pairs, n <= 7, zeros included."""
    bad = zeros = checked = 0
    for n in range(1, 8):
        for (a, b), v in brute_decomposition_table(n).items():
            checked += 1
            zeros += v == 0
            try:
                bad += decomposition_count(FactorizationQuery(a, b)) != v
            except ArithmeticError:
                bad += 1
    return bad == 0, f"{checked} pairs ({zeros} structural zeros), {bad} mismatches"


def criterion_7_jm():
    """J_2 ... J_{n-1} = K_{(n-1,1),1}, n <= 7."""
    bad = sum(jm_mismatch(n) for n in range(2, 8))
    return bad == 0, f"{bad} mismatches for n = 2..7"


def criterion_7_content():
    """Content-polynomial identities and face sums against the genus series, n <= 6."""
    checked = bad = 0
    for n in range(1, 7):
        for check in (content_sum_mismatches, family_content_mismatches):
            c, b = check(n)
            checked += c
            bad += b
    for n in range(4, 7):
        for p in range(2, n):
            series = genus_series(n, p)
            for g in range(0, n // 2 + 1):
                m = n - 2 * g
                if m < 1:
                    continue
                total = sum(dipole_count_formula(c.shape, c.tag, p) for c in tagged_classes(n) if len(c.shape) == m)
                checked += 1
                bad += total != factorial(n - 2) * series[m]
    return bad == 0, f"{checked} identities, {bad} mismatches"


def criterion_7_binomial():
    """t binom(t+n-k-2, n-1) = n binom(t+n-k-1, n) - (n-k-1) binom(t+n-k-2, n-1), n <= 12."""
    bad = sum(not binomial_identity_holds(n, k) for n in range(2, 13) for k in range(0, n - 1))
    return bad == 0, f"{bad} failures"


def criterion_7_branches():
    """Both branches of every two-branch formula agree where their ranges meet."""
    table_checked = table_bad = 0
    for n in range(3, 13):
        c, b = case_boundary_mismatches(n)
        table_checked += c
        table_bad += b
    series_bad = []
    for n in range(4, 41, 2):
        c, b = genus_branch_mismatches(n)
        if b:
            series_bad.append(n)
    ok = table_bad == 0 and not series_bad
    detail = f"case tables: {table_checked} overlaps, {table_bad} disagree; "
    detail += f"genus series at p=n/2: {len(series_bad)} of 19 even n disagree"
    if series_bad:
        detail += f" (first n={series_bad[0]})"
    return ok, detail


CRITERIA = [
    ("1", criterion_1),
    ("2", criterion_2),
    ("3", criterion_3),
    ("4", criterion_4),
    ("5", criterion_5),
    ("6", criterion_6),
    ("7a", criterion_7_jm),
    ("7b", criterion_7_content),
    ("7c", criterion_7_binomial),
    ("7d", criterion_7_branches),
]


def _run(label, check):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    summary = check.__doc__.split("\n")[0].strip()
    line = f"criterion {label:<3} {'PASS' if ok else 'FAIL'}  {summary} [{detail}; {elapsed:.1f}s]"
    RESULTS.append(line)
    print(line)
    return ok, detail


@pytest.mark.parametrize("label,check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(label, check):
    ok, detail = _run(label, check)
    assert ok, detail


if __name__ == "__main__":
    outcomes = [_run(label, check)[0] for label, check in CRITERIA]
    raise SystemExit(0 if all(outcomes) else 1)
