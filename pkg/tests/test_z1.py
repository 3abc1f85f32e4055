from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nearcentral.characters import genchar_oracle
from nearcentral.combinatorics import (
    Partition,
    Permutation,
    TaggedClass,
    all_permutations,
    class_elements,
    dimension,
    tagged,
    tagged_classes,
)
from nearcentral.z1 import (
    GroupAlgebraElement,
    NotCentralizerElement,
    ResourceGuardError,
    StructureConstantCache,
    Z1Element,
    brute_structure_constant,
    connection_coefficient,
    gamma_element,
    jm_element,
    jm_product,
    structure_constants,
    z1_multiply,
    z1_project,
)


def test_jm_elements():
    assert len(jm_element(4, 1)) == 0
    j3 = jm_element(3, 3)
    assert j3 == GroupAlgebraElement(
        3, {Permutation.transposition(3, 1, 3): 1, Permutation.transposition(3, 2, 3): 1}
    )


@pytest.mark.parametrize("n", range(2, 8))
def test_jm_product_is_class_sum(n):
    assert jm_product(n) == Z1Element.basis(tagged((n - 1, 1), 1)).expand()


def test_jm_elements_commute():
    n = 5
    for a in range(2, n + 1):
        for b in range(a + 1, n + 1):
            ja, jb = jm_element(n, a), jm_element(n, b)
            assert ja * jb == jb * ja


def test_project_examples():
    n = 4
    full = Z1Element.basis(tagged((n,), n))
    assert z1_project(full.expand()) == full
    with pytest.raises(NotCentralizerElement):
        z1_project(GroupAlgebraElement.from_perms(3, [Permutation.transposition(3, 1, 3)]))
    # (1 2) fixes 3, so on its own it is the whole class C_{(2,1),1}
    single = GroupAlgebraElement.from_perms(3, [Permutation.transposition(3, 1, 2)])
    assert z1_project(single) == Z1Element.basis(tagged((2, 1), 1))
    j2j3 = jm_element(4, 2) * jm_element(4, 3)
    assert z1_project(j2j3) == Z1Element.basis(tagged((3, 1), 1))


def test_project_rejects_uneven_coefficients():
    cls = tagged((2, 1), 2)
    members = class_elements(cls)
    a = GroupAlgebraElement(3, {members[0]: 1, members[1]: 2})
    with pytest.raises(NotCentralizerElement):
        z1_project(a)


def test_multiply_examples():
    n = 3
    x = Z1Element(n, {tagged((2, 1), 2): 2, tagged((3,), 3): Fraction(1, 2)})
    assert Z1Element.identity(n) * x == x
    k = Z1Element.basis(tagged((2, 1), 2))
    assert (k * k).coefficient(tagged((3,), 3)) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_structure_constants_match_expansion(n):
    classes = tagged_classes(n)
    for a in classes:
        ea = Z1Element.basis(a).expand()
        for b in classes:
            prod = z1_project(ea * Z1Element.basis(b).expand())
            assert prod == z1_multiply(Z1Element.basis(a), Z1Element.basis(b))


def test_connection_examples():
    for n in range(1, 6):
        ident = tagged([1] * n, 1)
        for c in tagged_classes(n):
            assert connection_coefficient(ident, c, c) == 1
    assert connection_coefficient(tagged((2, 1), 1), tagged((2, 1), 2), tagged((3,), 3)) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_connection_matches_brute_force(n):
    classes = tagged_classes(n)
    table = structure_constants(n)
    for x, a in enumerate(classes):
        for y, b in enumerate(classes):
            for z, c in enumerate(classes):
                value = connection_coefficient(a, b, c)
                assert value.denominator == 1 and value >= 0
                assert value == table[x, y, z]
    assert brute_structure_constant(classes[0], classes[-1], classes[-1]) == table[0, -1, -1]


def test_formula_multiplication_matches_table():
    n = 5
    a = Z1Element(n, {tagged((3, 2), 2): 1, tagged((4, 1), 1): Fraction(1, 3)})
    b = Z1Element(n, {tagged((2, 2, 1), 1): 2})
    assert z1_multiply(a, b, use_formula=True) == z1_multiply(a, b, use_formula=False)


def sparse_z1(n):
    classes = tagged_classes(n)
    coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.dictionaries(st.sampled_from(classes), coeffs, max_size=3).map(
        lambda d: Z1Element(n, d)
    )


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(sparse_z1(n), sparse_z1(n))))
def test_z1_is_commutative(pair):
    a, b = pair
    assert z1_multiply(a, b) == z1_multiply(b, a)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(sparse_z1(n), sparse_z1(n), sparse_z1(n))))
def test_z1_is_associative(triple):
    a, b, c = triple
    assert z1_multiply(z1_multiply(a, b), c) == z1_multiply(a, z1_multiply(b, c))


def test_trivial_idempotent():
    n = 4
    gamma = gamma_element((n,), n)
    expected = GroupAlgebraElement(n, {p: Fraction(1, factorial(n)) for p in all_permutations(n)})
    assert gamma == expected


@pytest.mark.parametrize("n", range(1, 5))
def test_idempotents(n):
    gammas = {c: gamma_element(*c) for c in tagged_classes(n)}
    total = GroupAlgebraElement(n)
    for a, ga in gammas.items():
        total = total + ga
        z1_project(ga)
        for b, gb in gammas.items():
            assert ga * gb == (ga if a == b else GroupAlgebraElement(n))
    assert total == GroupAlgebraElement.identity(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_gamma_coefficients_are_generalized_characters(n):
    for rho in tagged_classes(n):
        gamma = gamma_element(*rho)
        scale = Fraction(factorial(n), dimension(rho.shape))
        for cls in tagged_classes(n):
            for p in class_elements(cls)[:2]:
                assert scale * gamma.coefficient(p) == genchar_oracle(rho, cls)


def test_resource_guards():
    with pytest.raises(ResourceGuardError):
        structure_constants(9)
    big = Z1Element.basis(tagged((7,), 7))
    with pytest.raises(ResourceGuardError):
        gamma_element((7,), 7)
    a = big.expand()
    with pytest.raises(ResourceGuardError):
        a * a


def test_cache_roundtrip(tmp_path):
    cache = StructureConstantCache(tmp_path)
    first = structure_constants(4, cache=cache)
    path = cache.path(4)
    text = path.read_text()
    # second load comes from disk and reserializes byte-identically
    second = structure_constants(4, cache=cache)
    assert (first == second).all()
    assert StructureConstantCache.serialize(4, second) == text
    assert not list(tmp_path.glob("*.tmp"))


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("NEARCENTRAL_CACHE_DIR", str(tmp_path))
    structure_constants(3)
    assert (tmp_path / "z1_structure_n3.json").exists()


def test_z1_element_validation():
    with pytest.raises(ValueError):
        Z1Element(3, {(Partition((2, 2)), 2): 1})
    with pytest.raises(ValueError):
        Z1Element(3, {TaggedClass(Partition((2, 1)), 3): 1})
