import pytest
from hypothesis import given, strategies as st

from conftest import elem, elements, octonions, rand_element
from octomod.bimodule import (
    center,
    peirce_decompose,
    peirce_reconstruct,
    re_operator,
    re_part,
    re_part_left_only,
    re_part_two_sided,
    real_part_image,
    right_mul,
    right_mul_basis,
    right_mul_formula,
)
from octomod.errors import ConjugateSlotsPresent
from octomod.modules import ModuleElement, ModuleSignature, associative_part, left_mul, module_associator
from octomod.octonion import E, IMAG, ONE, build_epsilon_tables

SIG = ModuleSignature(2, 0)
bielements = elements(SIG)


def test_requires_bimodule():
    x = ModuleElement.of(ModuleSignature(1, 1), [ONE, ONE])
    for f in (re_part, peirce_decompose, lambda y: right_mul(y, E[1]), lambda y: right_mul_basis(y, 1)):
        with pytest.raises(ConjugateSlotsPresent):
            f(x)


def test_right_mul_examples():
    assert right_mul(elem(E[2]), E[1]) == elem(-E[3])
    x = elem(E[2], E[5])
    assert right_mul(x, ONE) == x


@given(bielements, octonions)
def test_right_mul_is_slotwise(x, p):
    assert right_mul(x, p).components == tuple(c * p for c in x.components)


@given(bielements)
def test_matrix_and_formula_agree(x):
    for i in range(8):
        assert right_mul_basis(x, i) == right_mul_formula(x, i)


@given(octonions, st.integers(-3, 3), st.integers(-3, 3))
def test_associative_elements_commute(p, a, b):
    x = elem(a, b)
    assert right_mul(x, p) == left_mul(p, x)


@given(bielements)
def test_commutator_identity(x):
    t = build_epsilon_tables()
    for i in IMAG:
        acc = ModuleElement.zero(SIG)
        for j in IMAG:
            for k in IMAG:
                if t.e3(i, j, k):
                    acc = acc + module_associator(E[j], E[k], x).scale(t.e3(i, j, k))
        assert (left_mul(E[i], x) - right_mul_basis(x, i)).scale(4) == acc


@given(octonions, octonions, bielements)
def test_bimodule_axioms(p, q, x):
    a = module_associator(p, q, x)
    assert a == right_mul(left_mul(q, x), p) - left_mul(q, right_mul(x, p))
    assert a == right_mul(right_mul(x, p), q) - right_mul(x, p * q)


@given(octonions, octonions, bielements)
def test_moufang(p, q, x):
    pxp = left_mul(p, right_mul(x, p))
    assert right_mul(pxp, q) == left_mul(p, right_mul(x, p * q))
    assert left_mul(q, pxp) == right_mul(left_mul(q * p, x), p)


def test_re_part_examples():
    one_plus = ModuleElement.of(ModuleSignature(1, 0), [ONE + E[1].scale(2)])
    assert re_part(one_plus) == ModuleElement.of(ModuleSignature(1, 0), [1])
    a = elem(3, -1)
    assert re_part(a) == a
    assert not re_part(left_mul(E[5], a))


@given(bielements)
def test_re_formulas_and_idempotence(x):
    r = re_part(x)
    assert r == re_part_two_sided(x) == re_part_left_only(x)
    assert re_part(r) == r
    assert r.vector() in associative_part(SIG)


@given(octonions, octonions, bielements)
def test_re_kills_associators_and_commutators(p, q, x):
    assert not re_part(module_associator(p, q, x))
    assert not re_part(left_mul(p, x) - right_mul(x, p))
    a = re_part(left_mul(p * q, x))
    assert a == re_part(right_mul(left_mul(q, x), p)) == re_part(right_mul(x, p * q))


def test_re_operator_cached():
    assert re_operator(SIG) is re_operator(SIG)


def test_peirce_examples():
    parts = peirce_decompose(ModuleElement.of(ModuleSignature(1, 0), [ONE + E[1]]))
    assert [p.components[0] for p in parts] == [ONE, ONE] + [ONE.scale(0)] * 6
    a = elem(2, 5)
    assert peirce_decompose(a) == [a] + [ModuleElement.zero(SIG)] * 7


def test_peirce_reconstruction(rng):
    sig = ModuleSignature(3, 0)
    A = associative_part(sig)
    for _ in range(50):
        x = rand_element(rng, sig)
        parts = peirce_decompose(x)
        assert peirce_reconstruct(parts) == x
        assert all(p.vector() in A for p in parts)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_center_and_real_part_image(n):
    sig = ModuleSignature(n, 0)
    assert center(sig) == associative_part(sig) == real_part_image(sig)
    assert center(sig).dim == n
