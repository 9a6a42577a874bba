import random

import pytest
from hypothesis import given, strategies as st

from conftest import elem, elements, octonions, rand_octonion
from octomod.cyclic import (
    CyclicDecomposition,
    SigmaClass,
    characteristic,
    commutes_with_octonions,
    components_parallel,
    decompose,
    generated_submodule,
    length,
    right_orbit_span,
    sigma_class,
    sum_is_cyclic,
)
from octomod.errors import ConjugateSlotsPresent, NotCyclic, ZeroElement
from octomod.linalg import RealSubspace
from octomod.modules import ModuleElement, ModuleSignature, associative_part, is_cyclic, left_mul, orbit_span, submodule_closure
from octomod.octonion import E, ONE, ZERO, Octonion


def test_example_two_terms():
    m = elem(E[1], E[2], E[1] + E[2])
    dec = decompose(m)
    assert dec.terms == ((E[1], elem(1, 0, 1)), (E[2], elem(0, 1, 1)))
    assert length(m) == 2
    assert generated_submodule(m).dim == 16


def test_example_three_terms():
    m = elem(E[1], E[2], E[3])
    dec = decompose(m)
    assert dec.roots == [E[1], E[2], E[3]]
    assert dec.vectors == [elem(1, 0, 0), elem(0, 1, 0), elem(0, 0, 1)]
    assert generated_submodule(m) == RealSubspace.full(24)


def test_example_mixed_real_parts():
    m = elem(ONE, ONE + E[1], E[1])
    dec = decompose(m)
    assert dec.terms == ((ONE, elem(1, 1, 0)), (E[1], elem(0, 1, 1)))
    assert dec.reconstruct() == m


@pytest.mark.parametrize("order", ["high", "low"])
def test_orders_agree_on_length(order, rng):
    sig = ModuleSignature(3, 0)
    for _ in range(20):
        m = left_mul(rand_octonion(rng), elem(1, 2, 0)) + left_mul(rand_octonion(rng), elem(0, 1, 1))
        if not m:
            continue
        dec = decompose(m, order=order)
        assert dec.is_valid() and dec.reconstruct() == m
        assert dec.length == submodule_closure(m).dim // 8


def test_rejections():
    with pytest.raises(ZeroElement):
        decompose(elem(ZERO, ZERO))
    with pytest.raises(ConjugateSlotsPresent):
        decompose(ModuleElement.of(ModuleSignature(1, 1), [ONE, ONE]))
    with pytest.raises(NotCyclic):
        characteristic(elem(E[1], E[2]))
    with pytest.raises(NotCyclic):
        sigma_class(elem(E[1], E[2]))


def test_associative_element_is_cyclic():
    a = elem(2, -1, 3)
    assert length(a) == 1
    assert generated_submodule(a).dim == 8
    assert commutes_with_octonions(a)


def test_characteristic_and_sigma():
    m = left_mul(Octonion([3, 0, 1, 0, 0, 0, 0, 0]), elem(1, 1))
    p, x = characteristic(m)
    assert left_mul(p, x) == m and x.vector() in associative_part(m.sig)
    assert sigma_class(m) == SigmaClass((3, 0, 1, 0, 0, 0, 0, 0))
    assert SigmaClass.of(Octonion([0, -2, 4, 0, 0, 0, 0, 0])).direction == (0, 1, -2, 0, 0, 0, 0, 0)
    assert sigma_class(left_mul(Octonion([-6, 0, -2, 0, 0, 0, 0, 0]), elem(1, 1))) == sigma_class(m)


def test_sum_is_cyclic_examples():
    m1 = left_mul(E[1], elem(1, 0))
    assert not sum_is_cyclic(m1, left_mul(E[2], elem(0, 1)))
    assert generated_submodule(m1 + left_mul(E[2], elem(0, 1))).dim == 16
    assert sum_is_cyclic(m1, left_mul(E[2], elem(2, 0)))
    assert sum_is_cyclic(m1, left_mul(E[1].scale(3), elem(0, 1)))
    with pytest.raises(ZeroElement):
        sum_is_cyclic(m1, -m1)


def test_sum_is_cyclic_agrees_with_closure():
    rng = random.Random(7)
    reals = [elem(1, 0), elem(0, 1), elem(1, 1), elem(2, -1)]
    roots = [E[1], E[2], ONE + E[1], E[1].scale(2)]
    for _ in range(200):
        m1 = left_mul(rng.choice(roots), rng.choice(reals))
        m2 = left_mul(rng.choice(roots), rng.choice(reals))
        if not (m1 + m2):
            continue
        assert sum_is_cyclic(m1, m2) == is_cyclic(m1 + m2)


def test_commutes_examples():
    assert commutes_with_octonions(left_mul(E[3], elem(1, 1, 1)))
    assert not commutes_with_octonions(elem(E[1], E[2]))
    assert orbit_span(elem(E[1], E[2])) != right_orbit_span(elem(E[1], E[2]))


sig2 = ModuleSignature(2, 0)


@given(elements(sig2).filter(bool))
def test_decomposition_properties(m):
    dec = decompose(m)
    assert dec.is_valid() and dec.reconstruct() == m
    gen = generated_submodule(m)
    assert gen == submodule_closure(m)
    assert gen.dim == 8 * dec.length
    assert commutes_with_octonions(m) == is_cyclic(m) == (dec.length == 1)
    assert components_parallel(m) == is_cyclic(m)


@given(octonions.filter(bool), st.integers(-3, 3), st.integers(-3, 3))
def test_cyclic_by_construction(p, a, b):
    if a or b:
        m = left_mul(p, elem(a, b))
        assert is_cyclic(m) and components_parallel(m) and length(m) == 1


def test_serial_shape():
    dec = decompose(elem(E[1], E[2]))
    assert isinstance(dec, CyclicDecomposition) and dec.length == 2
