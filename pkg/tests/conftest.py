import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from octomod import ModuleElement, ModuleSignature, Octonion

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=5)
octonions = st.lists(small_fractions, min_size=8, max_size=8).map(Octonion)
nonzero_octonions = octonions.filter(bool)


def elements(sig):
    return st.lists(octonions, min_size=sig.slots, max_size=sig.slots).map(
        lambda cs: ModuleElement(sig, tuple(cs))
    )


def rand_fraction(rng, span=5, den=4):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_octonion(rng, **kw):
    return Octonion([rand_fraction(rng, **kw) for _ in range(8)])


def rand_element(rng, sig, **kw):
    return ModuleElement(sig, tuple(rand_octonion(rng, **kw) for _ in range(sig.slots)))


def elem(*comps):
    return ModuleElement.of(ModuleSignature(len(comps), 0), comps)


@pytest.fixture
def rng():
    return random.Random(20240501)
