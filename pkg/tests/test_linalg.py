from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import rank
from octomod.linalg import (
    IntEchelon,
    RealSubspace,
    SparseEchelon,
    dependency,
    integer_row,
    is_independent,
    rref,
    solve,
    sparse,
)

F = Fraction
vectors = st.lists(
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=5, max_size=5),
    min_size=0, max_size=6,
)


@given(vectors)
def test_span_dim_matches_oracle(vs):
    assert RealSubspace.span(vs, 5).dim == rank(vs)


@given(vectors)
def test_rref_is_canonical(vs):
    rows, pivots = rref(vs, 5)
    again, _ = rref(list(reversed(vs)) + [[2 * x for x in v] for v in vs], 5)
    assert rows == again
    for r, p in zip(rows, pivots):
        assert r[p] == 1 and all(not x for x in r[:p])
        assert all(not other[p] for other in rows if other is not r)


@given(vectors)
def test_kernel_orthogonal_to_rows(vs):
    k = RealSubspace.kernel_of(vs, 5)
    assert k.dim == 5 - rank(vs)
    for b in k.basis:
        for v in vs:
            assert sum(F(x) * y for x, y in zip(v, b)) == 0


@given(vectors, vectors)
def test_sum_and_intersection(a, b):
    A, B = RealSubspace.span(a, 5), RealSubspace.span(b, 5)
    S, I = A + B, A.intersection(B)
    assert S.dim + I.dim == A.dim + B.dim
    assert I.issubspace(A) and I.issubspace(B)
    assert A.issubspace(S) and B.issubspace(S)


def test_subspace_equality_ignores_generators():
    a = RealSubspace.span([[1, 2, 0], [0, 1, 1]], 3)
    b = RealSubspace.span([[1, 3, 1], [2, 4, 0], [1, 1, -1]], 3)
    assert a == b
    assert [1, 0, -2] in a
    assert [0, 0, 1] not in a
    with pytest.raises(ValueError):
        a.contains([1, 2])


def test_full_and_zero():
    assert RealSubspace.full(4).dim == 4
    assert RealSubspace.zero(4).dim == 0
    assert RealSubspace.zero(4).issubspace(RealSubspace.full(4))


def test_sparse_echelon_solves_systems():
    ech = SparseEchelon(3)
    ech.add({0: F(1), 1: F(1)}, 3)
    ech.add({1: F(1), 2: F(-1)}, 1)
    assert ech.consistent and ech.rank == 2
    part = ech.particular()
    x = [part.get(i, 0) for i in range(3)]
    assert x[0] + x[1] == 3 and x[1] - x[2] == 1
    (k,) = ech.kernel()
    assert k[0] + k.get(1, 0) == 0
    ech.add({0: F(1), 2: F(1)}, 5)
    assert not ech.consistent


def test_int_echelon_matches_fraction_echelon():
    vs = [[F(1, 2), 3, 0, 1], [0, F(2, 3), 1, 0], [F(1, 2), F(11, 3), 1, 1]]
    a, b = IntEchelon(4), SparseEchelon(4)
    for v in vs:
        assert a.add(integer_row(v)) == b.add(sparse(v))
    assert a.rank == b.rank == 2


def test_solve_and_dependency():
    cols = [[1, 0, 0], [0, 1, 0]]
    assert solve(cols, [2, 3, 0]) == [2, 3]
    assert solve(cols, [0, 0, 1]) is None
    assert dependency([[1, 0], [0, 1], [2, 3]]) == (2, [2, 3])
    assert dependency([[1, 0], [0, 1]]) is None
    assert dependency([[0, 0]]) == (0, [])
    assert is_independent([[1, 0], [0, 1]])
    assert not is_independent([[1, 1], [2, 2]])
