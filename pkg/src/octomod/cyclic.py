"""Cyclic elements and cyclic decompositions in bimodules ``O^n``.

A cyclic decomposition writes ``m = sum r_i x_i`` with the roots ``r_i``
real-independent octonions and the vectors ``x_i`` real-independent
associative elements.  Its length equals ``dim <m> / 8``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bimodule import peirce_decompose, require_bimodule, right_mul_basis
from .errors import NotCyclic, ZeroElement
from .linalg import RealSubspace, dependency, is_independent
from .modules import ModuleElement, left_mul, orbit_span
from .octonion import E, IMAG, Octonion, primitive_integer_vector


@dataclass(frozen=True)
class CyclicDecomposition:
    terms: tuple[tuple[Octonion, ModuleElement], ...]

    @property
    def length(self) -> int:
        return len(self.terms)

    @property
    def roots(self) -> list[Octonion]:
        return [r for r, _ in self.terms]

    @property
    def vectors(self) -> list[ModuleElement]:
        return [x for _, x in self.terms]

    def reconstruct(self) -> ModuleElement:
        it = iter(self.terms)
        r, x = next(it)
        acc = left_mul(r, x)
        for r, x in it:
            acc = acc + left_mul(r, x)
        return acc

    def is_valid(self) -> bool:
        return (
            1 <= self.length <= 8
            and is_independent([r.coeffs for r in self.roots])
            and is_independent([x.vector() for x in self.vectors])
        )


@dataclass(frozen=True)
class SigmaClass:
    """Projective class of a characteristic root: primitive integers, first nonzero entry positive."""

    direction: tuple[int, ...]

    @classmethod
    def of(cls, root: Octonion) -> SigmaClass:
        v = primitive_integer_vector(root.coeffs)
        lead = next(c for c in v if c)
        return cls(tuple(-c for c in v) if lead < 0 else v)

    def octonion(self) -> Octonion:
        return Octonion(self.direction)


def _check(m: ModuleElement) -> None:
    require_bimodule(m.sig)
    if not m:
        raise ZeroElement("the zero element has no cyclic decomposition")


def _merge(terms: list[list], order: str, on: str) -> bool:
    """One elimination pass; returns True if a term was merged away.

    ``on == "vectors"``: a dependent vector ``x_j = sum t_i x_i`` is dropped
    and the roots absorb it as ``r_i += t_i r_j``.  ``on == "roots"``: a
    dependent root ``r_j = sum t_i r_i`` is dropped and ``x_i += t_i x_j``.
    """
    idx = list(range(len(terms)))
    if order == "low":
        idx.reverse()
    seq = [terms[i] for i in idx]
    if on == "vectors":
        dep = dependency([x.vector() for _, x in seq])
    else:
        dep = dependency([r.coeffs for r, _ in seq])
    if dep is None:
        return False
    j, t = dep
    rj, xj = seq[j]
    for i, ti in enumerate(t):
        if ti:
            if on == "vectors":
                seq[i][0] = seq[i][0] + rj.scale(ti)
            else:
                seq[i][1] = seq[i][1] + xj.scale(ti)
    del seq[j]
    if order == "low":
        seq.reverse()
    terms[:] = seq
    return True


def decompose(m: ModuleElement, order: str = "high") -> CyclicDecomposition:
    """Cyclic decomposition starting from the Peirce coordinates of ``m``.

    ``order`` picks which dependent term is eliminated: the highest-index
    one (default) or the lowest-index one.
    """
    _check(m)
    parts = peirce_decompose(m)
    terms = [[E[k], parts[k]] for k in range(8) if parts[k]]
    while True:
        terms[:] = [t for t in terms if t[0] and t[1]]
        _assert_reconstructs(terms, m)
        if _merge(terms, order, "vectors"):
            continue
        if _merge(terms, order, "roots"):
            continue
        break
    out = CyclicDecomposition(tuple((r, x) for r, x in terms))
    assert out.is_valid()
    return out


def _assert_reconstructs(terms, m: ModuleElement) -> None:
    acc = ModuleElement.zero(m.sig)
    for r, x in terms:
        acc = acc + left_mul(r, x)
    assert acc == m, "cyclic decomposition lost track of the element"


def length(m: ModuleElement) -> int:
    return decompose(m).length


def generated_submodule(m: ModuleElement) -> RealSubspace:
    """``<m> = sum_i O x_i`` over the vectors of a cyclic decomposition."""
    dec = decompose(m)
    return RealSubspace.span(
        (left_mul(E[k], x).vector() for x in dec.vectors for k in range(8)), m.sig.dim
    )


def characteristic(m: ModuleElement) -> tuple[Octonion, ModuleElement]:
    """``(p, x)`` with ``m = p x`` and ``x`` associative, for cyclic ``m``."""
    _check(m)
    dec = decompose(m)
    if dec.length != 1:
        raise NotCyclic(f"element has length {dec.length}")
    return dec.terms[0]


def sigma_class(m: ModuleElement) -> SigmaClass:
    return SigmaClass.of(characteristic(m)[0])


def sum_is_cyclic(m1: ModuleElement, m2: ModuleElement) -> bool:
    """Decide cyclicity of ``m1 + m2`` from the characteristic data of the summands."""
    total = m1 + m2
    if not total:
        raise ZeroElement("m1 + m2 is zero")
    _, x1 = characteristic(m1)
    _, x2 = characteristic(m2)
    if not is_independent([x1.vector(), x2.vector()]):
        return True
    return sigma_class(m1) == sigma_class(m2)


def right_orbit_span(m: ModuleElement) -> RealSubspace:
    """``m O = span{m e_k}`` using the derived right action."""
    require_bimodule(m.sig)
    return RealSubspace.span((right_mul_basis(m, k).vector() for k in range(8)), m.sig.dim)


def commutes_with_octonions(m: ModuleElement) -> bool:
    """Whether ``O m == m O`` as real subspaces."""
    _check(m)
    return orbit_span(m) == right_orbit_span(m)


def components_parallel(m: ModuleElement) -> bool:
    """Whether ``m = p x`` with ``x`` real, read off the coordinates of ``O^n``.

    In ``O^n`` the associative elements are the real tuples, so ``m`` lies in
    ``O A(M)`` exactly when its components span at most a line in R^8.
    """
    require_bimodule(m.sig)
    return RealSubspace.span([c.coeffs for c in m.components], 8).dim <= 1
