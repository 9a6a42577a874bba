"""Operations that need a two-sided action, available on signatures ``(n, 0)``.

The right action is never supplied by the caller: it is recovered from the
left action through

    x e_i = e_i x - 1/4 * sum_{j,k} eps_{ijk} [e_j, e_k, x].
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ConjugateSlotsPresent, InternalFormulaMismatch
from .linalg import RealSubspace
from .modules import LinearOperator, ModuleElement, ModuleSignature, left_mul, module_associator, stacked_kernel
from .octonion import E, IMAG, Octonion, build_epsilon_tables


def require_bimodule(sig: ModuleSignature) -> None:
    if sig.m:
        raise ConjugateSlotsPresent(f"signature {sig} has conjugate slots and carries no bimodule structure")


@lru_cache(maxsize=None)
def _eps_pairs() -> tuple[tuple[tuple[int, int, int], ...], ...]:
    # for each i, the (j, k, eps_ijk) with nonzero eps
    t = build_epsilon_tables()
    return tuple(
        tuple((j, k, t.e3(i, j, k)) for j in IMAG for k in IMAG if t.e3(i, j, k)) if i else ()
        for i in range(8)
    )


def _assoc_sum(i: int, x: ModuleElement) -> ModuleElement:
    """``sum_{j,k} eps_{ijk} [e_j, e_k, x]``."""
    acc = ModuleElement.zero(x.sig)
    for j, k, s in _eps_pairs()[i]:
        a = module_associator(E[j], E[k], x)
        acc = acc + a if s > 0 else acc - a
    return acc


def right_mul_formula(x: ModuleElement, i: int) -> ModuleElement:
    """``x e_i`` evaluated directly from the left action."""
    if i == 0:
        return x
    return left_mul(E[i], x) - _assoc_sum(i, x).scale(Fraction(1, 4))


@lru_cache(maxsize=None)
def right_operator(sig: ModuleSignature, i: int) -> LinearOperator:
    """Matrix of ``x -> x e_i``, tabulated once per signature."""
    return LinearOperator.of(lambda x: right_mul_formula(x, i), sig)


def right_mul_basis(x: ModuleElement, i: int) -> ModuleElement:
    require_bimodule(x.sig)
    if i == 0:
        return x
    return right_operator(x.sig, i)(x)


def right_mul(x: ModuleElement, p: Octonion) -> ModuleElement:
    require_bimodule(x.sig)
    acc = ModuleElement.zero(x.sig)
    for k, c in enumerate(p.coeffs):
        if c:
            acc = acc + right_mul_basis(x, k).scale(c)
    return acc


def re_part_two_sided(x: ModuleElement) -> ModuleElement:
    """``5/12 x - 1/12 sum_i e_i x e_i`` using the derived right action."""
    acc = ModuleElement.zero(x.sig)
    for i in IMAG:
        acc = acc + right_mul_formula(left_mul(E[i], x), i)
    return x.scale(Fraction(5, 12)) - acc.scale(Fraction(1, 12))


def re_part_left_only(x: ModuleElement) -> ModuleElement:
    """``x + 1/48 sum_{ijk} eps_{ijk} e_i [e_j, e_k, x]``."""
    acc = ModuleElement.zero(x.sig)
    for i in IMAG:
        acc = acc + left_mul(E[i], _assoc_sum(i, x))
    return x + acc.scale(Fraction(1, 48))


@lru_cache(maxsize=None)
def re_operator(sig: ModuleSignature) -> LinearOperator:
    """Matrix of ``Re`` on ``sig``.

    Both formulas are tabulated on the whole basis and must agree exactly,
    so they agree on every element.
    """
    require_bimodule(sig)
    a = LinearOperator.of(re_part_two_sided, sig)
    b = LinearOperator.of(re_part_left_only, sig)
    if a != b:
        raise InternalFormulaMismatch(f"real-part formulas disagree on {sig}")
    return a


def re_part(x: ModuleElement) -> ModuleElement:
    require_bimodule(x.sig)
    return re_operator(x.sig)(x)


def peirce_decompose(x: ModuleElement) -> list[ModuleElement]:
    """Coordinates ``(x_0, ..., x_7)`` in ``A(M)`` with ``x = x_0 + sum e_i x_i``."""
    require_bimodule(x.sig)
    return [re_part(x)] + [-re_part(left_mul(E[i], x)) for i in IMAG]


def peirce_reconstruct(parts: list[ModuleElement]) -> ModuleElement:
    acc = parts[0]
    for i in IMAG:
        acc = acc + left_mul(E[i], parts[i])
    return acc


@lru_cache(maxsize=None)
def center(sig: ModuleSignature) -> RealSubspace:
    """``Z(M) = {x : e_i x = x e_i, i = 1..7}``."""
    require_bimodule(sig)
    return stacked_kernel(
        [(lambda x, i=i: left_mul(E[i], x) - right_mul_basis(x, i)) for i in IMAG], sig
    )


@lru_cache(maxsize=None)
def real_part_image(sig: ModuleSignature) -> RealSubspace:
    """``Re M`` as the span of the images of the basis."""
    require_bimodule(sig)
    return RealSubspace.span(
        (re_part(ModuleElement.basis(sig, b)).vector() for b in range(sig.dim)), sig.dim
    )
