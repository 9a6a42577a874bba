"""Exact octonion arithmetic over the rationals.

The basis is ``1, e1, ..., e7``.  Products of imaginary units follow the
oriented Fano triples in :data:`FANO_TRIPLES`: for a triple ``(i, j, k)``
we have ``e_i e_j = e_k`` and cyclic shifts, with the reversed order giving
the negative.

An :class:`Octonion` stores eight integer numerators over one positive
common denominator, kept in lowest terms.  This keeps the hot loops in
machine-sized integer arithmetic while the public surface speaks
:class:`fractions.Fraction`.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import (
    DependentArguments,
    DivisionByZero,
    InternalTableInconsistent,
    NotImaginary,
    RealArgument,
)
from .linalg import RealSubspace, as_fraction

FANO_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))

IMAG = range(1, 8)


def _basis_table() -> tuple[tuple[tuple[int, int], ...], ...]:
    # table[i][j] = (k, sign) with e_i e_j = sign * e_k, index 0 is the unit
    table = [[(0, 0)] * 8 for _ in range(8)]
    for i in range(8):
        table[0][i] = (i, 1)
        table[i][0] = (i, 1)
    for i in IMAG:
        table[i][i] = (0, -1)
    for a, b, c in FANO_TRIPLES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            table[x][y] = (z, 1)
            table[y][x] = (z, -1)
    return tuple(tuple(row) for row in table)


MUL_TABLE = _basis_table()
# flat (i, j, k, sign) product terms used by Octonion.__mul__
_TERMS = tuple((i, j, k, s) for i in range(8) for j in range(8) for k, s in (MUL_TABLE[i][j],))


class Octonion:
    """Immutable octonion ``sum(coeffs[i] * e_i)`` with exact rational coefficients."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, coeffs: Iterable = (0,) * 8):
        fr = [as_fraction(c) for c in coeffs]
        if len(fr) != 8:
            raise ValueError(f"an octonion needs 8 coefficients, got {len(fr)}")
        den = math.lcm(*(f.denominator for f in fr))
        self._set(tuple(f.numerator * (den // f.denominator) for f in fr), den)

    def _set(self, num: tuple[int, ...], den: int) -> None:
        g = math.gcd(den, *num)
        if g != 1:
            num = tuple(n // g for n in num)
            den //= g
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den: int) -> Octonion:
        if den < 0:
            num, den = [-n for n in num], -den
        obj = cls.__new__(cls)
        obj._set(tuple(num), den)
        return obj

    @classmethod
    def basis(cls, i: int) -> Octonion:
        num = [0] * 8
        num[i] = 1
        return cls._raw(num, 1)

    @classmethod
    def real(cls, r) -> Octonion:
        r = as_fraction(r)
        return cls._raw([r.numerator, 0, 0, 0, 0, 0, 0, 0], r.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.num)

    def __getitem__(self, i: int) -> Fraction:
        return Fraction(self.num[i], self.den)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Octonion):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == Octonion.real(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return any(self.num)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*e{i}")
        return "Octonion(" + (" + ".join(terms) or "0") + ")"

    def __add__(self, other) -> Octonion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d1, d2 = self.den, other.den
        return Octonion._raw([a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> Octonion:
        return Octonion._raw([-a for a in self.num], self.den)

    def __sub__(self, other) -> Octonion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Octonion:
        return (-self) + other

    def scale(self, r) -> Octonion:
        r = as_fraction(r)
        return Octonion._raw([a * r.numerator for a in self.num], self.den * r.denominator)

    def __mul__(self, other) -> Octonion:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        a, b = self.num, other.num
        out = [0] * 8
        for i, j, k, s in _TERMS:
            ai = a[i]
            if ai:
                bj = b[j]
                if bj:
                    out[k] += s * ai * bj
        return Octonion._raw(out, self.den * other.den)

    def __rmul__(self, other) -> Octonion:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, r) -> Octonion:
        if isinstance(r, Octonion):
            return self * inverse(r)
        r = as_fraction(r)
        if not r:
            raise DivisionByZero("division of an octonion by zero")
        return self.scale(1 / r)

    def __pow__(self, k: int) -> Octonion:
        if k < 0:
            return inverse(self) ** (-k)
        # powers of a single octonion associate (Artin)
        out = ONE
        for _ in range(k):
            out = out * self
        return out


def _coerce(x) -> Octonion | None:
    if isinstance(x, Octonion):
        return x
    if isinstance(x, (int, Fraction)):
        return Octonion.real(x)
    return None


ZERO = Octonion._raw([0] * 8, 1)
ONE = Octonion.basis(0)
E = tuple(Octonion.basis(i) for i in range(8))  # E[0] is 1


def octonion(*coeffs) -> Octonion:
    """Convenience constructor: ``octonion(1, 2)`` is ``1 + 2 e1``."""
    return Octonion(tuple(coeffs) + (0,) * (8 - len(coeffs)))


def mul(a: Octonion, b: Octonion) -> Octonion:
    return a * b


def conj(a: Octonion) -> Octonion:
    return Octonion._raw([a.num[0]] + [-n for n in a.num[1:]], a.den)


def norm_sq(a: Octonion) -> Fraction:
    return Fraction(sum(n * n for n in a.num), a.den * a.den)


def inverse(a: Octonion) -> Octonion:
    if not a:
        raise DivisionByZero("the zero octonion has no inverse")
    return conj(a).scale(1 / norm_sq(a))


def re(a: Octonion) -> Fraction:
    return a[0]


def im(a: Octonion) -> Octonion:
    return Octonion._raw([0] + list(a.num[1:]), a.den)


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return (x * y) * z - x * (y * z)


def commutator(x: Octonion, y: Octonion) -> Octonion:
    return x * y - y * x


def double_assoc(p: Octonion, q: Octonion, r: Octonion) -> Octonion:
    """``[p, q, r] + r [p, q]``; acts on conjugate-associative elements as ``[p, q, r x]``."""
    return associator(p, q, r) + r * commutator(p, q)


def inner(a: Octonion, b: Octonion) -> Fraction:
    return Fraction(sum(x * y for x, y in zip(a.num, b.num)), a.den * b.den)


# ---------------------------------------------------------------------------
# epsilon tensors


class EpsilonTables(NamedTuple):
    """Structure constants indexed by 1..7 (index 0 is unused and zero)."""

    eps3: tuple
    eps4: tuple

    def e3(self, i: int, j: int, k: int) -> int:
        return self.eps3[i][j][k]

    def e4(self, i: int, j: int, k: int, l: int) -> int:
        return self.eps4[i][j][k][l]


def _is_totally_antisymmetric(get, arity: int) -> tuple[int, ...] | None:
    for idx in itertools.product(IMAG, repeat=arity):
        v = get(*idx)
        if len(set(idx)) < arity and v:
            return idx
        for a in range(arity):
            for b in range(a + 1, arity):
                sw = list(idx)
                sw[a], sw[b] = sw[b], sw[a]
                if get(*sw) != -v:
                    return idx
    return None


@lru_cache(maxsize=None)
def build_epsilon_tables() -> EpsilonTables:
    """Read eps3 off the products and eps4 off the associators, then self-check."""
    eps3 = [[[0] * 8 for _ in range(8)] for _ in range(8)]
    eps4 = [[[[0] * 8 for _ in range(8)] for _ in range(8)] for _ in range(8)]
    for i in IMAG:
        for j in IMAG:
            p = E[i] * E[j]
            for k in IMAG:
                c = p[k]
                if c.denominator != 1 or c not in (-1, 0, 1):
                    raise InternalTableInconsistent(f"e{i}e{j} has coefficient {c} on e{k}")
                eps3[i][j][k] = int(c)
            if p[0] != (-1 if i == j else 0):
                raise InternalTableInconsistent(f"real part of e{i}e{j} is {p[0]}")
    for i, j, k in itertools.product(IMAG, repeat=3):
        a = associator(E[i], E[j], E[k])
        if a[0]:
            raise InternalTableInconsistent(f"[e{i},e{j},e{k}] has a real part")
        for l in IMAG:
            c = a[l] / 2
            if c.denominator != 1 or c not in (-1, 0, 1):
                raise InternalTableInconsistent(f"[e{i},e{j},e{k}] has coefficient {a[l]} on e{l}")
            eps4[i][j][k][l] = int(c)
    tables = EpsilonTables(
        tuple(tuple(tuple(r) for r in m) for m in eps3),
        tuple(tuple(tuple(tuple(r) for r in m) for m in t) for t in eps4),
    )
    bad = _is_totally_antisymmetric(tables.e3, 3)
    if bad:
        raise InternalTableInconsistent(f"eps3 is not totally antisymmetric at {bad}")
    bad = _is_totally_antisymmetric(tables.e4, 4)
    if bad:
        raise InternalTableInconsistent(f"eps4 is not totally antisymmetric at {bad}")
    # reconstruct products and associators from the tensors
    for i, j in itertools.product(IMAG, repeat=2):
        rebuilt = [(-1 if i == j else 0)] + [tables.e3(i, j, k) for k in IMAG]
        if Octonion(rebuilt) != E[i] * E[j]:
            raise InternalTableInconsistent(f"eps3 does not reproduce e{i}e{j}")
    for i, j, k in itertools.product(IMAG, repeat=3):
        rebuilt = [0] + [2 * tables.e4(i, j, k, l) for l in IMAG]
        if Octonion(rebuilt) != associator(E[i], E[j], E[k]):
            raise InternalTableInconsistent(f"eps4 does not reproduce [e{i},e{j},e{k}]")
    return tables


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def verify_contraction_identities(tables: EpsilonTables | None = None) -> dict[str, dict]:
    """Exhaustively check the four epsilon contraction identities.

    Returns ``{"eq3": {"status": "pass"|"fail", "checked": n, "first_failure": idx|None}, ...}``.
    """
    t = tables or build_epsilon_tables()
    e3, e4 = t.eps3, t.eps4
    d = _delta
    I = tuple(IMAG)

    def run(free: int, lhs, rhs):
        count = 0
        for idx in itertools.product(I, repeat=free):
            count += 1
            if lhs(*idx) != rhs(*idx):
                return {"status": "fail", "checked": count, "first_failure": idx}
        return {"status": "pass", "checked": count, "first_failure": None}

    return {
        "eq3": run(
            2,
            lambda k, l: sum(e3[i][j][k] * e3[i][j][l] for i in I for j in I),
            lambda k, l: 6 * d(k, l),
        ),
        "eq4": run(
            3,
            lambda q, k, l: sum(e3[i][j][q] * e4[i][j][k][l] for i in I for j in I),
            lambda q, k, l: 4 * e3[q][k][l],
        ),
        "eq5": run(
            4,
            lambda p, q, j, k: sum(e3[i][p][q] * e3[i][j][k] for i in I),
            lambda p, q, j, k: e4[p][q][j][k] + d(p, j) * d(q, k) - d(p, k) * d(q, j),
        ),
        "eq6": run(
            5,
            lambda p, q, j, k, l: sum(e3[i][p][q] * e4[i][j][k][l] for i in I),
            lambda p, q, j, k, l: (
                d(p, j) * e3[q][k][l] - d(j, q) * e3[p][k][l] + d(p, k) * e3[j][q][l]
                - d(k, q) * e3[j][p][l] + d(p, l) * e3[j][k][q] - d(l, q) * e3[j][k][p]
            ),
        ),
    }


# ---------------------------------------------------------------------------
# imaginary geometry


def is_imaginary(x: Octonion) -> bool:
    return x.num[0] == 0


def cross(u: Octonion, v: Octonion) -> Octonion:
    if not (is_imaginary(u) and is_imaginary(v)):
        raise NotImaginary("cross product is defined on imaginary octonions")
    return im(u * v)


def assoc_subspace(u: Octonion, v: Octonion) -> RealSubspace:
    """``{x in Im O : [u, v, x] = 0}`` as a subspace of R^8 (always 3-dimensional)."""
    if not (is_imaginary(u) and is_imaginary(v)):
        raise DependentArguments("associative subspace needs imaginary arguments")
    if not cross(u, v):
        raise DependentArguments("arguments are real-linearly dependent")
    images = [associator(u, v, E[k]) for k in IMAG]
    rows = []
    for c in range(8):
        row = {k: images[k - 1][c] for k in IMAG if images[k - 1].num[c]}
        rows.append(row)
    # unknowns are indexed 1..7; column 0 is pinned to zero by the extra row
    rows.append({0: Fraction(1)})
    return RealSubspace.kernel_of(rows, 8)


def is_imaginary_unit(x: Octonion) -> bool:
    return x * x == -ONE


def primitive_integer_vector(values) -> tuple[int, ...]:
    fr = [as_fraction(v) for v in values]
    den = math.lcm(*(f.denominator for f in fr))
    ints = [f.numerator * (den // f.denominator) for f in fr]
    g = math.gcd(*ints)
    if g == 0:
        raise RealArgument("zero vector has no direction")
    return tuple(i // g for i in ints)


def imaginary_direction(x: Octonion) -> Octonion:
    """Primitive integer rescaling of ``Im x``; determines the slice ``C_J`` up to sign."""
    if not any(x.num[1:]):
        raise RealArgument("a real octonion has no imaginary direction")
    return Octonion((0,) + primitive_integer_vector(x.num[1:]))


def commutant(x: Octonion) -> RealSubspace:
    """``{p : [p, x] = 0}`` as a real subspace of R^8."""
    images = [commutator(E[k], x) for k in range(8)]
    rows = [{k: images[k][c] for k in range(8) if images[k].num[c]} for c in range(8)]
    return RealSubspace.kernel_of(rows, 8)
