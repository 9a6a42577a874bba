"""Exact rational linear algebra: sparse incremental elimination and subspaces.

Rows are sparse ``dict`` maps ``column -> Fraction``.  Everything is exact;
there are no tolerances anywhere in this module.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def sparse(vector: Sequence) -> dict[int, Fraction]:
    return {i: as_fraction(v) for i, v in enumerate(vector) if v}


def dense(row: Mapping[int, Fraction], n: int) -> Vector:
    out = [ZERO] * n
    for k, v in row.items():
        if k < n:
            out[k] = v
    return tuple(out)


class SparseEchelon:
    """Incrementally maintained reduced echelon form of a sparse linear system.

    Each stored row is keyed by its pivot column, has pivot coefficient 1 and
    zeros in every other pivot column.  Column ``nvars`` holds the right-hand
    side when equations ``sum(a_c x_c) = b`` are added with ``rhs``.
    """

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.rhs = nvars
        self.rows: dict[int, dict[int, Fraction]] = {}
        # free column -> pivots of rows where that column is nonzero
        self._occ: dict[int, set[int]] = {}
        self.consistent = True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Mapping[int, Fraction]) -> dict[int, Fraction]:
        row = {k: v for k, v in row.items() if v}
        for c in [c for c in row if c in self.rows]:
            f = row.get(c)
            if not f:
                continue
            for k, v in self.rows[c].items():
                nv = row.get(k, ZERO) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: Mapping[int, Fraction], rhs=0) -> bool:
        """Add one equation; return True if it increased the rank."""
        row = dict(row)
        if rhs:
            row[self.rhs] = as_fraction(rhs)
        row = self.reduce(row)
        keys = [k for k in row if k != self.rhs]
        if not keys:
            if row.get(self.rhs):
                self.consistent = False
            return False
        p = min(keys)
        inv = 1 / row[p]
        if inv != 1:
            row = {k: v * inv for k, v in row.items()}
        for q in self._occ.pop(p, ()):
            qrow = self.rows[q]
            f = qrow.pop(p)
            for k, v in row.items():
                if k == p:
                    continue
                nv = qrow.get(k, ZERO) - f * v
                if nv:
                    if k not in qrow and k != self.rhs:
                        self._occ.setdefault(k, set()).add(q)
                    qrow[k] = nv
                elif k in qrow:
                    del qrow[k]
                    if k != self.rhs:
                        self._occ[k].discard(q)
        self.rows[p] = row
        for k in row:
            if k != p and k != self.rhs:
                self._occ.setdefault(k, set()).add(p)
        return True

    def contains(self, row: Mapping[int, Fraction]) -> bool:
        """Whether ``row`` lies in the span of the stored rows (rhs ignored)."""
        return not self.reduce(row)

    def free_columns(self) -> list[int]:
        return [c for c in range(self.nvars) if c not in self.rows]

    def particular(self) -> dict[int, Fraction]:
        """Solution with all free variables zero (sparse); requires consistency."""
        return {p: r[self.rhs] for p, r in self.rows.items() if r.get(self.rhs)}

    def kernel(self) -> list[dict[int, Fraction]]:
        """Sparse basis of the homogeneous solution space, one vector per free column."""
        basis = {f: {f: ONE} for f in self.free_columns()}
        for p, r in self.rows.items():
            for k, v in r.items():
                if k != p and k != self.rhs:
                    basis[k][p] = -v
        return [basis[f] for f in sorted(basis)]


class IntEchelon:
    """Fraction-free reduced echelon form for span computations.

    Rows are primitive integer vectors with a positive pivot at their lowest
    nonzero column and zeros in every other row's pivot column, so sorting
    by pivot and dividing by the pivot gives the canonical RREF.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = {}
        self._occ: dict[int, set[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Mapping[int, int]) -> dict[int, int]:
        row = {k: v for k, v in row.items() if v}
        for c in [c for c in row if c in self.rows]:
            b = row.get(c)
            if not b:
                continue
            prow = self.rows[c]
            a = prow[c]
            if a != 1:
                for k in row:
                    row[k] *= a
            for k, v in prow.items():
                nv = row.get(k, 0) - b * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return _primitive(row)

    def add(self, row: Mapping[int, int]) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        if row[p] < 0:
            row = {k: -v for k, v in row.items()}
        a = row[p]
        for q in self._occ.pop(p, ()):
            qrow = self.rows[q]
            b = qrow.pop(p)
            if a != 1:
                for k in qrow:
                    qrow[k] *= a
            for k, v in row.items():
                if k == p:
                    continue
                nv = qrow.get(k, 0) - b * v
                if nv:
                    if k not in qrow:
                        self._occ.setdefault(k, set()).add(q)
                    qrow[k] = nv
                elif k in qrow:
                    del qrow[k]
                    self._occ[k].discard(q)
            g = math.gcd(*qrow.values())
            if g > 1:
                for k in qrow:
                    qrow[k] //= g
        self.rows[p] = row
        for k in row:
            if k != p:
                self._occ.setdefault(k, set()).add(p)
        return True

    def contains(self, row: Mapping[int, int]) -> bool:
        return not self.reduce(row)

    def canonical(self) -> tuple[Vector, ...]:
        out = []
        for p in sorted(self.rows):
            r = self.rows[p]
            a = r[p]
            v = [ZERO] * self.ncols
            for k, x in r.items():
                v[k] = Fraction(x, a)
            out.append(tuple(v))
        return tuple(out)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    if row:
        g = math.gcd(*row.values())
        if g > 1:
            return {k: v // g for k, v in row.items()}
    return row


def integer_row(vector: Sequence) -> dict[int, int]:
    """Sparse integer multiple of a rational vector (same span)."""
    fr = [(i, as_fraction(v)) for i, v in enumerate(vector) if v]
    if not fr:
        return {}
    den = math.lcm(*(f.denominator for _, f in fr))
    return {i: f.numerator * (den // f.denominator) for i, f in fr}


def integer_row_sparse(row: Mapping[int, Fraction]) -> dict[int, int]:
    if not row:
        return {}
    den = math.lcm(*(Fraction(v).denominator for v in row.values()))
    return {i: Fraction(v).numerator * (den // Fraction(v).denominator) for i, v in row.items() if v}


def rref(vectors: Iterable[Sequence], ncols: int) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Canonical reduced row echelon form (lowest-index pivoting), zero rows dropped."""
    ech = IntEchelon(ncols)
    for v in vectors:
        ech.add(integer_row(v))
    return ech.canonical(), tuple(sorted(ech.rows))


@dataclass(frozen=True)
class RealSubspace:
    """A real subspace of Q^ambient_dim held by its canonical RREF basis.

    Equality of two instances is equality of subspaces.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> RealSubspace:
        ech = IntEchelon(ambient_dim)
        for v in vectors:
            ech.add(integer_row(v))
        return cls(ambient_dim, ech.canonical())

    @classmethod
    def from_echelon(cls, ech: IntEchelon) -> RealSubspace:
        return cls(ech.ncols, ech.canonical())

    @classmethod
    def zero(cls, ambient_dim: int) -> RealSubspace:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> RealSubspace:
        return cls.span(
            (tuple(ONE if i == j else ZERO for j in range(ambient_dim)) for i in range(ambient_dim)),
            ambient_dim,
        )

    @classmethod
    def kernel_of(cls, rows: Iterable[Mapping[int, Fraction] | Sequence], ncols: int) -> RealSubspace:
        """Null space of the matrix whose rows are given (sparse dicts or dense sequences)."""
        ech = SparseEchelon(ncols)
        for row in rows:
            ech.add(row if isinstance(row, Mapping) else sparse(row))
        out = IntEchelon(ncols)
        for vec in ech.kernel():
            out.add(integer_row_sparse(vec))
        return cls(ncols, out.canonical())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _echelon(self) -> IntEchelon:
        ech = IntEchelon(self.ambient_dim)
        for b in self.basis:
            ech.add(integer_row(b))
        return ech

    def contains(self, vector: Sequence) -> bool:
        if len(vector) != self.ambient_dim:
            raise ValueError("vector does not live in the ambient space")
        return self._echelon.contains(integer_row(vector))

    def __contains__(self, vector) -> bool:
        return self.contains(vector)

    def issubspace(self, other: RealSubspace) -> bool:
        ech = other._echelon
        return all(ech.contains(integer_row(b)) for b in self.basis)

    def __add__(self, other: RealSubspace) -> RealSubspace:
        return RealSubspace.span(self.basis + other.basis, self.ambient_dim)

    def intersection(self, other: RealSubspace) -> RealSubspace:
        # x = sum a_i u_i = sum b_j w_j  <=>  (a, b) in ker [U^T | -W^T]
        k1, k2 = self.dim, other.dim
        if not k1 or not k2:
            return RealSubspace.zero(self.ambient_dim)
        rows = []
        for c in range(self.ambient_dim):
            row = {}
            for i, u in enumerate(self.basis):
                if u[c]:
                    row[i] = u[c]
            for j, w in enumerate(other.basis):
                if w[c]:
                    row[k1 + j] = -w[c]
            rows.append(row)
        ech = SparseEchelon(k1 + k2)
        for row in rows:
            ech.add(row)
        vecs = []
        for sol in ech.kernel():
            v = [ZERO] * self.ambient_dim
            for i, a in sol.items():
                if i < k1:
                    for c, x in enumerate(self.basis[i]):
                        if x:
                            v[c] += a * x
            vecs.append(v)
        return RealSubspace.span(vecs, self.ambient_dim)


def solve(columns: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coefficients ``t`` with ``sum(t_i * columns[i]) == target``, or None.

    When the columns are dependent the solution with free coefficients zero
    is returned.
    """
    n = len(target)
    k = len(columns)
    ech = SparseEchelon(k)
    for c in range(n):
        row = {i: as_fraction(col[c]) for i, col in enumerate(columns) if col[c]}
        ech.add(row, target[c])
        if not ech.consistent:
            return None
    part = ech.particular()
    return [part.get(i, ZERO) for i in range(k)]


def dependency(vectors: Sequence[Sequence]) -> tuple[int, list[Fraction]] | None:
    """Find the highest index ``j`` whose vector is a combination of the earlier ones.

    Returns ``(j, t)`` with ``vectors[j] == sum(t_i * vectors[i] for i < j)``,
    or None when the family is independent.
    """
    for j in range(len(vectors) - 1, 0, -1):
        t = solve(vectors[:j], vectors[j])
        if t is not None:
            return j, t
    if vectors and not any(vectors[0]):
        return 0, []
    return None


def is_independent(vectors: Sequence[Sequence]) -> bool:
    if not vectors:
        return True
    ech = IntEchelon(len(vectors[0]))
    return all(ech.add(integer_row(v)) for v in vectors)
