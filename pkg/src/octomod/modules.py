"""Left octonionic modules ``O^n + conj(O)^m`` and their basic structure.

Regular slots come first and conjugate slots last.  On a conjugate slot
the octonion ``p`` acts by ``y -> conj(p) y``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import InvalidSignature, SignatureMismatch, ZeroElement
from .linalg import IntEchelon, RealSubspace
from .octonion import E, IMAG, ZERO, Octonion, associator, commutator, conj

CLOSURE_WORD_BOUND = 128  # 2^7 reduced words e_{i1}(...(e_{ik} m)) with i1 < ... < ik


@dataclass(frozen=True)
class ModuleSignature:
    n: int
    m: int = 0

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise InvalidSignature("signature entries must be integers")
        if self.n < 0 or self.m < 0 or self.n + self.m < 1:
            raise InvalidSignature(f"invalid signature ({self.n}, {self.m}): need n, m >= 0 and n + m >= 1")

    @property
    def slots(self) -> int:
        return self.n + self.m

    @property
    def dim(self) -> int:
        return 8 * (self.n + self.m)

    @property
    def is_bimodule(self) -> bool:
        return self.m == 0

    def is_conjugate_slot(self, s: int) -> bool:
        return s >= self.n

    @classmethod
    def parse(cls, text: str) -> ModuleSignature:
        try:
            n, m = (int(t) for t in text.split(","))
        except ValueError:
            raise InvalidSignature(f"signature must look like 'n,m', got {text!r}") from None
        return cls(n, m)

    def __str__(self) -> str:
        return f"({self.n},{self.m})"


@dataclass(frozen=True)
class ModuleElement:
    sig: ModuleSignature
    components: tuple[Octonion, ...]

    def __post_init__(self):
        if len(self.components) != self.sig.slots:
            raise SignatureMismatch(
                f"signature {self.sig} needs {self.sig.slots} components, got {len(self.components)}"
            )

    @classmethod
    def of(cls, sig: ModuleSignature, components: Iterable) -> ModuleElement:
        return cls(sig, tuple(c if isinstance(c, Octonion) else Octonion.real(c) for c in components))

    @classmethod
    def zero(cls, sig: ModuleSignature) -> ModuleElement:
        return cls(sig, (ZERO,) * sig.slots)

    @classmethod
    def basis(cls, sig: ModuleSignature, index: int) -> ModuleElement:
        slot, k = divmod(index, 8)
        comps = [ZERO] * sig.slots
        comps[slot] = E[k]
        return cls(sig, tuple(comps))

    @classmethod
    def from_vector(cls, sig: ModuleSignature, vector: Sequence) -> ModuleElement:
        if len(vector) != sig.dim:
            raise SignatureMismatch(f"vector of length {len(vector)} does not fit {sig}")
        return cls(sig, tuple(Octonion(vector[8 * s: 8 * s + 8]) for s in range(sig.slots)))

    def vector(self) -> tuple[Fraction, ...]:
        out: list[Fraction] = []
        for c in self.components:
            out.extend(c.coeffs)
        return tuple(out)

    def integer_row(self) -> dict[int, int]:
        """Sparse integer multiple of :meth:`vector`, for span computations."""
        den = math.lcm(*(c.den for c in self.components))
        out = {}
        for s, c in enumerate(self.components):
            f = den // c.den
            for k, v in enumerate(c.num):
                if v:
                    out[8 * s + k] = v * f
        return out

    def _check(self, other: ModuleElement) -> None:
        if self.sig != other.sig:
            raise SignatureMismatch(f"signatures {self.sig} and {other.sig} differ")

    def __add__(self, other: ModuleElement) -> ModuleElement:
        self._check(other)
        return ModuleElement(self.sig, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: ModuleElement) -> ModuleElement:
        self._check(other)
        return ModuleElement(self.sig, tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> ModuleElement:
        return ModuleElement(self.sig, tuple(-a for a in self.components))

    def scale(self, r) -> ModuleElement:
        return ModuleElement(self.sig, tuple(a.scale(r) for a in self.components))

    def __bool__(self) -> bool:
        return any(self.components)

    def __repr__(self) -> str:
        body = ", ".join(repr(c) for c in self.components)
        return f"ModuleElement{self.sig}[{body}]"


def left_mul(p: Octonion, x: ModuleElement) -> ModuleElement:
    n = x.sig.n
    pc = conj(p) if x.sig.m else None
    return ModuleElement(x.sig, tuple((p if s < n else pc) * c for s, c in enumerate(x.components)))


def module_associator(p: Octonion, q: Octonion, x: ModuleElement) -> ModuleElement:
    """``(pq)x - p(qx)`` computed from the left action."""
    return left_mul(p * q, x) - left_mul(p, left_mul(q, x))


def conjugate_slot_associator(p: Octonion, q: Octonion, y: Octonion) -> Octonion:
    """Closed form of the module associator on one conjugate slot: ``[p,q,y] + conj([p,q]) y``."""
    return associator(p, q, y) + conj(commutator(p, q)) * y


def linear_map_columns(
    f: Callable[[ModuleElement], ModuleElement], sig: ModuleSignature
) -> list[tuple[Fraction, ...]]:
    """Columns of the matrix of a real-linear map on ``sig`` in the flattened basis."""
    return [f(ModuleElement.basis(sig, b)).vector() for b in range(sig.dim)]


class LinearOperator:
    """Sparse rational matrix of a real-linear map ``sig -> sig``."""

    __slots__ = ("sig", "rows")

    def __init__(self, sig: ModuleSignature, rows: tuple[dict[int, Fraction], ...]):
        self.sig = sig
        self.rows = rows

    @classmethod
    def of(cls, f: Callable[[ModuleElement], ModuleElement], sig: ModuleSignature) -> LinearOperator:
        cols = linear_map_columns(f, sig)
        rows = tuple({b: col[r] for b, col in enumerate(cols) if col[r]} for r in range(sig.dim))
        return cls(sig, rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearOperator) and self.sig == other.sig and self.rows == other.rows

    __hash__ = None

    def __call__(self, x: ModuleElement) -> ModuleElement:
        if x.sig != self.sig:
            raise SignatureMismatch(f"operator on {self.sig} applied to an element of {x.sig}")
        v = x.vector()
        out = [sum((c * v[b] for b, c in row.items() if v[b]), Fraction(0)) for row in self.rows]
        return ModuleElement.from_vector(self.sig, out)


def stacked_kernel(maps: Iterable[Callable[[ModuleElement], ModuleElement]], sig: ModuleSignature) -> RealSubspace:
    """Common null space of several real-linear maps on ``sig``."""
    rows = []
    for f in maps:
        cols = linear_map_columns(f, sig)
        out_dim = len(cols[0]) if cols else 0
        for c in range(out_dim):
            row = {b: col[c] for b, col in enumerate(cols) if col[c]}
            if row:
                rows.append(row)
    return RealSubspace.kernel_of(rows, sig.dim)


@lru_cache(maxsize=None)
def associative_part(sig: ModuleSignature) -> RealSubspace:
    """``A(M) = {x : [p, q, x] = 0 for all p, q}`` via the basis pairs ``i < j``."""
    maps = [
        (lambda x, i=i, j=j: module_associator(E[i], E[j], x))
        for i in IMAG for j in IMAG if i < j
    ]
    return stacked_kernel(maps, sig)


@lru_cache(maxsize=None)
def conjugate_associative_part(sig: ModuleSignature) -> RealSubspace:
    """``A^-(M) = {x : (pq)x = q(px) for all p, q}``."""
    maps = [
        (lambda x, i=i, j=j: left_mul(E[i] * E[j], x) - left_mul(E[j], left_mul(E[i], x)))
        for i in IMAG for j in IMAG
    ]
    return stacked_kernel(maps, sig)


def _closure_echelon(
    generators: Sequence[ModuleElement], sig: ModuleSignature, stop_above: int | None = None
) -> IntEchelon:
    # breadth-first over L_{e_i}; a full-rank or over-limit echelon ends the search early
    ech = IntEchelon(sig.dim)
    limit = sig.dim if stop_above is None else min(sig.dim, stop_above + 1)
    queue = []
    for g in generators:
        if ech.add(g.integer_row()):
            queue.append(g)
    head = 0
    while head < len(queue) and ech.rank < limit:
        v = queue[head]
        head += 1
        for i in IMAG:
            w = left_mul(E[i], v)
            if ech.add(w.integer_row()):
                queue.append(w)
                if ech.rank >= limit:
                    break
    return ech


def submodule_closure(x: ModuleElement, *more: ModuleElement) -> RealSubspace:
    """Smallest real subspace containing the generators and stable under every ``L_{e_i}``."""
    ech = _closure_echelon((x,) + more, x.sig)
    return RealSubspace.from_echelon(ech)


def orbit_span(x: ModuleElement) -> RealSubspace:
    """``O x = span{e_k x : k = 0..7}``."""
    return RealSubspace.span((left_mul(E[k], x).vector() for k in range(8)), x.sig.dim)


def is_cyclic(x: ModuleElement) -> bool:
    if not x:
        raise ZeroElement("cyclicity is defined for nonzero elements")
    return _closure_echelon((x,), x.sig, stop_above=8).rank == 8


def cyclic_class(x: ModuleElement) -> str | None:
    """``"+"`` if ``<x>`` is regular, ``"-"`` if conjugate regular, None if not cyclic."""
    if not is_cyclic(x):
        return None
    gen = submodule_closure(x)
    if gen.intersection(associative_part(x.sig)).dim:
        return "+"
    if gen.intersection(conjugate_associative_part(x.sig)).dim:
        return "-"
    raise AssertionError("an 8-dimensional submodule is regular or conjugate regular")
