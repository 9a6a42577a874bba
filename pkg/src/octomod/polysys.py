"""Exact elimination for small systems of polynomial equations over Q.

A polynomial is a ``dict`` from monomials to ``Fraction`` coefficients.  A
monomial is a sorted tuple of parameter indices, ``()`` being the constant
term, so ``(0, 0, 3)`` stands for ``t0**2 * t3``.

The engine only performs steps that are exact and complete:

* all equations of degree <= 1 are solved together by row reduction and
  substituted back;
* a parameter occurring in some equation only through a constant multiple
  of itself is solved for from that equation;
* when neither applies, the equations are row-reduced over their monomials
  (highest degree first), which can expose new equations of lower degree.

Anything that survives all three is reported unresolved.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .linalg import SparseEchelon

Monomial = tuple[int, ...]
Poly = dict[Monomial, Fraction]


def poly_add_to(acc: Poly, other: Mapping[Monomial, Fraction], coef=1) -> None:
    for mono, c in other.items():
        v = acc.get(mono, 0) + coef * c
        if v:
            acc[mono] = v
        else:
            acc.pop(mono, None)


def poly_mul(a: Mapping[Monomial, Fraction], b: Mapping[Monomial, Fraction]) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(sorted(ma + mb))
            v = out.get(mono, 0) + ca * cb
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


def degree(p: Mapping[Monomial, Fraction]) -> int:
    return max((len(m) for m in p), default=0)


def variables(p: Mapping[Monomial, Fraction]) -> set[int]:
    return {v for m in p for v in m}


def substitute(p: Mapping[Monomial, Fraction], subs: Mapping[int, Poly]) -> Poly:
    """Replace each parameter in ``subs`` by its polynomial."""
    out: Poly = {}
    for mono, c in p.items():
        if not any(v in subs for v in mono):
            poly_add_to(out, {mono: c})
            continue
        term: Poly = {(): c}
        for v in mono:
            term = poly_mul(term, subs[v] if v in subs else {(v,): Fraction(1)})
        poly_add_to(out, term)
    return out


def format_poly(p: Mapping[Monomial, Fraction]) -> str:
    if not p:
        return "0"
    parts = []
    for mono in sorted(p, key=lambda m: (-len(m), m)):
        c = p[mono]
        name = "*".join(f"t{v}" for v in mono)
        if not name:
            parts.append(str(c))
        elif c == 1:
            parts.append(name)
        elif c == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{c}*{name}")
    return " + ".join(parts).replace("+ -", "- ")


def _normalize(p: Poly) -> tuple:
    lead = p[min(p, key=lambda m: (-len(m), m))]
    return tuple(sorted((m, c / lead) for m, c in p.items()))


@dataclass
class EliminationResult:
    status: str  # "solved", "infeasible" or "undecided"
    values: dict[int, Poly] = field(default_factory=dict)  # eliminated parameter -> expression in free ones
    free: list[int] = field(default_factory=list)
    residual: list[Poly] = field(default_factory=list)
    steps: list[str] = field(default_factory=list)


def eliminate(equations: Iterable[Mapping[Monomial, Fraction]], nparams: int, max_rounds: int = 1000) -> EliminationResult:
    """Solve ``p == 0`` for every given polynomial, as far as exact steps allow."""
    eqs = _dedupe(dict(e) for e in equations)
    solved: dict[int, Poly] = {}
    steps: list[str] = []

    def apply(subs: dict[int, Poly]) -> None:
        nonlocal eqs
        for k in list(solved):
            solved[k] = substitute(solved[k], subs)
        solved.update(subs)
        eqs = _dedupe(substitute(e, subs) for e in eqs)

    for _ in range(max_rounds):
        if any(list(e) == [()] for e in eqs):
            steps.append("nonzero constant equation")
            return EliminationResult("infeasible", steps=steps)
        if not eqs:
            break
        linear = [e for e in eqs if degree(e) <= 1]
        if linear:
            ech = SparseEchelon(nparams)
            for e in linear:
                ech.add({m[0]: c for m, c in e.items() if m}, -e.get((), 0))
                if not ech.consistent:
                    steps.append(f"inconsistent linear block of {len(linear)} equations")
                    return EliminationResult("infeasible", steps=steps)
            subs: dict[int, Poly] = {}
            for piv, row in ech.rows.items():
                expr: Poly = {}
                for k, v in row.items():
                    if k == ech.rhs:
                        expr[()] = v
                    elif k != piv:
                        expr[(k,)] = -v
                subs[piv] = expr
            steps.append(f"linear block: {len(linear)} equations fix {len(subs)} parameters")
            apply(subs)
            continue
        pick = _linear_occurrence(eqs)
        if pick is not None:
            t, e = pick
            c = e[(t,)]
            rest = {m: -v / c for m, v in e.items() if m != (t,)}
            steps.append(f"t{t} solved from an equation where it occurs linearly")
            apply({t: rest})
            continue
        reduced = _monomial_reduce(eqs)
        if reduced is None:
            return EliminationResult(
                "undecided", values=solved, free=_free(nparams, solved), residual=eqs, steps=steps
            )
        steps.append("monomial row reduction exposed lower-degree equations")
        eqs = reduced
    return EliminationResult("solved", values=solved, free=_free(nparams, solved), steps=steps)


def _free(nparams: int, solved: Mapping[int, Poly]) -> list[int]:
    return [t for t in range(nparams) if t not in solved]


def _dedupe(eqs: Iterable[Poly]) -> list[Poly]:
    seen = set()
    out = []
    for e in eqs:
        if not e:
            continue
        key = _normalize(e)
        if key not in seen:
            seen.add(key)
            out.append(e)
    return out


def _linear_occurrence(eqs: list[Poly]) -> tuple[int, Poly] | None:
    """Lowest parameter that some equation contains only as ``c * t``."""
    best = None
    for e in eqs:
        nonlinear = {v for m in e if len(m) > 1 for v in m}
        for m in e:
            if len(m) == 1 and m[0] not in nonlinear:
                t = m[0]
                if best is None or t < best[0] or (t == best[0] and len(e) < len(best[1])):
                    best = (t, e)
    return best


def _monomial_reduce(eqs: list[Poly]) -> list[Poly] | None:
    """Row-reduce the coefficient matrix over monomials; None if nothing new appears."""
    monos = sorted({m for e in eqs for m in e}, key=lambda m: (-len(m), m))
    index = {m: i for i, m in enumerate(monos)}
    ech = SparseEchelon(len(monos))
    for e in eqs:
        ech.add({index[m]: c for m, c in e.items()})
    out = [{monos[k]: v for k, v in row.items()} for row in ech.rows.values()]
    top = degree({m: 1 for e in eqs for m in e})
    if not any(degree(e) < top for e in out if e) and len(out) >= len(eqs):
        return None
    new = _dedupe(out)
    if sorted(map(_normalize, new)) == sorted(map(_normalize, eqs)):
        return None
    return new
