"""Named batch checks run by ``octomod suite``."""
from __future__ import annotations

from dataclasses import dataclass

from .cyclic import decompose, generated_submodule
from .errors import UnknownSuite
from .linalg import RealSubspace
from .modules import ModuleElement, ModuleSignature, left_mul, submodule_closure
from .octonion import E, ONE, ZERO, build_epsilon_tables, verify_contraction_identities
from .solver import admits_bimodule, canonical_bimodule, solve_bimodule


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": "pass" if self.passed else "fail", "detail": self.detail}


def identities() -> list[Check]:
    build_epsilon_tables()
    out = [Check("epsilon tables", True, "antisymmetric, reproduce the product table")]
    for name, res in verify_contraction_identities().items():
        out.append(Check(name, res["status"] == "pass", f"{res['checked']} index tuples"))
    return out


BIMODULE_CASES = (((1, 0), "Unique"), ((2, 0), "Unique"), ((0, 1), "Infeasible"), ((1, 1), "Infeasible"))


def bimodule_theorems() -> list[Check]:
    out = []
    for (n, m), expected in BIMODULE_CASES:
        sig = ModuleSignature(n, m)
        res = solve_bimodule(sig)
        ok = res.status == expected
        if ok and expected == "Unique":
            ok = res.solutions[0] == canonical_bimodule(sig)
        ok = ok and admits_bimodule(sig) == (expected == "Unique")
        out.append(Check(f"solve {sig}", ok, res.status))
    return out


def _elem(*comps) -> ModuleElement:
    return ModuleElement.of(ModuleSignature(len(comps), 0), comps)


def _orbit_sum(vectors) -> RealSubspace:
    sig = vectors[0].sig
    return RealSubspace.span((left_mul(E[k], v).vector() for v in vectors for k in range(8)), sig.dim)


def cyclic_examples() -> list[Check]:
    out = []

    m = _elem(E[1], E[2], E[1] + E[2])
    gen = generated_submodule(m)
    expect = _orbit_sum([_elem(ONE, ZERO, ONE), _elem(ZERO, ONE, ONE)])
    dec = decompose(m)
    out.append(Check(
        "(e1,e2,e1+e2)",
        dec.length == 2 and gen.dim == 16 and gen == expect and gen == submodule_closure(m),
        f"length {dec.length}, dim {gen.dim}",
    ))

    m = _elem(E[1], E[2], E[3])
    gen = generated_submodule(m)
    dec = decompose(m)
    out.append(Check(
        "(e1,e2,e3)",
        dec.length == 3 and gen == RealSubspace.full(24),
        f"length {dec.length}, dim {gen.dim}",
    ))

    m = _elem(ONE, ONE + E[1], E[1])
    dec = decompose(m)
    gen = generated_submodule(m)
    out.append(Check(
        "(1,1+e1,e1)",
        dec.length == 2 and gen.dim == 16 and dec.reconstruct() == m and gen == submodule_closure(m),
        f"length {dec.length}, dim {gen.dim}",
    ))
    return out


SUITES = {
    "identities": identities,
    "bimodule-theorems": bimodule_theorems,
    "cyclic-examples": cyclic_examples,
}


def run_suite(name: str) -> list[Check]:
    try:
        fn = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn()
