"""JSON forms of the library values.  Rationals are always ``"p/q"`` strings."""
from __future__ import annotations

from fractions import Fraction

from .cyclic import CyclicDecomposition, SigmaClass
from .linalg import RealSubspace
from .modules import ModuleElement, ModuleSignature
from .octonion import Octonion
from .solver import BimoduleReport, RightMultCandidate, SolveOutcome


def rational_to_json(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_json(x) -> Fraction:
    if isinstance(x, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise ValueError(f"expected a rational string like '3/4', got {x!r}")


def octonion_to_json(a: Octonion) -> list[str]:
    return [rational_to_json(c) for c in a.coeffs]


def octonion_from_json(data) -> Octonion:
    if not isinstance(data, list) or len(data) != 8:
        raise ValueError("an octonion is a list of 8 rationals")
    return Octonion(rational_from_json(c) for c in data)


def element_to_json(x: ModuleElement) -> dict:
    return {"n": x.sig.n, "m": x.sig.m, "components": [octonion_to_json(c) for c in x.components]}


def element_from_json(data) -> ModuleElement:
    sig = ModuleSignature(int(data["n"]), int(data["m"]))
    return ModuleElement(sig, tuple(octonion_from_json(c) for c in data["components"]))


def signature_from_json(data) -> ModuleSignature:
    if isinstance(data, str):
        return ModuleSignature.parse(data)
    if isinstance(data, dict):
        return ModuleSignature(int(data["n"]), int(data["m"]))
    n, m = data
    return ModuleSignature(int(n), int(m))


def subspace_to_json(s: RealSubspace) -> dict:
    return {
        "ambient_dim": s.ambient_dim,
        "dim": s.dim,
        "basis": [[rational_to_json(v) for v in row] for row in s.basis],
    }


def subspace_from_json(data) -> RealSubspace:
    n = int(data["ambient_dim"])
    return RealSubspace.span([[rational_from_json(v) for v in row] for row in data["basis"]], n)


def matrix_to_json(m) -> list[list[str]]:
    return [[rational_to_json(v) for v in row] for row in m]


def matrix_from_json(data) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(rational_from_json(v) for v in row) for row in data)


def candidate_to_json(c: RightMultCandidate) -> dict:
    return {"n": c.sig.n, "m": c.sig.m, "R": [matrix_to_json(m) for m in c.R]}


def candidate_from_json(data) -> RightMultCandidate:
    sig = ModuleSignature(int(data["n"]), int(data["m"]))
    return RightMultCandidate(sig, tuple(matrix_from_json(m) for m in data["R"]))


def outcome_to_json(o: SolveOutcome) -> dict:
    out = {"status": o.status, "solutions": [candidate_to_json(c) for c in o.solutions]}
    if o.status == "Family":
        out["free_parameters"] = o.free_parameters
    if o.status == "Undecided":
        out["residual"] = o.residual
    out["steps"] = list(o.steps)
    return out


def outcome_from_json(data) -> SolveOutcome:
    return SolveOutcome(
        data["status"],
        [candidate_from_json(c) for c in data.get("solutions", [])],
        residual=list(data.get("residual", [])),
        free_parameters=int(data.get("free_parameters", 0)),
        steps=list(data.get("steps", [])),
    )


def report_to_json(r: BimoduleReport) -> dict:
    return r.to_json()


def report_from_json(data) -> BimoduleReport:
    return BimoduleReport(data["status"] == "pass", int(data["checked"]), list(data["violations"]))


def decomposition_to_json(d: CyclicDecomposition) -> dict:
    return {"terms": [{"root": octonion_to_json(r), "vector": element_to_json(x)} for r, x in d.terms]}


def decomposition_from_json(data) -> CyclicDecomposition:
    return CyclicDecomposition(
        tuple((octonion_from_json(t["root"]), element_from_json(t["vector"])) for t in data["terms"])
    )


def sigma_to_json(s: SigmaClass) -> dict:
    return {"direction": list(s.direction)}


def sigma_from_json(data) -> SigmaClass:
    return SigmaClass(tuple(int(v) for v in data["direction"]))
