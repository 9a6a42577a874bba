"""Acceptance criteria AC1-AC9.

Each test prints one ``AC<k> PASS|FAIL`` line.  All comparisons are exact
(tolerance 0); the only numeric thresholds are the runtime limits below.
Run alone with ``pytest tests/test_acceptance.py -v -s`` or
``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time
from fractions import Fraction

import pytest

from octomod.bimodule import (
    center,
    peirce_decompose,
    peirce_reconstruct,
    re_operator,
    re_part,
    re_part_left_only,
    re_part_two_sided,
    real_part_image,
)
from octomod.cyclic import commutes_with_octonions, decompose, generated_submodule, length
from octomod.linalg import RealSubspace
from octomod.modules import (
    ModuleElement,
    ModuleSignature,
    associative_part,
    conjugate_slot_associator,
    is_cyclic,
    left_mul,
    module_associator,
    submodule_closure,
)
from octomod.octonion import E, ONE, Octonion, associator, norm_sq, verify_contraction_identities
from octomod.solver import (
    admits_bimodule,
    canonical_bimodule,
    classify_almost_linear,
    derived_bimodule,
    left_mult_matrix,
    right_mult_matrix,
    solve_bimodule,
    twisted_commutant_dims,
    verify_bimodule,
)

EXACT_TOLERANCE = 0  # every equality below is exact rational equality
AC1_SECONDS = 1.0
AC2_SECONDS = 10.0
AC4_SECONDS = 60.0
AC2_TUPLES = 10_000
AC3_TUPLES = 1_000
AC5_ELEMENTS = 1_000  # per signature
AC8_ELEMENTS = 1_000
SEED = 20240501

S = ModuleSignature


def report(ac: str, ok: bool, detail: str) -> None:
    line = f"{ac} {'PASS' if ok else 'FAIL'}: {detail}"
    capman = _capture_manager()
    if capman is not None:
        with capman.global_and_fixture_disabled():
            print(line)
    else:
        print(line)
    assert ok, line


_config = None


def _capture_manager():
    return _config.pluginmanager.getplugin("capturemanager") if _config is not None else None


@pytest.fixture(autouse=True)
def _grab_config(request):
    global _config
    _config = request.config


def rand_fraction(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 6))


def rand_octonion(rng):
    return Octonion([rand_fraction(rng) for _ in range(8)])


def rand_element(rng, sig):
    return ModuleElement(sig, tuple(rand_octonion(rng) for _ in range(sig.slots)))


def test_ac1_epsilon_identities():
    t = time.perf_counter()
    res = verify_contraction_identities()
    dt = time.perf_counter() - t
    ok = all(r["status"] == "pass" for r in res.values()) and dt < AC1_SECONDS
    counts = ", ".join(f"{k} {r['status']} ({r['checked']} tuples)" for k, r in res.items())
    report("AC1", ok, f"{counts}; {dt:.3f}s < {AC1_SECONDS}s")


def test_ac2_algebra_laws():
    rng = random.Random(SEED)
    t = time.perf_counter()
    failures = 0
    for _ in range(AC2_TUPLES):
        x, y, z = rand_octonion(rng), rand_octonion(rng), rand_octonion(rng)
        xyx = (x * y) * x
        checks = (
            not associator(x, x, y),
            not associator(y, x, x),
            norm_sq(x * y) == norm_sq(x) * norm_sq(y),
            xyx * z == x * (y * (x * z)),
            z * xyx == ((z * x) * y) * x,
            (x * (y * z)) * x == (x * y) * (z * x),
        )
        failures += not all(checks)
    dt = time.perf_counter() - t
    report(
        "AC2",
        failures == 0 and dt < AC2_SECONDS,
        f"alternativity, composition, 3 Moufang on {AC2_TUPLES} tuples: {failures} failures; {dt:.2f}s < {AC2_SECONDS}s",
    )


def _artin(p, x, a, b):
    return left_mul(p ** a, left_mul(p ** b, x)) == left_mul(p ** (a + b), x)


def test_ac3_module_laws():
    rng = random.Random(SEED + 3)
    failures = {}
    for sig in (S(1, 0), S(0, 1), S(2, 1)):
        bad = 0
        for _ in range(AC3_TUPLES):
            p, q, r = rand_octonion(rng), rand_octonion(rng), rand_octonion(rng)
            x = rand_element(rng, sig)
            expansion = left_mul(associator(p, q, r), x) + left_mul(p, module_associator(q, r, x)) == (
                module_associator(p * q, r, x) - module_associator(p, q * r, x) + module_associator(p, q, left_mul(r, x))
            )
            artin = _artin(p, x, rng.randint(0, 4), rng.randint(0, 4))
            alt = module_associator(p, q, x) == -module_associator(q, p, x) and not module_associator(p, p, x)
            conj_ok = all(
                module_associator(p, q, x).components[s] == conjugate_slot_associator(p, q, x.components[s])
                for s in range(sig.n, sig.slots)
            )
            bad += not (expansion and artin and alt and conj_ok)
        failures[str(sig)] = bad
    report(
        "AC3",
        not any(failures.values()),
        f"associator expansion identity, Artin (exponents <= 4), left alternativity, conjugate-slot associator; "
        f"{AC3_TUPLES} tuples per signature; failures {failures}",
    )


def test_ac4_solver_outcomes():
    t = time.perf_counter()
    expected = {(1, 0): "Unique", (2, 0): "Unique", (0, 1): "Infeasible", (1, 1): "Infeasible", (0, 2): "Infeasible"}
    got = {}
    ok = True
    for nm, status in expected.items():
        sig = S(*nm)
        res = solve_bimodule(sig)
        got[str(sig)] = res.status
        ok &= res.status == status
        if status == "Unique":
            ok &= res.solutions == [canonical_bimodule(sig)]
        ok &= admits_bimodule(sig) == (res.status == "Unique")
    dt = time.perf_counter() - t
    report("AC4", ok and dt < AC4_SECONDS, f"outcomes {got}, Unique equal canonical, admits agrees; {dt:.2f}s < {AC4_SECONDS}s")


def test_ac5_real_part_theorem():
    rng = random.Random(SEED + 5)
    ok = True
    notes = []
    for n in range(1, 5):
        sig = S(n, 0)
        Re = re_operator(sig)
        basis = [ModuleElement.basis(sig, b) for b in range(sig.dim)]
        idempotent = all(Re(Re(b)) == Re(b) for b in basis)
        A = associative_part(sig)
        subspaces = real_part_image(sig) == center(sig) == A
        bad_recon = bad_formula = bad_idem = 0
        for _ in range(AC5_ELEMENTS):
            x = rand_element(rng, sig)
            parts = peirce_decompose(x)
            bad_recon += peirce_reconstruct(parts) != x or not all(p.vector() in A for p in parts)
            r = re_part(x)
            bad_idem += re_part(r) != r
            bad_formula += not (re_part_two_sided(x) == re_part_left_only(x) == r)
        sig_ok = idempotent and subspaces and not (bad_recon or bad_formula or bad_idem)
        ok &= sig_ok
        notes.append(f"{sig}: dim Re M {A.dim}, recon/formula/idem failures {bad_recon}/{bad_formula}/{bad_idem}")
    report("AC5", ok, f"Re^2=Re, Re M = Z(M) = A(M), {AC5_ELEMENTS} elements per signature; " + "; ".join(notes))


def test_ac6_derived_right_action():
    ok = True
    notes = []
    for n in range(1, 5):
        sig = S(n, 0)
        cand = derived_bimodule(sig)
        rep = verify_bimodule(cand)
        same = cand == canonical_bimodule(sig)
        ok &= rep.ok and same
        notes.append(f"{sig}: {rep.checked} basis checks, {len(rep.violations)} violations, slotwise {same}")
    report("AC6", ok, "; ".join(notes))


def _elem(*comps):
    return ModuleElement.of(S(len(comps), 0), comps)


def _orbits(*vectors):
    return RealSubspace.span((left_mul(E[k], v).vector() for v in vectors for k in range(8)), vectors[0].sig.dim)


def test_ac7_worked_examples():
    m1 = _elem(E[1], E[2], E[1] + E[2])
    d1 = decompose(m1)
    ok1 = (
        d1.length == 2
        and generated_submodule(m1) == _orbits(_elem(1, 0, 1), _elem(0, 1, 1))
        and generated_submodule(m1).dim == 16
    )
    m2 = _elem(E[1], E[2], E[3])
    d2 = decompose(m2)
    ok2 = d2.length == 3 and generated_submodule(m2) == RealSubspace.full(24)
    m3 = _elem(ONE, ONE + E[1], E[1])
    d3 = decompose(m3)
    ok3 = (
        d3.length == 2
        and d3.terms == ((ONE, _elem(1, 1, 0)), (E[1], _elem(0, 1, 1)))
        and generated_submodule(m3) == _orbits(_elem(1, 1, 0), left_mul(E[1], _elem(0, 1, 1)))
        and generated_submodule(m3).dim == 16
    )
    report(
        "AC7",
        ok1 and ok2 and ok3,
        f"(e1,e2,e1+e2) length {d1.length}; (e1,e2,e3) length {d2.length}; (1,1+e1,e1) length {d3.length}",
    )


def _ac8_population(rng):
    # for each n, lengths 1..n are all represented: sums of k terms p_i x_i with x_i real
    out = []
    while len(out) < AC8_ELEMENTS:
        n = len(out) % 8 + 1
        sig = S(n, 0)
        if rng.random() < 0.25:
            x = rand_element(rng, sig)
        else:
            k = rng.randint(1, n)
            x = ModuleElement.zero(sig)
            for _ in range(k):
                real = ModuleElement.of(sig, [rng.randint(-3, 3) for _ in range(n)])
                x = x + left_mul(rand_octonion(rng), real)
        if x:
            out.append(x)
    return out


def test_ac8_oracle_equivalence():
    rng = random.Random(SEED + 8)
    pop = _ac8_population(rng)
    mismatches = 0
    lengths = {}
    cyclic = 0
    for m in pop:
        gen = generated_submodule(m)
        clo = submodule_closure(m)
        ln = length(m)
        cyc = is_cyclic(m)
        cyclic += cyc
        lengths[ln] = lengths.get(ln, 0) + 1
        good = gen == clo and ln == clo.dim // 8 and clo.dim % 8 == 0 and clo.dim <= 64
        good &= commutes_with_octonions(m) == cyc
        mismatches += not good
    report(
        "AC8",
        mismatches == 0 and cyclic > 0 and cyclic < len(pop),
        f"{len(pop)} elements over (1..8,0): {mismatches} mismatches; {cyclic} cyclic; length histogram {dict(sorted(lengths.items()))}",
    )


def test_ac9_twisted_commutants():
    dims = twisted_commutant_dims()
    rights = all(classify_almost_linear(right_mult_matrix(E[k])) == E[k] for k in range(8))
    lefts = all(classify_almost_linear(left_mult_matrix(E[k])) is None for k in range(1, 8))
    report(
        "AC9",
        all(d == 0 for d in dims.values()) and rights and lefts,
        f"solution dims {dims}; 8 right multiplications recovered {rights}; 7 left multiplications rejected {lefts}",
    )


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
