"""Search and verification of right actions compatible with a left module.

A candidate right action on a signature is given by seven real matrices
``R_1..R_7`` (``R_0`` is the identity), column convention: ``R_i @ v`` is
the flattened vector of ``x e_i``.  The bimodule conditions split into

* the middle condition ``R_p L_q - L_q R_p = [p, q, .]``, linear in the
  unknown matrices and decoupled over ``p``;
* the right condition ``R_q R_p - R_{pq} = [p, q, .]``, quadratic.

:func:`solve_linear_stage` returns the exact affine solution set of the
first; :func:`impose_quadratic` substitutes it into the second and runs
:func:`octomod.polysys.eliminate`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ConjugateSlotsPresent, SignatureMismatch
from .linalg import SparseEchelon
from .modules import ModuleElement, ModuleSignature, left_mul, linear_map_columns, module_associator
from .octonion import E, IMAG, Octonion, build_epsilon_tables, conj
from .polysys import EliminationResult, Poly, eliminate, format_poly, poly_add_to

# sparse matrix: column index -> {row index -> value}
SparseMatrix = dict[int, dict[int, Fraction]]
Matrix = tuple[tuple[Fraction, ...], ...]  # dense, row-major


def to_sparse(m: Sequence[Sequence]) -> SparseMatrix:
    out: SparseMatrix = {}
    for r, row in enumerate(m):
        for c, v in enumerate(row):
            if v:
                out.setdefault(c, {})[r] = Fraction(v)
    return out


def to_dense(m: SparseMatrix, n: int) -> Matrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for c, col in m.items():
        for r, v in col.items():
            rows[r][c] = v
    return tuple(tuple(r) for r in rows)


def from_columns(cols: Sequence[Sequence]) -> SparseMatrix:
    return {c: {r: v for r, v in enumerate(col) if v} for c, col in enumerate(cols) if any(col)}


def matmul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    out: SparseMatrix = {}
    for c, bcol in b.items():
        acc: dict[int, Fraction] = {}
        for k, v in bcol.items():
            for r, w in a.get(k, {}).items():
                s = acc.get(r, 0) + w * v
                if s:
                    acc[r] = s
                else:
                    acc.pop(r, None)
        if acc:
            out[c] = acc
    return out


def matadd(a: SparseMatrix, b: SparseMatrix, coef=1) -> SparseMatrix:
    out = {c: dict(col) for c, col in a.items()}
    for c, col in b.items():
        tgt = out.setdefault(c, {})
        for r, v in col.items():
            s = tgt.get(r, 0) + coef * v
            if s:
                tgt[r] = s
            else:
                tgt.pop(r, None)
        if not tgt:
            del out[c]
    return out


def identity(n: int) -> SparseMatrix:
    return {i: {i: Fraction(1)} for i in range(n)}


def apply(m: SparseMatrix, v: Sequence) -> list[Fraction]:
    out = [Fraction(0)] * len(v)
    for c, x in enumerate(v):
        if x:
            for r, w in m.get(c, {}).items():
                out[r] += w * x
    return out


@lru_cache(maxsize=None)
def left_matrices(sig: ModuleSignature) -> tuple[SparseMatrix, ...]:
    """``L_{e_k}`` for k = 0..7."""
    return tuple(from_columns(linear_map_columns(lambda x, k=k: left_mul(E[k], x), sig)) for k in range(8))


@lru_cache(maxsize=None)
def associator_matrices(sig: ModuleSignature) -> dict[tuple[int, int], SparseMatrix]:
    """Matrices of ``x -> [e_i, e_j, x]`` for i, j = 1..7."""
    return {
        (i, j): from_columns(linear_map_columns(lambda x, i=i, j=j: module_associator(E[i], E[j], x), sig))
        for i in IMAG for j in IMAG
    }


# ---------------------------------------------------------------------------
# candidates


@dataclass(frozen=True)
class RightMultCandidate:
    sig: ModuleSignature
    R: tuple[Matrix, ...]  # seven dense matrices for e_1..e_7

    def __post_init__(self):
        d = self.sig.dim
        if len(self.R) != 7 or any(len(m) != d or any(len(r) != d for r in m) for m in self.R):
            raise SignatureMismatch(f"a candidate on {self.sig} needs seven {d}x{d} matrices")

    @classmethod
    def from_sparse(cls, sig: ModuleSignature, mats: Sequence[SparseMatrix]) -> RightMultCandidate:
        return cls(sig, tuple(to_dense(m, sig.dim) for m in mats))

    def sparse(self) -> list[SparseMatrix]:
        """``R_0..R_7`` as sparse matrices (``R_0`` is the identity)."""
        return [identity(self.sig.dim)] + [to_sparse(m) for m in self.R]

    def act(self, x: ModuleElement, p: Octonion) -> ModuleElement:
        mats = self.sparse()
        v = x.vector()
        out = [Fraction(0)] * len(v)
        for k, c in enumerate(p.coeffs):
            if c:
                for r, w in enumerate(apply(mats[k], v)):
                    out[r] += c * w
        return ModuleElement.from_vector(x.sig, out)


def canonical_bimodule(sig: ModuleSignature) -> RightMultCandidate:
    """Slotwise right multiplication ``(x_1..x_n) p = (x_1 p, ..., x_n p)``."""
    if sig.m:
        raise ConjugateSlotsPresent(f"signature {sig} admits no bimodule structure")
    mats = [
        from_columns(
            linear_map_columns(lambda x, i=i: ModuleElement(x.sig, tuple(c * E[i] for c in x.components)), sig)
        )
        for i in IMAG
    ]
    return RightMultCandidate.from_sparse(sig, mats)


def derived_bimodule(sig: ModuleSignature) -> RightMultCandidate:
    """The right action recovered from the left action alone."""
    from .bimodule import right_operator, require_bimodule

    require_bimodule(sig)
    mats = [{b: dict(col) for b, col in _operator_columns(right_operator(sig, i)).items()} for i in IMAG]
    return RightMultCandidate.from_sparse(sig, mats)


def _operator_columns(op) -> SparseMatrix:
    cols: SparseMatrix = {}
    for r, row in enumerate(op.rows):
        for b, v in row.items():
            cols.setdefault(b, {})[r] = v
    return cols


def _product_matrix(mats: Sequence[SparseMatrix], i: int, j: int) -> SparseMatrix:
    """``R_{e_i e_j}`` expanded through ``e_i e_j = eps_ijk e_k - delta_ij``."""
    t = build_epsilon_tables()
    n = len(mats[0]) if mats[0] else 0
    acc: SparseMatrix = {}
    for k in IMAG:
        s = t.e3(i, j, k)
        if s:
            acc = matadd(acc, mats[k], s)
    if i == j:
        acc = matadd(acc, mats[0], -1)
    return acc


@dataclass
class BimoduleReport:
    ok: bool
    checked: int
    violations: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"status": "pass" if self.ok else "fail", "checked": self.checked, "violations": self.violations}


def verify_bimodule(cand: RightMultCandidate, max_violations: int | None = None) -> BimoduleReport:
    """Check ``[p,q,m] = [q,m,p] = [m,p,q]`` on basis octonions and basis vectors.

    ``[q,m,p] = (qm)p - q(mp)`` is the middle associator, ``[m,p,q] =
    (mp)q - m(pq)`` the right one.  ``R_1`` is the identity by construction,
    so pairs involving 1 hold trivially and are skipped.
    """
    sig = cand.sig
    L = left_matrices(sig)
    A = associator_matrices(sig)
    R = cand.sparse()
    violations = []
    checked = 0
    for i in IMAG:
        for j in IMAG:
            mid = matadd(matmul(R[i], L[j]), matmul(L[j], R[i]), -1)
            right = matadd(matmul(R[j], R[i]), _product_matrix(R, i, j), -1)
            left = A[(i, j)]
            for b in range(sig.dim):
                checked += 1
                for kind, m in (("middle", mid), ("right", right)):
                    if m.get(b, {}) != left.get(b, {}):
                        violations.append({"p": i, "q": j, "basis": b, "kind": kind})
                        if max_violations is not None and len(violations) >= max_violations:
                            return BimoduleReport(False, checked, violations)
    return BimoduleReport(not violations, checked, violations)


# ---------------------------------------------------------------------------
# linear stage


@dataclass
class AffineFamily:
    """``R_i = particular[i] + sum_t params_t * kernels[i][t]``; empty when infeasible."""

    sig: ModuleSignature
    feasible: bool
    particular: list[SparseMatrix] = field(default_factory=list)  # index 1..7, [0] identity
    kernels: list[list[tuple[int, SparseMatrix]]] = field(default_factory=list)  # (param id, matrix)

    @property
    def nparams(self) -> int:
        return sum(len(k) for k in self.kernels)

    def kernel_dims(self) -> list[int]:
        return [len(k) for k in self.kernels[1:]]

    def member(self, values: dict[int, Fraction]) -> RightMultCandidate:
        mats = []
        for i in IMAG:
            m = self.particular[i]
            for t, k in self.kernels[i]:
                if values.get(t):
                    m = matadd(m, k, values[t])
            mats.append(m)
        return RightMultCandidate.from_sparse(self.sig, mats)


def _vec_to_matrix(vec: dict[int, Fraction], d: int) -> SparseMatrix:
    out: SparseMatrix = {}
    for idx, v in vec.items():
        r, c = divmod(idx, d)
        out.setdefault(c, {})[r] = v
    return out


def _middle_equations(sig: ModuleSignature, i: int):
    """Rows of ``R L_q - L_q R = [e_i, e_q, .]`` in the unknown entries ``R[r][c]`` -> ``r*d + c``."""
    d = sig.dim
    L = left_matrices(sig)
    A = associator_matrices(sig)
    # row view of L_q: r -> {c: value}
    for q in IMAG:
        Lq = L[q]
        Lrows: dict[int, dict[int, Fraction]] = {}
        for c, col in Lq.items():
            for r, v in col.items():
                Lrows.setdefault(r, {})[c] = v
        target = A[(i, q)]
        for b in range(d):
            for r in range(d):
                row: dict[int, Fraction] = {}
                # (R L_q)[r, b] = sum_c R[r, c] L_q[c, b]
                for c, v in Lq.get(b, {}).items():
                    row[r * d + c] = row.get(r * d + c, 0) + v
                # (L_q R)[r, b] = sum_c L_q[r, c] R[c, b]
                for c, v in Lrows.get(r, {}).items():
                    row[c * d + b] = row.get(c * d + b, 0) - v
                row = {k: v for k, v in row.items() if v}
                rhs = target.get(b, {}).get(r, 0)
                if row or rhs:
                    yield row, rhs


def solve_linear_stage(sig: ModuleSignature) -> AffineFamily:
    """Exact affine solution set of the middle condition (independent for each ``e_i``)."""
    d = sig.dim
    particular: list[SparseMatrix] = [identity(d)]
    kernels: list[list[tuple[int, SparseMatrix]]] = [[]]
    next_param = 0
    for i in IMAG:
        ech = SparseEchelon(d * d)
        for row, rhs in _middle_equations(sig, i):
            ech.add(row, rhs)
            if not ech.consistent:
                return AffineFamily(sig, False)
        particular.append(_vec_to_matrix(ech.particular(), d))
        ks = []
        for vec in ech.kernel():
            ks.append((next_param, _vec_to_matrix(vec, d)))
            next_param += 1
        kernels.append(ks)
    return AffineFamily(sig, True, particular, kernels)


# ---------------------------------------------------------------------------
# quadratic stage


@dataclass
class SolveOutcome:
    status: str  # "Unique", "Infeasible", "Family" or "Undecided"
    solutions: list[RightMultCandidate] = field(default_factory=list)
    residual: list[str] = field(default_factory=list)
    free_parameters: int = 0
    steps: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status == "Unique":
            assert len(self.solutions) == 1
        if self.status == "Infeasible":
            assert not self.solutions


def _accumulate(polys: dict[tuple[int, int], Poly], mat: SparseMatrix, mono: tuple[int, ...], coef=1) -> None:
    for c, col in mat.items():
        for r, v in col.items():
            poly_add_to(polys.setdefault((r, c), {}), {mono: v * coef})


def quadratic_equations(family: AffineFamily) -> list[Poly]:
    """``R_j R_i - R_{e_i e_j} - [e_i, e_j, .] = 0`` entrywise, as polynomials in the parameters."""
    A = associator_matrices(family.sig)
    P = family.particular
    K = family.kernels
    t3 = build_epsilon_tables()
    eqs: list[Poly] = []
    for i in IMAG:
        for j in IMAG:
            polys: dict[tuple[int, int], Poly] = {}
            _accumulate(polys, matmul(P[j], P[i]), ())
            for s, ks in K[i]:
                _accumulate(polys, matmul(P[j], ks), (s,))
            for t, kt in K[j]:
                _accumulate(polys, matmul(kt, P[i]), (t,))
                for s, ks in K[i]:
                    _accumulate(polys, matmul(kt, ks), tuple(sorted((s, t))))
            for k in IMAG:
                e = t3.e3(i, j, k)
                if e:
                    _accumulate(polys, P[k], (), -e)
                    for u, ku in K[k]:
                        _accumulate(polys, ku, (u,), -e)
            if i == j:
                _accumulate(polys, identity(family.sig.dim), ())
            _accumulate(polys, A[(i, j)], (), -1)
            eqs.extend(p for p in polys.values() if p)
    return eqs


def impose_quadratic(family: AffineFamily) -> SolveOutcome:
    if not family.feasible:
        return SolveOutcome("Infeasible", steps=["linear stage has no solution"])
    eqs = quadratic_equations(family)
    res: EliminationResult = eliminate(eqs, family.nparams)
    if res.status == "infeasible":
        return SolveOutcome("Infeasible", steps=res.steps)
    if res.status == "undecided":
        return SolveOutcome(
            "Undecided",
            residual=[format_poly(p) + " = 0" for p in res.residual],
            free_parameters=len(res.free),
            steps=res.steps,
        )
    # every equation vanished; evaluate with the remaining parameters at zero
    values = {t: expr.get((), Fraction(0)) for t, expr in res.values.items()}
    member = family.member(values)
    status = "Unique" if not res.free else "Family"
    return SolveOutcome(status, [member], free_parameters=len(res.free), steps=res.steps)


def solve_bimodule(sig: ModuleSignature) -> SolveOutcome:
    return impose_quadratic(solve_linear_stage(sig))


def admits_bimodule(sig: ModuleSignature) -> bool:
    """Closed-form answer: a compatible right action exists iff there are no conjugate slots."""
    return sig.m == 0


# ---------------------------------------------------------------------------
# maps on O


O1 = ModuleSignature(1, 0)


def _octonion_map_matrix(f) -> Matrix:
    cols = [f(E[b]).coeffs for b in range(8)]
    return tuple(tuple(cols[c][r] for c in range(8)) for r in range(8))


def right_mult_matrix(q: Octonion) -> Matrix:
    return _octonion_map_matrix(lambda x: x * q)


def left_mult_matrix(q: Octonion) -> Matrix:
    return _octonion_map_matrix(lambda x: q * x)


def _apply_dense(f: Matrix, x: Octonion) -> Octonion:
    v = x.coeffs
    return Octonion(tuple(sum(f[r][c] * v[c] for c in range(8)) for r in range(8)))


def classify_almost_linear(f: Sequence[Sequence]) -> Octonion | None:
    """Return ``q`` with ``f(x) = x q`` when ``Re(f(px) - p f(x)) = 0`` for all p, x; else None."""
    f = tuple(tuple(Fraction(v) for v in row) for row in f)
    for p in range(8):
        for x in range(8):
            if (_apply_dense(f, E[p] * E[x]) - E[p] * _apply_dense(f, E[x]))[0]:
                return None
    # Re f(x) = <x, y> with y the first row of f; then f(x) = x conj(y)
    y = Octonion(f[0])
    q = conj(y)
    for x in range(8):
        if _apply_dense(f, E[x]) != E[x] * q:
            raise AssertionError("almost-linear map is not a right multiplication")
    return q


def _intertwiner_rows(
    da: int, db: int, pairs: Sequence[tuple[SparseMatrix, SparseMatrix]]
) -> list[dict[int, Fraction]]:
    """Rows of ``F X - Y F = 0`` for each ``(X, Y)``; unknown ``F[r][c]`` (db x da) -> ``r*da + c``."""
    rows = []
    for X, Y in pairs:
        Yrows: dict[int, dict[int, Fraction]] = {}
        for c, col in Y.items():
            for r, v in col.items():
                Yrows.setdefault(r, {})[c] = v
        for b in range(da):
            for r in range(db):
                row: dict[int, Fraction] = {}
                for c, v in X.get(b, {}).items():
                    row[r * da + c] = row.get(r * da + c, 0) + v
                for c, v in Yrows.get(r, {}).items():
                    row[c * da + b] = row.get(c * da + b, 0) - v
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return rows


def _kernel_dim(rows, nvars: int) -> int:
    ech = SparseEchelon(nvars)
    for row in rows:
        ech.add(row)
    return nvars - ech.rank


def hom_space_dim(sig_a: ModuleSignature, sig_b: ModuleSignature, mode: str = "left") -> int:
    """Dimension of the real maps ``M_a -> M_b`` commuting with the chosen actions."""
    if mode not in ("left", "right", "bi"):
        raise ValueError(f"mode must be left, right or bi, got {mode!r}")
    if mode != "left" and (sig_a.m or sig_b.m):
        raise ConjugateSlotsPresent("right and bi homomorphisms need bimodule signatures")
    pairs = []
    if mode in ("left", "bi"):
        La, Lb = left_matrices(sig_a), left_matrices(sig_b)
        pairs += [(La[k], Lb[k]) for k in IMAG]
    if mode in ("right", "bi"):
        Ra, Rb = canonical_bimodule(sig_a).sparse(), canonical_bimodule(sig_b).sparse()
        pairs += [(Ra[k], Rb[k]) for k in IMAG]
    return _kernel_dim(_intertwiner_rows(sig_a.dim, sig_b.dim, pairs), sig_a.dim * sig_b.dim)


def twisted_commutant_dims() -> dict[str, int]:
    """Solution-space dimensions of ``f(px) = conj(p) f(x)`` and ``f(xq) = q f(x)`` on End_R(O)."""
    L = left_matrices(O1)
    Lbar = [to_sparse(left_mult_matrix(conj(E[k]))) for k in range(8)]
    R = [to_sparse(right_mult_matrix(E[k])) for k in range(8)]
    conj_rows = _intertwiner_rows(8, 8, [(L[k], Lbar[k]) for k in IMAG])
    swap_rows = _intertwiner_rows(8, 8, [(R[k], L[k]) for k in IMAG])
    return {
        "f(px)=conj(p)f(x)": _kernel_dim(conj_rows, 64),
        "f(xq)=qf(x)": _kernel_dim(swap_rows, 64),
    }
