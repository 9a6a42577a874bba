"""Exact arithmetic for octonions and octonionic modules ``O^n + conj(O)^m``."""
from .bimodule import peirce_decompose, peirce_reconstruct, re_part, right_mul
from .cyclic import (
    CyclicDecomposition,
    SigmaClass,
    characteristic,
    commutes_with_octonions,
    decompose,
    generated_submodule,
    length,
    sigma_class,
    sum_is_cyclic,
)
from .errors import OctomodError
from .linalg import RealSubspace
from .modules import (
    ModuleElement,
    ModuleSignature,
    associative_part,
    conjugate_associative_part,
    cyclic_class,
    is_cyclic,
    left_mul,
    module_associator,
    submodule_closure,
)
from .octonion import (
    E,
    ONE,
    ZERO,
    Octonion,
    assoc_subspace,
    associator,
    build_epsilon_tables,
    commutator,
    conj,
    cross,
    inverse,
    norm_sq,
    verify_contraction_identities,
)
from .solver import (
    RightMultCandidate,
    SolveOutcome,
    admits_bimodule,
    canonical_bimodule,
    classify_almost_linear,
    derived_bimodule,
    hom_space_dim,
    solve_bimodule,
    verify_bimodule,
)

__version__ = "0.1.0"
