"""Commutative parent Hamiltonians and Ising penalty functions.

Exact-arithmetic construction, composition and desk-scale verification
of diagonal penalty functions and their operator embeddings: sparse
multilinear pseudo-Boolean polynomials, symmetric-form factorizations,
Clifford-conjugated projector parents, gate-gadget kernel embeddings,
and an exact LP decision procedure for quadratic kernel realizability.
"""

from .errors import (
    DimensionError,
    EnumerationCapError,
    NetlistError,
    NotDiagonalError,
    ParseError,
    PBKernelError,
)
from .expr import parse
from .pbf import (
    DEFAULT_ENUMERATION_CAP,
    NonNegativity,
    PseudoBoolean,
    bits_of,
    boolean_to_spin,
    index_of,
    spin_to_boolean,
)
from .symmetric import (
    RootFactorization,
    SymmetricForm,
    SymmetryResult,
    WeightProfile,
    canonical_coefficients,
    canonical_to_power,
    delta_product_form,
    detect_symmetric,
    factorize,
    power_to_canonical,
    profile_to_pbf,
    reconstruct,
    stirling_matrix,
    symmetric_ising,
)
from .pauli import (
    DiagonalOperator,
    ExactComplex,
    IsingForm,
    PauliSum,
    StateVector,
    dense_pauli_coefficients,
    embed_diagonal,
    embed_state,
    ising_form,
    pauli_cardinality,
    pauli_to_pbf,
    pbf_to_pauli,
)
from .stabilizer import (
    CliffordCircuit,
    CliffordGate,
    SymplecticPauli,
    apply_circuit,
    conjugate,
    conjugate_sum,
    conjugated_generators,
    ghz_circuit,
    kernel_dimension,
    projector_parent,
    trivial_parent,
)
from .gadgets import (
    Gadget,
    MinimizeResult,
    Netlist,
    SupportSet,
    and_gadget,
    clamp,
    compose,
    minimize_bruteforce,
    not_gadget,
    or_gadget,
    sat_embed,
    support,
    support_parent,
    xor_gadget,
)
from .ising_kernel import (
    LPInstance,
    OneBodyForm,
    OneBodyKernel,
    QuadraticRealization,
    SimplexResult,
    ghz_quadratic,
    one_body,
    one_body_kernel,
    quadratic_realizability,
    simplex_solve,
    square_form,
    verify_certificate,
    verify_infeasibility,
)

__version__ = "0.1.0"
