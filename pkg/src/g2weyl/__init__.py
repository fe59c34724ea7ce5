"""Exact Cartan-Weyl commutation tables for the exceptional Lie algebra g2.

Two constructions of the 14-dimensional bracket table over the field generated
by sqrt(2) and sqrt(3): the classical integer table built from su(2) ladder
chains and the negation rule on structure constants, and the alternative table
solved from the cyclic and chain-product identities. The package audits which
structure-constant identities each table satisfies and exhibits the diagonal
isomorphism between them.
"""

from .algebra import (
    CartanPairError,
    Element,
    GeneratorLabel,
    LieAlgebra,
    NotAnEigenvectorError,
    TableFormatError,
    UnknownGeneratorError,
    cartan_label,
    lower_label,
    raise_label,
)
from .audits import (
    AuditCheck,
    AuditReport,
    audit_chain_product_rule,
    audit_cyclic_rule,
    audit_killing,
    audit_negation_rule,
    check_antisymmetry_jacobi,
    check_serre,
)
from .builder import ConstructionInconsistentError
from .cyclic import (
    ConstantAssignment,
    NoSolutionError,
    build_cyclic_algebra,
    cyclic_table,
    solve_normalizations,
    solve_structure_constants,
)
from .hermitian import (
    RescalingMap,
    Su2ChainAssignment,
    UnsupportedAlgebraError,
    build_chain_assignments,
    build_hermitian_algebra,
    hermitian_table,
    rescale_to_integer_basis,
    su2_ladder_coefficient,
)
from .isomorphism import (
    BranchPins,
    DiagonalMap,
    IncompleteMapError,
    NoMapError,
    REFERENCE_MAP_NAME,
    apply_map,
    identity_map,
    reference_map,
    solve_diagonal_map,
    verify_homomorphism,
)
from .numberfield import (
    FieldElement,
    FieldZeroDivisionError,
    Rational,
    UnsupportedRadicalError,
    rational,
    sqrt_rational,
)
from .roots import (
    CartanMatrix,
    ChainRecord,
    DegenerateChainError,
    InvalidCartanError,
    NotARootError,
    NotFiniteTypeError,
    Root,
    RootSystem,
    alpha_chain,
    cartan_pairing,
    enumerate_chains,
    generate_root_system,
)

__version__ = "0.1.0"
