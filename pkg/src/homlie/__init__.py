"""Exact computations with Hom-Lie algebras, their representations and the
shifted coboundary operators d^s on C^*(g; V)."""

from .algebra import (
    HomLieAlgebra, Representation, ValidationReport, bracket_eval, is_morphism,
    is_subalgebra, validate_hom_lie, validate_representation, yau_twist,
)
from .catalog import builtin, random_twisted
from .cochains import (
    Cochain, alpha_bar, assemble_matrix, beta_bar, coboundary, cochain_eval, diamond,
    trivial_coboundary, wedge,
)
from .cohomology import (
    CohomologyReport, TheoremCheckResult, check_alpha_chain_map, check_beta_chain_map,
    check_d_squared, check_leibniz_diamond, check_leibniz_trivial, cohomology_dims,
    verify_iso,
)
from .linalg import Matrix
from .reconstruction import OperatorFamily, reconstruct, roundtrip

__version__ = "0.1.0"
