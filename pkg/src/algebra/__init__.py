"""Exact Steiner-product algebra on R^S."""

from src.algebra.axioms import (
    CounterexamplePair,
    CrossAxiomReport,
    check_cross_axioms,
    norm_identity_sides,
)
from src.algebra.linalg import in_span, kernel_basis, rank_exact, span_equal, span_rank
from src.algebra.polynomial import krylov_rank_at_most
from src.algebra.product import (
    CompanionMatrix,
    ProductTable,
    SignedBasis,
    ZeroDivisorResult,
    companion_matrix,
    is_zero_divisor,
    product_table,
    product_via_trace,
    right_companion_matrix,
    steiner_product,
)
from src.algebra.tables import multiplication_table_check
from src.algebra.vectors import (
    DesignVector,
    inner_product,
    lift_automorphism,
    orbit_of_vector,
    random_vector,
)

__all__ = [
    "CompanionMatrix",
    "CounterexamplePair",
    "CrossAxiomReport",
    "DesignVector",
    "ProductTable",
    "SignedBasis",
    "ZeroDivisorResult",
    "check_cross_axioms",
    "companion_matrix",
    "in_span",
    "inner_product",
    "is_zero_divisor",
    "kernel_basis",
    "krylov_rank_at_most",
    "lift_automorphism",
    "multiplication_table_check",
    "norm_identity_sides",
    "orbit_of_vector",
    "product_table",
    "product_via_trace",
    "random_vector",
    "rank_exact",
    "right_companion_matrix",
    "span_equal",
    "span_rank",
    "steiner_product",
]
