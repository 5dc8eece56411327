"""Finite subresiduated lattices, their twists and subresiduated Nelson algebras."""

from .algebra import (
    SnaAlgebra,
    derived_properties_suite,
    product,
    quotient_algebra,
    sna_from_tables,
    subalgebra,
    verify_kleene,
    verify_nelson,
    verify_sna,
)
from .lattice import FiniteLattice, build_lattice, chain, lattice_from_order
from .srl import Srl, dense_elements, make_srl, srl_from_table, subresiduated_filters, verify_srl
from .tables import Partition
from .twist import TwistAlgebra, alpha, quotient_srl, rho, theta, twist_filtered, twist_full

__version__ = "0.1.0"

__all__ = [
    "FiniteLattice", "Partition", "SnaAlgebra", "Srl", "TwistAlgebra",
    "alpha", "build_lattice", "chain", "dense_elements", "derived_properties_suite", "lattice_from_order",
    "make_srl", "product", "quotient_algebra", "quotient_srl", "rho", "sna_from_tables", "srl_from_table",
    "subalgebra", "subresiduated_filters", "theta", "twist_filtered", "twist_full",
    "verify_kleene", "verify_nelson", "verify_sna", "verify_srl",
]
