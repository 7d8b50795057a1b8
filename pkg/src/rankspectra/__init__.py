"""Weight spectra of rank-metric codes via lattices of q-cycles."""

__version__ = "0.1.0"

from .errors import InputError, ResourceLimitError, StructuralError
from .fields import FieldTower, prime_field
from .lattice import BettiTable, CycleLattice, build_cycle_lattice, virtual_betti_table
from .linalg import (
    GF,
    Mat,
    Subspace,
    all_subspaces,
    enumerate_subspaces,
    gaussian_binomial,
    matrix_count,
    rank_support,
    rank_weight,
)
from .qmatroid import GabidulinCode, QMatroid, qmatroid_from_code, uniform_qmatroid
from .spectra import (
    WeightPolynomial,
    cross_checked_weights,
    generalized_weights,
    higher_spectra,
    mrd_closed_form,
    uniform_betti_table,
    uniform_h_sequence,
    weight_distribution,
    weight_poly_betti,
    weight_poly_mobius,
    weight_polys_betti,
    weights_from_polys,
)

__all__ = [
    "InputError", "ResourceLimitError", "StructuralError",
    "FieldTower", "prime_field",
    "GF", "Mat", "Subspace", "all_subspaces", "enumerate_subspaces",
    "gaussian_binomial", "matrix_count", "rank_support", "rank_weight",
    "GabidulinCode", "QMatroid", "qmatroid_from_code", "uniform_qmatroid",
    "BettiTable", "CycleLattice", "build_cycle_lattice", "virtual_betti_table",
    "WeightPolynomial", "cross_checked_weights", "generalized_weights",
    "higher_spectra", "mrd_closed_form", "uniform_betti_table",
    "uniform_h_sequence", "weight_distribution", "weight_poly_betti",
    "weight_poly_mobius", "weight_polys_betti", "weights_from_polys",
    "__version__",
]
