"""Extremal separable m-qubit states close to I/2^m: exact constructions from
rate-1 real orthogonal designs, with witnesses and product decompositions."""
from .bounds import ball_radius, ball_radius_lower, lower_bound, upper_bound
from .cone import boundary_element, pairing, separable_decomposition, witness_element
from .designs import OrthogonalDesign, evaluate, make_design, verify_design
from .quantum import (
    HermitianMatrix,
    build_state,
    frobenius_distance,
    isometry_lift,
    min_eigenvalue,
    reconstruct_from_decomposition,
    witness_operator,
)
from .tensors import (
    DenseTensor,
    ResourceLimitError,
    closed_form_norm_sq,
    design_tensor,
    frobenius_norm_sq,
    injective_norm,
    m3_tensor,
    restricted_tensor,
    t4_tensor,
)

__version__ = "0.1.0"
