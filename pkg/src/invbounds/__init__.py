"""Exact computation of degree lower bounds for invariant rings.

Torus invariants via Hilbert bases of nonnegative kernel monoids, closed-orbit
certificates from weight supports, and the cubic-form and 3-tensor
constructions whose invariant rings need generators of exponential degree.
"""

from .bounds import DegreeBoundReport, beta_bound, compose_lower_bound, degree_bounds, sigma_bound
from .errors import (
    BrokenChain,
    DimensionMismatch,
    InvBoundsError,
    LatticeMismatch,
    MissingNorms,
    ResourceLimit,
    ScalarConstraintViolated,
    UnassignedBasisVector,
    UnsupportedBasisKind,
)
from .hilbert import HilbertBasis, hilbert_basis, is_member, min_degree_in_support
from .linalg import GaussianRational, kernel_basis, rank, solve_homogeneous
from .orbit import ClosedOrbitCertificate, certify_closed_orbit, lie_stabilizer_dim, support_weights
from .reps import LieAlgebra, RepPoint, SymPower, TensorProduct, TorusEmbedding, weight_matrix
from .reproduce import reproduce_cubic, reproduce_tensor
from .weights import Weight, WeightLattice, is_root_adjacent, is_uncramped, weight_equal

__version__ = "0.1.0"
