"""Generators and bounded-height solutions of vector polynomial interpolation.

Find ``p = (P_1, ..., P_n)`` with ``sum_k alpha_k(j) P_k(z_j) = 0`` at every
node, over exact Gaussian rationals by default.
"""
from .errors import (
    InterpolationError,
    InvariantError,
    NotInModuleError,
    PreconditionError,
    ValidationError,
)
from .poly import (
    MINUS_INFINITY,
    ScalarPoly,
    VectorPoly,
    basis_element,
    expand,
    expand_in_graded_basis,
    height,
    rebuild,
    reduce_pair,
    scalar_mul,
)
from .problem import (
    Node,
    Problem,
    alpha_from_sigma,
    check_solution,
    constraint_matrix,
    normalize_problem,
    sigma_from_alpha,
)
from .scalars import EXACT, ApproxComplex, ApproxField, GaussianRational, abs_square
from .solver import (
    GeneratorSet,
    KernelBasis,
    constructive_solution,
    decompose,
    determinant_Q,
    existence_solution,
    generators,
    kernel_graded,
    recombine,
    solution_dim,
)

__version__ = "0.1.0"
