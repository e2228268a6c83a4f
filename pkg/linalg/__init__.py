from .exceptions import LinalgError, ShapeError
from .matrix import Matrix, Scalar, format_scalar, parse_scalar, to_scalar
from .reduction import RowReducer
from .solve import (
    AffineEquation,
    AffineSolution,
    AffineTerm,
    affine_solution_space,
    kernel_basis,
    pivot_columns,
    rank,
    solve_affine_system,
    solve_linear,
)

__all__ = [
    "AffineEquation",
    "AffineSolution",
    "AffineTerm",
    "LinalgError",
    "Matrix",
    "RowReducer",
    "Scalar",
    "ShapeError",
    "affine_solution_space",
    "format_scalar",
    "kernel_basis",
    "parse_scalar",
    "pivot_columns",
    "rank",
    "solve_affine_system",
    "solve_linear",
    "to_scalar",
]
