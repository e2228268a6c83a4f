import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .exceptions import ShapeError
from .matrix import Matrix, Scalar, _norm
from .reduction import RowReducer


logger = logging.getLogger(__name__)


def _reducer_for(m: Matrix, extra_cols: int = 0) -> RowReducer:
    reducer = RowReducer(m.cols + extra_cols)
    for row in m.entries:
        reducer.add_row({j: v for j, v in enumerate(row) if v})
    return reducer


def rank(m: Matrix) -> int:
    """Return the rank of ``m`` over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return _reducer_for(m).rank


def kernel_basis(m: Matrix) -> Matrix:
    """
    Return a matrix whose columns form a basis of the kernel of ``m``.

    The basis has one vector per non-pivot column, in column order, with a
    one in that column and zeros in the other non-pivot columns.
    """
    reducer = _reducer_for(m)
    vectors = reducer.kernel_vectors()
    return Matrix.from_columns(vectors, m.cols)


def pivot_columns(m: Matrix) -> List[int]:
    """Return the indices of the columns of ``m`` that are independent of all earlier ones."""
    if m.rows == 0 or m.cols == 0:
        return []
    return sorted(_reducer_for(m).pivots)


def solve_linear(m: Matrix, rhs: Matrix) -> Optional[Matrix]:
    """
    Find some X with m X = rhs.

    Args:
        m (Matrix): Coefficient matrix.
        rhs (Matrix): Right-hand side with as many rows as ``m``.

    Returns:
        Optional[Matrix]: A solution (free variables set to zero), or None if
        the system is inconsistent.

    Raises:
        ShapeError: If the row counts differ.
    """
    if m.rows != rhs.rows:
        raise ShapeError(f"row counts differ: {m.shape} vs {rhs.shape}")
    n, k = m.cols, rhs.cols
    reducer = RowReducer(n + k)
    for row, target in zip(m.entries, rhs.entries):
        coeffs = {j: v for j, v in enumerate(row) if v}
        coeffs.update({n + t: -v for t, v in enumerate(target) if v})
        reducer.add_row(coeffs)
    if any(col >= n for col in reducer.pivots):
        return None
    solution: List[List[Scalar]] = [[0] * k for _ in range(n)]
    for col in sorted(reducer.pivots, reverse=True):
        row, _ = reducer.pivots[col]
        for t in range(k):
            # pivot rows read x_col + sum(others) - rhs_t = 0
            acc = -row.get(n + t, 0)
            for j, v in row.items():
                if j != col and j < n and solution[j][t]:
                    acc -= v * solution[j][t]
            solution[col][t] = _norm(acc)
    return Matrix(n, k, solution)


@dataclass(frozen=True)
class AffineTerm:
    """
    One summand ``left @ X[unknown] @ right`` of an affine constraint.

    A missing ``left`` or ``right`` stands for the identity.
    """

    unknown: int
    left: Optional[Matrix] = None
    right: Optional[Matrix] = None


@dataclass(frozen=True)
class AffineEquation:
    """The constraint ``sum(terms) == constant`` on the unknown matrix blocks."""

    terms: Sequence[AffineTerm]
    constant: Matrix


@dataclass(frozen=True)
class AffineSolution:
    """
    The full solution set of an affine system.

    Attributes:
        particular (List[Matrix]): One solution, free variables set to zero.
        kernel (List[List[Matrix]]): A basis of the homogeneous solutions,
            each given block by block.
    """

    particular: List[Matrix]
    kernel: List[List[Matrix]] = field(default_factory=list)


def _check_term(term: AffineTerm, shapes: Sequence[Tuple[int, int]], target: Tuple[int, int]) -> None:
    if not 0 <= term.unknown < len(shapes):
        raise ShapeError(f"unknown block {term.unknown} is not declared")
    rows, cols = shapes[term.unknown]
    out_rows = rows if term.left is None else term.left.rows
    out_cols = cols if term.right is None else term.right.cols
    if term.left is not None and term.left.cols != rows:
        raise ShapeError(f"left factor {term.left.shape} does not fit block {rows}x{cols}")
    if term.right is not None and term.right.rows != cols:
        raise ShapeError(f"right factor {term.right.shape} does not fit block {rows}x{cols}")
    if (out_rows, out_cols) != target:
        raise ShapeError(f"term shape {(out_rows, out_cols)} does not match constant {target}")


def _reduce_system(
    shapes: Sequence[Tuple[int, int]], equations: Sequence[AffineEquation]
) -> Tuple[RowReducer, List[int]]:
    offsets = []
    total = 0
    for rows, cols in shapes:
        offsets.append(total)
        total += rows * cols
    reducer = RowReducer(total)
    for equation in equations:
        target = equation.constant.shape
        prepared = []
        for term in equation.terms:
            _check_term(term, shapes, target)
            rows, cols = shapes[term.unknown]
            if term.left is None:
                left_nz = [[(p, 1)] for p in range(rows)]
            else:
                left_nz = [
                    [(i, v) for i, v in enumerate(term.left.row(p)) if v]
                    for p in range(term.left.rows)
                ]
            if term.right is None:
                right_nz = [[(q, 1)] for q in range(cols)]
            else:
                right_nz = [
                    [(j, v) for j, v in enumerate(term.right.column(q)) if v]
                    for q in range(term.right.cols)
                ]
            prepared.append((offsets[term.unknown], cols, left_nz, right_nz))
        for p in range(target[0]):
            for q in range(target[1]):
                coeffs: Dict[int, Scalar] = {}
                for base, cols, left_nz, right_nz in prepared:
                    for i, a in left_nz[p]:
                        for j, b in right_nz[q]:
                            var = base + i * cols + j
                            coeffs[var] = coeffs.get(var, 0) + a * b
                reducer.add_row(coeffs, equation.constant.entry(p, q))
    logger.debug(
        "affine system: %d unknowns, %d equations, rank %d",
        total,
        sum(e.constant.rows * e.constant.cols for e in equations),
        reducer.rank,
    )
    return reducer, offsets


def _split(
    vector: Sequence[Scalar], shapes: Sequence[Tuple[int, int]], offsets: Sequence[int]
) -> List[Matrix]:
    blocks = []
    for (rows, cols), base in zip(shapes, offsets):
        grid = tuple(
            tuple(vector[base + i * cols + j] for j in range(cols)) for i in range(rows)
        )
        blocks.append(Matrix._wrap(rows, cols, grid))
    return blocks


def solve_affine_system(
    shapes: Sequence[Tuple[int, int]], equations: Sequence[AffineEquation]
) -> Optional[List[Matrix]]:
    """
    Find matrix blocks satisfying every affine constraint.

    Args:
        shapes (Sequence[Tuple[int, int]]): Shape of each unknown block.
        equations (Sequence[AffineEquation]): Constraints linear in the blocks.

    Returns:
        Optional[List[Matrix]]: One exact solution, or None if inconsistent.

    Raises:
        ShapeError: If a constraint does not fit the declared shapes.
    """
    reducer, offsets = _reduce_system(shapes, equations)
    vector = reducer.particular_solution()
    if vector is None:
        return None
    return _split(vector, shapes, offsets)


def affine_solution_space(
    shapes: Sequence[Tuple[int, int]], equations: Sequence[AffineEquation]
) -> Optional[AffineSolution]:
    """Like :func:`solve_affine_system` but also return a basis of the homogeneous solutions."""
    reducer, offsets = _reduce_system(shapes, equations)
    vector = reducer.particular_solution()
    if vector is None:
        return None
    kernel = [_split(v, shapes, offsets) for v in reducer.kernel_vectors()]
    return AffineSolution(_split(vector, shapes, offsets), kernel)
