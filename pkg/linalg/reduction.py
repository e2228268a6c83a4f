from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .matrix import Scalar, _norm


Row = Dict[int, Scalar]


def _divide(value: Scalar, pivot: Scalar) -> Scalar:
    if pivot == 1:
        return value
    if pivot == -1:
        return -value
    return _norm(Fraction(value) / pivot)


class RowReducer:
    """
    Incremental row echelon form over the rationals.

    Rows are sparse ``{column: coefficient}`` dictionaries with an optional
    right-hand side. Each stored pivot row is scaled so its leading entry is
    one, and the leading column of a row is its first nonzero column, so the
    pivots (and every basis derived from them) depend only on the rows and
    the order they were added in.

    Attributes:
        num_vars (int): Number of unknowns (columns).
        consistent (bool): False once a row reduced to ``0 = c`` with ``c != 0``.
    """

    def __init__(self, num_vars: int):
        """
        Initialize an empty reducer.

        Args:
            num_vars (int): Number of unknowns.
        """
        self.num_vars = num_vars
        self.pivots: Dict[int, Tuple[Row, Scalar]] = {}
        self.consistent = True

    def add_row(self, coeffs: Row, rhs: Scalar = 0) -> bool:
        """
        Reduce a row against the stored pivots and keep it if independent.

        Args:
            coeffs (Row): Sparse coefficients.
            rhs (Scalar): Right-hand side. Defaults to 0.

        Returns:
            bool: True if the row produced a new pivot.
        """
        row = {c: v for c, v in coeffs.items() if v}
        pivots = self.pivots
        while True:
            hits = [c for c in row if c in pivots]
            if not hits:
                break
            col = min(hits)
            factor = row[col]
            pivot_row, pivot_rhs = pivots[col]
            for j, v in pivot_row.items():
                value = _norm(row.get(j, 0) - factor * v)
                if value:
                    row[j] = value
                else:
                    row.pop(j, None)
            rhs = _norm(rhs - factor * pivot_rhs)
        if not row:
            if rhs:
                self.consistent = False
            return False
        lead = min(row)
        scale = row[lead]
        pivots[lead] = (
            {j: _divide(v, scale) for j, v in row.items()},
            _divide(rhs, scale),
        )
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def free_columns(self) -> List[int]:
        return [c for c in range(self.num_vars) if c not in self.pivots]

    def back_substitute(
        self, free_values: Optional[Dict[int, Scalar]] = None, homogeneous: bool = False
    ) -> List[Scalar]:
        """
        Solve for the pivot variables given values of the free ones.

        Args:
            free_values (Optional[Dict[int, Scalar]]): Values of free columns;
                missing free columns are set to zero.
            homogeneous (bool): Ignore the right-hand sides.

        Returns:
            List[Scalar]: A full assignment of the unknowns.
        """
        solution: List[Scalar] = [0] * self.num_vars
        if free_values:
            for c, v in free_values.items():
                solution[c] = v
        for col in sorted(self.pivots, reverse=True):
            row, rhs = self.pivots[col]
            acc = 0 if homogeneous else rhs
            for j, v in row.items():
                if j != col and solution[j]:
                    acc -= v * solution[j]
            solution[col] = _norm(acc)
        return solution

    def particular_solution(self) -> Optional[List[Scalar]]:
        """Return the solution with all free variables zero, or None if inconsistent."""
        if not self.consistent:
            return None
        return self.back_substitute()

    def kernel_vectors(self) -> List[List[Scalar]]:
        """Return a basis of the homogeneous solution space, one vector per free column."""
        return [
            self.back_substitute({free: 1}, homogeneous=True)
            for free in self.free_columns()
        ]
