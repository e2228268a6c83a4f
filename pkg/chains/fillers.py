import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from linalg import AffineEquation, AffineTerm, Matrix, affine_solution_space, solve_affine_system

from .chain_map import ChainMap
from .complex import Complex
from .exceptions import ChainError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MapConstraint:
    """
    The requirement ``left ∘ h ∘ right == value`` on an unknown chain map h.

    A missing ``left`` or ``right`` is the identity.
    """

    value: ChainMap
    left: Optional[ChainMap] = None
    right: Optional[ChainMap] = None


@dataclass(frozen=True)
class ChainMapSpace:
    """
    All chain maps meeting a set of constraints.

    Attributes:
        particular (ChainMap): One solution.
        basis (List[ChainMap]): Basis of the chain maps meeting the
            homogeneous constraints.
    """

    particular: ChainMap
    basis: List[ChainMap] = field(default_factory=list)


class _Problem:
    def __init__(self, source: Complex, target: Complex, constraints: Sequence[MapConstraint]):
        self.source = source
        self.target = target
        self.degrees = [n for n in source.dims if target.dim(n)]
        self.index = {n: k for k, n in enumerate(self.degrees)}
        self.shapes = [(target.dim(n), source.dim(n)) for n in self.degrees]
        self.equations: List[AffineEquation] = []
        self._chain_equations()
        for constraint in constraints:
            self._constraint_equations(constraint)

    def _chain_equations(self) -> None:
        # d h_n - h_{n-1} d = 0
        for n in self.source.dims:
            rows, cols = self.target.dim(n - 1), self.source.dim(n)
            if not rows:
                continue
            terms = []
            if n in self.index:
                terms.append(AffineTerm(self.index[n], left=self.target.diff(n)))
            if n - 1 in self.index:
                terms.append(AffineTerm(self.index[n - 1], right=-self.source.diff(n)))
            if terms:
                self.equations.append(AffineEquation(terms, Matrix.zeros(rows, cols)))

    def _constraint_equations(self, constraint: MapConstraint) -> None:
        left, right, value = constraint.left, constraint.right, constraint.value
        outer_source = self.source if right is None else right.source
        outer_target = self.target if left is None else left.target
        if (right is not None and right.target != self.source) or (
            left is not None and left.source != self.target
        ):
            raise ChainError("constraint maps do not attach to the unknown map")
        if value.source != outer_source or value.target != outer_target:
            raise ChainError("constraint value has the wrong source or target")
        for n in outer_source.dims:
            if not outer_target.dim(n):
                continue
            terms = []
            if n in self.index:
                terms.append(
                    AffineTerm(
                        self.index[n],
                        left=None if left is None else left.comp(n),
                        right=None if right is None else right.comp(n),
                    )
                )
            self.equations.append(AffineEquation(terms, value.comp(n)))

    def to_map(self, blocks: Sequence[Matrix], validate: bool = True) -> ChainMap:
        comps: Dict[int, Matrix] = {n: blocks[k] for n, k in self.index.items()}
        return ChainMap(self.source, self.target, comps, validate=validate)


def solve_chain_map(
    source: Complex, target: Complex, constraints: Sequence[MapConstraint] = ()
) -> Optional[ChainMap]:
    """
    Find a chain map ``source -> target`` meeting every constraint.

    Args:
        source (Complex): Domain of the unknown map.
        target (Complex): Codomain of the unknown map.
        constraints (Sequence[MapConstraint]): Linear conditions on the map.

    Returns:
        Optional[ChainMap]: One exact solution, or None if there is none.
    """
    problem = _Problem(source, target, constraints)
    blocks = solve_affine_system(problem.shapes, problem.equations)
    if blocks is None:
        return None
    return problem.to_map(blocks)


def chain_map_space(
    source: Complex, target: Complex, constraints: Sequence[MapConstraint] = ()
) -> Optional[ChainMapSpace]:
    """Like :func:`solve_chain_map` but also return the homogeneous solutions."""
    problem = _Problem(source, target, constraints)
    solution = affine_solution_space(problem.shapes, problem.equations)
    if solution is None:
        return None
    logger.debug(
        "chain maps %s -> %s: %d-dimensional solution space",
        source.dims,
        target.dims,
        len(solution.kernel),
    )
    return ChainMapSpace(
        problem.to_map(solution.particular),
        [problem.to_map(blocks) for blocks in solution.kernel],
    )
