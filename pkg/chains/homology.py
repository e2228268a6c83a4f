import logging
from typing import Dict, Optional

from categories.diagrams import Zigzag
from linalg import Matrix, kernel_basis, pivot_columns, rank, solve_linear

from .chain_map import ChainMap
from .complex import Complex
from .exceptions import ChainError


logger = logging.getLogger(__name__)

GradedDims = Dict[int, int]


def homology_dims(x: Complex) -> GradedDims:
    """
    Return the nonzero homology dimensions of ``x``.

    ``dim H_n = dim ker d_n - rank d_{n+1}``; degrees with zero homology are
    omitted, so an acyclic complex gives ``{}``.
    """
    dims: GradedDims = {}
    for n, size in x.dims.items():
        h = size - rank(x.diff(n)) - rank(x.diff(n + 1))
        if h:
            dims[n] = h
    return dims


def is_acyclic(x: Complex) -> bool:
    return not homology_dims(x)


def cycle_representatives(x: Complex, n: int) -> Matrix:
    """
    Return cycles in degree ``n`` whose classes form a basis of ``H_n(x)``.

    The boundaries are listed first and the kernel basis after them; the
    kernel columns that are pivots of the combined matrix are kept.
    """
    boundaries = x.diff(n + 1)
    cycles = kernel_basis(x.diff(n))
    combined = boundaries.hstack(cycles)
    offset = boundaries.cols
    chosen = [c - offset for c in pivot_columns(combined) if c >= offset]
    return cycles.submatrix(range(cycles.rows), chosen)


def homology_complex(x: Complex) -> Complex:
    """Return the complex with the homology of ``x`` and zero differential."""
    return Complex(homology_dims(x))


def cycle_inclusion(x: Complex) -> ChainMap:
    """Return the quasi-isomorphism ``H(x) -> x`` sending basis classes to their representatives."""
    h = homology_complex(x)
    return ChainMap(h, x, {n: cycle_representatives(x, n) for n in h.dims})


def homology_projection(x: Complex) -> ChainMap:
    """
    Return a chain map ``r: x -> H(x)`` with ``r ∘ cycle_inclusion(x) = id``.

    In each degree the boundaries, the cycle representatives and a completion
    by standard basis vectors form a basis of ``x_n``; ``r`` reads off the
    coordinates along the representatives.
    """
    h = homology_complex(x)
    comps = {}
    for n in h.dims:
        size = x.dim(n)
        boundaries = x.diff(n + 1)
        b_basis = boundaries.submatrix(range(size), pivot_columns(boundaries))
        reps = cycle_representatives(x, n)
        partial = b_basis.hstack(reps)
        spanning = partial.hstack(Matrix.identity(size))
        chosen = pivot_columns(spanning)
        basis = spanning.submatrix(range(size), chosen)
        inverse = solve_linear(basis, Matrix.identity(size))
        if inverse is None:
            raise ChainError(f"homology basis in degree {n} is not invertible")
        start = b_basis.cols
        comps[n] = inverse.row_range(start, start + reps.cols)
    return ChainMap(x, h, comps)


def induced_rank(f: ChainMap, n: int) -> int:
    """Return the rank of ``H_n(f)``."""
    source, target = f.source, f.target
    boundaries = target.diff(n + 1)
    cycles = kernel_basis(source.diff(n))
    images = f.comp(n) @ cycles
    return rank(boundaries.hstack(images)) - rank(boundaries)


def is_quasi_iso(f: ChainMap) -> bool:
    """True iff ``f`` induces an isomorphism on homology in every degree."""
    hx = homology_dims(f.source)
    hy = homology_dims(f.target)
    if hx != hy:
        return False
    return all(induced_rank(f, n) == k for n, k in hy.items())


def is_homology_surjective(f: ChainMap) -> bool:
    """True iff ``H_n(f)`` is onto in every degree."""
    hy = homology_dims(f.target)
    return all(induced_rank(f, n) == k for n, k in hy.items())


def are_weakly_equivalent(x: Complex, y: Complex) -> Optional[Zigzag]:
    """
    Return a zigzag of quasi-isomorphisms ``x <- H <- -> y``, or None.

    Over a field equal homology dimensions suffice; the common apex is the
    homology complex and both legs are cycle inclusions.
    """
    if homology_dims(x) != homology_dims(y):
        logger.debug("homology differs: %s vs %s", homology_dims(x), homology_dims(y))
        return None
    left = cycle_inclusion(x)
    right = cycle_inclusion(y)
    return Zigzag(left.source, left, right)
