"""
Direct sums, shifts, duals and the two factorizations of a chain map.

Block conventions, degree ``n``:

* cone ``CA_n = A_n ⊕ A_{n-1}``, ``d(a, a') = (da + a', -da')``,
  ``incl(a) = (a, 0)``.
* cylinder of ``f: X -> Y``: ``Cyl_n = X_n ⊕ X_{n-1} ⊕ Y_n``,
  ``d(x, x', y) = (dx + x', -dx', dy - f x')``, ``i(x) = (x, 0, 0)``,
  ``σ(x, x', y) = f x + y``.
* cocylinder of ``f``: ``E_n = X_n ⊕ Y_n ⊕ Y_{n+1}``,
  ``d(x, y, y') = (dx, dy, y - f x - dy')``, ``τ(x) = (x, f x, 0)``,
  ``p(x, y, y') = y``.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from categories.diagrams import Factorization, FactorizationKind
from linalg import Matrix

from .chain_map import ChainMap
from .complex import Complex
from .exceptions import ChainError


logger = logging.getLogger(__name__)

STANDARD = "standard"
DETOUR = "detour"


def direct_sum(x: Complex, y: Complex) -> Complex:
    """Return the degreewise block sum ``x ⊕ y``, x-block first."""
    degrees = set(x.dims) | set(y.dims)
    dims = {n: x.dim(n) + y.dim(n) for n in degrees}
    diff = {n: Matrix.block_diagonal(x.diff(n), y.diff(n)) for n in degrees}
    return Complex(dims, diff)


def sum_inclusions(x: Complex, y: Complex) -> Tuple[ChainMap, ChainMap]:
    """Return the inclusions of x and y into ``x ⊕ y``."""
    total = direct_sum(x, y)
    left = {n: Matrix.identity(k).vstack(Matrix.zeros(y.dim(n), k)) for n, k in x.dims.items()}
    right = {n: Matrix.zeros(x.dim(n), k).vstack(Matrix.identity(k)) for n, k in y.dims.items()}
    return ChainMap(x, total, left), ChainMap(y, total, right)


def sum_projections(x: Complex, y: Complex) -> Tuple[ChainMap, ChainMap]:
    """Return the projections of ``x ⊕ y`` onto x and y."""
    total = direct_sum(x, y)
    left = {n: Matrix.identity(k).hstack(Matrix.zeros(k, y.dim(n))) for n, k in x.dims.items()}
    right = {n: Matrix.zeros(k, x.dim(n)).hstack(Matrix.identity(k)) for n, k in y.dims.items()}
    return ChainMap(total, x, left), ChainMap(total, y, right)


def shift(x: Complex, k: int) -> Complex:
    """Move degree n to n + k, multiplying the differential by ``(-1)^k``."""
    sign = -1 if k % 2 else 1
    dims = {n + k: size for n, size in x.dims.items()}
    diff = {n + k: m.scale(sign) for n, m in x.differentials().items()}
    return Complex(dims, diff)


def dualize(x: Complex) -> Complex:
    """
    Return the linear dual: ``(X*)_n = (X_{-n})*`` with ``d*_n = (d_{1-n})^T``.
    """
    dims = {-n: size for n, size in x.dims.items()}
    diff = {1 - n: m.transpose() for n, m in x.differentials().items()}
    return Complex(dims, diff)


def dualize_map(f: ChainMap) -> ChainMap:
    """Return ``f*: Y* -> X*`` with ``(f*)_n = (f_{-n})^T``."""
    comps = {-n: m.transpose() for n, m in f.components().items()}
    return ChainMap(dualize(f.target), dualize(f.source), comps)


@dataclass(frozen=True)
class Cone:
    """
    The cone of a complex with its inclusion and the collapse to zero.

    Attributes:
        obj (Complex): CA, always acyclic.
        incl (ChainMap): A -> CA, degreewise injective.
        collapse (ChainMap): CA -> 0.
    """

    obj: Complex
    incl: ChainMap
    collapse: ChainMap


def cone(x: Complex) -> Cone:
    dims: Dict[int, int] = {}
    for n in x.dims:
        dims[n] = dims.get(n, 0) + x.dim(n)
        dims[n + 1] = dims.get(n + 1, 0) + x.dim(n)
    diff = {}
    for n in dims:
        a, a_low = x.dim(n), x.dim(n - 1)
        diff[n] = Matrix.block(
            [
                [x.diff(n), Matrix.identity(a_low)],
                [Matrix.zeros(x.dim(n - 2), a), -x.diff(n - 1)],
            ]
        )
    c = Complex(dims, diff)
    incl = {
        n: Matrix.identity(k).vstack(Matrix.zeros(x.dim(n - 1), k)) for n, k in x.dims.items()
    }
    return Cone(c, ChainMap(x, c, incl), ChainMap.zero(c, Complex.zero()))


def _cylinder_complex(f: ChainMap) -> Complex:
    x, y = f.source, f.target
    degrees = set(x.dims) | {n + 1 for n in x.dims} | set(y.dims)
    dims = {n: x.dim(n) + x.dim(n - 1) + y.dim(n) for n in degrees}
    diff = {}
    for n in degrees:
        diff[n] = Matrix.block(
            [
                [x.diff(n), Matrix.identity(x.dim(n - 1)), Matrix.zeros(x.dim(n - 1), y.dim(n))],
                [Matrix.zeros(x.dim(n - 2), x.dim(n)), -x.diff(n - 1), Matrix.zeros(x.dim(n - 2), y.dim(n))],
                [Matrix.zeros(y.dim(n - 1), x.dim(n)), -f.comp(n - 1), y.diff(n)],
            ]
        )
    return Complex(dims, diff)


def cylinder_factor(f: ChainMap) -> Factorization:
    """
    Factor ``f = σ ∘ i`` through the mapping cylinder.

    ``i`` is degreewise injective and ``σ`` is degreewise surjective and a
    quasi-isomorphism.
    """
    x, y = f.source, f.target
    cyl = _cylinder_complex(f)
    i_comps = {
        n: Matrix.identity(k).vstack(Matrix.zeros(x.dim(n - 1) + y.dim(n), k))
        for n, k in x.dims.items()
    }
    sigma_comps = {
        n: Matrix.hstack_all(
            [f.comp(n), Matrix.zeros(y.dim(n), x.dim(n - 1)), Matrix.identity(y.dim(n))]
        )
        for n in cyl.dims
    }
    i = ChainMap(x, cyl, i_comps)
    sigma = ChainMap(cyl, y, sigma_comps)
    logger.debug("cylinder of %s has dims %s", f, cyl.dims)
    return Factorization(i, cyl, sigma, FactorizationKind.C_TYPE, STANDARD)


def _cocylinder_complex(f: ChainMap) -> Complex:
    x, y = f.source, f.target
    degrees = set(x.dims) | set(y.dims) | {n - 1 for n in y.dims}
    dims = {n: x.dim(n) + y.dim(n) + y.dim(n + 1) for n in degrees}
    diff = {}
    for n in degrees:
        diff[n] = Matrix.block(
            [
                [x.diff(n), Matrix.zeros(x.dim(n - 1), y.dim(n)), Matrix.zeros(x.dim(n - 1), y.dim(n + 1))],
                [Matrix.zeros(y.dim(n - 1), x.dim(n)), y.diff(n), Matrix.zeros(y.dim(n - 1), y.dim(n + 1))],
                [-f.comp(n), Matrix.identity(y.dim(n)), -y.diff(n + 1)],
            ]
        )
    return Complex(dims, diff)


def cocylinder_factor(f: ChainMap) -> Factorization:
    """
    Factor ``f = p ∘ τ`` through the mapping cocylinder.

    ``τ`` is a degreewise injective quasi-isomorphism and ``p`` a degreewise
    surjection.
    """
    x, y = f.source, f.target
    cocyl = _cocylinder_complex(f)
    tau_comps = {
        n: Matrix.vstack_all([Matrix.identity(k), f.comp(n), Matrix.zeros(y.dim(n + 1), k)])
        for n, k in x.dims.items()
    }
    p_comps = {
        n: Matrix.hstack_all(
            [Matrix.zeros(k, x.dim(n)), Matrix.identity(k), Matrix.zeros(k, y.dim(n + 1))]
        )
        for n, k in y.dims.items()
    }
    tau = ChainMap(x, cocyl, tau_comps)
    p = ChainMap(cocyl, y, p_comps)
    logger.debug("cocylinder of %s has dims %s", f, cocyl.dims)
    return Factorization(tau, cocyl, p, FactorizationKind.F_TYPE, STANDARD)


def detour_cocylinder_factor(f: ChainMap) -> Factorization:
    """
    F-factorize ``f`` through the cylinder of the identity first.

    ``X -> Cyl(id_X)`` is followed by the cocylinder factorization of
    ``f ∘ σ_X``; the middle object differs from the standard one.
    """
    through = cylinder_factor(ChainMap.identity(f.source))
    inner = cocylinder_factor(f @ through.second)
    return Factorization(
        inner.first @ through.first, inner.middle, inner.second, FactorizationKind.F_TYPE, DETOUR
    )


def detour_cylinder_factor(f: ChainMap) -> Factorization:
    """
    C-factorize ``f`` through the cocylinder of the identity on its target.

    The cylinder factorization of ``τ_Y ∘ f`` is composed with ``p_Y``.
    """
    through = cocylinder_factor(ChainMap.identity(f.target))
    inner = cylinder_factor(through.first @ f)
    return Factorization(
        inner.first, inner.middle, through.second @ inner.second, FactorizationKind.C_TYPE, DETOUR
    )


def _check_square(f: ChainMap, f2: ChainMap, a: ChainMap, b: ChainMap) -> None:
    if a.source != f.source or a.target != f2.source or b.source != f.target or b.target != f2.target:
        raise ChainError("square maps do not connect the two factored maps")
    if f2 @ a != b @ f:
        raise ChainError("square of factored maps does not commute")


def cylinder_map(first: Factorization, second: Factorization, a: ChainMap, b: ChainMap) -> ChainMap:
    """
    Return the map of standard cylinders ``(x, x', y) -> (a x, a x', b y)``.

    ``first`` and ``second`` factor f and f2 with ``f2 ∘ a = b ∘ f``.
    """
    f = first.second @ first.first
    f2 = second.second @ second.first
    _check_square(f, f2, a, b)
    comps = {
        n: Matrix.block_diagonal(a.comp(n), a.comp(n - 1), b.comp(n)) for n in first.middle.dims
    }
    return ChainMap(first.middle, second.middle, comps)


def cocylinder_map(first: Factorization, second: Factorization, a: ChainMap, b: ChainMap) -> ChainMap:
    """Return the map of standard cocylinders ``(x, y, y') -> (a x, b y, b y')``."""
    f = first.second @ first.first
    f2 = second.second @ second.first
    _check_square(f, f2, a, b)
    comps = {
        n: Matrix.block_diagonal(a.comp(n), b.comp(n), b.comp(n + 1)) for n in first.middle.dims
    }
    return ChainMap(first.middle, second.middle, comps)
