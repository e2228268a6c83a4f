import logging

from categories.diagrams import Pullback, Pushout
from linalg import Matrix, kernel_basis, solve_linear

from .chain_map import ChainMap
from .complex import Complex
from .exceptions import ChainError


logger = logging.getLogger(__name__)


def pullback(f: ChainMap, p: ChainMap) -> Pullback:
    """
    Pull back ``f: A -> B`` and ``p: E -> B``.

    ``P_n`` is the kernel of ``[f_n | -p_n]`` inside ``A_n ⊕ E_n``, with the
    deterministic kernel basis of the linear algebra layer. The induced
    differential solves ``K_{n-1} D = (d ⊕ d) K_n``.

    Raises:
        ChainError: If the maps do not share a target.
    """
    if f.target != p.target:
        raise ChainError("pullback needs maps with a common target")
    a, e = f.source, p.source
    degrees = sorted(set(a.dims) | set(e.dims))
    bases = {n: kernel_basis(f.comp(n).hstack(-p.comp(n))) for n in degrees}
    dims = {n: basis.cols for n, basis in bases.items()}

    def basis(n: int) -> Matrix:
        return bases.get(n, Matrix.zeros(a.dim(n) + e.dim(n), 0))

    diff = {}
    for n in degrees:
        image = Matrix.block_diagonal(a.diff(n), e.diff(n)) @ basis(n)
        solved = solve_linear(basis(n - 1), image)
        if solved is None:
            raise ChainError(f"pullback differential in degree {n} does not restrict")
        diff[n] = solved
    obj = Complex(dims, diff)
    pr_f = ChainMap(obj, a, {n: basis(n).row_range(0, a.dim(n)) for n in obj.dims})
    pr_p = ChainMap(obj, e, {n: basis(n).row_range(a.dim(n), a.dim(n) + e.dim(n)) for n in obj.dims})
    logger.debug("pullback has dims %s", obj.dims)
    return Pullback(obj, pr_f, pr_p, f, p)


def pushout(i: ChainMap, g: ChainMap) -> Pushout:
    """
    Push out ``i: A -> X`` and ``g: A -> Y``.

    ``Q_n`` is the cokernel of ``[i_n; -g_n]``, presented by the rows ``π_n``
    of a basis of its left null space.

    Raises:
        ChainError: If the maps do not share a source.
    """
    if i.source != g.source:
        raise ChainError("pushout needs maps with a common source")
    x, y = i.target, g.target
    degrees = sorted(set(x.dims) | set(y.dims))
    quotients = {
        n: kernel_basis(i.comp(n).vstack(-g.comp(n)).transpose()).transpose() for n in degrees
    }
    dims = {n: q.rows for n, q in quotients.items()}

    def quotient(n: int) -> Matrix:
        return quotients.get(n, Matrix.zeros(0, x.dim(n) + y.dim(n)))

    diff = {}
    for n in degrees:
        image = quotient(n - 1) @ Matrix.block_diagonal(x.diff(n), y.diff(n))
        solved = solve_linear(quotient(n).transpose(), image.transpose())
        if solved is None:
            raise ChainError(f"pushout differential in degree {n} does not descend")
        diff[n] = solved.transpose()
    obj = Complex(dims, diff)
    in_i = ChainMap(x, obj, {n: quotient(n).col_range(0, x.dim(n)) for n in x.dims})
    in_g = ChainMap(y, obj, {n: quotient(n).col_range(x.dim(n), x.dim(n) + y.dim(n)) for n in y.dims})
    logger.debug("pushout has dims %s", obj.dims)
    return Pushout(obj, in_i, in_g, i, g)


def pullback_map(pb: Pullback, a: ChainMap, b: ChainMap) -> ChainMap:
    """
    Return the unique ``m: D -> P`` with ``pr_f ∘ m = a`` and ``pr_p ∘ m = b``.

    Raises:
        ChainError: If ``f ∘ a != p ∘ b``.
    """
    if a.source != b.source or a.target != pb.f.source or b.target != pb.p.source:
        raise ChainError("test pair does not fit the pullback")
    if pb.f @ a != pb.p @ b:
        raise ChainError("test pair does not commute over the base")
    source = a.source
    comps = {}
    for n in source.dims:
        basis = pb.pr_f.comp(n).vstack(pb.pr_p.comp(n))
        solved = solve_linear(basis, a.comp(n).vstack(b.comp(n)))
        if solved is None:
            raise ChainError(f"no mediating map in degree {n}")
        comps[n] = solved
    return ChainMap(source, pb.obj, comps)


def pushout_map(po: Pushout, u: ChainMap, v: ChainMap) -> ChainMap:
    """
    Return the unique ``m: Q -> T`` with ``m ∘ in_i = u`` and ``m ∘ in_g = v``.

    Raises:
        ChainError: If ``u ∘ i != v ∘ g``.
    """
    if u.target != v.target or u.source != po.i.target or v.source != po.g.target:
        raise ChainError("test pair does not fit the pushout")
    if u @ po.i != v @ po.g:
        raise ChainError("test pair does not commute under the apex")
    target = u.target
    comps = {}
    for n in po.obj.dims:
        legs = po.in_i.comp(n).hstack(po.in_g.comp(n))
        values = u.comp(n).hstack(v.comp(n))
        solved = solve_linear(legs.transpose(), values.transpose())
        if solved is None:
            raise ChainError(f"no mediating map in degree {n}")
        comps[n] = solved.transpose()
    return ChainMap(po.obj, target, comps)
