"""
Domination of objects.

``X ≫ Y`` holds when some map ``α: QX -> RY`` from a cofibrant model of X
to a fibrant model of Y admits a weak lifting of ``i_Y: Y -> RY``. A
witness records α, the F-factorization it was lifted through and the
lift, so that it can be checked without repeating the search.
"""

import logging
from dataclasses import dataclass
from typing import Any, Iterator, List, Optional

from categories import Factorization, FactorizationKind, Replacement, Square, StructuredCategory

from .exceptions import EngineError, InvalidWitness, LiftFailure
from .ganea import GaneaTower, carry_section
from .lifting import WeakLifting, check_weak_lifting, strict_lift, weak_lifting, weak_section


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DominationWitness:
    """
    Evidence for ``X ≫ Y``.

    Attributes:
        x (Any): The dominating object.
        y (Any): The dominated object.
        cofibrant (Replacement): ``p_X: QX -> X``.
        fibrant (Replacement): ``i_Y: Y -> RY``.
        alpha (Any): ``QX -> RY``.
        factorization (Factorization): ``α = p ∘ τ`` through E.
        section (Any): ``s: Y -> E`` with ``p ∘ s = i_Y``.
    """

    x: Any
    y: Any
    cofibrant: Replacement
    fibrant: Replacement
    alpha: Any
    factorization: Factorization
    section: Any

    def as_weak_lifting(self) -> WeakLifting:
        return WeakLifting(self.fibrant.map, self.alpha, self.factorization, self.section)


def check_domination(category: StructuredCategory, witness: DominationWitness) -> List[str]:
    """Return the witness equations that fail, empty if the witness is valid."""
    failures = []
    p_x, i_y = witness.cofibrant.map, witness.fibrant.map
    if p_x.target != witness.x or p_x.source != witness.alpha.source:
        failures.append("cofibrant model does not match the dominating object")
    elif not category.is_trivial_fibration(p_x):
        failures.append("p_X is not a trivial fibration")
    if i_y.source != witness.y or i_y.target != witness.alpha.target:
        failures.append("fibrant model does not match the dominated object")
    elif not category.is_trivial_cofibration(i_y):
        failures.append("i_Y is not a trivial cofibration")
    if failures:
        return failures
    return check_weak_lifting(category, witness.as_weak_lifting())


def _witness(
    category: StructuredCategory, x: Any, y: Any, qx: Replacement, ry: Replacement, alpha: Any
) -> Optional[DominationWitness]:
    lifting = weak_lifting(category, ry.map, alpha)
    if lifting is None:
        return None
    return DominationWitness(x, y, qx, ry, alpha, lifting.factorization, lifting.section)


def _candidates(
    category: StructuredCategory, x: Any, y: Any, qx: Replacement, ry: Replacement
) -> Iterator[Any]:
    if category.objects_equal(x, y):
        yield category.compose(ry.map, qx.map)
    yield from category.domination_candidates(qx.obj, ry.obj)


def dominates(category: StructuredCategory, x: Any, y: Any) -> Optional[DominationWitness]:
    """
    Search for a witness of ``X ≫ Y``.

    For ``X = Y`` the composite ``QX -> X -> RX`` is tried first; then the
    instance's candidates are tried in order.

    Returns:
        Optional[DominationWitness]: The first candidate that works, or None
            once the candidates are exhausted.
    """
    qx = category.cofibrant_replace(x)
    ry = category.fibrant_replace(y)
    for tried, alpha in enumerate(_candidates(category, x, y, qx, ry), start=1):
        witness = _witness(category, x, y, qx, ry, alpha)
        if witness is not None:
            logger.debug("domination found after %d candidates", tried)
            return witness
    logger.debug("no domination: %s over %s", category.describe(x), category.describe(y))
    return None


def domination_from_weak_section(
    category: StructuredCategory, f: Any, section: WeakLifting
) -> DominationWitness:
    """
    Turn a weak section of ``f: X -> Y`` into a witness of ``X ≫ Y``.

    With ``f = p ∘ τ`` and ``p ∘ s = id``, factor ``i_Y ∘ p = g ∘ h``; then
    ``α = i_Y ∘ f ∘ p_X`` factors as ``g ∘ (h ∘ τ ∘ p_X)`` and ``h ∘ s``
    lifts ``i_Y``.

    Raises:
        InvalidWitness: If ``section`` is not a weak section of f.
    """
    if section.g != f or section.f != category.identity(f.target):
        raise InvalidWitness("section does not belong to this map")
    problems = check_weak_lifting(category, section)
    if problems:
        raise InvalidWitness("; ".join(problems))
    x, y = f.source, f.target
    qx = category.cofibrant_replace(x)
    ry = category.fibrant_replace(y)
    tau, p = section.factorization.first, section.factorization.second
    outer = category.f_factorize(category.compose(ry.map, p))
    first = category.compose(outer.first, category.compose(tau, qx.map))
    alpha = category.compose(ry.map, category.compose(f, qx.map))
    fact = Factorization(first, outer.middle, outer.second, FactorizationKind.F_TYPE, outer.strategy)
    return DominationWitness(
        x, y, qx, ry, alpha, fact, category.compose(outer.first, section.section)
    )


def transfer_section(
    category: StructuredCategory,
    witness: DominationWitness,
    n: int,
    section: Optional[WeakLifting] = None,
) -> WeakLifting:
    """
    Carry a weak section of ``p_n`` over E to one of ``p_n`` over RY.

    ``p: E -> RY`` is the fibration of the witness and ``p ∘ s = i_Y`` is a
    trivial cofibration, so :func:`carry_section` applies with ``s`` as the
    starting map.

    Args:
        category (StructuredCategory): The ambient category.
        witness (DominationWitness): ``X ≫ Y``.
        n (int): The level.
        section (Optional[WeakLifting]): A weak section of ``p_n`` over E;
            computed when omitted.

    Returns:
        WeakLifting: A weak section of ``p_n`` over RY, so ``cat(Y) ≤ n``.

    Raises:
        EngineError: If no weak section over E exists at level n.
        InvalidWitness: If ``section`` is not a weak section of p_n over E.
        LiftFailure: If the guaranteed filler is not found.
    """
    p = witness.factorization.second
    if section is None:
        section = weak_section(category, GaneaTower(p.source).extend(category, n).level(n).p)
        if section is None:
            raise EngineError(f"p_{n} over the witness middle has no weak section")
    return carry_section(category, section, p, witness.section, n)


def transport_domination(
    category: StructuredCategory, w: Any, witness: DominationWitness
) -> Optional[DominationWitness]:
    """
    Turn ``X ≫ Z`` into ``Y ≫ Z`` along a weak equivalence ``w: X -> Y``.

    ``Qw = p' ∘ τ'``; α extends over the middle of that factorization by a
    lift against ``RZ -> 0`` and is restricted along a section of p'.

    Returns:
        Optional[DominationWitness]: The new witness, or None if the new α
            admits no weak lifting.

    Raises:
        InvalidWitness: If w does not start at the dominating object.
        LiftFailure: If a guaranteed filler is not found.
    """
    if w.source != witness.x:
        raise InvalidWitness("weak equivalence does not start at the dominating object")
    if not category.is_weq(w):
        raise InvalidWitness("map is not a weak equivalence")
    zero = category.zero_object()
    rz = witness.fibrant.obj
    qw = category.replace_map_cofibrant(w)
    fact = category.f_factorize(qw)
    extend = strict_lift(
        category,
        Square(fact.first, category.zero_map(rz, zero), witness.alpha, category.zero_map(fact.middle, zero)),
        "the extension of α",
    )
    t = category.lift_along(category.identity(qw.target), fact.second)
    if t is None:
        raise LiftFailure("no section of the trivial fibration p'")
    qy = category.cofibrant_replace(w.target)
    return _witness(category, w.target, witness.y, qy, witness.fibrant, category.compose(extend, t))
