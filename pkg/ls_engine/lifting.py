import logging
from dataclasses import dataclass
from typing import Any, List, Optional

from categories import Factorization, Square, StructuredCategory

from .exceptions import LiftFailure, MismatchError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeakLifting:
    """
    A weak lifting of ``f: A -> B`` along ``g: C -> B``.

    Attributes:
        f (Any): The map being lifted.
        g (Any): The map it is lifted along.
        factorization (Factorization): ``g = p ∘ τ`` with p a fibration.
        section (Any): ``s: A -> E`` with ``p ∘ s = f``.
    """

    f: Any
    g: Any
    factorization: Factorization
    section: Any

    @property
    def fibration(self) -> Any:
        return self.factorization.second


def require_common_target(f: Any, g: Any) -> None:
    if f.target != g.target:
        raise MismatchError("maps must share a target")


def require_common_source(f: Any, g: Any) -> None:
    if f.source != g.source:
        raise MismatchError("maps must share a source")


def weak_lifting(
    category: StructuredCategory, f: Any, g: Any, factorization: Optional[Factorization] = None
) -> Optional[WeakLifting]:
    """
    Decide whether ``f`` weakly lifts along ``g``.

    Args:
        category (StructuredCategory): The ambient category.
        f (Any): Map ``A -> B``.
        g (Any): Map ``C -> B``.
        factorization (Optional[Factorization]): An F-factorization of g to
            use instead of the instance's own.

    Returns:
        Optional[WeakLifting]: The lifting, or None if there is none.

    Raises:
        MismatchError: If f and g have different targets.
    """
    require_common_target(f, g)
    fact = factorization or category.f_factorize(g)
    s = category.lift_along(f, fact.second)
    if s is None:
        logger.debug("no weak lifting along a %s factorization", fact.strategy)
        return None
    return WeakLifting(f, g, fact, s)


def weak_section(
    category: StructuredCategory, g: Any, factorization: Optional[Factorization] = None
) -> Optional[WeakLifting]:
    """Return a weak section of ``g``: a weak lifting of the identity of its target."""
    return weak_lifting(category, category.identity(g.target), g, factorization)


def check_weak_lifting(category: StructuredCategory, lifting: WeakLifting) -> List[str]:
    """Return the equations a weak lifting fails, empty if it is valid."""
    failures = []
    fact = lifting.factorization
    if not category.composable(fact.second, fact.first):
        failures.append("factorization legs do not compose")
    elif not category.maps_equal(category.compose(fact.second, fact.first), lifting.g):
        failures.append("factorization does not compose to the lifted-along map")
    if not category.is_weq(fact.first):
        failures.append("first factor is not a weak equivalence")
    if not category.is_fibration(fact.second):
        failures.append("second factor is not a fibration")
    if not category.composable(fact.second, lifting.section):
        failures.append("section does not land in the factorization middle")
    elif not category.maps_equal(category.compose(fact.second, lifting.section), lifting.f):
        failures.append("p ∘ s differs from the lifted map")
    return failures


def strict_lift(category: StructuredCategory, square: Square, what: str) -> Any:
    """
    Return a filler the lifting axiom guarantees.

    Raises:
        LiftFailure: If the instance finds none.
    """
    filler = category.lift(square)
    if filler is None:
        raise LiftFailure(f"no filler for {what}")
    return filler


def push_lifting(category: StructuredCategory, lifting: WeakLifting, e: Any, m: Any) -> WeakLifting:
    """
    Carry a weak lifting along ``t`` to one along ``m``, given ``e`` with ``m ∘ e = t``.

    Raises:
        MismatchError: If ``m ∘ e`` differs from the lifted-along map.
    """
    base = category.identity(m.target)
    if not category.maps_equal(category.compose(m, e), lifting.g):
        raise MismatchError("map does not lie over the lifted-along map")
    fact = category.f_factorize(m)
    induced = category.factorization_map(lifting.factorization, fact, e, base)
    return WeakLifting(lifting.f, m, fact, category.compose(induced, lifting.section))


def pull_lifting(category: StructuredCategory, lifting: WeakLifting, e: Any, t: Any) -> WeakLifting:
    """
    Carry a weak lifting along ``m`` back to one along ``t`` through a weak equivalence.

    ``e: T -> M`` satisfies ``m ∘ e = t``. The induced map ``ê`` of
    F-factorization middles is factored as ``p_e ∘ τ_e``; the section is
    lifted through the trivial fibration ``p_e`` and brought back by a
    filler of ``τ_e`` against the fibration over T.

    Raises:
        MismatchError: If ``m ∘ e`` differs from t.
        LiftFailure: If e is not a weak equivalence, so a filler is missing.
    """
    c = category.compose
    if not category.maps_equal(c(lifting.g, e), t):
        raise MismatchError("map does not lie over the lifted-along map")
    fact = category.f_factorize(t)
    induced = category.factorization_map(fact, lifting.factorization, e, category.identity(t.target))
    split = category.f_factorize(induced)
    zero = category.zero_object()
    a = lifting.f.source
    v = strict_lift(
        category,
        Square(
            category.zero_map(zero, a), split.second, category.zero_map(zero, split.middle), lifting.section
        ),
        "the section through a trivial fibration",
    )
    r = strict_lift(
        category,
        Square(split.first, fact.second, category.identity(fact.middle), c(lifting.fibration, split.second)),
        "the retraction onto the factorization middle",
    )
    return WeakLifting(lifting.f, t, fact, c(r, v))
