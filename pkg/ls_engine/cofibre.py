import logging
from dataclasses import dataclass
from typing import Any, List

from categories import Factorization, Pushout, StructuredCategory

from .lifting import require_common_source


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CofibreSequence:
    """
    ``A -> Y -> C`` with C the pushout of the cone inclusion ``k: A -> CA`` along f.

    Attributes:
        f (Any): ``A -> Y``.
        cone (Factorization): ``A -> 0`` factored as ``k`` then ``CA -> 0``.
        pushout (Pushout): The pushout of k and f.
    """

    f: Any
    cone: Factorization
    pushout: Pushout

    @property
    def obj(self) -> Any:
        return self.pushout.obj

    @property
    def k(self) -> Any:
        return self.cone.first

    @property
    def cone_obj(self) -> Any:
        return self.cone.middle

    @property
    def p(self) -> Any:
        """``Y -> C``, the cobase extension of k."""
        return self.pushout.in_g

    @property
    def f_bar(self) -> Any:
        """``CA -> C``, the cobase extension of f."""
        return self.pushout.in_i


def cofibre_sequence(category: StructuredCategory, f: Any) -> CofibreSequence:
    zero = category.zero_object()
    cone = category.c_factorize(category.zero_map(f.source, zero))
    po = category.pushout_along_cofibration(cone.first, f)
    logger.debug("cofibre: %s", category.describe(po.obj))
    return CofibreSequence(f, cone, po)


def check_cofibre_sequence(category: StructuredCategory, seq: CofibreSequence) -> List[str]:
    """Return the failed conditions of a cofibre sequence, empty if it is valid."""
    failures = []
    if seq.k.source != seq.f.source:
        failures.append("cone inclusion does not start at the source of f")
        return failures
    if not (category.composable(seq.f_bar, seq.k) and category.composable(seq.p, seq.f)):
        failures.append("cofibre square maps do not compose")
    elif not category.maps_equal(
        category.compose(seq.f_bar, seq.k), category.compose(seq.p, seq.f)
    ):
        failures.append("cofibre square does not commute")
    if not category.is_cofibration(seq.k):
        failures.append("cone inclusion is not a cofibration")
    if not category.is_weq(category.zero_map(seq.cone_obj, category.zero_object())):
        failures.append("cone is not weakly trivial")
    if not category.is_cofibration(seq.p):
        failures.append("Y -> C is not a cofibration")
    return failures


def same_cofibre_sequence(category: StructuredCategory, a: CofibreSequence, b: CofibreSequence) -> bool:
    """True iff every object and map of the two sequences agrees exactly."""
    eq = category.maps_equal
    return (
        category.objects_equal(a.obj, b.obj)
        and category.objects_equal(a.cone_obj, b.cone_obj)
        and eq(a.f, b.f)
        and eq(a.k, b.k)
        and eq(a.p, b.p)
        and eq(a.f_bar, b.f_bar)
    )


@dataclass(frozen=True)
class WeakPushout:
    """
    The weak cobase extension ``f: A -> B`` of ``f': A' -> B'`` by ``a: A' -> A``.

    ``f' = σ ∘ i`` through Z and B is the pushout of i and a.

    Attributes:
        factorization (Factorization): The C-factorization of f'.
        pushout (Pushout): The pushout of i along a.
    """

    factorization: Factorization
    pushout: Pushout

    @property
    def obj(self) -> Any:
        return self.pushout.obj

    @property
    def f(self) -> Any:
        return self.pushout.in_g

    @property
    def x(self) -> Any:
        """``Z -> B``."""
        return self.pushout.in_i


def weak_pushout(category: StructuredCategory, f_prime: Any, a: Any) -> WeakPushout:
    """
    Build the weak push-out of ``f': A' -> B'`` and ``a: A' -> A``.

    Raises:
        MismatchError: If the sources differ.
    """
    require_common_source(f_prime, a)
    fact = category.c_factorize(f_prime)
    return WeakPushout(fact, category.pushout_along_cofibration(fact.first, a))


def homotopy_cofibre(category: StructuredCategory, f_prime: Any) -> WeakPushout:
    """The weak push-out of ``f'`` along ``A' -> 0``."""
    zero = category.zero_object()
    return weak_pushout(category, f_prime, category.zero_map(f_prime.source, zero))
