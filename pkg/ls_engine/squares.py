import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any

from categories import StructuredCategory

from .exceptions import MismatchError


logger = logging.getLogger(__name__)


class Leg(Enum):
    """Which leg of a square is factored before taking the strict (co)limit."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class PullbackSquare:
    """
    A commuting square over the cospan ``f: A -> B``, ``p: E -> B``::

        D --v--> E
        |        |
        u        p
        v        v
        A --f--> B
    """

    f: Any
    p: Any
    u: Any
    v: Any


@dataclass(frozen=True)
class PushoutSquare:
    """
    A commuting square under the span ``i: A -> X``, ``g: A -> Y``::

        A --g--> Y
        |        |
        i        v
        v        v
        X --u--> D
    """

    i: Any
    g: Any
    u: Any
    v: Any


def pullback_comparison(category: StructuredCategory, sq: PullbackSquare, leg: Leg = Leg.RIGHT) -> Any:
    """
    Return the map from D to the pullback taken after F-factoring one leg.

    Raises:
        MismatchError: If the square does not commute.
    """
    c = category.compose
    if not category.maps_equal(c(sq.f, sq.u), c(sq.p, sq.v)):
        raise MismatchError("pullback square does not commute")
    if leg is Leg.RIGHT:
        fact = category.f_factorize(sq.p)
        pb = category.pullback_along_fibration(sq.f, fact.second)
        return category.pullback_map(pb, sq.u, c(fact.first, sq.v))
    fact = category.f_factorize(sq.f)
    pb = category.pullback_along_fibration(sq.p, fact.second)
    return category.pullback_map(pb, sq.v, c(fact.first, sq.u))


def pushout_comparison(category: StructuredCategory, sq: PushoutSquare, leg: Leg = Leg.LEFT) -> Any:
    """
    Return the map to D from the pushout taken after C-factoring one leg.

    Raises:
        MismatchError: If the square does not commute.
    """
    c = category.compose
    if not category.maps_equal(c(sq.u, sq.i), c(sq.v, sq.g)):
        raise MismatchError("pushout square does not commute")
    if leg is Leg.LEFT:
        fact = category.c_factorize(sq.i)
        po = category.pushout_along_cofibration(fact.first, sq.g)
        return category.pushout_map(po, c(sq.u, fact.second), sq.v)
    fact = category.c_factorize(sq.g)
    po = category.pushout_along_cofibration(fact.first, sq.i)
    return category.pushout_map(po, c(sq.v, fact.second), sq.u)


def is_homotopy_pullback(category: StructuredCategory, sq: PullbackSquare, leg: Leg = Leg.RIGHT) -> bool:
    verdict = category.is_weq(pullback_comparison(category, sq, leg))
    logger.debug("homotopy pullback via %s leg: %s", leg.value, verdict)
    return verdict


def is_homotopy_pushout(category: StructuredCategory, sq: PushoutSquare, leg: Leg = Leg.LEFT) -> bool:
    verdict = category.is_weq(pushout_comparison(category, sq, leg))
    logger.debug("homotopy pushout via %s leg: %s", leg.value, verdict)
    return verdict
