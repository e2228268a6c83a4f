import logging
from dataclasses import dataclass
from typing import Any, List

from categories import Factorization, Pullback, Pushout, StructuredCategory

from .lifting import require_common_target


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JoinDiagram:
    """
    The join of ``f: A -> B`` and ``g: C -> B``.

    ``g = p ∘ τ`` through E; E' is the pullback of f and p with base
    extensions ``p̄: E' -> A`` and ``f̄: E' -> E``; ``f̄ = σ ∘ i`` through Z;
    the join object is the pushout of i and p̄, and the join map is induced
    by f and ``p ∘ σ``.
    """

    f: Any
    g: Any
    f_fact: Factorization
    pullback: Pullback
    c_fact: Factorization
    pushout: Pushout
    join_map: Any

    @property
    def obj(self) -> Any:
        return self.pushout.obj

    @property
    def tau(self) -> Any:
        return self.f_fact.first

    @property
    def p(self) -> Any:
        return self.f_fact.second

    @property
    def p_bar(self) -> Any:
        return self.pullback.pr_f

    @property
    def f_bar(self) -> Any:
        return self.pullback.pr_p

    @property
    def i(self) -> Any:
        return self.c_fact.first

    @property
    def sigma(self) -> Any:
        return self.c_fact.second

    @property
    def fibre(self) -> Any:
        """The pullback object E'."""
        return self.pullback.obj


def join(category: StructuredCategory, f: Any, g: Any) -> JoinDiagram:
    """
    Build the join diagram of ``f: A -> B`` and ``g: C -> B``.

    Raises:
        MismatchError: If the targets differ.
    """
    require_common_target(f, g)
    f_fact = category.f_factorize(g)
    pb = category.pullback_along_fibration(f, f_fact.second)
    c_fact = category.c_factorize(pb.pr_p)
    po = category.pushout_along_cofibration(c_fact.first, pb.pr_f)
    join_map = category.pushout_map(po, category.compose(f_fact.second, c_fact.second), f)
    logger.debug("join object: %s", category.describe(po.obj))
    return JoinDiagram(f, g, f_fact, pb, c_fact, po, join_map)


def check_join(category: StructuredCategory, jd: JoinDiagram) -> List[str]:
    """Return every face of the join diagram that fails to commute or classify."""
    eq, c = category.maps_equal, category.compose
    failures = []
    if not eq(c(jd.p, jd.tau), jd.g):
        failures.append("p ∘ τ != g")
    if not eq(c(jd.f, jd.p_bar), c(jd.p, jd.f_bar)):
        failures.append("pullback square does not commute")
    if not eq(c(jd.sigma, jd.i), jd.f_bar):
        failures.append("σ ∘ i != f̄")
    if not eq(c(jd.pushout.in_i, jd.i), c(jd.pushout.in_g, jd.p_bar)):
        failures.append("pushout square does not commute")
    if not eq(c(jd.join_map, jd.pushout.in_g), jd.f):
        failures.append("join map restricted to A differs from f")
    if not eq(c(jd.join_map, jd.pushout.in_i), c(jd.p, jd.sigma)):
        failures.append("join map restricted to Z differs from p ∘ σ")
    if not category.is_cofibration(jd.i):
        failures.append("i is not a cofibration")
    if not category.is_fibration(jd.p):
        failures.append("p is not a fibration")
    if not (category.is_weq(jd.tau) and category.is_weq(jd.sigma)):
        failures.append("τ or σ is not a weak equivalence")
    return failures


@dataclass(frozen=True)
class JoinMorphism:
    """
    The map of joins induced by a map of cospans, with its intermediate maps.

    Attributes:
        e (Any): E -> E2 between the F-factorization middles.
        e_prime (Any): E' -> E2' between the pullbacks.
        z (Any): Z -> Z2 between the C-factorization middles.
        q (Any): The induced map of join objects.
    """

    e: Any
    e_prime: Any
    z: Any
    q: Any


def join_map_between(
    category: StructuredCategory, jd: JoinDiagram, jd2: JoinDiagram, a: Any, c: Any, b: Any
) -> JoinMorphism:
    """
    Return the map ``jd.obj -> jd2.obj`` induced by ``a: A -> A2``, ``c: C -> C2``, ``b: B -> B2``.

    Requires ``f2 ∘ a = b ∘ f`` and ``g2 ∘ c = b ∘ g``; the result satisfies
    ``jd2.join_map ∘ q = b ∘ jd.join_map``.
    """
    comp = category.compose
    e = category.factorization_map(jd.f_fact, jd2.f_fact, c, b)
    e_prime = category.pullback_map(jd2.pullback, comp(a, jd.p_bar), comp(e, jd.f_bar))
    z = category.factorization_map(jd.c_fact, jd2.c_fact, e_prime, e)
    q = category.pushout_map(
        jd.pushout, comp(jd2.pushout.in_i, z), comp(jd2.pushout.in_g, a)
    )
    return JoinMorphism(e, e_prime, z, q)
