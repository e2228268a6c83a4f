import logging
from dataclasses import dataclass, field
from typing import Any, List, Optional

from categories import Square, StructuredCategory

from .exceptions import EngineError, InvalidWitness
from .join import JoinDiagram, join, join_map_between
from .lifting import WeakLifting, pull_lifting, strict_lift, weak_section


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaneaLevel:
    """
    One level ``p_k: G_k -> B`` of a Ganea tower.

    Attributes:
        level (int): k.
        obj (Any): G_k.
        p (Any): The Ganea map p_k.
        join (Optional[JoinDiagram]): The join of ``0 -> B`` and p_{k-1}
            that produced this level; None at level 0.
    """

    level: int
    obj: Any
    p: Any
    join: Optional[JoinDiagram] = None

    @property
    def fibre(self) -> Optional[Any]:
        """The fibre of p_{k-1}, the pullback object of this level's join."""
        return None if self.join is None else self.join.fibre


@dataclass
class GaneaTower:
    """
    The Ganea maps over a base object, extended on demand.

    Attributes:
        base (Any): B.
        levels (List[GaneaLevel]): Levels 0..height computed so far.
    """

    base: Any
    levels: List[GaneaLevel] = field(default_factory=list)

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    def level(self, k: int) -> GaneaLevel:
        return self.levels[k]

    def extend(self, category: StructuredCategory, n: int) -> "GaneaTower":
        """
        Compute levels up to ``n``.

        Raises:
            ValueError: If n is negative.
        """
        if n < 0:
            raise ValueError("tower height must be non-negative")
        zero = category.zero_object()
        point = category.zero_map(zero, self.base)
        if not self.levels:
            self.levels.append(GaneaLevel(0, zero, point))
        while self.height < n:
            previous = self.levels[-1]
            jd = join(category, point, previous.p)
            self.levels.append(GaneaLevel(previous.level + 1, jd.obj, jd.join_map, jd))
            logger.info("Ganea level %d: %s", self.height, category.describe(jd.obj))
        return self


def ganea_tower(category: StructuredCategory, base: Any, n: int) -> GaneaTower:
    """
    Compute the Ganea maps ``p_0, ..., p_n`` over ``base``.

    Level 0 is the zero map ``0 -> B``; level k is the join map of ``0 -> B``
    and ``p_{k-1}``.
    """
    return GaneaTower(base).extend(category, n)


def ganea_map(
    category: StructuredCategory,
    phi: Any,
    n: int,
    source_tower: Optional[GaneaTower] = None,
    target_tower: Optional[GaneaTower] = None,
) -> List[Any]:
    """
    Return the induced maps ``G_k(φ)`` for ``k = 0..n``.

    Each level satisfies ``p'_k ∘ G_k(φ) = φ ∘ p_k`` exactly.

    Args:
        category (StructuredCategory): The ambient category.
        phi (Any): Map ``B -> B'``.
        n (int): Top level.
        source_tower (Optional[GaneaTower]): Tower over B to reuse.
        target_tower (Optional[GaneaTower]): Tower over B' to reuse.

    Returns:
        List[Any]: ``[G_0(φ), ..., G_n(φ)]``.

    Raises:
        EngineError: If a level fails to commute, which means the instance's
            factorizations are not functorial.
    """
    src = (source_tower or GaneaTower(phi.source)).extend(category, n)
    tgt = (target_tower or GaneaTower(phi.target)).extend(category, n)
    zero = category.zero_object()
    maps = [category.identity(zero)]
    for k in range(1, n + 1):
        morphism = join_map_between(
            category, src.level(k).join, tgt.level(k).join, category.identity(zero), maps[-1], phi
        )
        lhs = category.compose(tgt.level(k).p, morphism.q)
        rhs = category.compose(phi, src.level(k).p)
        if not category.maps_equal(lhs, rhs):
            raise EngineError(f"Ganea map does not commute at level {k}")
        maps.append(morphism.q)
    return maps


@dataclass(frozen=True)
class CatResult:
    """
    Outcome of the category computation.

    Attributes:
        value (Optional[int]): The least level with a weak section, None if
            none exists up to ``max_n``.
        max_n (int): Largest level examined.
        section (Optional[WeakLifting]): Weak section of p_value.
        tower (GaneaTower): The tower that was computed.
    """

    value: Optional[int]
    max_n: int
    section: Optional[WeakLifting]
    tower: GaneaTower

    @property
    def exceeded(self) -> bool:
        return self.value is None


def cat_of(
    category: StructuredCategory, x: Any, max_n: int = 4, tower: Optional[GaneaTower] = None
) -> CatResult:
    """
    Find the least n ≤ max_n such that p_n admits a weak section.

    Levels are computed only as far as needed.
    """
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    tower = tower or GaneaTower(x)
    for n in range(max_n + 1):
        tower.extend(category, n)
        section = weak_section(category, tower.level(n).p)
        if section is not None:
            logger.info("cat = %d", n)
            return CatResult(n, max_n, section, tower)
    logger.info("cat exceeds %d", max_n)
    return CatResult(None, max_n, None, tower)


def _require_section(category: StructuredCategory, section: WeakLifting, tower: GaneaTower, n: int) -> None:
    if section.g != tower.level(n).p or section.f != category.identity(tower.base):
        raise InvalidWitness(f"not a weak section of p_{n} over {category.describe(tower.base)}")


def restrict_section(category: StructuredCategory, section: WeakLifting, b: Any, n: int) -> WeakLifting:
    """
    Move a weak section of ``p_n`` over B to one over B' along a weak equivalence ``b: B' -> B``.

    The fibration of the section is pulled back along b; the pulled-back
    section and ``G_n(b)`` meet in the pullback, which receives ``p_n`` over
    B' by a weak equivalence.

    Raises:
        InvalidWitness: If ``section`` is not a weak section of p_n over B.
        LiftFailure: If b is not a weak equivalence, so a filler is missing.
    """
    c = category.compose
    src = GaneaTower(b.source).extend(category, n)
    tgt = GaneaTower(b.target).extend(category, n)
    _require_section(category, section, tgt, n)
    if category.maps_equal(b, category.identity(b.target)):
        return section
    g_b = ganea_map(category, b, n, src, tgt)[n]
    pb = category.pullback_along_fibration(b, section.fibration)
    pulled = category.pullback_map(pb, category.identity(b.source), c(section.section, b))
    fact = category.f_factorize(pb.pr_f)
    model = WeakLifting(category.identity(b.source), pb.pr_f, fact, c(fact.first, pulled))
    e = category.pullback_map(pb, src.level(n).p, c(section.factorization.first, g_b))
    return pull_lifting(category, model, e, src.level(n).p)


def carry_section(
    category: StructuredCategory, section: WeakLifting, p: Any, start: Any, n: int
) -> WeakLifting:
    """
    Carry a weak section of ``p_n`` over E along ``p: E -> B`` to one over B.

    ``start: Y -> E`` must make ``j = p ∘ start`` a trivial cofibration. The
    Ganea map ``G_n(p)`` induces a map between F-factorizations, and the
    section over E after ``start`` fills the square of j against the
    factored ``p_n`` over B.

    Raises:
        InvalidWitness: If ``section`` is not a weak section of p_n over E.
        LiftFailure: If the guaranteed filler is not found.
    """
    over_e = GaneaTower(p.source).extend(category, n)
    over_b = GaneaTower(p.target).extend(category, n)
    _require_section(category, section, over_e, n)
    g_p = ganea_map(category, p, n, over_e, over_b)[n]
    fact = category.f_factorize(over_b.level(n).p)
    induced = category.factorization_map(section.factorization, fact, g_p, p)
    square = Square(
        category.compose(p, start),
        fact.second,
        category.compose(induced, category.compose(section.section, start)),
        category.identity(p.target),
    )
    h = strict_lift(category, square, "the carried section")
    return WeakLifting(category.identity(p.target), over_b.level(n).p, fact, h)
