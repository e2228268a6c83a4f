import logging
from dataclasses import dataclass
from enum import Enum
from itertools import islice, product
from typing import Iterator, Optional

from categories import (
    Factorization,
    FactorizationKind,
    Pullback,
    Pushout,
    Replacement,
    Square,
    StructuredCategory,
)
from chains import (
    ChainMap,
    Complex,
    MapConstraint,
    SupportGuardError,
    chain_map_space,
    cocylinder_factor,
    cocylinder_map,
    cycle_inclusion,
    cylinder_factor,
    cylinder_map,
    detour_cocylinder_factor,
    detour_cylinder_factor,
    dualize,
    dualize_map,
    homology_dims,
    homology_projection,
    is_quasi_iso,
    pullback,
    pullback_map,
    pushout,
    pushout_map,
    solve_chain_map,
    validate,
)
from chains.constructions import STANDARD
from linalg import Matrix


logger = logging.getLogger(__name__)


class ReplacementMode(Enum):
    """How cofibrant and fibrant models are built."""

    IDENTITY = "identity"
    GENERIC = "generic"  # cylinder / cocylinder of the identity


class FactorizationStrategy(Enum):
    """Which construction backs a factorization."""

    STANDARD = "standard"
    DETOUR = "detour"


@dataclass(frozen=True)
class ChainConfig:
    """
    Configuration of the chain complex instance.

    Attributes:
        replacement_mode (ReplacementMode): Identity models or the generic
            cylinder/cocylinder models. Defaults to IDENTITY.
        support_guard (int): Largest absolute degree any constructed complex
            may occupy. Defaults to 32.
        f_strategy (FactorizationStrategy): Construction of F-factorizations.
        c_strategy (FactorizationStrategy): Construction of C-factorizations.
        domination_budget (int): Number of small-entry candidate maps tried
            by the domination search after the homology candidate.
    """

    replacement_mode: ReplacementMode = ReplacementMode.IDENTITY
    support_guard: int = 32
    f_strategy: FactorizationStrategy = FactorizationStrategy.STANDARD
    c_strategy: FactorizationStrategy = FactorizationStrategy.STANDARD
    domination_budget: int = 8


class ChainInstance(StructuredCategory):
    """
    Finitely supported rational chain complexes as a structured category.

    Fibrations are the degreewise surjections, cofibrations the degreewise
    injections and weak equivalences the quasi-isomorphisms; the zero object
    is the empty complex. Every object is both fibrant and cofibrant.
    """

    supports_duality = True

    def __init__(self, config: Optional[ChainConfig] = None):
        """
        Initialize a new instance.

        Args:
            config (Optional[ChainConfig]): Settings. Defaults to ChainConfig().
        """
        self.config = config or ChainConfig()

    def guard(self, x: Complex) -> Complex:
        """
        Return ``x`` unchanged if its support lies within the degree guard.

        Raises:
            SupportGuardError: If some degree exceeds the guard in absolute value.
        """
        span = x.degree_range()
        limit = self.config.support_guard
        if span is not None and (span[0] < -limit or span[1] > limit):
            raise SupportGuardError(
                f"complex occupies degrees {span[0]}..{span[1]}, outside ±{limit}"
            )
        return x

    def zero_object(self) -> Complex:
        return Complex.zero()

    def identity(self, x: Complex) -> ChainMap:
        return ChainMap.identity(x)

    def zero_map(self, source: Complex, target: Complex) -> ChainMap:
        return ChainMap.zero(source, target)

    def is_object(self, x: Complex) -> bool:
        return validate(x).ok

    def is_morphism(self, m: ChainMap) -> bool:
        return self.is_object(m.source) and self.is_object(m.target) and m.first_noncommuting_degree() is None

    def is_fibration(self, m: ChainMap) -> bool:
        return m.is_surjective()

    def is_cofibration(self, m: ChainMap) -> bool:
        return m.is_injective()

    def is_weq(self, m: ChainMap) -> bool:
        return is_quasi_iso(m)

    def f_factorize(self, m: ChainMap) -> Factorization:
        if self.config.f_strategy is FactorizationStrategy.DETOUR:
            fact = detour_cocylinder_factor(m)
        else:
            fact = cocylinder_factor(m)
        self.guard(fact.middle)
        return fact

    def c_factorize(self, m: ChainMap) -> Factorization:
        if self.config.c_strategy is FactorizationStrategy.DETOUR:
            fact = detour_cylinder_factor(m)
        else:
            fact = cylinder_factor(m)
        self.guard(fact.middle)
        return fact

    def pullback_along_fibration(self, f: ChainMap, p: ChainMap) -> Pullback:
        pb = pullback(f, p)
        self.guard(pb.obj)
        return pb

    def pushout_along_cofibration(self, i: ChainMap, g: ChainMap) -> Pushout:
        po = pushout(i, g)
        self.guard(po.obj)
        return po

    def pullback_map(self, pb: Pullback, a: ChainMap, b: ChainMap) -> ChainMap:
        return pullback_map(pb, a, b)

    def pushout_map(self, po: Pushout, u: ChainMap, v: ChainMap) -> ChainMap:
        return pushout_map(po, u, v)

    def lift(self, square: Square) -> Optional[ChainMap]:
        """Solve for ``h`` with ``h ∘ i = top`` and ``p ∘ h = bottom`` exactly."""
        if square.p @ square.top != square.bottom @ square.i:
            logger.debug("lifting square does not commute")
            return None
        return solve_chain_map(
            square.i.target,
            square.p.source,
            [
                MapConstraint(square.top, right=square.i),
                MapConstraint(square.bottom, left=square.p),
            ],
        )

    def lift_along(self, f: ChainMap, p: ChainMap) -> Optional[ChainMap]:
        return solve_chain_map(f.source, p.source, [MapConstraint(f, left=p)])

    def cofibrant_replace(self, x: Complex) -> Replacement:
        if self.config.replacement_mode is ReplacementMode.IDENTITY:
            return Replacement(x, ChainMap.identity(x))
        fact = cylinder_factor(ChainMap.identity(x))
        return Replacement(self.guard(fact.middle), fact.second)

    def fibrant_replace(self, x: Complex) -> Replacement:
        if self.config.replacement_mode is ReplacementMode.IDENTITY:
            return Replacement(x, ChainMap.identity(x))
        fact = cocylinder_factor(ChainMap.identity(x))
        return Replacement(self.guard(fact.middle), fact.first)

    def replace_map_cofibrant(self, f: ChainMap) -> ChainMap:
        if self.config.replacement_mode is ReplacementMode.IDENTITY:
            return f
        return cylinder_map(
            cylinder_factor(ChainMap.identity(f.source)),
            cylinder_factor(ChainMap.identity(f.target)),
            f,
            f,
        )

    def replace_map_fibrant(self, f: ChainMap) -> ChainMap:
        if self.config.replacement_mode is ReplacementMode.IDENTITY:
            return f
        return cocylinder_map(
            cocylinder_factor(ChainMap.identity(f.source)),
            cocylinder_factor(ChainMap.identity(f.target)),
            f,
            f,
        )

    def factorization_map(
        self, first: Factorization, second: Factorization, top: ChainMap, bottom: ChainMap
    ) -> ChainMap:
        """Use the block formulas for standard factorizations, a lift otherwise."""
        if first.strategy == STANDARD and second.strategy == STANDARD and first.kind is second.kind:
            if first.kind is FactorizationKind.F_TYPE:
                return cocylinder_map(first, second, top, bottom)
            return cylinder_map(first, second, top, bottom)
        return super().factorization_map(first, second, top, bottom)

    def dualize(self, x: Complex) -> Complex:
        return self.guard(dualize(x))

    def dualize_map(self, f: ChainMap) -> ChainMap:
        return dualize_map(f)

    def weakly_equivalent(self, x: Complex, y: Complex) -> bool:
        # over a field the graded homology decides weak equivalence
        return homology_dims(x) == homology_dims(y)

    def homology_candidate(self, qx: Complex, ry: Complex) -> ChainMap:
        """
        Return ``QX -> H(QX) -> H(RY) -> RY`` through the leading homology summands.

        In each degree the middle map is ``[I | 0]`` (or its truncation when
        the target homology is larger).
        """
        project = homology_projection(qx)
        include = cycle_inclusion(ry)
        comps = {}
        for n, k in include.source.dims.items():
            width = project.target.dim(n)
            comps[n] = Matrix(k, width, [[1 if i == j else 0 for j in range(width)] for i in range(k)])
        middle = ChainMap(project.target, include.source, comps)
        return include @ middle @ project

    def small_entry_candidates(self, qx: Complex, ry: Complex) -> Iterator[ChainMap]:
        """
        Yield nonzero combinations of a chain-map basis with coefficients in {-1, 0, 1}.

        Combinations are produced in lexicographic coefficient order and the
        search stops after ``domination_budget`` maps.
        """
        space = chain_map_space(qx, ry)
        if space is None or not space.basis:
            return
        basis = space.basis

        def combinations() -> Iterator[ChainMap]:
            for coeffs in product((1, -1, 0), repeat=len(basis)):
                if not any(coeffs):
                    continue
                total = ChainMap.zero(qx, ry)
                for c, b in zip(coeffs, basis):
                    if c:
                        total = total + b.scale(c)
                yield total

        yield from islice(combinations(), self.config.domination_budget)

    def domination_candidates(self, qx: Complex, ry: Complex) -> Iterator[ChainMap]:
        logger.debug("domination search %s -> %s", homology_dims(qx), homology_dims(ry))
        yield self.homology_candidate(qx, ry)
        yield from self.small_entry_candidates(qx, ry)

    def describe(self, x: Complex) -> str:
        return f"dims {x.dims}, homology {homology_dims(x)}"
