from abc import ABC, abstractmethod
from typing import Any, Iterator, Optional

from .diagrams import Factorization, FactorizationKind, Pullback, Pushout, Replacement, Square
from .exceptions import FillerNotFound


class StructuredCategory(ABC):
    """
    A pointed category with weak equivalences, fibrations and cofibrations.

    Implementations provide the zero object, the three classes, both
    factorizations, pullbacks along fibrations, pushouts along cofibrations
    and fillers for lifting squares. Morphisms must expose ``source`` and
    ``target`` attributes and compose with ``g @ f``.

    Every operation built on top of this interface only relies on strict
    (entry-exact) equalities of morphisms.
    """

    supports_duality = False

    @abstractmethod
    def zero_object(self) -> Any:
        """Return the zero object."""

    @abstractmethod
    def identity(self, x: Any) -> Any:
        """Return the identity of ``x``."""

    @abstractmethod
    def zero_map(self, source: Any, target: Any) -> Any:
        """Return the map factoring through the zero object."""

    def compose(self, g: Any, f: Any) -> Any:
        """Return ``g ∘ f``."""
        return g @ f

    def composable(self, g: Any, f: Any) -> bool:
        """True iff ``g ∘ f`` is defined."""
        return self.objects_equal(f.target, g.source)

    def maps_equal(self, f: Any, g: Any) -> bool:
        return f == g

    def objects_equal(self, x: Any, y: Any) -> bool:
        return x == y

    def is_object(self, x: Any) -> bool:
        """Check that data loaded from outside is a well-formed object."""
        return True

    def is_morphism(self, m: Any) -> bool:
        """Check that data loaded from outside is a well-formed morphism."""
        return True

    @abstractmethod
    def is_fibration(self, m: Any) -> bool: ...

    @abstractmethod
    def is_cofibration(self, m: Any) -> bool: ...

    @abstractmethod
    def is_weq(self, m: Any) -> bool: ...

    def is_trivial_fibration(self, m: Any) -> bool:
        return self.is_fibration(m) and self.is_weq(m)

    def is_trivial_cofibration(self, m: Any) -> bool:
        return self.is_cofibration(m) and self.is_weq(m)

    @abstractmethod
    def f_factorize(self, m: Any) -> Factorization:
        """Factor ``m = p ∘ τ`` with τ a trivial cofibration and p a fibration."""

    @abstractmethod
    def c_factorize(self, m: Any) -> Factorization:
        """Factor ``m = σ ∘ i`` with i a cofibration and σ a trivial fibration."""

    @abstractmethod
    def pullback_along_fibration(self, f: Any, p: Any) -> Pullback:
        """Pull back ``f: A -> B`` along the fibration ``p: E -> B``."""

    @abstractmethod
    def pushout_along_cofibration(self, i: Any, g: Any) -> Pushout:
        """Push out the cofibration ``i: A -> X`` along ``g: A -> Y``."""

    @abstractmethod
    def pullback_map(self, pb: Pullback, a: Any, b: Any) -> Any:
        """Return the mediating map into ``pb.obj`` with ``pr_f ∘ m = a`` and ``pr_p ∘ m = b``."""

    @abstractmethod
    def pushout_map(self, po: Pushout, u: Any, v: Any) -> Any:
        """Return the mediating map out of ``po.obj`` with ``m ∘ in_i = u`` and ``m ∘ in_g = v``."""

    @abstractmethod
    def lift(self, square: Square) -> Optional[Any]:
        """Return a filler for ``square``, or None if there is none."""

    def lift_along(self, f: Any, p: Any) -> Optional[Any]:
        """
        Return some ``s`` with ``p ∘ s = f``, or None.

        This is the filler of the square with the zero map into the source
        of ``f`` on the left.
        """
        zero = self.zero_object()
        a = f.source
        square = Square(
            self.zero_map(zero, a), p, self.zero_map(zero, p.source), f
        )
        return self.lift(square)

    @abstractmethod
    def cofibrant_replace(self, x: Any) -> Replacement:
        """Return ``(QX, p_X)`` with ``p_X`` a trivial fibration onto x."""

    @abstractmethod
    def fibrant_replace(self, x: Any) -> Replacement:
        """Return ``(RX, i_X)`` with ``i_X`` a trivial cofibration out of x."""

    def replace_map_cofibrant(self, f: Any) -> Any:
        """
        Return ``Qf: QX -> QY`` with ``f ∘ p_X = p_Y ∘ Qf``.

        The default lifts ``f ∘ p_X`` along the trivial fibration ``p_Y``.
        """
        qx = self.cofibrant_replace(f.source)
        qy = self.cofibrant_replace(f.target)
        found = self.lift_along(self.compose(f, qx.map), qy.map)
        if found is None:
            raise FillerNotFound("no cofibrant replacement of the map")
        return found

    def replace_map_fibrant(self, f: Any) -> Any:
        """
        Return ``Rf: RX -> RY`` with ``Rf ∘ i_X = i_Y ∘ f``.

        The default fills the square of ``i_X`` against ``RY -> 0``.
        """
        rx = self.fibrant_replace(f.source)
        ry = self.fibrant_replace(f.target)
        zero = self.zero_object()
        square = Square(
            rx.map,
            self.zero_map(ry.obj, zero),
            self.compose(ry.map, f),
            self.zero_map(rx.obj, zero),
        )
        found = self.lift(square)
        if found is None:
            raise FillerNotFound("no fibrant replacement of the map")
        return found

    def factorization_map(
        self, first: Factorization, second: Factorization, top: Any, bottom: Any
    ) -> Any:
        """
        Return the map between factorization middles induced by a square.

        ``first`` factors m and ``second`` factors m2 with
        ``m2 ∘ top = bottom ∘ m``. The result e satisfies
        ``e ∘ first.first = second.first ∘ top`` and
        ``second.second ∘ e = bottom ∘ first.second``. The default fills the
        square of ``first.first`` against ``second.second``.
        """
        if first.kind is not second.kind:
            raise ValueError("factorizations of different kinds")
        square = Square(
            first.first,
            second.second,
            self.compose(second.first, top),
            self.compose(bottom, first.second),
        )
        found = self.lift(square)
        if found is None:
            raise FillerNotFound(f"no induced map between {first.kind.value}-factorizations")
        return found

    def dualize(self, x: Any) -> Any:
        raise NotImplementedError(f"{type(self).__name__} has no duality")

    def dualize_map(self, f: Any) -> Any:
        raise NotImplementedError(f"{type(self).__name__} has no duality")

    def weakly_equivalent(self, x: Any, y: Any) -> Optional[bool]:
        """Decide whether x and y are weakly equivalent; None if the instance cannot tell."""
        return None

    def domination_candidates(self, qx: Any, ry: Any) -> Iterator[Any]:
        """
        Yield candidate maps ``QX -> RY`` for the domination search.

        The default offers only the zero map.
        """
        yield self.zero_map(qx, ry)

    def describe(self, x: Any) -> str:
        """Return a short label for logs and reports."""
        return repr(x)


def factorization_kind_matches(category: StructuredCategory, fact: Factorization) -> bool:
    """Check the class contract of a factorization against its kind."""
    if fact.kind is FactorizationKind.F_TYPE:
        return category.is_trivial_cofibration(fact.first) and category.is_fibration(fact.second)
    return category.is_cofibration(fact.first) and category.is_trivial_fibration(fact.second)
