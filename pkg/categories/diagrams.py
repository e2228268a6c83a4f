from dataclasses import dataclass
from enum import Enum
from typing import Any


class FactorizationKind(Enum):
    """The two factorizations every morphism admits."""

    F_TYPE = "F"  # trivial cofibration, then fibration
    C_TYPE = "C"  # cofibration, then trivial fibration


@dataclass(frozen=True)
class Factorization:
    """
    A morphism written as ``second ∘ first`` through ``middle``.

    For an F-factorization ``first`` is the weak equivalence τ and ``second``
    the fibration p; for a C-factorization ``first`` is the cofibration i and
    ``second`` the trivial fibration σ.

    Attributes:
        first (Any): The first leg.
        middle (Any): The intermediate object.
        second (Any): The second leg.
        kind (FactorizationKind): Which of the two factorizations this is.
        strategy (str): Name of the construction that produced it.
    """

    first: Any
    middle: Any
    second: Any
    kind: FactorizationKind
    strategy: str = "standard"


@dataclass(frozen=True)
class Pullback:
    """
    The pullback of ``f: A -> B`` and ``p: E -> B``.

    Attributes:
        obj (Any): The pullback object P.
        pr_f (Any): P -> A, the base extension of p.
        pr_p (Any): P -> E, the base extension of f.
        f (Any): The first leg of the cospan.
        p (Any): The second leg of the cospan.
    """

    obj: Any
    pr_f: Any
    pr_p: Any
    f: Any
    p: Any


@dataclass(frozen=True)
class Pushout:
    """
    The pushout of ``i: A -> X`` and ``g: A -> Y``.

    Attributes:
        obj (Any): The pushout object Q.
        in_i (Any): X -> Q, the cobase extension of g.
        in_g (Any): Y -> Q, the cobase extension of i.
        i (Any): The first leg of the span.
        g (Any): The second leg of the span.
    """

    obj: Any
    in_i: Any
    in_g: Any
    i: Any
    g: Any


@dataclass(frozen=True)
class Square:
    """
    A commutative square ``p ∘ top = bottom ∘ i`` posed as a lifting problem.

    ::

        A --top--> E
        |          |
        i          p
        v          v
        X -bottom> B

    A filler is ``h: X -> E`` with ``h ∘ i = top`` and ``p ∘ h = bottom``.
    """

    i: Any
    p: Any
    top: Any
    bottom: Any


@dataclass(frozen=True)
class Replacement:
    """
    A cofibrant model ``p_X: QX -> X`` or a fibrant model ``i_X: X -> RX``.

    Attributes:
        obj (Any): QX or RX.
        map (Any): p_X (a trivial fibration) or i_X (a trivial cofibration).
    """

    obj: Any
    map: Any


@dataclass(frozen=True)
class Zigzag:
    """
    Two weak equivalences ``left: apex -> X`` and ``right: apex -> Y``.

    Attributes:
        apex (Any): The common source.
        left (Any): Weak equivalence into X.
        right (Any): Weak equivalence into Y.
    """

    apex: Any
    left: Any
    right: Any
