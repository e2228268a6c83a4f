from .axioms import (
    AxiomFailure,
    AxiomReport,
    Sampler,
    check_axiom,
    check_j1,
    check_j2,
    check_m1m2,
    replay_failure,
)
from .diagrams import Factorization, FactorizationKind, Pullback, Pushout, Replacement, Square, Zigzag
from .exceptions import CategoryError, FillerNotFound
from .structured import StructuredCategory, factorization_kind_matches

__all__ = [
    "AxiomFailure",
    "AxiomReport",
    "CategoryError",
    "Factorization",
    "FactorizationKind",
    "FillerNotFound",
    "Pullback",
    "Pushout",
    "Replacement",
    "Sampler",
    "Square",
    "StructuredCategory",
    "Zigzag",
    "check_axiom",
    "check_j1",
    "check_j2",
    "check_m1m2",
    "factorization_kind_matches",
    "replay_failure",
]
