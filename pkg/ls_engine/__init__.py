from .certificates import (
    BaseCertificate,
    IndcatCertificate,
    IndcatResult,
    StepCertificate,
    assemble_step_certificate,
    canonical_certificate,
    check_certificate,
    indcat_of,
    levels,
    verify_certificate,
)
from .cofibre import (
    CofibreSequence,
    WeakPushout,
    check_cofibre_sequence,
    cofibre_sequence,
    homotopy_cofibre,
    weak_pushout,
)
from .domination import (
    DominationWitness,
    check_domination,
    domination_from_weak_section,
    dominates,
    transfer_section,
    transport_domination,
)
from .duality import cocat_of, indcocat_of
from .engine import LSEngine
from .exceptions import (
    CatExceededError,
    DualizationUnsupported,
    EngineError,
    InvalidWitness,
    LiftFailure,
    MismatchError,
)
from .ganea import (
    CatResult,
    GaneaLevel,
    GaneaTower,
    carry_section,
    cat_of,
    ganea_map,
    ganea_tower,
    restrict_section,
)
from .join import JoinDiagram, JoinMorphism, check_join, join, join_map_between
from .lifting import (
    WeakLifting,
    check_weak_lifting,
    pull_lifting,
    push_lifting,
    weak_lifting,
    weak_section,
)
from .squares import (
    Leg,
    PullbackSquare,
    PushoutSquare,
    is_homotopy_pullback,
    is_homotopy_pushout,
    pullback_comparison,
    pushout_comparison,
)
from .synthesis import (
    CertificateBound,
    SectionSynthesis,
    canonical_section,
    certificate_bound,
    check_synthesis,
    synthesize_section,
)

__all__ = [
    "BaseCertificate",
    "CatExceededError",
    "CatResult",
    "CertificateBound",
    "CofibreSequence",
    "DominationWitness",
    "DualizationUnsupported",
    "EngineError",
    "GaneaLevel",
    "GaneaTower",
    "IndcatCertificate",
    "IndcatResult",
    "InvalidWitness",
    "JoinDiagram",
    "JoinMorphism",
    "LSEngine",
    "Leg",
    "LiftFailure",
    "MismatchError",
    "PullbackSquare",
    "PushoutSquare",
    "SectionSynthesis",
    "StepCertificate",
    "WeakLifting",
    "WeakPushout",
    "assemble_step_certificate",
    "canonical_certificate",
    "canonical_section",
    "carry_section",
    "cat_of",
    "certificate_bound",
    "check_certificate",
    "check_cofibre_sequence",
    "check_domination",
    "check_join",
    "check_synthesis",
    "check_weak_lifting",
    "cocat_of",
    "cofibre_sequence",
    "dominates",
    "domination_from_weak_section",
    "ganea_map",
    "ganea_tower",
    "homotopy_cofibre",
    "indcat_of",
    "indcocat_of",
    "is_homotopy_pullback",
    "is_homotopy_pushout",
    "join",
    "join_map_between",
    "levels",
    "pull_lifting",
    "pullback_comparison",
    "push_lifting",
    "pushout_comparison",
    "restrict_section",
    "synthesize_section",
    "transfer_section",
    "transport_domination",
    "verify_certificate",
    "weak_lifting",
    "weak_pushout",
    "weak_section",
]
