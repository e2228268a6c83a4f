"""
Inductive-category certificates.

A certificate of value 0 for X is a weak section of ``0 -> X``. A
certificate of value n + 1 for X is a cofibre sequence ``A -> Y -> C``, a
domination ``C ≫ X`` and a certificate of value n for Y. Certificates are
checked by :func:`check_certificate` from their own data; nothing in the
check computes a Ganea tower.
"""

import logging
from dataclasses import dataclass
from typing import Any, Iterator, List, Optional, Union

from categories import Square, StructuredCategory

from .cofibre import CofibreSequence, cofibre_sequence, same_cofibre_sequence
from .domination import DominationWitness, check_domination, domination_from_weak_section, dominates
from .exceptions import CatExceededError, InvalidWitness, LiftFailure, MismatchError
from .ganea import CatResult, GaneaTower, cat_of
from .lifting import WeakLifting, check_weak_lifting, strict_lift, weak_section


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BaseCertificate:
    """
    ``indcat(target) = 0``: a weak section of the zero map ``0 -> target``.
    """

    target: Any
    section: WeakLifting

    @property
    def value(self) -> int:
        return 0


@dataclass(frozen=True)
class StepCertificate:
    """
    ``indcat(target) ≤ inner.value + 1``.

    Attributes:
        target (Any): X.
        cofibre (CofibreSequence): ``A -> Y -> C``.
        domination (DominationWitness): ``C ≫ X``.
        inner (IndcatCertificate): A certificate for Y.
    """

    target: Any
    cofibre: CofibreSequence
    domination: DominationWitness
    inner: "IndcatCertificate"

    @property
    def value(self) -> int:
        return self.inner.value + 1


IndcatCertificate = Union[BaseCertificate, StepCertificate]


def levels(cert: IndcatCertificate) -> Iterator[IndcatCertificate]:
    """Yield the certificate and its inner certificates, outermost first."""
    while True:
        yield cert
        if isinstance(cert, BaseCertificate):
            return
        cert = cert.inner


def _base(category: StructuredCategory, target: Any) -> BaseCertificate:
    zero = category.zero_object()
    section = weak_section(category, category.zero_map(zero, target))
    if section is None:
        raise LiftFailure(f"0 -> {category.describe(target)} has no weak section")
    return BaseCertificate(target, section)


def _certificate_for(
    category: StructuredCategory, tower: GaneaTower, k: int, target: Any, into_target: Any
) -> IndcatCertificate:
    # into_target: G_k -> target admits a weak section
    if k == 0:
        return _base(category, target)
    level = tower.level(k)
    jd = level.join
    seq = cofibre_sequence(category, jd.i)
    collapse = category.pushout_map(
        seq.pushout,
        category.zero_map(seq.cone_obj, level.obj),
        jd.pushout.in_i,
    )
    onto = category.compose(into_target, collapse)
    section = weak_section(category, onto)
    if section is None:
        raise LiftFailure(f"cofibre at level {k} has no weak section onto its target")
    witness = domination_from_weak_section(category, onto, section)
    previous = tower.level(k - 1).obj
    zero = category.zero_object()
    to_middle = strict_lift(
        category,
        Square(
            category.zero_map(zero, previous),
            jd.sigma,
            category.zero_map(zero, jd.sigma.source),
            jd.tau,
        ),
        f"the map from G_{k - 1} into the level-{k} cylinder",
    )
    inner = _certificate_for(category, tower, k - 1, jd.sigma.source, to_middle)
    return StepCertificate(target, seq, witness, inner)


def canonical_certificate(
    category: StructuredCategory, x: Any, max_n: int = 4, cat: Optional[CatResult] = None
) -> IndcatCertificate:
    """
    Build a certificate whose value is ``cat(X)``.

    Level k uses the cofibre sequence of ``i: E' -> Z`` from the level-k join
    of the Ganea tower; its cofibre maps onto ``G_k`` and from there to the
    target of that level. The target of level k - 1 is Z itself.

    Raises:
        CatExceededError: If cat(X) exceeds max_n.
    """
    result = cat or cat_of(category, x, max_n)
    if result.exceeded:
        raise CatExceededError(f"cat exceeds {result.max_n}")
    n = result.value
    logger.info("building certificate of value %d", n)
    return _certificate_for(category, result.tower, n, x, result.tower.level(n).p)


def _maps(cert: IndcatCertificate) -> List[Any]:
    if isinstance(cert, BaseCertificate):
        fact = cert.section.factorization
        return [fact.first, fact.second, cert.section.section]
    w = cert.domination
    return [
        cert.cofibre.f,
        w.cofibrant.map,
        w.fibrant.map,
        w.alpha,
        w.factorization.first,
        w.factorization.second,
        w.section,
    ]


def _check_base(category: StructuredCategory, cert: BaseCertificate) -> List[str]:
    zero = category.zero_object()
    lifting = cert.section
    if lifting.g != category.zero_map(zero, cert.target):
        return ["section is not taken along 0 -> target"]
    if lifting.f != category.identity(cert.target):
        return ["section does not lift the identity"]
    return check_weak_lifting(category, lifting)


def _check_step(category: StructuredCategory, cert: StepCertificate) -> List[str]:
    failures = []
    seq = cert.cofibre
    if not same_cofibre_sequence(category, cofibre_sequence(category, seq.f), seq):
        failures.append("cofibre sequence does not reconstruct")
    w = cert.domination
    if w.x != seq.obj:
        failures.append("domination does not start at the cofibre")
    if w.y != cert.target:
        failures.append("domination does not end at the target")
    return failures + ["domination: " + m for m in check_domination(category, w)]


def check_certificate(category: StructuredCategory, cert: IndcatCertificate, x: Any) -> List[str]:
    """
    Return every failed condition of ``cert`` as a certificate for ``x``.

    Messages are prefixed with the value of the level they concern.
    """
    failures = []
    target = x
    for level in levels(cert):
        tag = f"level {level.value}"
        if not category.objects_equal(level.target, target):
            failures.append(f"{tag}: target differs from the expected object")
        broken = [m for m in _maps(level) if not category.is_morphism(m)]
        if broken or not category.is_object(level.target):
            failures.append(f"{tag}: malformed object or map")
            break
        if isinstance(level, BaseCertificate):
            problems = _check_base(category, level)
        else:
            problems = _check_step(category, level)
            target = level.cofibre.f.target
        failures.extend(f"{tag}: {m}" for m in problems)
    for message in failures:
        logger.debug("certificate check: %s", message)
    return failures


def verify_certificate(category: StructuredCategory, cert: IndcatCertificate, x: Any) -> bool:
    return not check_certificate(category, cert, x)


def assemble_step_certificate(
    category: StructuredCategory, f: Any, target: Any, inner: IndcatCertificate
) -> Optional[StepCertificate]:
    """
    Build a step on top of ``inner`` from any ``f: A -> Y`` into its target.

    Returns:
        Optional[StepCertificate]: None if the cofibre of f does not
            dominate ``target``.

    Raises:
        MismatchError: If f does not end at the inner target.
    """
    if f.target != inner.target:
        raise MismatchError("map does not end at the inner certificate's target")
    seq = cofibre_sequence(category, f)
    witness = dominates(category, seq.obj, target)
    if witness is None:
        return None
    return StepCertificate(target, seq, witness, inner)


@dataclass(frozen=True)
class IndcatResult:
    value: int
    certificate: IndcatCertificate


def indcat_of(category: StructuredCategory, x: Any, max_n: int = 4) -> IndcatResult:
    """
    Return ``indcat(X)`` together with a certificate that has been checked.

    Raises:
        CatExceededError: If no certificate of value at most max_n is found.
        InvalidWitness: If the constructed certificate fails its own check.
    """
    cert = canonical_certificate(category, x, max_n)
    failures = check_certificate(category, cert, x)
    if failures:
        raise InvalidWitness("; ".join(failures))
    return IndcatResult(cert.value, cert)
