"""
Sections of Ganea maps built from a cofibre sequence.

Given ``A -f-> Y -p-> C`` and a section s of the fibration-replaced
``p_{n-1}`` over Y, :func:`synthesize_section` builds a model of ``p_n`` over
C together with a strict section of it. Every intermediate map is kept so
that each equation can be rechecked by :func:`check_synthesis`.

Notation::

    F   = pullback of f̄: CA -> C and P^C: Ĝ_{n-1}C -> C, legs P̄ and f̄̄
    F   --ε--> ĈA --q--> CA       C-factorization of P̄
    G   = pushout of ε and f̄̄, legs μ and w
    λ   = (k, Ĝ(p) ∘ s ∘ f): A -> F
    q'  = filler of k against q with top ε ∘ λ
    σ   = (μ ∘ q', w ∘ Ĝ(p) ∘ s): C -> G
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Optional

from categories import Factorization, Pullback, Pushout, Square, StructuredCategory

from .certificates import BaseCertificate, IndcatCertificate, StepCertificate, check_certificate
from .cofibre import CofibreSequence, check_cofibre_sequence
from .domination import transfer_section
from .exceptions import EngineError, InvalidWitness
from .ganea import GaneaTower, carry_section, ganea_map, restrict_section
from .join import join, join_map_between
from .lifting import WeakLifting, check_weak_lifting, pull_lifting, push_lifting, strict_lift


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SectionSynthesis:
    """
    A constructed level-n Ganea map over C with a strict section.

    Attributes:
        cofibre (CofibreSequence): ``A -> Y -> C``.
        section (WeakLifting): The section s of ``p_{n-1}`` over Y.
        level (int): n.
        ganea_p (Any): ``G_{n-1}(p)``.
        fibration_c (Factorization): ``p_{n-1}`` over C as ``P^C ∘ τ_C``.
        ganea_p_hat (Any): ``Ĝ(p): Ĝ_{n-1}Y -> Ĝ_{n-1}C``.
        fibre (Pullback): F with legs P̄ and f̄̄.
        c_factorization (Factorization): ``P̄ = q ∘ ε``.
        pushout (Pushout): G with legs μ and w.
        p_n (Any): ``G -> C``.
        lam (Any): λ.
        q_prime (Any): q'.
        sigma (Any): σ.
        matches_canonical (Optional[bool]): Whether G agrees with the
            canonical ``G_n(C)`` up to weak equivalence; None if the
            instance cannot tell.
    """

    cofibre: CofibreSequence
    section: WeakLifting
    level: int
    ganea_p: Any
    fibration_c: Factorization
    ganea_p_hat: Any
    fibre: Pullback
    c_factorization: Factorization
    pushout: Pushout
    p_n: Any
    lam: Any
    q_prime: Any
    sigma: Any
    matches_canonical: Optional[bool]

    @property
    def obj(self) -> Any:
        return self.pushout.obj

    @property
    def epsilon(self) -> Any:
        return self.c_factorization.first

    @property
    def q(self) -> Any:
        return self.c_factorization.second

    @property
    def mu(self) -> Any:
        return self.pushout.in_i

    @property
    def w(self) -> Any:
        return self.pushout.in_g


def _require_inputs(
    category: StructuredCategory, seq: CofibreSequence, section: WeakLifting, tower_y: GaneaTower, n: int
) -> None:
    problems = check_cofibre_sequence(category, seq)
    if problems:
        raise InvalidWitness("cofibre sequence: " + "; ".join(problems))
    y = seq.f.target
    if section.g != tower_y.level(n - 1).p or section.f != category.identity(y):
        raise InvalidWitness(f"section is not a weak section of p_{n - 1} over Y")
    problems = check_weak_lifting(category, section)
    if problems:
        raise InvalidWitness("section: " + "; ".join(problems))


def synthesize_section(
    category: StructuredCategory, seq: CofibreSequence, section: WeakLifting, n: int
) -> SectionSynthesis:
    """
    Build ``p_n`` over C and a strict section of it.

    Args:
        category (StructuredCategory): The ambient category.
        seq (CofibreSequence): ``A -> Y -> C``.
        section (WeakLifting): A weak section of ``p_{n-1}`` over Y.
        n (int): The level, at least 1.

    Returns:
        SectionSynthesis: The construction, with ``p_n ∘ σ = id_C`` checked.

    Raises:
        InvalidWitness: If the inputs are not a cofibre sequence and a weak
            section at level n - 1.
        LiftFailure: If a filler guaranteed by the lifting axiom is missing.
        EngineError: If a constructed equation fails.
    """
    if n < 1:
        raise ValueError("synthesis starts at level 1")
    c = category.compose
    y, cof = seq.f.target, seq.obj
    tower_y = GaneaTower(y).extend(category, n - 1)
    tower_c = GaneaTower(cof).extend(category, n)
    _require_inputs(category, seq, section, tower_y, n)

    ganea_p = ganea_map(category, seq.p, n - 1, tower_y, tower_c)[n - 1]
    fact_c = category.f_factorize(tower_c.level(n - 1).p)
    g_hat = category.factorization_map(section.factorization, fact_c, ganea_p, seq.p)
    pb = category.pullback_along_fibration(seq.f_bar, fact_c.second)
    c_fact = category.c_factorize(pb.pr_f)
    po = category.pushout_along_cofibration(c_fact.first, pb.pr_p)
    p_n = category.pushout_map(po, c(seq.f_bar, c_fact.second), fact_c.second)

    lifted = c(g_hat, c(section.section, seq.f))
    if not category.maps_equal(c(fact_c.second, lifted), c(seq.f_bar, seq.k)):
        raise InvalidWitness("k and Ĝ(p) ∘ s ∘ f do not meet over C")
    lam = category.pullback_map(pb, seq.k, lifted)
    q_prime = strict_lift(
        category,
        Square(seq.k, c_fact.second, c(c_fact.first, lam), category.identity(seq.cone_obj)),
        "q'",
    )
    sigma = category.pushout_map(
        seq.pushout, c(po.in_i, q_prime), c(po.in_g, c(g_hat, section.section))
    )
    verdict = category.weakly_equivalent(po.obj, tower_c.level(n).obj)
    syn = SectionSynthesis(
        seq, section, n, ganea_p, fact_c, g_hat, pb, c_fact, po, p_n, lam, q_prime, sigma, verdict
    )
    failures = check_synthesis(category, syn)
    if failures:
        raise EngineError("; ".join(failures))
    logger.info("section synthesized at level %d", n)
    return syn


def check_synthesis(category: StructuredCategory, syn: SectionSynthesis) -> List[str]:
    """Return every equation of the construction that fails."""
    c, eq = category.compose, category.maps_equal
    seq, s = syn.cofibre, syn.section
    p_c, p_y = syn.fibration_c.second, s.factorization.second
    pr_bar, pr_hat = syn.fibre.pr_f, syn.fibre.pr_p
    checks = [
        (c(p_c, syn.ganea_p_hat), c(seq.p, p_y), "P^C ∘ Ĝ(p) != p ∘ P^Y"),
        (c(seq.f_bar, pr_bar), c(p_c, pr_hat), "fibre square does not commute"),
        (c(syn.q, syn.epsilon), pr_bar, "q ∘ ε != P̄"),
        (c(syn.mu, syn.epsilon), c(syn.w, pr_hat), "pushout square does not commute"),
        (c(syn.p_n, syn.mu), c(seq.f_bar, syn.q), "p_n ∘ μ != f̄ ∘ q"),
        (c(syn.p_n, syn.w), p_c, "p_n ∘ w != P^C"),
        (c(pr_bar, syn.lam), seq.k, "P̄ ∘ λ != k"),
        (c(pr_hat, syn.lam), c(syn.ganea_p_hat, c(s.section, seq.f)), "f̄̄ ∘ λ != Ĝ(p) ∘ s ∘ f"),
        (c(syn.q_prime, seq.k), c(syn.epsilon, syn.lam), "q' ∘ k != ε ∘ λ"),
        (c(syn.q, syn.q_prime), category.identity(seq.cone_obj), "q ∘ q' != id"),
        (c(syn.sigma, seq.f_bar), c(syn.mu, syn.q_prime), "σ ∘ f̄ != μ ∘ q'"),
        (c(syn.sigma, seq.p), c(syn.w, c(syn.ganea_p_hat, s.section)), "σ ∘ p != w ∘ Ĝ(p) ∘ s"),
        (c(syn.p_n, syn.sigma), category.identity(seq.obj), "p_n ∘ σ != id_C"),
    ]
    failures = [message for lhs, rhs, message in checks if not eq(lhs, rhs)]
    if not category.is_fibration(p_c):
        failures.append("P^C is not a fibration")
    if not category.is_cofibration(syn.epsilon) or not category.is_trivial_fibration(syn.q):
        failures.append("ε, q is not a C-factorization")
    if syn.matches_canonical is False:
        failures.append("constructed G_n(C) is not weakly equivalent to the canonical one")
    return failures


def canonical_section(category: StructuredCategory, syn: SectionSynthesis) -> WeakLifting:
    """
    Carry σ to a weak section of the canonical ``p_n`` over C.

    J is the join of ``f̄: CA -> C`` and ``p_{n-1}``, which shares F with the
    constructed G. D, the pushout of ε and the cofibration of J, maps to G
    and to J over C, and ``G_n(C)`` maps to J by the join map of
    ``0 -> CA``. σ is pulled back to D, pushed to J and pulled back to
    ``G_n(C)``.

    Raises:
        LiftFailure: If a comparison map is not a weak equivalence.
    """
    c = category.compose
    seq, n = syn.cofibre, syn.level
    tower = GaneaTower(seq.obj).extend(category, n)
    mirror = join(category, seq.f_bar, tower.level(n - 1).p)
    both = category.pushout_along_cofibration(syn.epsilon, mirror.i)
    to_g = category.pushout_map(both, syn.mu, c(syn.w, mirror.sigma))
    to_j = category.pushout_map(both, c(mirror.pushout.in_g, syn.q), mirror.pushout.in_i)

    fact = category.f_factorize(syn.p_n)
    over_g = WeakLifting(category.identity(seq.obj), syn.p_n, fact, c(fact.first, syn.sigma))
    over_d = pull_lifting(category, over_g, to_g, c(syn.p_n, to_g))
    over_j = push_lifting(category, over_d, to_j, mirror.join_map)
    to_mirror = join_map_between(
        category,
        tower.level(n).join,
        mirror,
        category.zero_map(category.zero_object(), seq.cone_obj),
        category.identity(tower.level(n - 1).obj),
        category.identity(seq.obj),
    )
    return pull_lifting(category, over_j, to_mirror.q, tower.level(n).p)


@dataclass(frozen=True)
class CertificateBound:
    """
    ``cat(X) ≤ value`` derived from a certificate.

    Attributes:
        value (int): The certificate value.
        synthesis (Optional[SectionSynthesis]): The section over the cofibre
            of the outer step; None for a base certificate.
        section (WeakLifting): A weak section of ``p_value`` over the
            fibrant model of X.
    """

    value: int
    synthesis: Optional[SectionSynthesis]
    section: WeakLifting


def _bound(category: StructuredCategory, cert: IndcatCertificate) -> CertificateBound:
    if isinstance(cert, BaseCertificate):
        return CertificateBound(0, None, cert.section)
    n = cert.value
    inner = _bound(category, cert.inner)
    section = inner.section
    if isinstance(cert.inner, StepCertificate):
        section = restrict_section(category, section, cert.inner.domination.fibrant.map, n - 1)
    syn = synthesize_section(category, cert.cofibre, section, n)
    over_c = canonical_section(category, syn)
    witness = cert.domination
    over_q = restrict_section(category, over_c, witness.cofibrant.map, n)
    tau = witness.factorization.first
    over_e = carry_section(category, over_q, tau, category.identity(tau.source), n)
    logger.debug("level %d section carried to the witness middle", n)
    return CertificateBound(n, syn, transfer_section(category, witness, n, over_e))


def certificate_bound(category: StructuredCategory, cert: IndcatCertificate, x: Any) -> CertificateBound:
    """
    Turn a certificate for X into a weak section of a Ganea map over X.

    The inner certificate's bound gives the section over Y, restricted from
    its fibrant model. The outer step's cofibre receives a synthesized
    section, which is compared with the canonical ``p_n`` over C, moved to
    the cofibrant model of C and the middle of the domination, and carried
    to the fibrant model of X. Nothing is searched for.

    Raises:
        InvalidWitness: If the certificate does not check.
        LiftFailure: If a filler guaranteed by the lifting axiom is missing.
    """
    failures = check_certificate(category, cert, x)
    if failures:
        raise InvalidWitness("; ".join(failures))
    return _bound(category, cert)
