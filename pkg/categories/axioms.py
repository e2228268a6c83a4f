"""
Sampled audits of the axioms a structured category must satisfy.

Each audit runs independent trials through :class:`monte_carlo.MonteCarlo`;
a failing trial is recorded with its own seed so it can be replayed alone.
"""

import logging
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from monte_carlo import MonteCarlo

from .diagrams import Square
from .structured import StructuredCategory, factorization_kind_matches


logger = logging.getLogger(__name__)


class Sampler(ABC):
    """Source of random objects and morphisms for the axiom audits."""

    @abstractmethod
    def sample_object(self, rng: random.Random) -> Any: ...

    @abstractmethod
    def sample_map(self, rng: random.Random, source: Any, target: Any) -> Any: ...

    @abstractmethod
    def sample_isomorphism(self, rng: random.Random, x: Any) -> Any: ...

    @abstractmethod
    def sample_weak_equivalence(self, rng: random.Random, source: Any) -> Any:
        """Return a weak equivalence out of ``source``."""


@dataclass
class AxiomFailure:
    """
    One failed check.

    Attributes:
        seed (int): Seed of the trial that failed; replays it exactly.
        check (str): Name of the failed check.
        message (str): What went wrong.
        counterexample (Dict[str, Any]): The morphisms involved.
    """

    seed: int
    check: str
    message: str
    counterexample: Dict[str, Any] = field(default_factory=dict)


@dataclass
class AxiomReport:
    """
    Outcome of one axiom audit.

    Attributes:
        axiom (str): Axiom id, e.g. ``"J1"``.
        samples (int): Number of trials.
        seed (int): Master seed of the run.
        checks (int): Number of individual checks performed.
        failures (List[AxiomFailure]): Failed checks, empty iff the audit passed.
    """

    axiom: str
    samples: int
    seed: int
    checks: int = 0
    failures: List[AxiomFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_document(self, encode: Callable[[Any], Any]) -> Dict[str, Any]:
        """
        Render the report as a JSON-ready document.

        Args:
            encode (Callable[[Any], Any]): Serializer for counterexample morphisms.
        """
        return {
            "axiom": self.axiom,
            "verdict": "pass" if self.passed else "fail",
            "samples": self.samples,
            "seed": self.seed,
            "checks": self.checks,
            "failures": [
                {
                    "seed": f.seed,
                    "check": f.check,
                    "message": f.message,
                    "counterexample": {k: encode(v) for k, v in sorted(f.counterexample.items())},
                }
                for f in self.failures
            ],
        }


class _Trial:
    """Collects the checks of one trial and stops at the first failure."""

    def __init__(self):
        self.checks = 0
        self.failure: Optional[Dict[str, Any]] = None

    def expect(self, condition: bool, check: str, message: str, **counterexample: Any) -> bool:
        self.checks += 1
        if not condition and self.failure is None:
            self.failure = {"check": check, "message": message, "counterexample": counterexample}
        return condition

    def outcome(self) -> Dict[str, Any]:
        return {"checks": self.checks, "failure": self.failure}


def _composable_weq_or_map(sampler: Sampler, rng: random.Random, source: Any) -> Any:
    if rng.random() < 0.5:
        return sampler.sample_weak_equivalence(rng, source)
    return sampler.sample_map(rng, source, sampler.sample_object(rng))


def _j1_trial(category: StructuredCategory, sampler: Sampler, rng: random.Random) -> Dict[str, Any]:
    trial = _Trial()
    x = sampler.sample_object(rng)

    ident = category.identity(x)
    trial.expect(
        category.is_trivial_cofibration(ident) and category.is_trivial_fibration(ident),
        "identity",
        "identity is not both a trivial cofibration and a trivial fibration",
        map=ident,
    )
    iso = sampler.sample_isomorphism(rng, x)
    trial.expect(
        category.is_trivial_cofibration(iso) and category.is_trivial_fibration(iso),
        "isomorphism",
        "isomorphism is not both a trivial cofibration and a trivial fibration",
        map=iso,
    )

    f = _composable_weq_or_map(sampler, rng, x)
    g = _composable_weq_or_map(sampler, rng, f.target)
    gf = category.compose(g, f)
    flags = [category.is_weq(f), category.is_weq(g), category.is_weq(gf)]
    trial.expect(
        sum(flags) != 2,
        "two-out-of-three",
        f"weak equivalence flags (f, g, gf) = {tuple(flags)}",
        f=f,
        g=g,
    )

    y = sampler.sample_object(rng)
    outer = category.f_factorize(sampler.sample_map(rng, x, y)).second
    inner = category.f_factorize(sampler.sample_map(rng, y, outer.source)).second
    trial.expect(
        category.is_fibration(category.compose(outer, inner)),
        "fibration-composition",
        "composite of fibrations is not a fibration",
        inner=inner,
        outer=outer,
    )
    first = category.c_factorize(sampler.sample_map(rng, x, y)).first
    second = category.c_factorize(sampler.sample_map(rng, first.target, y)).first
    trial.expect(
        category.is_cofibration(category.compose(second, first)),
        "cofibration-composition",
        "composite of cofibrations is not a cofibration",
        first=first,
        second=second,
    )
    return trial.outcome()


def _j2_trial(category: StructuredCategory, sampler: Sampler, rng: random.Random) -> Dict[str, Any]:
    trial = _Trial()
    a = sampler.sample_object(rng)
    b = sampler.sample_object(rng)
    c = sampler.sample_object(rng)

    f = sampler.sample_map(rng, a, b)
    p = category.f_factorize(sampler.sample_map(rng, c, b)).second
    if trial.expect(category.is_fibration(p), "fibration", "F-factorization leg is not a fibration", p=p):
        pb = category.pullback_along_fibration(f, p)
        trial.expect(
            category.maps_equal(category.compose(f, pb.pr_f), category.compose(p, pb.pr_p)),
            "pullback-commutes",
            "pullback square does not commute",
            f=f,
            p=p,
        )
        trial.expect(
            category.is_fibration(pb.pr_f),
            "base-extension-fibration",
            "base extension of a fibration is not a fibration",
            f=f,
            p=p,
        )

    sigma = category.c_factorize(sampler.sample_map(rng, c, b)).second
    pb = category.pullback_along_fibration(f, sigma)
    trial.expect(
        category.is_trivial_fibration(pb.pr_f),
        "base-extension-trivial-fibration",
        "base extension of a trivial fibration is not a trivial fibration",
        f=f,
        p=sigma,
    )

    w = sampler.sample_weak_equivalence(rng, a)
    p = category.f_factorize(sampler.sample_map(rng, c, w.target)).second
    pb = category.pullback_along_fibration(w, p)
    trial.expect(
        category.is_weq(pb.pr_p),
        "base-extension-weq",
        "base extension of a weak equivalence along a fibration is not a weak equivalence",
        f=w,
        p=p,
    )

    x = sampler.sample_object(rng)
    i = category.c_factorize(sampler.sample_map(rng, a, x)).first
    g = sampler.sample_map(rng, a, c)
    if trial.expect(
        category.is_cofibration(i), "cofibration", "C-factorization leg is not a cofibration", i=i
    ):
        po = category.pushout_along_cofibration(i, g)
        trial.expect(
            category.maps_equal(category.compose(po.in_i, i), category.compose(po.in_g, g)),
            "pushout-commutes",
            "pushout square does not commute",
            i=i,
            g=g,
        )
        trial.expect(
            category.is_cofibration(po.in_g),
            "cobase-extension-cofibration",
            "cobase extension of a cofibration is not a cofibration",
            i=i,
            g=g,
        )

    tau = category.f_factorize(sampler.sample_map(rng, a, x)).first
    po = category.pushout_along_cofibration(tau, g)
    trial.expect(
        category.is_trivial_cofibration(po.in_g),
        "cobase-extension-trivial-cofibration",
        "cobase extension of a trivial cofibration is not a trivial cofibration",
        i=tau,
        g=g,
    )

    w = sampler.sample_weak_equivalence(rng, a)
    po = category.pushout_along_cofibration(i, w)
    trial.expect(
        category.is_weq(po.in_i),
        "cobase-extension-weq",
        "cobase extension of a weak equivalence along a cofibration is not a weak equivalence",
        i=i,
        g=w,
    )

    zero = category.zero_object()
    pb = category.pullback_along_fibration(category.zero_map(zero, b), category.identity(b))
    trial.expect(
        category.is_fibration(pb.pr_f) and category.is_weq(pb.pr_f),
        "zero-object",
        "pullback of the identity along 0 -> B is not a trivial fibration",
        b=category.identity(b),
    )
    return trial.outcome()


def _check_filler(
    trial: _Trial, category: StructuredCategory, square: Square, check: str
) -> Optional[Any]:
    filler = category.lift(square)
    if not trial.expect(filler is not None, check, "no filler for a lifting square", **vars(square)):
        return None
    trial.expect(
        category.maps_equal(category.compose(filler, square.i), square.top)
        and category.maps_equal(category.compose(square.p, filler), square.bottom),
        check,
        "filler does not make both triangles commute",
        filler=filler,
        **vars(square),
    )
    return filler


def _m1m2_trial(category: StructuredCategory, sampler: Sampler, rng: random.Random) -> Dict[str, Any]:
    trial = _Trial()
    x = sampler.sample_object(rng)
    y = sampler.sample_object(rng)
    m = sampler.sample_map(rng, x, y)

    for fact in (category.f_factorize(m), category.c_factorize(m)):
        name = f"{fact.kind.value}-factorization"
        trial.expect(
            category.maps_equal(category.compose(fact.second, fact.first), m),
            name,
            "factorization composite differs from the factored map",
            map=m,
        )
        trial.expect(
            factorization_kind_matches(category, fact),
            name,
            "factorization legs are not in the required classes",
            map=m,
        )

    zero = category.zero_object()
    a = sampler.sample_object(rng)
    i = category.c_factorize(sampler.sample_map(rng, a, x)).first
    sigma = category.c_factorize(sampler.sample_map(rng, sampler.sample_object(rng), y)).second
    bottom = sampler.sample_map(rng, i.target, y)
    top = category.lift_along(category.compose(bottom, i), sigma)
    if trial.expect(top is not None, "M1-trivial-fibration", "trivial fibration does not lift maps", p=sigma):
        _check_filler(trial, category, Square(i, sigma, top, bottom), "M1-trivial-fibration")

    tau = category.f_factorize(sampler.sample_map(rng, a, x)).first
    p = category.f_factorize(sampler.sample_map(rng, sampler.sample_object(rng), y)).second
    top = sampler.sample_map(rng, a, p.source)
    extension = Square(
        tau,
        category.zero_map(y, zero),
        category.compose(p, top),
        category.zero_map(tau.target, zero),
    )
    bottom = _check_filler(trial, category, extension, "M1-trivial-cofibration")
    if bottom is not None:
        _check_filler(trial, category, Square(tau, p, top, bottom), "M1-trivial-cofibration")

    section = _check_filler(
        trial,
        category,
        Square(
            category.zero_map(zero, y), sigma, category.zero_map(zero, sigma.source), category.identity(y)
        ),
        "M1-section",
    )
    if section is not None:
        trial.expect(
            category.maps_equal(category.compose(sigma, section), category.identity(y)),
            "M1-section",
            "filler is not a section",
            p=sigma,
        )

    ident = category.identity(x)
    _check_filler(trial, category, Square(ident, ident, ident, ident), "M1-identity")
    return trial.outcome()


AXIOM_TRIALS: Dict[str, Callable[[StructuredCategory, Sampler, random.Random], Dict[str, Any]]] = {
    "J1": _j1_trial,
    "J2": _j2_trial,
    "M1M2": _m1m2_trial,
}


def run_trial(
    axiom: str, category: StructuredCategory, sampler: Sampler, rng: random.Random
) -> Dict[str, Any]:
    """Run one trial of an audit, turning an exception into a failure."""
    try:
        return AXIOM_TRIALS[axiom](category, sampler, rng)
    except Exception as exc:  # instances under audit may be broken in any way
        logger.debug("trial of %s raised %r", axiom, exc)
        return {
            "checks": 1,
            "failure": {
                "check": "exception",
                "message": f"{type(exc).__name__}: {exc}",
                "counterexample": {},
            },
        }


def check_axiom(
    axiom: str, category: StructuredCategory, sampler: Sampler, n: int, seed: int
) -> AxiomReport:
    """
    Audit one axiom on ``n`` sampled trials.

    Args:
        axiom (str): ``"J1"``, ``"J2"`` or ``"M1M2"``.
        category (StructuredCategory): Instance under audit.
        sampler (Sampler): Source of random data.
        n (int): Number of trials.
        seed (int): Master seed.

    Returns:
        AxiomReport: Verdict with replayable failures.
    """
    if axiom not in AXIOM_TRIALS:
        raise KeyError(f"unknown axiom {axiom!r}")
    logger.info("auditing %s on %d samples, seed %d", axiom, n, seed)
    runner = MonteCarlo(seed)
    stats = runner.run_simulation(lambda rng: run_trial(axiom, category, sampler, rng), n)
    failures = [
        AxiomFailure(f["seed"], f["check"], f["message"], f["counterexample"]) for f in stats["failures"]
    ]
    return AxiomReport(axiom, n, seed, stats.get("checks_total", 0), failures)


def check_j1(category: StructuredCategory, sampler: Sampler, n: int, seed: int) -> AxiomReport:
    return check_axiom("J1", category, sampler, n, seed)


def check_j2(category: StructuredCategory, sampler: Sampler, n: int, seed: int) -> AxiomReport:
    return check_axiom("J2", category, sampler, n, seed)


def check_m1m2(category: StructuredCategory, sampler: Sampler, n: int, seed: int) -> AxiomReport:
    return check_axiom("M1M2", category, sampler, n, seed)


def replay_failure(
    axiom: str, category: StructuredCategory, sampler: Sampler, failure: AxiomFailure
) -> Dict[str, Any]:
    """Re-run the trial that produced ``failure``."""
    return MonteCarlo.replay(lambda rng: run_trial(axiom, category, sampler, rng), failure.seed)
