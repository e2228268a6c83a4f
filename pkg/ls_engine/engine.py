import logging
from typing import Any, Dict, List, Optional

from categories import StructuredCategory

from . import certificates, cofibre, domination, duality, ganea, lifting, squares, synthesis
from .certificates import IndcatCertificate, IndcatResult
from .domination import DominationWitness
from .exceptions import InvalidWitness
from .ganea import CatResult, GaneaTower
from .join import JoinDiagram
from .join import join as build_join
from .lifting import WeakLifting


logger = logging.getLogger(__name__)


class LSEngine:
    """
    The category engine bound to one structured category.

    Ganea towers are cached per base object and extended on demand; a cached
    tower gives the same levels as a fresh one.

    Attributes:
        category (StructuredCategory): The instance every computation runs in.
        max_n (int): Default cap for category computations.
    """

    def __init__(self, category: StructuredCategory, max_n: int = 4):
        """
        Initialize a new engine.

        Args:
            category (StructuredCategory): The instance.
            max_n (int): Largest Ganea level examined by default. Defaults to 4.
        """
        self.category = category
        self.max_n = max_n
        self._towers: Dict[Any, GaneaTower] = {}

    def _cap(self, max_n: Optional[int]) -> int:
        return self.max_n if max_n is None else max_n

    def tower(self, base: Any, n: int) -> GaneaTower:
        cached = self._towers.setdefault(base, GaneaTower(base))
        return cached.extend(self.category, n)

    def join(self, f: Any, g: Any) -> JoinDiagram:
        return build_join(self.category, f, g)

    def weak_lifting(self, f: Any, g: Any) -> Optional[WeakLifting]:
        return lifting.weak_lifting(self.category, f, g)

    def weak_section(self, g: Any) -> Optional[WeakLifting]:
        return lifting.weak_section(self.category, g)

    def ganea_tower(self, base: Any, n: int) -> GaneaTower:
        return self.tower(base, n)

    def ganea_map(self, phi: Any, n: int) -> Any:
        maps = ganea.ganea_map(
            self.category, phi, n, self.tower(phi.source, n), self.tower(phi.target, n)
        )
        return maps[n]

    def cat_of(self, x: Any, max_n: Optional[int] = None) -> CatResult:
        return ganea.cat_of(self.category, x, self._cap(max_n), self._towers.setdefault(x, GaneaTower(x)))

    def dominates(self, x: Any, y: Any) -> Optional[DominationWitness]:
        return domination.dominates(self.category, x, y)

    def domination_from_weak_section(self, f: Any, section: WeakLifting) -> DominationWitness:
        return domination.domination_from_weak_section(self.category, f, section)

    def transfer_section(self, witness: DominationWitness, n: int) -> WeakLifting:
        return domination.transfer_section(self.category, witness, n)

    def transport_domination(self, w: Any, witness: DominationWitness) -> Optional[DominationWitness]:
        return domination.transport_domination(self.category, w, witness)

    def weak_pushout(self, f_prime: Any, a: Any) -> cofibre.WeakPushout:
        return cofibre.weak_pushout(self.category, f_prime, a)

    def homotopy_cofibre(self, f_prime: Any) -> cofibre.WeakPushout:
        return cofibre.homotopy_cofibre(self.category, f_prime)

    def cofibre_sequence(self, f: Any) -> cofibre.CofibreSequence:
        return cofibre.cofibre_sequence(self.category, f)

    def canonical_certificate(self, x: Any, max_n: Optional[int] = None) -> IndcatCertificate:
        return certificates.canonical_certificate(self.category, x, cat=self.cat_of(x, max_n))

    def check_certificate(self, cert: IndcatCertificate, x: Any) -> List[str]:
        return certificates.check_certificate(self.category, cert, x)

    def verify_certificate(self, cert: IndcatCertificate, x: Any) -> bool:
        return certificates.verify_certificate(self.category, cert, x)

    def assemble_step_certificate(
        self, f: Any, target: Any, inner: IndcatCertificate
    ) -> Optional[certificates.StepCertificate]:
        return certificates.assemble_step_certificate(self.category, f, target, inner)

    def indcat_of(self, x: Any, max_n: Optional[int] = None) -> IndcatResult:
        cert = self.canonical_certificate(x, max_n)
        failures = self.check_certificate(cert, x)
        if failures:
            raise InvalidWitness("; ".join(failures))
        return IndcatResult(cert.value, cert)

    def synthesize_section(
        self, seq: cofibre.CofibreSequence, section: WeakLifting, n: int
    ) -> synthesis.SectionSynthesis:
        return synthesis.synthesize_section(self.category, seq, section, n)

    def certificate_bound(self, cert: IndcatCertificate, x: Any) -> synthesis.CertificateBound:
        return synthesis.certificate_bound(self.category, cert, x)

    def cocat_of(self, x: Any, max_n: Optional[int] = None) -> CatResult:
        return duality.cocat_of(self.category, x, self._cap(max_n))

    def indcocat_of(self, x: Any, max_n: Optional[int] = None) -> IndcatResult:
        return duality.indcocat_of(self.category, x, self._cap(max_n))

    def is_homotopy_pullback(self, sq: squares.PullbackSquare, leg: squares.Leg = squares.Leg.RIGHT) -> bool:
        return squares.is_homotopy_pullback(self.category, sq, leg)

    def is_homotopy_pushout(self, sq: squares.PushoutSquare, leg: squares.Leg = squares.Leg.LEFT) -> bool:
        return squares.is_homotopy_pushout(self.category, sq, leg)
