"""
JSON documents for engine results over chain complexes.

Certificates, towers, joins and syntheses are written with the complex and
map documents of :mod:`chains.documents`, so every emitted result can be
re-read and rechecked. Certificates are read back without validating the
embedded complexes and maps; checking them is the job of
:func:`ls_engine.certificates.check_certificate`, which then names the
equation that fails.
"""

from typing import Any, Dict, Mapping

from categories import Factorization, FactorizationKind, Pushout, Replacement
from chains import ChainMap, Complex, DocumentError, homology_dims
from chains.documents import complex_from_document, complex_to_document, map_from_document, map_to_document

from .certificates import BaseCertificate, IndcatCertificate, StepCertificate
from .cofibre import CofibreSequence
from .domination import DominationWitness
from .ganea import CatResult, GaneaTower
from .join import JoinDiagram
from .lifting import WeakLifting
from .synthesis import SectionSynthesis


CERTIFICATE_KIND = "indcat-certificate"


def homology_document(x: Complex) -> Dict[str, int]:
    return {str(n): k for n, k in sorted(homology_dims(x).items())}


def _field(doc: Any, key: str) -> Any:
    if not isinstance(doc, Mapping) or key not in doc:
        raise DocumentError(f"missing field {key!r}")
    return doc[key]


def _complex(doc: Any, key: str) -> Complex:
    return complex_from_document(_field(doc, key), check=False)


def _map(doc: Any, key: str) -> ChainMap:
    return map_from_document(_field(doc, key), validate_map=False)


def factorization_to_document(fact: Factorization) -> Dict[str, Any]:
    return {
        "first": map_to_document(fact.first),
        "middle": complex_to_document(fact.middle),
        "second": map_to_document(fact.second),
        "kind": fact.kind.value,
        "strategy": fact.strategy,
    }


def factorization_from_document(doc: Any) -> Factorization:
    try:
        kind = FactorizationKind(_field(doc, "kind"))
    except ValueError as exc:
        raise DocumentError(f"unknown factorization kind {doc['kind']!r}") from exc
    return Factorization(
        _map(doc, "first"),
        _complex(doc, "middle"),
        _map(doc, "second"),
        kind,
        str(doc.get("strategy", "standard")),
    )


def lifting_to_document(lifting: WeakLifting) -> Dict[str, Any]:
    return {
        "f": map_to_document(lifting.f),
        "g": map_to_document(lifting.g),
        "factorization": factorization_to_document(lifting.factorization),
        "section": map_to_document(lifting.section),
    }


def lifting_from_document(doc: Any) -> WeakLifting:
    return WeakLifting(
        _map(doc, "f"),
        _map(doc, "g"),
        factorization_from_document(_field(doc, "factorization")),
        _map(doc, "section"),
    )


def _pushout_to_document(po: Pushout) -> Dict[str, Any]:
    return {
        "obj": complex_to_document(po.obj),
        "in_i": map_to_document(po.in_i),
        "in_g": map_to_document(po.in_g),
        "i": map_to_document(po.i),
        "g": map_to_document(po.g),
    }


def _pushout_from_document(doc: Any) -> Pushout:
    return Pushout(
        _complex(doc, "obj"), _map(doc, "in_i"), _map(doc, "in_g"), _map(doc, "i"), _map(doc, "g")
    )


def _replacement_to_document(r: Replacement) -> Dict[str, Any]:
    return {"obj": complex_to_document(r.obj), "map": map_to_document(r.map)}


def _replacement_from_document(doc: Any) -> Replacement:
    return Replacement(_complex(doc, "obj"), _map(doc, "map"))


def witness_to_document(w: DominationWitness) -> Dict[str, Any]:
    return {
        "x": complex_to_document(w.x),
        "y": complex_to_document(w.y),
        "cofibrant": _replacement_to_document(w.cofibrant),
        "fibrant": _replacement_to_document(w.fibrant),
        "alpha": map_to_document(w.alpha),
        "factorization": factorization_to_document(w.factorization),
        "section": map_to_document(w.section),
    }


def witness_from_document(doc: Any) -> DominationWitness:
    return DominationWitness(
        _complex(doc, "x"),
        _complex(doc, "y"),
        _replacement_from_document(_field(doc, "cofibrant")),
        _replacement_from_document(_field(doc, "fibrant")),
        _map(doc, "alpha"),
        factorization_from_document(_field(doc, "factorization")),
        _map(doc, "section"),
    )


def cofibre_to_document(seq: CofibreSequence) -> Dict[str, Any]:
    return {
        "f": map_to_document(seq.f),
        "cone": factorization_to_document(seq.cone),
        "pushout": _pushout_to_document(seq.pushout),
    }


def cofibre_from_document(doc: Any) -> CofibreSequence:
    return CofibreSequence(
        _map(doc, "f"),
        factorization_from_document(_field(doc, "cone")),
        _pushout_from_document(_field(doc, "pushout")),
    )


def _level_to_document(cert: IndcatCertificate) -> Dict[str, Any]:
    if isinstance(cert, BaseCertificate):
        return {
            "type": "base",
            "target": complex_to_document(cert.target),
            "section": lifting_to_document(cert.section),
        }
    return {
        "type": "step",
        "target": complex_to_document(cert.target),
        "cofibre": cofibre_to_document(cert.cofibre),
        "domination": witness_to_document(cert.domination),
        "inner": _level_to_document(cert.inner),
    }


def _level_from_document(doc: Any) -> IndcatCertificate:
    kind = _field(doc, "type")
    if kind == "base":
        return BaseCertificate(_complex(doc, "target"), lifting_from_document(_field(doc, "section")))
    if kind == "step":
        return StepCertificate(
            _complex(doc, "target"),
            cofibre_from_document(_field(doc, "cofibre")),
            witness_from_document(_field(doc, "domination")),
            _level_from_document(_field(doc, "inner")),
        )
    raise DocumentError(f"unknown certificate level type {kind!r}")


def certificate_to_document(cert: IndcatCertificate) -> Dict[str, Any]:
    return {"kind": CERTIFICATE_KIND, "value": cert.value, "certificate": _level_to_document(cert)}


def certificate_from_document(doc: Any) -> IndcatCertificate:
    """
    Read a certificate back.

    The recorded ``value`` must match the nesting depth.

    Raises:
        DocumentError: On malformed content.
    """
    if _field(doc, "kind") != CERTIFICATE_KIND:
        raise DocumentError("not an indcat certificate")
    cert = _level_from_document(_field(doc, "certificate"))
    if doc.get("value") != cert.value:
        raise DocumentError(f"recorded value {doc.get('value')!r} differs from depth {cert.value}")
    return cert


def tower_to_document(tower: GaneaTower) -> Dict[str, Any]:
    return {
        "base": complex_to_document(tower.base),
        "levels": [
            {
                "level": level.level,
                "object": complex_to_document(level.obj),
                "p": map_to_document(level.p),
                "homology": homology_document(level.obj),
            }
            for level in tower.levels
        ],
    }


def cat_to_document(result: CatResult, label: str = "cat") -> Dict[str, Any]:
    return {
        "invariant": label,
        "value": result.value,
        "exceeded": result.exceeded,
        "max_n": result.max_n,
        "section": None if result.section is None else lifting_to_document(result.section),
    }


def join_to_document(jd: JoinDiagram) -> Dict[str, Any]:
    return {
        "object": complex_to_document(jd.obj),
        "join_map": map_to_document(jd.join_map),
        "fibre": complex_to_document(jd.fibre),
        "homology": homology_document(jd.obj),
    }


def synthesis_to_document(syn: SectionSynthesis) -> Dict[str, Any]:
    maps = {
        "epsilon": syn.epsilon,
        "q": syn.q,
        "mu": syn.mu,
        "w": syn.w,
        "lambda": syn.lam,
        "q_prime": syn.q_prime,
        "p_n": syn.p_n,
        "sigma": syn.sigma,
    }
    return {
        "level": syn.level,
        "cofibre": cofibre_to_document(syn.cofibre),
        "object": complex_to_document(syn.obj),
        "homology": homology_document(syn.obj),
        "matches_canonical": syn.matches_canonical,
        "maps": {name: map_to_document(m) for name, m in maps.items()},
    }
