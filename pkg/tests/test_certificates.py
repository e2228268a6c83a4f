import copy
import json
import random
from dataclasses import replace

import pytest

from categories import Factorization
from chaincat import cat_oracle
from chains import ChainMap, Complex, DocumentError, cone, homology_dims
from chains.documents import dumps, map_to_document
from linalg import Matrix, format_scalar, parse_scalar
from ls_engine import (
    BaseCertificate,
    CatExceededError,
    MismatchError,
    StepCertificate,
    WeakLifting,
    assemble_step_certificate,
    canonical_certificate,
    cat_of,
    check_certificate,
    indcat_of,
    levels,
    verify_certificate,
)
from ls_engine.documents import certificate_from_document, certificate_to_document

S, D = Complex.sphere, Complex.disc
ZERO = Complex.zero()


def bump_first_entry(map_doc: dict) -> None:
    """Add one to the first stored matrix entry of a map document."""
    for key in sorted(map_doc["comps"]):
        block = map_doc["comps"][key]
        if block and block[0]:
            block[0][0] = format_scalar(parse_scalar(block[0][0]) + 1)
            return
    raise AssertionError("map document has no entries")


def bump_first_differential(complex_doc: dict) -> None:
    """Add one to the first stored differential entry of a complex document."""
    for key in sorted(complex_doc["d"]):
        block = complex_doc["d"][key]
        if block and block[0]:
            block[0][0] = format_scalar(parse_scalar(block[0][0]) + 1)
            return
    raise AssertionError("complex document has no differential entries")


@pytest.mark.parametrize(
    "x, value, kind", [(ZERO, 0, BaseCertificate), (D(2), 0, BaseCertificate), (S(2), 1, StepCertificate)]
)
def test_indcat_examples(instance, x, value, kind):
    result = indcat_of(instance, x)
    assert result.value == value
    assert isinstance(result.certificate, kind)
    assert verify_certificate(instance, result.certificate, x)


def test_certificate_value_is_cat(instance, complexes):
    for x in complexes(200, seed=60):
        cat = cat_of(instance, x)
        result = indcat_of(instance, x)
        assert result.value == cat.value == cat_oracle(x)
        assert check_certificate(instance, result.certificate, x) == []
        assert len(list(levels(result.certificate))) == result.value + 1


def test_indcat_is_invariant_under_thickening(instance, sampler, complexes):
    rng = random.Random(62)
    for x in complexes(60, seed=62):
        thick = sampler.thicken(rng, x).obj
        result = indcat_of(instance, thick)
        assert result.value == indcat_of(instance, x).value
        assert verify_certificate(instance, result.certificate, thick)


def test_certificate_levels_follow_the_tower(instance):
    cert = canonical_certificate(instance, S(2))
    inner = cert.inner
    assert isinstance(inner, BaseCertificate)
    assert inner.target == cert.cofibre.f.target
    assert homology_dims(inner.target) == {}
    assert homology_dims(cert.cofibre.obj) == {2: 1}


def test_canonical_certificate_respects_cap(instance):
    with pytest.raises(CatExceededError):
        canonical_certificate(instance, S(1), max_n=0)


def test_document_round_trip(instance, complexes):
    for x in [S(2), D(1), *complexes(10, seed=61)]:
        cert = canonical_certificate(instance, x)
        doc = json.loads(dumps(certificate_to_document(cert)))
        again = certificate_from_document(doc)
        assert again == cert
        assert verify_certificate(instance, again, x)
        assert dumps(certificate_to_document(again)) == dumps(doc)


def test_document_value_must_match_depth(instance):
    doc = certificate_to_document(canonical_certificate(instance, S(2)))
    doc["value"] = 0
    with pytest.raises(DocumentError):
        certificate_from_document(doc)
    with pytest.raises(DocumentError):
        certificate_from_document({"kind": "something else"})


def test_tampered_section_is_rejected(instance):
    doc = certificate_to_document(canonical_certificate(instance, S(2)))
    bump_first_entry(doc["certificate"]["domination"]["section"])
    failures = check_certificate(instance, certificate_from_document(doc), S(2))
    assert failures
    assert all(message.startswith("level 1") for message in failures)


def test_tampered_fibration_source_is_reported(instance):
    doc = certificate_to_document(canonical_certificate(instance, S(2)))
    bump_first_differential(doc["certificate"]["domination"]["factorization"]["second"]["source"])
    failures = check_certificate(instance, certificate_from_document(doc), S(2))
    assert failures
    assert all(message.startswith("level 1") for message in failures)


def test_tampered_cofibre_is_rejected(instance):
    doc = certificate_to_document(canonical_certificate(instance, S(2)))
    tampered = copy.deepcopy(doc)
    bump_first_entry(tampered["certificate"]["cofibre"]["pushout"]["in_g"])
    assert not verify_certificate(instance, certificate_from_document(tampered), S(2))


def test_broken_domination_composite(instance):
    cert = canonical_certificate(instance, S(2))
    w = cert.domination
    broken = replace(cert, domination=replace(w, section=w.section.scale(2)))
    failures = check_certificate(instance, broken, S(2))
    assert any("domination" in message for message in failures)


def test_wrong_target_is_rejected(instance):
    cert = canonical_certificate(instance, S(2))
    failures = check_certificate(instance, cert, S(3))
    assert "level 1: target differs from the expected object" in failures


def test_claiming_zero_for_a_sphere(instance):
    point = ChainMap.zero(ZERO, S(2))
    fact = instance.f_factorize(point)
    fake = BaseCertificate(
        S(2), WeakLifting(ChainMap.identity(S(2)), point, fact, ChainMap.zero(S(2), fact.middle))
    )
    assert not verify_certificate(instance, fake, S(2))

    stolen = canonical_certificate(instance, D(1))
    assert not verify_certificate(instance, replace(stolen, target=S(2)), S(2))


def test_malformed_map_is_reported(instance):
    # S(1) -> D(1) by the identity in degree 1 does not commute with the differential
    bad = ChainMap(S(1), D(1), {1: Matrix.identity(1)}, validate=False)
    doc = certificate_to_document(canonical_certificate(instance, S(2)))
    doc["certificate"]["cofibre"]["f"] = map_to_document(bad)
    failures = check_certificate(instance, certificate_from_document(doc), S(2))
    assert "level 1: malformed object or map" in failures


def test_assemble_step_on_cone(instance):
    c = cone(S(1))
    inner = canonical_certificate(instance, c.obj)
    assert isinstance(inner, BaseCertificate)
    step = assemble_step_certificate(instance, c.incl, S(2), inner)
    assert step is not None and step.value == 1
    assert verify_certificate(instance, step, S(2))
    assert assemble_step_certificate(instance, c.incl, S(5), inner) is None
    with pytest.raises(MismatchError):
        assemble_step_certificate(instance, ChainMap.identity(S(1)), S(2), inner)


def test_non_canonical_towers_of_steps(instance):
    # S(1) has a value-1 certificate; stacking a step over id_S(1) gives value 2 for an acyclic target
    inner = canonical_certificate(instance, S(1))
    step = assemble_step_certificate(instance, ChainMap.identity(S(1)), D(3), inner)
    assert step is not None and step.value == 2
    assert verify_certificate(instance, step, D(3))
    assert step.value >= cat_of(instance, D(3)).value


def test_base_certificate_needs_zero_map(instance):
    ident = ChainMap.identity(D(1))
    fact: Factorization = instance.f_factorize(ident)
    lifted = instance.lift_along(ident, fact.second)
    wrong = BaseCertificate(D(1), WeakLifting(ident, ident, fact, lifted))
    assert check_certificate(instance, wrong, D(1)) == ["level 0: section is not taken along 0 -> target"]
