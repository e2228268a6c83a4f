import random

import pytest

import ls_engine
from chains import ChainMap, Complex, cone, direct_sum, homology_dims
from ls_engine import (
    BaseCertificate,
    EngineError,
    InvalidWitness,
    assemble_step_certificate,
    canonical_certificate,
    canonical_section,
    cat_of,
    certificate_bound,
    check_synthesis,
    check_weak_lifting,
    cofibre_sequence,
    ganea_tower,
    restrict_section,
    synthesize_section,
    transfer_section,
    weak_section,
)
from ls_engine.documents import synthesis_to_document

S, D = Complex.sphere, Complex.disc
ZERO = Complex.zero()


def point(b: Complex) -> ChainMap:
    return ChainMap.zero(ZERO, b)


def test_section_over_suspension(instance):
    c = cone(S(1))
    seq = cofibre_sequence(instance, c.incl)
    assert homology_dims(seq.obj) == {2: 1}
    s = weak_section(instance, point(c.obj))
    syn = synthesize_section(instance, seq, s, 1)
    assert syn.p_n @ syn.sigma == ChainMap.identity(seq.obj)
    assert syn.matches_canonical is True
    assert check_synthesis(instance, syn) == []
    assert homology_dims(syn.obj) == homology_dims(ganea_tower(instance, seq.obj, 1).level(1).obj)


def test_zero_source_reduces_to_target(instance):
    y = D(2)
    seq = cofibre_sequence(instance, point(y))
    assert homology_dims(seq.obj) == {}
    syn = synthesize_section(instance, seq, weak_section(instance, point(y)), 1)
    assert syn.p_n @ syn.sigma == ChainMap.identity(seq.obj)
    assert syn.lam.source == ZERO


def test_second_level_section(instance):
    y = S(1)
    seq = cofibre_sequence(instance, point(y))
    p1 = ganea_tower(instance, y, 1).level(1).p
    syn = synthesize_section(instance, seq, weak_section(instance, p1), 2)
    assert syn.level == 2
    assert syn.p_n @ syn.sigma == ChainMap.identity(seq.obj)
    assert check_synthesis(instance, syn) == []

    doc = synthesis_to_document(syn)
    assert doc["level"] == 2
    assert doc["matches_canonical"] is True
    assert set(doc["maps"]) >= {"sigma", "p_n", "q_prime", "lambda"}


def test_synthesis_rejects_bad_inputs(instance):
    c = cone(S(1))
    seq = cofibre_sequence(instance, c.incl)
    s = weak_section(instance, point(c.obj))
    with pytest.raises(ValueError):
        synthesize_section(instance, seq, s, 0)
    wrong = weak_section(instance, ChainMap.identity(c.obj))
    with pytest.raises(InvalidWitness):
        synthesize_section(instance, seq, wrong, 1)
    # a section of the identity is not a section of 0 -> S(1)
    seq = cofibre_sequence(instance, ChainMap.identity(S(1)))
    with pytest.raises(InvalidWitness):
        synthesize_section(instance, seq, weak_section(instance, ChainMap.identity(S(1))), 1)


def handcrafted_certificates(instance):
    """Non-canonical certificates, each paired with its target."""
    out = []
    for n in (-1, 0, 2):
        c = cone(S(n))
        inner = canonical_certificate(instance, c.obj)
        out.append((assemble_step_certificate(instance, c.incl, S(n + 1), inner), S(n + 1)))
    sphere = canonical_certificate(instance, S(1))
    out.append((assemble_step_certificate(instance, ChainMap.identity(S(1)), D(3), sphere), D(3)))
    out.append((assemble_step_certificate(instance, point(S(1)), S(1), sphere), S(1)))
    return out


def test_bound_from_canonical_certificates(instance, complexes):
    for x in complexes(25, seed=70):
        cert = canonical_certificate(instance, x)
        bound = certificate_bound(instance, cert, x)
        assert bound.value == cert.value
        assert check_weak_lifting(instance, bound.section) == []
        assert cat_of(instance, x).value <= bound.value
        if bound.synthesis is not None:
            syn = bound.synthesis
            assert syn.p_n @ syn.sigma == ChainMap.identity(syn.cofibre.obj)


def test_bound_from_handcrafted_certificates(instance):
    for cert, x in handcrafted_certificates(instance):
        assert cert is not None
        bound = certificate_bound(instance, cert, x)
        assert bound.value == cert.value
        assert check_weak_lifting(instance, bound.section) == []
        assert cat_of(instance, x).value <= bound.value
        syn = bound.synthesis
        assert syn.p_n @ syn.sigma == ChainMap.identity(syn.cofibre.obj)


def test_bound_of_base_certificate(instance):
    cert = canonical_certificate(instance, D(1))
    assert isinstance(cert, BaseCertificate)
    bound = certificate_bound(instance, cert, D(1))
    assert bound.value == 0 and bound.synthesis is None
    assert bound.section is cert.section


def test_bound_rejects_invalid_certificate(instance):
    cert = canonical_certificate(instance, S(2))
    with pytest.raises(InvalidWitness):
        certificate_bound(instance, cert, S(4))


def test_canonical_section_from_synthesis(instance):
    y = S(1)
    seq = cofibre_sequence(instance, point(y))
    p1 = ganea_tower(instance, y, 1).level(1).p
    syn = synthesize_section(instance, seq, weak_section(instance, p1), 2)
    over = canonical_section(instance, syn)
    assert over.g == ganea_tower(instance, seq.obj, 2).level(2).p
    assert over.f == ChainMap.identity(seq.obj)
    assert check_weak_lifting(instance, over) == []


def test_restrict_section_along_thickenings(instance, sampler, complexes):
    rng = random.Random(81)
    for x in complexes(10, seed=81):
        n = cat_of(instance, x).value
        thick = sampler.thicken(rng, x)
        over_thick = weak_section(instance, ganea_tower(instance, thick.obj, n).level(n).p)
        restricted = restrict_section(instance, over_thick, thick.inclusion, n)
        assert restricted.g == ganea_tower(instance, x, n).level(n).p
        assert check_weak_lifting(instance, restricted) == []
        over_x = weak_section(instance, ganea_tower(instance, x, n).level(n).p)
        back = restrict_section(instance, over_x, thick.projection, n)
        assert check_weak_lifting(instance, back) == []


def test_restrict_section_rejects_foreign_section(instance):
    wrong = weak_section(instance, ChainMap.identity(S(1)))
    with pytest.raises(InvalidWitness):
        restrict_section(instance, wrong, ChainMap.identity(S(1)), 1)


def forbid_search(monkeypatch):
    """Make every weak-section search report that none exists."""
    for module in (ls_engine.lifting, ls_engine.ganea, ls_engine.domination, ls_engine.certificates):
        monkeypatch.setattr(module, "weak_section", lambda *args, **kwargs: None)


def test_bound_follows_from_the_inner_certificate(instance, monkeypatch):
    certificates = handcrafted_certificates(instance)
    wedge = direct_sum(S(2), S(3))
    canonical = [(canonical_certificate(instance, x), x) for x in (S(1), wedge, D(2))]
    forbid_search(monkeypatch)
    for cert, x in certificates + canonical:
        bound = certificate_bound(instance, cert, x)
        n = cert.value
        assert bound.value == n
        assert check_weak_lifting(instance, bound.section) == []
        assert bound.section.g == ganea_tower(instance, x, n).level(n).p
    sphere = certificates[-1][0]
    with pytest.raises(EngineError):
        transfer_section(instance, sphere.domination, sphere.value)
