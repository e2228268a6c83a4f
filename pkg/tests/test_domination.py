import random

import pytest

from chaincat import domination_oracle, weak_section_oracle
from chains import ChainMap, Complex, direct_sum, homology_dims
from ls_engine import (
    InvalidWitness,
    cat_of,
    check_domination,
    check_weak_lifting,
    domination_from_weak_section,
    dominates,
    ganea_tower,
    transfer_section,
    transport_domination,
    weak_section,
)

S, D = Complex.sphere, Complex.disc
SAMPLES = 200


def test_domination_examples(instance):
    witness = dominates(instance, direct_sum(S(0), S(2)), S(2))
    assert witness is not None
    assert check_domination(instance, witness) == []
    assert dominates(instance, S(2), S(3)) is None


def test_domination_is_reflexive(instance, complexes):
    for x in complexes(SAMPLES, seed=40):
        witness = dominates(instance, x, x)
        assert witness is not None
        assert check_domination(instance, witness) == []
        assert witness.alpha == ChainMap.identity(x)


def test_reflexivity_with_generic_models(generic_instance, complexes):
    for x in complexes(20, seed=41):
        witness = dominates(generic_instance, x, x)
        assert witness is not None
        assert witness.cofibrant.obj != x or x == Complex.zero()
        assert check_domination(generic_instance, witness) == []


def test_domination_matches_oracle(instance, complexes):
    xs = complexes(SAMPLES, seed=42)
    ys = complexes(SAMPLES, seed=43)
    for x, y in zip(xs, ys):
        witness = dominates(instance, x, y)
        assert (witness is not None) == domination_oracle(x, y), (homology_dims(x), homology_dims(y))
        if witness is not None:
            assert check_domination(instance, witness) == []


def test_domination_bounds_cat(instance, complexes):
    xs = complexes(SAMPLES, seed=44)
    ys = complexes(SAMPLES, seed=45)
    for x, y in zip(xs, ys):
        if dominates(instance, x, y) is not None:
            assert cat_of(instance, y).value <= cat_of(instance, x).value


def test_weak_sections_give_dominations(instance, maps):
    for f in maps(SAMPLES, seed=46):
        section = weak_section(instance, f)
        if section is None:
            continue
        witness = domination_from_weak_section(instance, f, section)
        assert witness.x == f.source and witness.y == f.target
        assert check_domination(instance, witness) == []


def test_weak_section_of_identity_gives_domination(instance, complexes):
    for x in complexes(10, seed=47):
        ident = ChainMap.identity(x)
        witness = domination_from_weak_section(instance, ident, weak_section(instance, ident))
        assert witness.alpha == ident
        assert check_domination(instance, witness) == []


def test_first_ganea_level_dominates_sphere(instance):
    p1 = ganea_tower(instance, S(2), 1).level(1).p
    witness = domination_from_weak_section(instance, p1, weak_section(instance, p1))
    assert witness.y == S(2)
    assert check_domination(instance, witness) == []


def test_foreign_section_is_rejected(instance):
    ident = ChainMap.identity(S(1))
    other = weak_section(instance, ChainMap.identity(S(2)))
    with pytest.raises(InvalidWitness):
        domination_from_weak_section(instance, ident, other)


def test_transport_along_thickening(instance, sampler, complexes):
    rng = random.Random(48)
    xs = complexes(SAMPLES, seed=48)
    zs = complexes(SAMPLES, seed=49)
    for x, z in zip(xs, zs):
        witness = dominates(instance, x, z)
        if witness is None:
            continue
        w = sampler.thicken(rng, x).inclusion
        moved = transport_domination(instance, w, witness)
        assert moved is not None
        assert moved.x == w.target and moved.y == z
        assert check_domination(instance, moved) == []


def test_transport_rejects_non_equivalences(instance):
    witness = dominates(instance, S(0), S(0))
    with pytest.raises(InvalidWitness):
        transport_domination(instance, ChainMap.zero(S(0), S(0)), witness)
    with pytest.raises(InvalidWitness):
        transport_domination(instance, ChainMap.identity(S(1)), witness)


def test_transfer_section_bounds_cat(instance, complexes):
    xs = complexes(40, seed=50)
    ys = complexes(40, seed=51)
    for x, y in zip(xs, ys):
        witness = dominates(instance, x, y)
        if witness is None:
            continue
        n = cat_of(instance, x).value
        moved = transfer_section(instance, witness, n)
        assert check_weak_lifting(instance, moved) == []
        assert moved.f == ChainMap.identity(witness.fibrant.obj)
        assert weak_section_oracle(moved.g)


def test_no_domination_means_no_weak_section(instance, sampler, complexes):
    point = ChainMap.zero(Complex.zero(), S(0))
    assert dominates(instance, Complex.zero(), S(0)) is None
    assert weak_section(instance, point) is None

    rng = random.Random(47)
    refused = 0
    for x, y in zip(complexes(SAMPLES, seed=48), complexes(SAMPLES, seed=49)):
        if domination_oracle(x, y):
            continue
        refused += 1
        assert dominates(instance, x, y) is None
        for _ in range(3):
            assert weak_section(instance, sampler.sample_map(rng, x, y)) is None
    assert refused > 0
