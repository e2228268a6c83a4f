import random

import pytest

from chains import ChainMap, Complex, homology_dims, is_quasi_iso
from ls_engine import (
    MismatchError,
    cat_of,
    check_cofibre_sequence,
    cofibre_sequence,
    homotopy_cofibre,
    weak_pushout,
)

S, D = Complex.sphere, Complex.disc
ZERO = Complex.zero()


def test_cofibre_of_map_to_zero_is_suspension(instance, complexes):
    for a in complexes(30, seed=100):
        seq = cofibre_sequence(instance, ChainMap.zero(a, ZERO))
        assert homology_dims(seq.obj) == {n + 1: k for n, k in homology_dims(a).items()}


def test_cofibre_sequences_are_valid(instance, maps):
    for f in maps(40, seed=101):
        seq = cofibre_sequence(instance, f)
        assert check_cofibre_sequence(instance, seq) == []
        assert seq.p.source == f.target and seq.f_bar.source == seq.cone_obj


def test_homotopy_cofibre_examples(instance):
    assert homology_dims(homotopy_cofibre(instance, ChainMap.zero(S(1), ZERO)).obj) == {2: 1}
    assert homology_dims(homotopy_cofibre(instance, ChainMap.identity(S(1))).obj) == {}
    assert homology_dims(homotopy_cofibre(instance, ChainMap.zero(S(1), S(3))).obj) == {2: 1, 3: 1}


def test_weak_pushout_square_commutes(instance, maps, sampler):
    rng = random.Random(102)
    for f_prime in maps(30, seed=102):
        a = sampler.sample_map(rng, f_prime.source, sampler.sample_object(rng))
        wp = weak_pushout(instance, f_prime, a)
        assert wp.x @ wp.factorization.first == wp.f @ a
        assert wp.f.source == a.target
        assert instance.is_cofibration(wp.f)


def test_weak_pushout_along_identity_is_the_factorization(instance, maps):
    for f_prime in maps(20, seed=103):
        wp = weak_pushout(instance, f_prime, ChainMap.identity(f_prime.source))
        assert is_quasi_iso(wp.x)
        assert homology_dims(wp.obj) == homology_dims(wp.factorization.middle)


def test_weak_pushout_needs_common_source(instance):
    with pytest.raises(MismatchError):
        weak_pushout(instance, ChainMap.identity(S(0)), ChainMap.identity(S(1)))


def euler_characteristic(x: Complex) -> int:
    return sum(-k if n % 2 else k for n, k in homology_dims(x).items())


def test_cofibre_homology_fits_the_exact_sequence(instance, maps):
    for f in maps(100, seed=104):
        seq = cofibre_sequence(instance, f)
        h_a, h_y, h_c = homology_dims(f.source), homology_dims(f.target), homology_dims(seq.obj)
        chi = euler_characteristic
        assert chi(seq.obj) == chi(f.target) - chi(f.source)
        for n in set(h_a) | set(h_y) | set(h_c):
            assert h_c.get(n, 0) <= h_y.get(n, 0) + h_a.get(n - 1, 0)
            assert h_y.get(n, 0) <= h_a.get(n, 0) + h_c.get(n, 0)


def test_cofibre_raises_cat_by_at_most_one(instance, maps):
    for f in maps(60, seed=105):
        seq = cofibre_sequence(instance, f)
        assert cat_of(instance, seq.obj).value <= cat_of(instance, f.target).value + 1
