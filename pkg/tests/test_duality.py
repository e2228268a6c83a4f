import pytest

from categories import StructuredCategory
from chaincat import ChainInstance, cat_oracle
from chains import Complex, dualize
from ls_engine import DualizationUnsupported, cocat_of, indcocat_of, verify_certificate

S, D = Complex.sphere, Complex.disc


class NoDualInstance(ChainInstance):
    supports_duality = False


@pytest.mark.parametrize("n", [-2, -1, 0, 1, 2, 3])
def test_cocat_of_spheres(instance, n):
    assert cocat_of(instance, S(n)).value == 1


def test_cocat_of_acyclic(instance):
    assert cocat_of(instance, Complex.zero()).value == 0
    assert cocat_of(instance, D(3)).value == 0


def test_indcocat_certifies_the_dual(instance):
    result = indcocat_of(instance, S(2))
    assert result.value == 1
    assert verify_certificate(instance, result.certificate, S(-2))


def test_indcocat_matches_cocat(instance, complexes):
    for x in complexes(100, seed=80):
        cocat = cocat_of(instance, x)
        assert indcocat_of(instance, x).value == cocat.value == cat_oracle(dualize(x))


def test_duality_must_be_supported():
    category: StructuredCategory = NoDualInstance()
    with pytest.raises(DualizationUnsupported):
        cocat_of(category, S(1))
    with pytest.raises(DualizationUnsupported):
        indcocat_of(category, S(1))
