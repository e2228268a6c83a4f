import pytest

from categories import check_j1, check_j2, check_m1m2, replay_failure
from chaincat import ChainInstance
from chains import ChainMap, Complex
from chains.documents import map_to_document

AUDIT_SAMPLES = 200


class IsomorphismsOnlyInstance(ChainInstance):
    """Claims that only isomorphisms are fibrations."""

    def is_fibration(self, m: ChainMap) -> bool:
        return m.is_surjective() and m.is_injective()


class BrokenLiftInstance(ChainInstance):
    def lift(self, square):
        return None


@pytest.mark.parametrize("check", [check_j1, check_j2, check_m1m2])
@pytest.mark.parametrize("seed", [0, 17])
def test_chain_instance_passes(instance, sampler, check, seed):
    report = check(instance, sampler, AUDIT_SAMPLES, seed)
    assert report.passed, [(f.seed, f.check, f.message) for f in report.failures]
    assert report.checks > AUDIT_SAMPLES


def test_generic_replacements_pass(generic_instance, sampler):
    for check in (check_j1, check_j2, check_m1m2):
        assert check(generic_instance, sampler, 40, 3).passed


def test_identity_is_trivial_both_ways(instance):
    ident = ChainMap.identity(Complex.disc(2))
    assert instance.is_trivial_cofibration(ident)
    assert instance.is_trivial_fibration(ident)


def test_corrupted_fibrations_are_caught(sampler):
    category = IsomorphismsOnlyInstance()
    report = check_j2(category, sampler, 50, 0)
    assert not report.passed
    failure = report.failures[0]
    assert failure.check in ("fibration", "base-extension-fibration", "base-extension-trivial-fibration")

    replayed = replay_failure("J2", category, sampler, failure)
    assert replayed["failure"]["check"] == failure.check
    assert replayed["failure"]["message"] == failure.message
    assert replayed["failure"]["counterexample"] == failure.counterexample


def test_missing_fillers_are_caught(sampler):
    report = check_m1m2(BrokenLiftInstance(), sampler, 20, 0)
    assert not report.passed
    assert all(f.check.startswith("M1") for f in report.failures)


def test_audit_is_deterministic(instance, sampler):
    first = check_j1(instance, sampler, 30, 5)
    second = check_j1(instance, sampler, 30, 5)
    assert first == second
    broken = IsomorphismsOnlyInstance()
    a = check_j2(broken, sampler, 20, 1).to_document(map_to_document)
    b = check_j2(broken, sampler, 20, 1).to_document(map_to_document)
    assert a == b
    assert a["verdict"] == "fail"
    assert a["failures"][0]["counterexample"]
