import random

import pytest

from chains import ChainMap, Complex, direct_sum, pullback, pushout
from ls_engine import (
    Leg,
    MismatchError,
    PullbackSquare,
    PushoutSquare,
    is_homotopy_pullback,
    is_homotopy_pushout,
    pullback_comparison,
)

S, D = Complex.sphere, Complex.disc
ZERO = Complex.zero()


def test_strict_pullback_along_fibration(instance, cospans):
    for f, g in cospans(40, seed=90):
        p = instance.f_factorize(g).second
        pb = instance.pullback_along_fibration(f, p)
        sq = PullbackSquare(f, p, pb.pr_f, pb.pr_p)
        assert is_homotopy_pullback(instance, sq, Leg.RIGHT)
        assert is_homotopy_pullback(instance, sq, Leg.LEFT)


def test_extra_homology_is_not_a_homotopy_pullback(instance):
    apex = direct_sum(D(2), S(5))
    zero = ChainMap.identity(ZERO)
    sq = PullbackSquare(zero, zero, ChainMap.zero(apex, ZERO), ChainMap.zero(apex, ZERO))
    assert not is_homotopy_pullback(instance, sq)
    assert pullback_comparison(instance, sq).source == apex


def test_pullback_legs_agree(instance, cospans):
    for f, g in cospans(60, seed=91):
        pb = pullback(f, g)
        sq = PullbackSquare(f, g, pb.pr_f, pb.pr_p)
        assert is_homotopy_pullback(instance, sq, Leg.LEFT) == is_homotopy_pullback(instance, sq, Leg.RIGHT)


def test_strict_pushout_along_cofibration(instance, sampler, maps):
    rng = random.Random(92)
    for m in maps(40, seed=92):
        i = instance.c_factorize(m).first
        g = sampler.sample_map(rng, m.source, sampler.sample_object(rng))
        po = instance.pushout_along_cofibration(i, g)
        sq = PushoutSquare(i, g, po.in_i, po.in_g)
        assert is_homotopy_pushout(instance, sq, Leg.LEFT)
        assert is_homotopy_pushout(instance, sq, Leg.RIGHT)


def test_pushout_legs_agree(instance, sampler, maps):
    rng = random.Random(93)
    for i in maps(60, seed=93):
        g = sampler.sample_map(rng, i.source, sampler.sample_object(rng))
        po = pushout(i, g)
        sq = PushoutSquare(i, g, po.in_i, po.in_g)
        assert is_homotopy_pushout(instance, sq, Leg.LEFT) == is_homotopy_pushout(instance, sq, Leg.RIGHT)


def test_extra_homology_is_not_a_homotopy_pushout(instance):
    zero = ChainMap.identity(ZERO)
    sq = PushoutSquare(zero, zero, ChainMap.zero(ZERO, S(5)), ChainMap.zero(ZERO, S(5)))
    assert not is_homotopy_pushout(instance, sq)


def test_square_must_commute(instance):
    ident = ChainMap.identity(S(0))
    zero = ChainMap.zero(S(0), S(0))
    with pytest.raises(MismatchError):
        is_homotopy_pullback(instance, PullbackSquare(ident, ident, ident, zero))
    with pytest.raises(MismatchError):
        is_homotopy_pushout(instance, PushoutSquare(ident, ident, ident, zero))
