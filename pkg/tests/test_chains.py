import random

import pytest

from chains import (
    ChainError,
    ChainMap,
    Complex,
    DocumentError,
    MapConstraint,
    ValidationError,
    are_weakly_equivalent,
    cocylinder_factor,
    cone,
    cycle_inclusion,
    cylinder_factor,
    detour_cocylinder_factor,
    detour_cylinder_factor,
    direct_sum,
    dualize,
    dualize_map,
    homology_dims,
    homology_projection,
    is_acyclic,
    is_quasi_iso,
    pullback,
    pullback_map,
    pushout,
    pushout_map,
    shift,
    solve_chain_map,
    validate,
)
from chains.documents import (
    complex_from_document,
    complex_to_document,
    dumps,
    map_from_document,
    map_to_document,
)
from linalg import Matrix

S, D = Complex.sphere, Complex.disc
ZERO = Complex.zero()


def test_validate_examples():
    assert validate(S(2)).ok
    assert validate(D(1)).ok
    one = Matrix(1, 1, [[1]])
    broken = Complex({2: 1, 1: 1, 0: 1}, {2: one, 1: one})
    report = validate(broken)
    assert not report.ok
    assert report.degree == 2
    with pytest.raises(ValidationError) as info:
        report.raise_for_failure()
    assert info.value.degree == 2


def test_complex_rejects_bad_shapes():
    with pytest.raises(ValidationError):
        Complex({1: 2, 0: 1}, {1: Matrix.identity(2)})
    with pytest.raises(ValidationError):
        Complex({0: -1})


def test_homology_examples():
    assert homology_dims(S(2)) == {2: 1}
    assert homology_dims(D(1)) == {}
    assert homology_dims(direct_sum(S(0), D(3))) == {0: 1}
    assert is_acyclic(ZERO)


def test_quasi_iso_examples(complexes):
    for x in complexes(20, seed=3):
        assert is_quasi_iso(ChainMap.identity(x))
    assert is_quasi_iso(ChainMap.zero(ZERO, D(1)))
    assert not is_quasi_iso(ChainMap.zero(ZERO, S(2)))


def test_homology_retraction(complexes):
    for x in complexes(30, seed=4):
        incl = cycle_inclusion(x)
        assert is_quasi_iso(incl)
        assert homology_projection(x) @ incl == ChainMap.identity(incl.source)


def test_shift_and_dual():
    assert dualize(S(2)) == S(-2)
    assert shift(S(0), 3) == S(3)
    assert homology_dims(shift(D(1), -1)) == {}


def test_double_dual(complexes, sampler):
    rng = random.Random(5)
    for x in complexes(30, seed=5):
        assert dualize(dualize(x)) == x
        assert homology_dims(dualize(x)) == {-n: k for n, k in homology_dims(x).items()}
        f = sampler.sample_map(rng, x, sampler.sample_object(rng))
        assert dualize_map(f).source == dualize(f.target)


def test_cone_examples(complexes):
    assert cone(ZERO).obj == ZERO
    c = cone(S(2))
    assert c.obj.dims == {2: 1, 3: 1}
    assert is_acyclic(c.obj)
    for x in complexes(30, seed=6):
        c = cone(x)
        assert validate(c.obj).ok
        assert is_acyclic(c.obj)
        assert c.incl.is_injective()


def test_cylinder_factor_examples():
    ident = ChainMap.identity(S(0))
    fact = cylinder_factor(ident)
    assert fact.second @ fact.first == ident
    assert homology_dims(fact.middle) == {0: 1}

    y = direct_sum(S(1), D(3))
    fact = cylinder_factor(ChainMap.zero(ZERO, y))
    assert homology_dims(fact.middle) == homology_dims(y)
    assert fact.first.source == ZERO


def test_cocylinder_factor_examples():
    fact = cocylinder_factor(ChainMap.zero(ZERO, S(0)))
    assert is_acyclic(fact.middle)
    assert fact.second.is_surjective()

    y = direct_sum(S(2), D(1))
    ident = ChainMap.identity(y)
    fact = cocylinder_factor(ident)
    assert fact.second @ fact.first == ident


@pytest.mark.parametrize(
    "factorize", [cylinder_factor, detour_cylinder_factor, cocylinder_factor, detour_cocylinder_factor]
)
def test_factorizations_on_random_maps(maps, factorize):
    for f in maps(25, seed=7):
        fact = factorize(f)
        assert fact.second @ fact.first == f
        assert fact.first.is_injective()
        if fact.kind.value == "C":
            assert fact.second.is_surjective() and is_quasi_iso(fact.second)
        else:
            assert fact.second.is_surjective() and is_quasi_iso(fact.first)


def test_pullback_examples(complexes):
    for x in complexes(10, seed=8):
        pb = pullback(ChainMap.zero(x, ZERO), ChainMap.zero(ZERO, ZERO))
        assert pb.obj.dims == x.dims
        assert pb.pr_f.is_injective() and pb.pr_f.is_surjective()

    e = cocylinder_factor(ChainMap.identity(S(1))).middle
    p = cocylinder_factor(ChainMap.identity(S(1))).second
    pb = pullback(ChainMap.zero(ZERO, S(1)), p)
    assert pb.obj.total_dim == e.total_dim - 1
    assert (p @ pb.pr_p).is_zero()


def test_pullback_mediating_map_is_unique(sampler, cospans):
    rng = random.Random(9)
    for f, g in cospans(15, seed=9):
        p = cocylinder_factor(g).second
        pb = pullback(f, p)
        d = sampler.sample_object(rng)
        h = sampler.sample_map(rng, d, pb.obj)
        assert pullback_map(pb, pb.pr_f @ h, pb.pr_p @ h) == h


def test_pullback_needs_common_target():
    with pytest.raises(ChainError):
        pullback(ChainMap.identity(S(0)), ChainMap.identity(S(1)))


def test_pushout_examples():
    y = direct_sum(S(0), D(2))
    po = pushout(ChainMap.zero(ZERO, ZERO), ChainMap.zero(ZERO, y))
    assert po.obj.dims == y.dims

    c = cone(S(1))
    po = pushout(c.incl, ChainMap.zero(S(1), ZERO))
    assert homology_dims(po.obj) == {2: 1}


def test_cobase_extension_of_injection(maps, sampler):
    rng = random.Random(10)
    for f in maps(20, seed=10):
        i = cylinder_factor(f).first
        g = sampler.sample_map(rng, i.source, sampler.sample_object(rng))
        po = pushout(i, g)
        assert po.in_g.is_injective()
        assert po.in_i @ i == po.in_g @ g
        assert pushout_map(po, po.in_i, po.in_g) == ChainMap.identity(po.obj)


def test_weak_equivalence_examples(complexes):
    x = complexes(1, seed=11)[0]
    assert are_weakly_equivalent(x, x) is not None
    zigzag = are_weakly_equivalent(S(2), direct_sum(D(1), S(2)))
    assert zigzag is not None
    assert is_quasi_iso(zigzag.left) and is_quasi_iso(zigzag.right)
    assert are_weakly_equivalent(S(2), S(3)) is None


def test_solve_chain_map_with_constraint():
    p = cocylinder_factor(ChainMap.identity(S(0))).second
    section = solve_chain_map(S(0), p.source, [MapConstraint(ChainMap.identity(S(0)), left=p)])
    assert section is not None
    assert p @ section == ChainMap.identity(S(0))
    through_zero = MapConstraint(ChainMap.identity(S(0)), left=ChainMap.zero(ZERO, S(0)))
    assert solve_chain_map(S(0), ZERO, [through_zero]) is None


def test_documents_round_trip(maps):
    for f in maps(15, seed=12):
        doc = map_to_document(f)
        again = map_from_document(doc)
        assert again == f
        assert complex_from_document(complex_to_document(f.source)) == f.source
        assert dumps(map_to_document(again)) == dumps(doc)


def test_document_with_nonzero_square_names_degree():
    doc = {"dims": {"0": 1, "1": 1, "2": 1}, "d": {"1": [["1"]], "2": [["2"]]}}
    with pytest.raises(ValidationError) as info:
        complex_from_document(doc)
    assert info.value.degree == 2
    assert complex_from_document(doc, check=False).dims == {0: 1, 1: 1, 2: 1}


@pytest.mark.parametrize(
    "doc",
    [
        {},
        {"dims": {"x": 1}},
        {"dims": {"0": -1}},
        {"dims": {"0": 1, "1": 1}, "d": {"1": [["1", "0"]]}},
        {"dims": {"0": 1, "1": 1}, "d": {"1": [["1/0"]]}},
        {"dims": {"0": 1, "1": 1}, "d": {"1": "1"}},
    ],
)
def test_malformed_complex_documents(doc):
    with pytest.raises(DocumentError):
        complex_from_document(doc)


def test_map_document_rejects_noncommuting_map():
    # S(1) -> D(1) by 1 in degree 1: d f_1 = 1 but f_0 d = 0
    doc = {
        "source": complex_to_document(S(1)),
        "target": complex_to_document(D(1)),
        "comps": {"1": [["1"]]},
    }
    with pytest.raises(ValidationError) as info:
        map_from_document(doc)
    assert info.value.degree == 1


def test_map_document_accepts_disc_collapse():
    doc = {
        "source": complex_to_document(D(1)),
        "target": complex_to_document(S(1)),
        "comps": {"1": [["1"]]},
    }
    assert map_from_document(doc).comp(1) == Matrix.identity(1)
