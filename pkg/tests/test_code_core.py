import itertools

import numpy as np
import pytest

import code_core
import oracle

from code_core import CodeClass, GeneratorTriple, TorsionProfile
from conftest import make_ring
from errors import InvalidInput, NotAnIdeal
from quotient_poly import inv_mod_nilpotent, s_elem, s_mul, sbar, trim


def test_example_triple_is_valid(example_ring, example_triple):

    assert code_core.validate_triple(example_ring, example_triple) == []
    assert code_core.is_consistent(example_ring, example_triple)


def test_example_profile_and_classes(example_ring, example_triple):

    basis = code_core.span(example_ring, example_triple)
    profile = code_core.torsion_profile(example_ring, basis)

    assert profile.as_tuple() == (7, 4, 2)
    assert code_core.classify(9, profile) == {CodeClass.C,
                                              CodeClass.C_PRIME}
    assert code_core.code_size(example_ring, profile) == 14


def test_degree_of_r_must_stay_below_c(example_ring):

    bad = GeneratorTriple.build(7, 2, (1, 1), 4, (1, 2, 1), 2, ())
    violations = code_core.validate_triple(example_ring, bad)

    assert len(violations) == 1
    assert "deg(r)" in violations[0]


def test_zero_code_and_whole_ring(ring):

    params = ring(p=2, k=2)
    zero = GeneratorTriple.build(4, 0, (), 4, (), 4, ())
    whole = GeneratorTriple.build(0, 0, (), 0, (), 0, ())

    assert code_core.validate_triple(params, zero) == []
    assert code_core.code_size(params, zero.profile) == 0
    assert code_core.span(params, whole) == oracle.full_ring(params)
    assert code_core.code_size(params, whole.profile) == 12


def test_torsion_chain_is_enforced():

    with pytest.raises(InvalidInput):

        TorsionProfile(2, 3, 1)


def test_torsion_profile_rejects_non_ideals(ring):

    params = ring(p=2, k=2)
    rows = oracle.from_rows(params, [s_elem(params, [[1]]).reshape(-1)])

    with pytest.raises(NotAnIdeal):

        code_core.torsion_profile(params, rows)


def test_outside_class_ideal_profile(ring):

    params = ring(p=2, k=2)
    gens = [s_elem(params, [[], [0, 0, 1]]), s_elem(params, [[], [], [1]])]
    triple = code_core.canonicalize(params, gens)

    assert triple.profile.as_tuple() == (4, 2, 0)
    assert code_core.classify(4, triple.profile) == {CodeClass.A_PRIME,
                                                     CodeClass.B}


def test_classes_on_boundaries():

    assert code_core.classify(4, TorsionProfile(2, 2, 0)) == {
        CodeClass.A, CodeClass.A_PRIME}
    assert code_core.classify(4, TorsionProfile(4, 0, 0)) == {
        CodeClass.A, CodeClass.A_PRIME, CodeClass.B}
    assert code_core.classify(8, TorsionProfile(5, 3, 2)) == {CodeClass.C}


def test_canonical_form_of_principal_u_squared(ring):

    params = ring(p=3, k=1)
    triple = code_core.canonicalize(params, [s_elem(params, [[], [], [1]])])

    assert triple == GeneratorTriple.build(3, 0, (), 3, (), 0, ())


def test_canonical_form_survives_unit_multiples(example_ring,
                                                example_triple):

    gens = code_core.generators(example_ring, example_triple)
    unit = s_elem(example_ring, [[2, 1, 0, 1], [1, 2], [0, 0, 1]])
    moved = [s_mul(example_ring, unit, f) for f in gens]
    mixed = moved + [moved[0] + moved[1]]

    assert code_core.canonicalize(example_ring, mixed) == example_triple


def test_example_is_class_C_case_one(example_ring, example_triple):

    report = code_core.validate_class_C(example_ring, example_triple)

    assert report.valid
    assert report.case == 1


def test_perturbed_r_breaks_class_C(example_ring, example_triple):

    g = example_triple.poly(example_ring, "g")
    r = inv_mod_nilpotent(example_ring, g, 2)
    r[0] += 1
    bad = GeneratorTriple.build(7, 2, (1, 1), 4, r[:2], 2, ())
    report = code_core.validate_class_C(example_ring, bad)

    assert not report.valid
    assert any("alpha g^{-1}" in v for v in report.violations)


def test_case_two_triple_in_characteristic_two(ring):

    params = ring(p=2, k=3)
    g = sbar(params, [1, 1])
    r = inv_mod_nilpotent(params, g, 2)
    triple = GeneratorTriple.build(5, 1, (1, 1), 4, r, 2, ())

    assert trim(r[:1]) == trim(g[:1])

    report = code_core.validate_class_C(params, triple)

    assert report.valid
    assert report.case == 2


def test_example_annihilator(example_ring, example_triple,
                             example_annihilator):

    ann, path = code_core.annihilator(example_ring, example_triple)

    assert path == "closed-form"
    assert ann == example_annihilator
    assert code_core.annihilator_witness(example_ring,
                                         example_triple).l == (2,)

    brute = oracle.brute_annihilator(code_core.span(example_ring,
                                                    example_triple))

    assert code_core.span(example_ring, ann) == brute


def test_generator_products_vanish(example_ring, example_triple,
                                   example_annihilator):

    pairs = itertools.product(
        code_core.generators(example_ring, example_triple),
        code_core.generators(example_ring, example_annihilator))

    for f, g in pairs:

        assert np.all(s_mul(example_ring, f, g) == 0)


def test_annihilator_profile_and_sizes(example_ring, example_triple):

    ann, _ = code_core.annihilator(example_ring, example_triple)
    a, b, c = example_triple.profile.as_tuple()

    assert ann.profile.as_tuple() == (9 - c, a - example_triple.t, 9 - a)
    assert (code_core.code_size(example_ring, example_triple.profile)
            + code_core.code_size(example_ring, ann.profile)) == 27
    assert code_core.eta_roundtrip(example_ring, example_triple)


def test_dual_in_odd_characteristic(example_ring, example_triple):

    perp = code_core.dual(example_ring, example_triple)
    basis = code_core.span(example_ring, example_triple)

    assert perp == code_core.triple_from_basis(oracle.brute_dual(basis))
    assert code_core.code_size(example_ring, perp.profile) == 13


def test_dual_of_whole_ring_is_zero(ring):

    params = ring(p=2, k=2)
    whole = GeneratorTriple.build(0, 0, (), 0, (), 0, ())

    assert code_core.dual(params, whole) == GeneratorTriple.build(
        4, 0, (), 4, (), 4, ())


def test_dual_is_an_involution_in_characteristic_two(ring):

    params = ring(p=2, k=3)
    half = params.n // 2
    triple = GeneratorTriple.build(5, 1, (1, 1), 4,
                                   inv_mod_nilpotent(params, sbar(params,
                                                                  [1, 1]), 2),
                                   2, (1,))
    perp = code_core.dual(params, triple)
    basis = code_core.span(params, triple)

    assert code_core.span(params, perp) == oracle.brute_dual(basis)
    assert code_core.dual(params, perp) == triple
    assert perp.profile.b == half


def test_triple_json_round_trip(example_ring, example_triple):

    data = example_triple.to_json(example_ring.ctx)

    assert data["g"] == [[1], [1]]
    assert GeneratorTriple.from_json(example_ring.ctx, data) == example_triple

    with pytest.raises(InvalidInput):

        GeneratorTriple.from_json(example_ring.ctx, dict(data, d=1))


def test_length_two_has_a_triple_per_ideal(ring):

    params = ring(p=2, k=1)
    triples = code_core.canonical_triples(params)

    assert len(set(triples)) == len(triples)
    assert all(code_core.is_consistent(params, tr) for tr in triples)


@pytest.mark.slow
def test_triples_and_ideals_agree_for_length_four(ring):

    params = ring(p=2, k=2)
    ideals = oracle.enumerate_ideals(params)
    triples = code_core.canonical_triples(params)
    spans = {code_core.span(params, tr) for tr in triples}

    assert len(spans) == len(triples) == len(ideals)
    assert spans == set(ideals)

    for basis in ideals:

        tr = code_core.triple_from_basis(basis)
        ann, _ = code_core.annihilator(params, tr)

        assert code_core.span(params, ann) == oracle.brute_annihilator(basis)


@pytest.mark.slow
def test_triples_and_ideals_agree_for_length_three(ring):

    params = ring(p=3, k=1)
    ideals = oracle.enumerate_ideals(params)
    triples = code_core.canonical_triples(params)

    assert {code_core.triple_from_basis(b) for b in ideals} == set(triples)


@pytest.mark.parametrize("p, k", [(2, 2), pytest.param(3, 1,
                                                       marks=pytest.mark.slow)])
def test_annihilator_is_a_bijection_from_C_onto_C_prime(p, k):

    params = make_ring(p=p, k=k)
    class_c = [tr for tr in code_core.canonical_triples(params)
               if CodeClass.C in code_core.classify(params.n, tr.profile)]
    images = {}

    assert class_c

    for tr in class_c:

        ann, path = code_core.annihilator(params, tr)
        basis = code_core.span(params, tr)

        assert path == "closed-form"
        assert CodeClass.C_PRIME in code_core.classify(params.n, ann.profile)
        assert ann == code_core.triple_from_basis(
            oracle.brute_annihilator(basis))
        assert code_core.annihilator(params, ann)[0] == tr
        assert code_core.eta_roundtrip(params, tr)
        assert ann not in images

        images[ann] = tr
