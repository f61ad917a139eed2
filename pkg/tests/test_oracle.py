import numpy as np
import pytest

import code_core
import oracle

from conftest import make_ring
from errors import BudgetExceeded, NotAnIdeal
from quotient_poly import delta_substitute, s_elem, s_mul, y_power


def test_span_of_one_is_the_ring():

    params = make_ring(p=3, k=1)
    basis = oracle.span_ideal(params, [s_elem(params, [[1]])])

    assert basis.dim == 9
    assert basis == oracle.full_ring(params)


def test_span_of_u_squared():

    params = make_ring(p=2, k=2)
    basis = oracle.span_ideal(params, [s_elem(params, [[], [], [1]])])

    assert basis.dim == params.n
    assert oracle.is_closed(basis)


def test_span_is_idempotent():

    params = make_ring(p=2, k=2)
    gens = [s_elem(params, [[0, 1], [1, 1]]), s_elem(params, [[], [0, 0, 1]])]
    basis = oracle.span_ideal(params, gens)

    assert oracle.span_ideal(params, basis.elements()) == basis


def test_example_span_dimension(example_ring, example_triple):

    basis = code_core.span(example_ring, example_triple)

    assert basis.dim == 14


def test_non_ideal_rows_are_rejected():

    params = make_ring(p=2, k=2)

    with pytest.raises(NotAnIdeal):

        oracle.ideal_from_rows(params, [s_elem(params, [[1]]).reshape(-1)])


def test_annihilators_of_trivial_ideals():

    params = make_ring(p=2, k=1)
    zero = oracle.zero_ideal(params)
    whole = oracle.full_ring(params)

    assert oracle.brute_annihilator(whole) == zero
    assert oracle.brute_annihilator(zero) == whole
    assert oracle.brute_dual(whole) == zero


def test_annihilator_of_u_squared_is_u():

    params = make_ring(p=2, k=2)
    u2 = oracle.span_ideal(params, [s_elem(params, [[], [], [1]])])
    u = oracle.span_ideal(params, [s_elem(params, [[], [1]])])

    assert oracle.brute_annihilator(u2) == u


def test_annihilator_kills_the_code(example_ring, example_triple):

    basis = code_core.span(example_ring, example_triple)
    ann = oracle.brute_annihilator(basis)

    assert basis.dim + ann.dim == 3 * example_ring.n

    for f in basis.elements():

        for g in ann.elements():

            assert np.all(s_mul(example_ring, f, g) == 0)


def test_outside_class_ideal_is_selfdual():

    for k in (1, 2):

        params = make_ring(p=2, k=k)
        half = params.n // 2
        gens = [s_elem(params, [[], [0] * half + [1]]),
                s_elem(params, [[], [], [1]])]

        assert oracle.is_selfdual(oracle.span_ideal(params, gens))


def test_budget_guard():

    with pytest.raises(BudgetExceeded):

        oracle.check_budget(make_ring(p=2, k=3))


def test_ideals_match_triples_for_length_two():

    params = make_ring(p=2, k=1)
    ideals = oracle.enumerate_ideals(params)
    triples = code_core.canonical_triples(params)

    assert len(ideals) == len(triples)
    assert {code_core.triple_from_basis(b) for b in ideals} == set(triples)
    assert all(oracle.is_closed(b) for b in ideals)


@pytest.mark.slow
def test_no_selfdual_ideals_in_odd_characteristic():

    params = make_ring(p=3, k=1)
    dual_params = params.dual_params()

    assert dual_params != params

    for basis in oracle.enumerate_ideals(params):

        perp = oracle.brute_dual(basis)

        assert perp.params == dual_params
        assert basis.dim + perp.dim == 3 * params.n
        assert oracle.is_selfdual(basis) == (perp == basis)
        assert not oracle.is_selfdual(basis)

    assert oracle.brute_selfdual_scan(params) == []


def test_selfdual_check_compares_vectors_across_rings():

    params = make_ring(p=3, k=1)
    ideal = oracle.span_ideal(params, [s_elem(params, [[], [], [1]])])
    perp = oracle.brute_dual(ideal)

    assert perp.params != ideal.params
    assert perp == oracle.span_ideal(params.dual_params(),
                                     [s_elem(params.dual_params(),
                                             [[], [1]])])
    assert not oracle.is_selfdual(ideal)


@pytest.mark.slow
def test_lattice_for_length_four():

    params = make_ring(p=2, k=2)
    ideals = oracle.enumerate_ideals(params)

    for basis in ideals:

        perp = oracle.brute_dual(basis)

        assert oracle.brute_dual(perp) == basis
        assert perp == oracle.reciprocal_basis(oracle.brute_annihilator(basis))
        assert basis.dim + perp.dim == 3 * params.n


@pytest.mark.slow
def test_three_selfdual_ideals_of_length_four():

    params = make_ring(p=2, k=2)
    found = oracle.brute_selfdual_scan(params)

    assert len(found) == 3


def random_ideal(params, rng, gens=2):
    """Ideal spanned by u^L (x-1)^j times random elements."""

    q = params.ctx.order
    elements = []

    for _ in range(gens):

        shift = y_power(params, int(rng.integers(0, params.n)),
                        int(rng.integers(0, 3)))
        noise = params.GF(rng.integers(0, q, size=(3, params.n)))
        elements.append(s_mul(params, shift, noise))

    return oracle.span_ideal(params, elements)


def test_dual_is_reciprocal_of_annihilator_on_seeded_ideals():

    params = make_ring(p=2, k=3)
    rng = np.random.default_rng(50)
    dims = set()

    for _ in range(50):

        ideal = random_ideal(params, rng)
        dims.add(ideal.dim)

        assert oracle.reciprocal_basis(oracle.brute_annihilator(ideal)) == \
            oracle.brute_dual(ideal)

    assert len(dims) >= 3


def substituted(original, reduced, delta0, basis):
    """Image of a monomial-coordinate ideal under x -> delta0 x."""

    rows = [delta_substitute(original, f, delta0).reshape(-1)
            for f in basis.elements()]

    return oracle.from_rows(reduced, rows, "monomial")


def layer_dims(basis):
    """dim(C), dim(C & uS), dim(C & u^2 S) from the RREF pivots."""

    n = basis.n

    return tuple(sum(1 for pivot in basis.pivots if pivot >= level * n)
                 for level in range(3))


@pytest.mark.slow
def test_delta_reduction_is_a_lattice_isomorphism():

    original = make_ring(p=3, k=1, delta=2)
    reduced, delta0 = original.reduced()
    source = oracle.enumerate_ideals(original, coords="monomial")
    target = oracle.enumerate_ideals(reduced, coords="monomial")
    images = [substituted(original, reduced, delta0, basis)
              for basis in source]

    assert len(source) == len(target)
    assert set(images) == set(target)
    assert len(set(images)) == len(images)

    for basis, image in zip(source, images):

        assert oracle.is_closed(image)
        assert layer_dims(image) == layer_dims(basis)

        yadic = image.to_coords("yadic")
        profile = code_core.triple_from_basis(yadic).profile

        assert code_core.code_size(reduced, profile) == basis.dim
        assert substituted(original, reduced, delta0,
                           oracle.brute_annihilator(basis)) == \
            oracle.brute_annihilator(image)
