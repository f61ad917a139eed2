import pytest

from code_core import GeneratorTriple
from field_tower import FieldCtx
from quotient_poly import RingParams


def make_ring(p=2, k=2, m=1, alpha=1, delta=1, modulus=None):

    return RingParams(FieldCtx(p, m, modulus), k, alpha, delta)


@pytest.fixture
def ring():
    """Factory for RingParams with small defaults."""

    return make_ring


@pytest.fixture
def f2():

    return FieldCtx(2)


@pytest.fixture
def f4():

    return FieldCtx(2, 2)


@pytest.fixture
def example_ring():

    return make_ring(p=3, k=2)


@pytest.fixture
def example_triple():
    """
    f0 = (x-1)^7 + u (x-1)^2 (1 + (x-1)), f1 = u (x-1)^4 + u^2 (1 - (x-1)),
    f2 = u^2 (x-1)^2 over F_3.
    """

    return GeneratorTriple.build(7, 2, (1, 1), 4, (1, 2), 2, ())


@pytest.fixture
def example_annihilator():

    return GeneratorTriple.build(7, 3, (2, 1), 5, (2, 2), 2, (1,))
