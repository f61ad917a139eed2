import galois
import numpy as np

import linalg

GF2 = galois.GF(2)
GF9 = galois.GF(3 ** 2)


def test_rref_drops_zero_rows():

    matrix = GF2([[1, 1, 0], [1, 1, 0], [0, 1, 1]])
    reduced, pivots = linalg.rref(matrix)

    assert pivots == [0, 1]
    assert np.array_equal(reduced, GF2([[1, 0, 1], [0, 1, 1]]))
    assert linalg.rank(matrix) == 2


def test_empty_matrix():

    empty = GF2.Zeros((0, 4))

    assert linalg.rref(empty)[1] == []
    assert np.array_equal(linalg.null_space(empty, 4), GF2.Identity(4))


def test_null_space_is_annihilated():

    matrix = GF9([[1, 2, 3, 4], [0, 5, 6, 7]])
    kernel = linalg.null_space(matrix)

    assert kernel.shape == (2, 4)
    assert np.all(matrix @ kernel.T == 0)


def test_solve_consistent_system():

    matrix = GF9([[1, 1], [0, 0]])
    rhs = GF9([4, 0])
    particular, kernel = linalg.solve(matrix, rhs)

    assert np.array_equal(matrix @ particular, rhs)
    assert kernel.shape == (1, 2)


def test_solve_inconsistent_system():

    matrix = GF2([[0, 0], [1, 0]])
    particular, kernel = linalg.solve(matrix, GF2([1, 0]))

    assert particular is None
    assert kernel.shape == (1, 2)


def test_null_space_dimension_matches_rank():

    for matrix in (GF9.Identity(3), GF2.Zeros((2, 3)),
                   GF9([[1, 2, 0], [2, 4, 0]]), GF2([[1, 1, 1]])):

        kernel = linalg.null_space(matrix)

        assert kernel.shape[0] + linalg.rank(matrix) == matrix.shape[1]
        assert linalg.rank(kernel) == kernel.shape[0]
        assert np.all(matrix @ kernel.T == 0)
