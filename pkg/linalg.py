# -*- coding: utf-8 -*-
"""
Copyright (c) The Really Nice Codes developers 2026.

This file is part of Really Nice Codes.

Really Nice Codes is free software: you can redistribute it and/or modify it
under the terms of the GNU Affero General Public License as published by the
Free Software Foundation, either version 3 of the License, or (at your option)
 any later version.

Really Nice Codes is distributed in the hope that it will be useful, but
WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY
or FITNESS FOR A PARTICULAR PURPOSE.
See the GNU General Public License for more details.

You should have received a copy of the GNU Affero General Public License
along with Really Nice Codes. If not, see:
<https://www.gnu.org/licenses/agpl-3.0.html>.

Exact elimination over F_{p^m} on galois FieldArrays.
"""

import numpy as np


def rref(matrix):
    """
    Reduced row echelon form with the zero rows dropped.

    Parameters
    ----------
    matrix : galois.FieldArray
        2-D array over some finite field.

    Returns
    -------
    reduced : galois.FieldArray
        The nonzero rows of the RREF, pivots normalised to 1.
    pivots : list of int
        Pivot column of each returned row, strictly increasing.
    """

    field = type(matrix)

    if matrix.shape[0] == 0:

        return field.Zeros((0, matrix.shape[1])), []

    reduced = matrix.row_reduce()
    keep = np.any(reduced != 0, axis=1)
    reduced = reduced[keep]
    pivots = [int(np.flatnonzero(row != 0)[0]) for row in reduced]

    return reduced, pivots


def rank(matrix):

    return len(rref(matrix)[1])


def null_space(matrix, ncols=None):
    """
    Basis (as rows) of {v : matrix @ v = 0}.

    ncols is only needed when matrix has no rows at all.
    """

    field = type(matrix)
    ncols = matrix.shape[1] if ncols is None else ncols

    if matrix.shape[0] == 0:

        return field.Identity(ncols)

    return matrix.null_space()


def solve(matrix, rhs):
    """
    One solution of matrix @ v = rhs and a nullspace basis.

    Returns
    -------
    particular : galois.FieldArray or None
        None when the system is inconsistent.
    kernel : galois.FieldArray
        Rows spanning the homogeneous solutions.
    """

    field = type(matrix)
    nrows, ncols = matrix.shape
    augmented = field.Zeros((nrows, ncols + 1))
    augmented[:, :ncols] = matrix
    augmented[:, ncols] = rhs
    reduced, pivots = rref(augmented)
    kernel = null_space(matrix, ncols)

    if ncols in pivots:

        return None, kernel

    particular = field.Zeros(ncols)

    for i, pivot in enumerate(pivots):

        particular[pivot] = reduced[i, ncols]

    return particular, kernel
