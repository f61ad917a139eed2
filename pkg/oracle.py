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

Brute-force ground truth at tiny parameters. Everything here works on flat
length-3n coordinate vectors (index level * n + j) and plain linear algebra
over F_{p^m}; nothing depends on the closed-form generator results.
"""

import itertools
import logging
import time

from dataclasses import dataclass

import numpy as np

import linalg

from errors import BudgetExceeded, InvalidInput, NotAnIdeal
from quotient_poly import (TO_MONOMIAL, TO_YADIC, flat_convert, mul_table,
                           reciprocal_monomial, to_monomial, to_yadic)

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 20000


@dataclass(eq=False)
class IdealBasis:
    """
    An F_{p^m}-subspace of S in RREF, u-layer major and position minor.

    Two IdealBasis objects are equal iff they describe the same subspace in
    the same coordinates.
    """

    params: object
    rows: object
    pivots: tuple
    coords: str = "yadic"

    @property
    def dim(self):

        return len(self.pivots)

    @property
    def n(self):

        return self.params.n

    @property
    def key(self):

        return (self.coords, self.n, self.dim,
                tuple(int(v) for v in self.rows.flatten()))

    def __eq__(self, other):

        if not isinstance(other, IdealBasis):

            return NotImplemented

        return self.key == other.key

    def __hash__(self):

        return hash(self.key)

    def elements(self):
        """Basis rows as (3, n) arrays."""

        return [row.reshape(3, self.n) for row in self.rows]

    def contains(self, f):

        vec = as_flat(self.params, f)
        stacked = np.vstack([self.rows, vec.reshape(1, -1)])

        return linalg.rank(type(vec)(stacked)) == self.dim

    def to_coords(self, coords):
        """The same subspace written in the other basis."""

        if coords == self.coords:

            return self

        direction = TO_YADIC if coords == "yadic" else TO_MONOMIAL
        rows = flat_convert(self.params, self.rows, direction)

        return from_rows(self.params, rows, coords)

    def __repr__(self):

        return (f"IdealBasis(n={self.n}, dim={self.dim}, "
                f"coords={self.coords!r})")


def as_flat(params, f):

    f = params.GF(f)

    if f.ndim == 2:

        return f.reshape(3 * params.n)

    if f.shape != (3 * params.n,):

        raise InvalidInput(f"expected an S element of shape (3, {params.n})")

    return f


def from_rows(params, rows, coords="yadic"):
    """Row-reduce arbitrary rows into an IdealBasis (no closure check)."""

    size = 3 * params.n
    rows = params.GF(np.vstack(rows)).reshape(-1, size) if len(rows) else \
        params.GF.Zeros((0, size))
    reduced, pivots = linalg.rref(rows)

    return IdealBasis(params, reduced, tuple(pivots), coords)


def zero_ideal(params, coords="yadic"):

    return from_rows(params, params.GF.Zeros((0, 3 * params.n)), coords)


def full_ring(params, coords="yadic"):

    return from_rows(params, params.GF.Identity(3 * params.n), coords)


def span_ideal(params, gens, coords="yadic"):
    """
    The ideal generated by gens: all u^L z^j g rows, z = x - 1 (yadic) or
    z = x (monomial), then row reduction.
    """

    table = mul_table(params, coords)
    blocks = [table.span_rows(as_flat(params, g)) for g in gens]

    if not blocks:

        return zero_ideal(params, coords)

    return from_rows(params, np.vstack(blocks), coords)


def is_closed(basis):
    """Closed under multiplication by x and by u."""

    if basis.dim == 0:

        return True

    table = mul_table(basis.params, basis.coords)
    step = table.ops[1]
    umat = table.ops[basis.n]

    for op in (step, umat):

        images = basis.rows @ op.T
        stacked = type(images)(np.vstack([basis.rows, images]))

        if linalg.rank(stacked) != basis.dim:

            return False

    return True


def ideal_from_rows(params, rows, coords="yadic"):
    """Row-reduce a raw basis and insist that it spans an ideal."""

    basis = from_rows(params, rows, coords)

    if not is_closed(basis):

        raise NotAnIdeal("the given vectors do not span an ideal of S")

    return basis


def brute_annihilator(basis):
    """Nullspace of the stacked maps f -> f b over the basis rows b."""

    params = basis.params
    size = 3 * params.n

    if basis.dim == 0:

        return full_ring(params, basis.coords)

    table = mul_table(params, basis.coords)
    stacked = np.vstack([table.mul_matrix(row) for row in basis.rows])
    kernel = linalg.null_space(params.GF(stacked), size)

    return from_rows(params, kernel, basis.coords)


def _inner_product_conditions(params, mono_rows):
    """
    F-linear conditions on f (monomial, flat) saying that the R-valued inner
    product sum_i f_i g_i vanishes in every u-layer, for each row g.
    """

    n = params.n
    conditions = params.GF.Zeros((3 * len(mono_rows), 3 * n))

    for idx, g in enumerate(mono_rows):

        for s in range(3):

            row = conditions[3 * idx + s]

            for level in range(s + 1):

                row[level * n:(level + 1) * n] = \
                    g[(s - level) * n:(s - level + 1) * n]

    return conditions


def brute_dual(basis):
    """
    Euclidean dual by exact nullspace. The result is reported against
    params.dual_params(), the ring the dual code lives in.
    """

    params = basis.params
    dual_params = params.dual_params()
    size = 3 * params.n

    if basis.dim == 0:

        return full_ring(dual_params, basis.coords)

    mono = basis.to_coords("monomial").rows
    kernel = linalg.null_space(_inner_product_conditions(params, mono), size)

    if basis.coords == "yadic":

        kernel = flat_convert(params, kernel, TO_YADIC)

    return from_rows(dual_params, kernel, basis.coords)


def reciprocal_basis(basis):
    """Image of the subspace under f -> f*, reported in dual_params()."""

    params = basis.params
    n = params.n
    rows = []

    for f in basis.elements():

        mono = f if basis.coords == "monomial" else to_monomial(params, f)
        star = reciprocal_monomial(params, mono)

        if basis.coords == "yadic":

            star = to_yadic(params, star)

        rows.append(star.reshape(3 * n))

    if not rows:

        return zero_ideal(params.dual_params(), basis.coords)

    return from_rows(params.dual_params(), np.vstack(rows), basis.coords)


def check_budget(params, budget=DEFAULT_BUDGET):

    size = params.ctx.order ** (3 * params.n)

    if size > budget:

        raise BudgetExceeded(f"|S| = {size} exceeds the sweep budget {budget}")

    return size


def _normalised_elements(params):
    """Every nonzero S element whose first nonzero coordinate is 1."""

    q = params.ctx.order
    size = 3 * params.n

    for values in itertools.product(range(q), repeat=size):

        nonzero = [v for v in values if v]

        if nonzero and nonzero[0] == 1:

            yield params.GF(list(values))


def cyclic_ideals(params, budget=DEFAULT_BUDGET, coords="yadic"):
    """All distinct principal ideals, zero ideal included."""

    check_budget(params, budget)
    table = mul_table(params, coords)
    seen = {}
    zero = zero_ideal(params, coords)
    seen[zero.key] = zero

    for f in _normalised_elements(params):

        basis = from_rows(params, table.span_rows(f), coords)
        seen.setdefault(basis.key, basis)

    return list(seen.values())


def enumerate_ideals(params, budget=DEFAULT_BUDGET, coords="yadic"):
    """
    Every ideal of S: the principal ideals, closed under sums until nothing
    new appears. Each ideal is a sum of principal ones, so joining the
    frontier with principal ideals reaches the whole lattice.
    """

    started = time.time()
    cyclic = cyclic_ideals(params, budget, coords)
    seen = {basis.key: basis for basis in cyclic}
    frontier = list(cyclic)

    while frontier:

        fresh = []

        for left in frontier:

            for right in cyclic:

                if right.dim == 0 or left.dim == 0:

                    continue

                joined = from_rows(params, np.vstack([left.rows, right.rows]),
                                   coords)

                if joined.key not in seen:

                    seen[joined.key] = joined
                    fresh.append(joined)

        frontier = fresh

    ideals = sorted(seen.values(), key=lambda basis: (basis.dim, basis.key))
    logger.info("enumerated %d ideals (%d principal) for p=%d m=%d k=%d "
                "in %.1f s", len(ideals), len(cyclic), params.p,
                params.ctx.m, params.k, time.time() - started)

    return ideals


def is_selfdual(basis):
    """C = C-perp as sets of vectors, whichever ring C-perp is reported in."""

    return brute_dual(basis) == basis


def brute_selfdual_scan(params, budget=DEFAULT_BUDGET):
    """Self-dual ideals by the definition C = C-perp over the full lattice."""

    ideals = enumerate_ideals(params, budget)

    dual_params = params.dual_params()

    if dual_params != params:

        logger.info("duals live in the ring with delta=%d alpha=%d",
                    dual_params.delta, dual_params.alpha)

    found = [basis for basis in ideals if is_selfdual(basis)]
    logger.info("self-dual scan: %d of %d ideals", len(found), len(ideals))

    return found
