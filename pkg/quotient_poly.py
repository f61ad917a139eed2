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

Polynomial arithmetic in S-bar = F_{p^m}[x]/<x^{p^k} - 1> and
S = R[x]/<x^{p^k} - (delta + alpha u^2)>.

With y = x - 1 we have x^{p^k} - 1 = y^{p^k} in characteristic p, so for
delta = 1 the (x-1)-adic coordinates turn S-bar into F[y]/<y^n> and S into
R[y]/<y^n - alpha u^2>. Those coordinates are the working form: an SBarElem
is a length-n FieldArray of y-coefficients and an SElem is a (3, n)
FieldArray whose rows are the u^0, u^1, u^2 layers.
"""

import logging

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from errors import InvalidInput, NonUnitError, UnsupportedCharacteristic
from field_tower import FieldCtx

logger = logging.getLogger(__name__)

TO_YADIC = "to_yadic"
TO_MONOMIAL = "to_monomial"


@dataclass(frozen=True)
class RingParams:
    """
    Parameters of S. alpha and delta are kept as integer representations so
    the params stay hashable; use alpha_elem/delta_elem for arithmetic.
    """

    ctx: FieldCtx
    k: int
    alpha: int = 1
    delta: int = 1

    def __post_init__(self):

        if self.k < 1:

            raise InvalidInput(f"length exponent k = {self.k} must be >= 1")

        for name in ("alpha", "delta"):

            value = int(self.ctx.elem(getattr(self, name)))

            if value == 0:

                raise InvalidInput(f"{name} must be a nonzero field element")

            object.__setattr__(self, name, value)

    @property
    def p(self):

        return self.ctx.p

    @property
    def n(self):

        return self.ctx.p ** self.k

    @property
    def GF(self):

        return self.ctx.GF

    @property
    def alpha_elem(self):

        return self.GF(self.alpha)

    @property
    def delta_elem(self):

        return self.GF(self.delta)

    @property
    def size_exponent(self):
        """|S| = (p^m)^(3n)."""

        return 3 * self.n

    def reduced(self):
        """
        The delta = 1 ring isomorphic to this one through x -> delta0 x.

        Returns
        -------
        params : RingParams
            Same field and k, alpha' = alpha / delta, delta' = 1.
        delta0 : FieldArray scalar
            The p^k-th root of delta.
        """

        delta0 = self.ctx.pk_root(self.delta_elem, self.k)
        alpha = self.alpha_elem / self.delta_elem

        return RingParams(self.ctx, self.k, int(alpha), 1), delta0

    def dual_params(self):
        """
        Ring of the Euclidean duals: lambda^{-1} = delta^{-1} - alpha
        delta^{-2} u^2. Equal to self in characteristic 2.
        """

        delta_inv = self.delta_elem ** -1
        alpha = -(self.alpha_elem * delta_inv * delta_inv)

        return RingParams(self.ctx, self.k, int(alpha), int(delta_inv))

    def to_json(self):

        return {"k": self.k,
                "alpha": list(self.ctx.to_coeffs(self.alpha_elem)),
                "delta": list(self.ctx.to_coeffs(self.delta_elem))}


"""
Element construction and change of basis.
"""


def sbar(params, coeffs=()):
    """Length-n S-bar vector from a (possibly short) coefficient list."""

    if not isinstance(coeffs, (list, tuple, np.ndarray)):

        raise InvalidInput(f"{coeffs!r} is not a coefficient list")

    coeffs = list(coeffs)

    if len(coeffs) > params.n:

        raise InvalidInput(f"polynomial has {len(coeffs)} coefficients, "
                           f"more than n = {params.n}")

    out = params.GF.Zeros(params.n)

    for i, c in enumerate(coeffs):

        out[i] = int(params.ctx.elem(c))

    return out


def s_elem(params, layers=((), (), ())):
    """(3, n) S element from up to three coefficient lists."""

    out = params.GF.Zeros((3, params.n))

    for level, coeffs in enumerate(layers):

        out[level] = sbar(params, coeffs)

    return out


def y_power(params, j, level=0):
    """u^level (x-1)^j in yadic coordinates; j >= n is reduced in S."""

    out = params.GF.Zeros((3, params.n))
    coeff = params.GF(1)

    while j >= params.n and level <= 2:

        # y^n = alpha u^2
        j -= params.n
        level += 2
        coeff = coeff * params.alpha_elem

    if level <= 2:

        out[level, j] = coeff

    return out


@lru_cache(maxsize=None)
def _basis_change(params):
    """(to_yadic, to_monomial) matrices acting on length-n column vectors."""

    n = params.n
    p = params.p
    to_y = np.zeros((n, n), dtype=np.int64)
    to_m = np.zeros((n, n), dtype=np.int64)

    for i in range(n):

        for j in range(i + 1):

            # x^i = sum_j binom(i, j) y^j
            to_y[j, i] = comb(i, j) % p
            # y^i = sum_j binom(i, j) (-1)^(i-j) x^j
            to_m[j, i] = (comb(i, j) * (-1) ** (i - j)) % p

    return params.GF(to_y), params.GF(to_m)


def _apply(matrix, f):

    if f.ndim == 1:

        return matrix @ f

    return f @ matrix.T


def yadic_convert(params, f, direction=TO_YADIC):
    """
    Exact change of basis between monomial and (x-1)-adic coordinates.

    Works on SBarElem vectors and, layer by layer, on (3, n) SElems.
    """

    to_y, to_m = _basis_change(params)

    if direction == TO_YADIC:

        return _apply(to_y, f)

    if direction == TO_MONOMIAL:

        return _apply(to_m, f)

    raise InvalidInput(f"unknown basis direction {direction!r}")


def to_yadic(params, f):

    return yadic_convert(params, f, TO_YADIC)


def to_monomial(params, f):

    return yadic_convert(params, f, TO_MONOMIAL)


def flat_convert(params, rows, direction=TO_YADIC):
    """Basis change for flat length-3n vectors or stacks of them."""

    single = rows.ndim == 1
    rows = rows.reshape(1, -1) if single else rows
    n = params.n
    out = params.GF.Zeros(rows.shape)

    for level in range(3):

        block = slice(level * n, (level + 1) * n)
        out[:, block] = yadic_convert(params, rows[:, block], direction)

    return out[0] if single else out


"""
Ring arithmetic.
"""


def valuation(f):
    """(x-1)-adic valuation of a yadic vector; len(f) for zero."""

    nonzero = np.flatnonzero(f != 0)

    return int(nonzero[0]) if nonzero.size else len(f)


def degree(f):
    """Degree in yadic coordinates; -1 for the zero polynomial."""

    nonzero = np.flatnonzero(f != 0)

    return int(nonzero[-1]) if nonzero.size else -1


def sbar_mul(params, f, g):
    """Product in S-bar in yadic coordinates: truncated convolution."""

    return np.convolve(f, g)[:params.n]


def shift(params, f, j):
    """Multiply an S-bar element by (x-1)^j."""

    out = params.GF.Zeros(params.n)

    if j < params.n:

        out[j:] = f[:params.n - j]

    return out


def mu(f):
    """Reduction mod u, S -> S-bar."""

    return f[0].copy()


def s_mul(params, f, g):
    """
    Product in S (delta = 1) on (3, n) yadic arrays, reducing
    y^n -> alpha u^2 and u^3 -> 0.
    """

    if params.delta != 1:

        raise InvalidInput("yadic arithmetic needs delta = 1; reduce first")

    n = params.n
    out = params.GF.Zeros((3, n))

    for i in range(3):

        for j in range(3 - i):

            conv = np.convolve(f[i], g[j])
            out[i + j] += conv[:n]

            if i + j == 0 and conv.size > n:

                out[2, :conv.size - n] += params.alpha_elem * conv[n:]

    return out


def s_mul_monomial(params, f, g):
    """
    Product in S on (3, n) monomial arrays for any delta, reducing
    x^n -> delta + alpha u^2.
    """

    n = params.n
    out = params.GF.Zeros((3, n))

    for i in range(3):

        for j in range(3 - i):

            conv = np.convolve(f[i], g[j])
            out[i + j] += conv[:n]

            if conv.size > n:

                high = conv[n:]
                out[i + j, :high.size] += params.delta_elem * high

                if i + j == 0:

                    out[2, :high.size] += params.alpha_elem * high

    return out


def inv_mod_nilpotent(params, g, c):
    """
    Inverse of an S-bar unit modulo (x-1)^c by Newton iteration.

    Parameters
    ----------
    g : FieldArray
        Yadic vector with g[0] != 0.
    c : int
        Precision, 0 <= c <= n.

    Returns
    -------
    h : FieldArray
        Yadic vector of degree < c with g h = 1 mod (x-1)^c.
    """

    if not 0 <= c <= params.n:

        raise InvalidInput(f"precision {c} outside 0..{params.n}")

    if g[0] == 0:

        raise NonUnitError("polynomial with g(1) = 0 is not invertible")

    h = params.GF.Zeros(params.n)

    if c == 0:

        return h

    h[0] = g[0] ** -1
    two = params.GF.Zeros(params.n)
    two[0] = 2 % params.p
    precision = 1

    while precision < c:

        precision = min(2 * precision, c)
        h = sbar_mul(params, h, two - sbar_mul(params, g, h))
        h[precision:] = 0

    return h


def sbar_inverse(params, g):
    """Exact inverse in S-bar."""

    return inv_mod_nilpotent(params, g, params.n)


def reciprocal_sbar(params, f):
    """
    f* = sum a_i x^{n-i} in S-bar (x^n = 1), yadic in and out.
    """

    mono = to_monomial(params, f)
    star = params.GF.Zeros(params.n)
    star[0] = mono[0]
    star[1:] = mono[1:][::-1]

    return to_yadic(params, star)


def reciprocal_monomial(params, f):
    """
    f* on a (3, n) monomial S element. The i = 0 term a_0 x^n is reduced to
    a_0 (delta + alpha u^2).
    """

    star = params.GF.Zeros(f.shape)
    star[:, 1:] = f[:, 1:][:, ::-1]
    star[:, 0] = f[:, 0] * params.delta_elem
    star[2, 0] += params.alpha_elem * f[0, 0]

    return star


def reciprocal(params, f):
    """Reciprocal of a yadic SBarElem (1-D) or SElem ((3, n))."""

    if f.ndim == 1:

        return reciprocal_sbar(params, f)

    return to_yadic(params, reciprocal_monomial(params, to_monomial(params, f)))


@dataclass
class StarDivision:
    """
    (alpha g^{-1})* = (x+1)^c q + G with deg G < c, both yadic.
    """

    q: object
    G: object
    c: int

    def reconstruct(self, params):

        return shift(params, self.q, self.c) + self.G


def star_divide(params, g, t):
    """
    Divide the reciprocal of alpha g^{-1} by (x+1)^{2^{k-1}-t}.

    The inverse is the exact one in S-bar and its reciprocal is reduced by
    x^{2^k} = 1, so q is well defined and vanishes for monomial g. In yadic
    coordinates the division is a split of the coefficient vector.
    """

    if params.p != 2:

        raise UnsupportedCharacteristic("star division is a characteristic 2 "
                                        "construction")

    half = 2 ** (params.k - 1)

    if not 0 <= t < half:

        raise InvalidInput(f"t = {t} outside 0..{half - 1}")

    c = half - t
    star = reciprocal_sbar(params, params.alpha_elem * sbar_inverse(params, g))
    G = params.GF.Zeros(params.n)
    G[:c] = star[:c]
    q = params.GF.Zeros(params.n)
    q[:params.n - c] = star[c:]

    return StarDivision(q, G, c)


def delta_substitute(params, f, delta0):
    """
    Realise x -> delta0 x on a (3, n) monomial element of the
    (delta + alpha u^2)-ring, landing in the (1 + alpha delta^{-1} u^2)-ring.
    """

    if params.ctx.pow(delta0, params.n) != params.delta_elem:

        raise InvalidInput("delta0 is not a p^k-th root of delta")

    powers = params.GF([int(params.ctx.pow(delta0, i)) for i in range(params.n)])

    return f * powers


"""
Multiplication operators on flat length-3n coordinate vectors
(index level * n + j), used by the ideal machinery.
"""


@dataclass(frozen=True)
class MulTable:

    params: RingParams
    coords: str
    ops: object
    stack: object
    flat: object

    def span_rows(self, f):
        """Rows u^L z^j f for all L, j, where z is x or (x-1)."""

        size = 3 * self.params.n

        return (self.stack @ f).reshape(size, size)

    def mul_matrix(self, f):
        """Matrix of v -> f v."""

        size = 3 * self.params.n

        return (f @ self.flat).reshape(size, size)


@lru_cache(maxsize=None)
def mul_table(params, coords="yadic"):

    if coords == "yadic" and params.delta != 1:

        raise InvalidInput("yadic coordinates need delta = 1")

    n = params.n
    size = 3 * n
    GF = params.GF
    step = GF.Zeros((size, size))
    umat = GF.Zeros((size, size))

    for level in range(3):

        for j in range(n):

            col = level * n + j

            if level < 2:

                umat[col + n, col] = 1

            if j + 1 < n:

                step[col + 1, col] = 1

            else:

                if coords == "yadic":

                    # y^n = alpha u^2
                    if level == 0:

                        step[2 * n, col] = params.alpha_elem

                else:

                    # x^n = delta + alpha u^2
                    step[level * n, col] = params.delta_elem

                    if level == 0:

                        step[2 * n, col] = params.alpha_elem

    ops = []
    upow = GF.Identity(size)

    for level in range(3):

        spow = GF.Identity(size)

        for j in range(n):

            ops.append(upow @ spow)
            spow = step @ spow

        upow = umat @ upow

    stack = GF.Zeros((size * size, size))
    flat = GF.Zeros((size, size * size))

    for idx, op in enumerate(ops):

        stack[idx * size:(idx + 1) * size] = op
        flat[idx] = op.reshape(size * size)

    logger.debug("built %s multiplication table for n=%d", coords, n)

    return MulTable(params, coords, ops, stack, flat)


def x_power(params, e):
    """x^e in S-bar as a yadic vector (x^n = 1)."""

    mono = params.GF.Zeros(params.n)
    mono[e % params.n] = 1

    return to_yadic(params, mono)


def trim(values):
    """Coefficient vector -> tuple of ints without trailing zeros."""

    coeffs = [int(v) for v in values]

    while coeffs and coeffs[-1] == 0:

        coeffs.pop()

    return tuple(coeffs)
