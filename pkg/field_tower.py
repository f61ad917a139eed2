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
"""

import logging

from dataclasses import dataclass
from functools import cached_property

import galois
import numpy as np

from errors import DomainError, InvalidInput, NonUnitError
from errors import UnsupportedCharacteristic

logger = logging.getLogger(__name__)

# Little-endian coefficient lists, leading 1 last.
DEFAULT_MODULI = {(2, 1): (0, 1),
                  (2, 2): (1, 1, 1),
                  (2, 3): (1, 1, 0, 1),
                  (2, 4): (1, 1, 0, 0, 1),
                  (2, 5): (1, 0, 1, 0, 0, 1),
                  (2, 6): (1, 1, 0, 0, 0, 0, 1),
                  (3, 1): (0, 1),
                  (3, 2): (1, 0, 1),
                  (3, 3): (1, 2, 0, 1),
                  (3, 4): (2, 0, 0, 2, 1),
                  (5, 1): (0, 1),
                  (5, 2): (2, 4, 1),
                  (5, 3): (3, 3, 0, 1),
                  (5, 4): (2, 4, 4, 0, 1),
                  (7, 2): (1, 0, 1)}


@dataclass(frozen=True)
class FieldCtx:
    """
    The field F_{p^m} = F_p[z]/<modulus(z)>.

    Elements are galois FieldArray scalars. Their canonical external form is
    the little-endian coefficient tuple in the basis 1, z, ..., z^{m-1}, which
    is exactly the base-p digit expansion of galois' integer representation.
    """

    p: int
    m: int = 1
    modulus: tuple = None

    def __post_init__(self):

        if not galois.is_prime(self.p):

            raise InvalidInput(f"p = {self.p} is not prime")

        if self.m < 1:

            raise InvalidInput(f"extension degree m = {self.m} must be >= 1")

        modulus = self.modulus

        if modulus is None:

            modulus = (0, 1) if self.m == 1 else \
                DEFAULT_MODULI.get((self.p, self.m))

            if modulus is None:

                raise InvalidInput(f"no default modulus for p={self.p}, "
                                   f"m={self.m}; supply one")

        modulus = tuple(int(c) % self.p for c in modulus)
        object.__setattr__(self, "modulus", modulus)

        if len(modulus) != self.m + 1 or modulus[-1] != 1:

            raise InvalidInput(f"modulus {list(modulus)} is not monic of "
                               f"degree {self.m}")

        if not self.modulus_poly.is_irreducible():

            raise InvalidInput(f"modulus {list(modulus)} is reducible "
                               f"over F_{self.p}")

    @cached_property
    def modulus_poly(self):

        return galois.Poly(list(self.modulus), field=galois.GF(self.p),
                           order="asc")

    @cached_property
    def GF(self):
        """The galois FieldArray class of F_{p^m}."""

        if self.m == 1:

            return galois.GF(self.p)

        return galois.GF(self.p ** self.m, irreducible_poly=self.modulus_poly)

    @property
    def order(self):

        return self.p ** self.m

    @property
    def zero(self):

        return self.GF(0)

    @property
    def one(self):

        return self.GF(1)

    def elements(self):

        return self.GF.elements

    def nonzero_elements(self):

        return self.GF.elements[1:]

    def from_coeffs(self, coeffs):
        """
        Build an element from its little-endian coefficient tuple.

        Parameters
        ----------
        coeffs : sequence of int
            At most m coordinates over F_p, missing ones read as zero.

        Returns
        -------
        FieldArray scalar
        """

        coeffs = list(coeffs)

        if len(coeffs) > self.m:

            raise InvalidInput(f"element {coeffs} has more than m = "
                               f"{self.m} coordinates")

        value = 0

        try:

            for c in reversed(coeffs):

                value = value * self.p + int(c) % self.p

        except (TypeError, ValueError) as err:

            raise InvalidInput(f"bad coefficient in {coeffs}: {err}") from err

        return self.GF(value)

    def to_coeffs(self, elem):
        """Little-endian coefficient tuple of exactly m entries."""

        value = int(elem)
        coeffs = []

        for _ in range(self.m):

            coeffs.append(value % self.p)
            value //= self.p

        return tuple(coeffs)

    def elem(self, value):
        """
        Coerce an int (integer representation), a coefficient list or an
        existing element into this field.
        """

        if isinstance(value, (list, tuple)):

            return self.from_coeffs(value)

        try:

            value = int(value)

        except (TypeError, ValueError) as err:

            raise InvalidInput(f"{value!r} is not a field element") from err

        if not 0 <= value < self.order:

            raise InvalidInput(f"{value} is not an element of F_{self.order}")

        return self.GF(value)

    def add(self, a, b):

        return a + b

    def sub(self, a, b):

        return a - b

    def mul(self, a, b):

        return a * b

    def inv(self, a):

        if a == 0:

            raise DomainError("inversion of zero in F_%d" % self.order)

        return a ** -1

    def pow(self, a, e):
        """Square-and-multiply power; negative exponents need a != 0."""

        if e < 0:

            return self.pow(self.inv(a), -e)

        result = self.one
        base = a

        while e:

            if e & 1:

                result = result * base

            base = base * base
            e >>= 1

        return result

    def sqrt_char2(self, a):
        """
        The unique square root a^{2^{m-1}} in characteristic 2.

        Raises
        ------
        UnsupportedCharacteristic
            When p != 2.
        """

        if self.p != 2:

            raise UnsupportedCharacteristic(
                f"square roots are only unique in characteristic 2, not {self.p}")

        return self.pow(a, 2 ** (self.m - 1))

    def pk_root(self, delta, k):
        """
        The unique delta0 with delta0^{p^k} = delta.

        y -> y^{p^k} permutes the multiplicative group, so the root is
        delta^e with e = (p^k)^{-1} mod (p^m - 1).
        """

        if delta == 0:

            raise DomainError("zero has no unit p^k-th root")

        e = pow(self.p ** k, -1, self.order - 1)

        return self.pow(delta, e)

    def to_json(self):

        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data):

        unknown = set(data) - {"p", "m", "modulus"}

        if unknown:

            raise InvalidInput(f"unknown field keys: {sorted(unknown)}")

        modulus = data.get("modulus")

        return cls(int(data["p"]), int(data.get("m", 1)),
                   None if modulus is None else tuple(modulus))


"""
The chain ring R = F_{p^m}[u]/<u^3>. A UElem is a length-3 FieldArray
holding the coefficients of 1, u, u^2.
"""


def u_elem(ctx, a0=0, a1=0, a2=0):

    return ctx.GF([int(ctx.elem(a0)), int(ctx.elem(a1)), int(ctx.elem(a2))])


def u_add(a, b):

    return a + b


def u_mul(a, b):
    """Product in R; the u^3 and u^4 coordinates are dropped."""

    return np.convolve(a, b)[:3]


def u_is_unit(a):

    return a[0] != 0


def u_inv(ctx, a):
    """
    Inverse of a unit a0 + n with n nilpotent: a0^{-1}(1 - n' + n'^2) where
    n' = a0^{-1} n, since n'^3 = 0.
    """

    if not u_is_unit(a):

        raise NonUnitError("%s is not a unit of R" % [int(v) for v in a])

    inv0 = a[0] ** -1
    nil = a * inv0
    nil[0] = 0
    one = u_elem(ctx, 1)

    return (one - nil + u_mul(nil, nil)) * inv0
