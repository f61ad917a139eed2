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


class AlgebraError(Exception):
    """Base class for everything the library raises on purpose."""


class DomainError(AlgebraError, ArithmeticError):
    """Operation undefined for the given value (e.g. inverting zero)."""


class NonUnitError(AlgebraError, ArithmeticError):
    """Inverse requested for a non-unit of R, S or S-bar."""


class UnsupportedCharacteristic(AlgebraError):
    """Operation only defined in characteristic 2."""


class NotAnIdeal(AlgebraError):
    """A basis that is not closed under multiplication by x and u."""


class ShapeRejected(AlgebraError):
    """
    A triple that is not of the self-dual shape.

    The message is the first identity that failed.
    """

    def __init__(self, reason):

        super().__init__(reason)
        self.reason = reason


class BudgetExceeded(AlgebraError):
    """An exhaustive sweep would exceed its configured budget."""


class InvalidInput(AlgebraError, ValueError):
    """Malformed job configuration, triple or polynomial."""
