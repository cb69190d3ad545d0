#
# This file is part of the PyQutrit package,
#
# Copyright (c) 2023-2024 Sylvain Martin
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, version 3.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.
#
"""
Exact elements of the ring Z[1/3, ω], with ω = e^{2πi/3}.

A value is stored as ``(u + vω) / 3^k`` with arbitrary precision integers. The
triple is always kept canonical: when ``k > 0`` the pair ``(u, v)`` is not
divisible by 3, and zero is ``(0, 0, 0)``.
"""
from __future__ import annotations

import cmath
import logging
from typing import Final, Optional, Tuple, Union

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

OMEGA_COMPLEX: Final[complex] = cmath.exp(2j * cmath.pi / 3)


class CycloNumber:
    """
    Immutable element ``(u + vω) / 3^k`` of Z[1/3, ω].

    Multiplication reduces with ``ω² = -1 - ω`` and conjugation uses
    ``ω† = -1 - ω``. Plain ``int`` operands are accepted on both sides of the
    arithmetic operators.
    """

    __slots__ = ("_u", "_v", "_k")

    def __init__(self, u: int = 0, v: int = 0, k: int = 0) -> None:
        if k < 0:
            raise ValueError("the exponent of 3 must be non-negative, got %d" % k)

        u, v = int(u), int(v)
        if u == 0 and v == 0:
            k = 0

        while k > 0 and u % 3 == 0 and v % 3 == 0:
            u, v, k = u // 3, v // 3, k - 1

        self._u: int = u
        self._v: int = v
        self._k: int = k

    @property
    def u(self) -> int:
        return self._u

    @property
    def v(self) -> int:
        return self._v

    @property
    def k(self) -> int:
        return self._k

    @classmethod
    def from_int(cls, x: int) -> CycloNumber:
        return cls(x, 0, 0)

    @classmethod
    def coerce(cls, x: Union[int, CycloNumber]) -> CycloNumber:
        if isinstance(x, CycloNumber):
            return x
        if isinstance(x, int):
            return cls(x, 0, 0)
        raise TypeError("cannot convert %s to CycloNumber" % type(x).__name__)

    ############################################################################
    #                               Ring operations                            #
    ############################################################################

    def _scaled(self, k: int) -> Tuple[int, int]:
        """ numerator pair of this value written over 3^k, with k >= self.k """
        f = 3 ** (k - self._k)
        return self._u * f, self._v * f

    def __add__(self, other: Union[int, CycloNumber]) -> CycloNumber:
        if not isinstance(other, (int, CycloNumber)):
            return NotImplemented
        other = CycloNumber.coerce(other)
        k = max(self._k, other.k)
        u1, v1 = self._scaled(k)
        u2, v2 = other._scaled(k)
        return CycloNumber(u1 + u2, v1 + v2, k)

    __radd__ = __add__

    def __neg__(self) -> CycloNumber:
        return CycloNumber(-self._u, -self._v, self._k)

    def __sub__(self, other: Union[int, CycloNumber]) -> CycloNumber:
        if not isinstance(other, (int, CycloNumber)):
            return NotImplemented
        return self + (-CycloNumber.coerce(other))

    def __rsub__(self, other: Union[int, CycloNumber]) -> CycloNumber:
        return CycloNumber.coerce(other) - self

    def __mul__(self, other: Union[int, CycloNumber]) -> CycloNumber:
        if not isinstance(other, (int, CycloNumber)):
            return NotImplemented
        other = CycloNumber.coerce(other)
        u1, v1, u2, v2 = self._u, self._v, other.u, other.v
        return CycloNumber(u1 * u2 - v1 * v2, u1 * v2 + v1 * u2 - v1 * v2, self._k + other.k)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CycloNumber:
        if exponent < 0:
            return self.inverse() ** (-exponent)

        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> CycloNumber:
        """ complex conjugate, (u + vω)† = (u - v) - vω """
        return CycloNumber(self._u - self._v, -self._v, self._k)

    def norm(self) -> Tuple[int, int]:
        """
        exact norm x·x† as a rational number

        :return: the pair (u² - uv + v², 9^k)
        """
        return self._u * self._u - self._u * self._v + self._v * self._v, 9 ** self._k

    def inverse(self) -> CycloNumber:
        """
        multiplicative inverse, defined when the norm of the numerator is a
        power of 3

        :raise ZeroDivisionError: for zero
        :raise ValueError: when the inverse is not in Z[1/3, ω]
        """
        numerator = self._u * self._u - self._u * self._v + self._v * self._v
        if numerator == 0:
            raise ZeroDivisionError("zero has no inverse")

        e = 0
        while numerator % 3 == 0:
            numerator, e = numerator // 3, e + 1
        if numerator != 1:
            raise ValueError("%s is not invertible in Z[1/3, ω]" % self)

        c = CycloNumber(self._u - self._v, -self._v, 0)
        shift = e - self._k
        if shift >= 0:
            return CycloNumber(c.u, c.v, shift)
        return c * 3 ** (-shift)

    def is_unit_phase(self) -> Optional[int]:
        """
        The exponent t in Z6 such that this value is (-ω)^t, if any.

        Only the six numbers ±1, ±ω, ±ω² have unit norm in Z[1/3, ω], so a
        lookup against them is exact.

        :return: t, or None when the value is not a unit phase
        """
        return _PHASE_EXPONENT.get((self._u, self._v, self._k))

    ############################################################################
    #                               Comparisons                                #
    ############################################################################

    def is_zero(self) -> bool:
        return self._u == 0 and self._v == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycloNumber(other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return (self._u, self._v, self._k) == (other.u, other.v, other.k)

    def __hash__(self) -> int:
        return hash((self._u, self._v, self._k))

    def __complex__(self) -> complex:
        return (self._u + self._v * OMEGA_COMPLEX) / 3 ** self._k

    def __repr__(self) -> str:
        return "CycloNumber(%d, %d, %d)" % (self._u, self._v, self._k)

    def __str__(self) -> str:
        return "(%d,%d)/3^%d" % (self._u, self._v, self._k)


ZERO: Final = CycloNumber(0, 0, 0)
ONE: Final = CycloNumber(1, 0, 0)
OMEGA: Final = CycloNumber(0, 1, 0)
MINUS_OMEGA: Final = CycloNumber(0, -1, 0)

# 1 / (ω² - ω), the normalisation of the Hadamard gate
H_SCALE: Final = CycloNumber(1, 2, 1)

_UNIT_PHASES: Final = [ONE, MINUS_OMEGA, CycloNumber(-1, -1), CycloNumber(-1), OMEGA, CycloNumber(1, 1)]
_PHASE_EXPONENT: Final = {(x.u, x.v, x.k): t for t, x in enumerate(_UNIT_PHASES)}


def unit_phase(t: int) -> CycloNumber:
    """
    :return: (-ω)^t, with t taken modulo 6
    """
    return _UNIT_PHASES[t % 6]
