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
Symbolic n-qutrit Pauli operators ``ω^c ⊗_j X^{a_j} Z^{b_j}`` over Z3.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence, Tuple

from ..exactnum import CycloMatrix, OMEGA

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

_FACTOR = re.compile(r"^(?:I|(?:X([12])?)?(?:Z([12])?)?)$")
_PHASE = re.compile(r"^(?:[wω])(?:\^?([012]))?\s*\*?\s*")


def _mod3(values: Sequence[int]) -> Tuple[int, ...]:
    return tuple(int(x) % 3 for x in values)


@dataclass(frozen=True)
class Pauli:
    """
    Pauli operator ``ω^c (X^{a_0} Z^{b_0}) ⊗ ... ⊗ (X^{a_{n-1}} Z^{b_{n-1}})``.

    Exponents are reduced modulo 3 at construction. Within one wire X is on the
    left of Z, and ``Z^β X^α = ω^{αβ} X^α Z^β`` gives the product phase.
    """

    c: int
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.a) != len(self.b):
            raise ValueError("X and Z exponent vectors differ in length: %d != %d" % (len(self.a), len(self.b)))
        object.__setattr__(self, "c", int(self.c) % 3)
        object.__setattr__(self, "a", _mod3(self.a))
        object.__setattr__(self, "b", _mod3(self.b))

    ############################################################################
    #                               Constructors                               #
    ############################################################################

    @classmethod
    def identity(cls, n: int) -> Pauli:
        return cls(0, (0,) * n, (0,) * n)

    @classmethod
    def single(cls, n: int, wire: int, a: int, b: int, c: int = 0) -> Pauli:
        """ ω^c X^a Z^b on ``wire`` and identity elsewhere """
        av, bv = [0] * n, [0] * n
        av[wire], bv[wire] = a, b
        return cls(c, tuple(av), tuple(bv))

    @classmethod
    def z(cls, n: int, wire: int) -> Pauli:
        return cls.single(n, wire, 0, 1)

    @classmethod
    def x(cls, n: int, wire: int) -> Pauli:
        return cls.single(n, wire, 1, 0)

    @classmethod
    def from_label(cls, label: str) -> Pauli:
        """
        Parse labels such as ``"X2Z⊗I"`` or ``"ω^2 X⊗Z2"``; ``w`` may replace ``ω``.
        """
        text = label.strip()
        c = 0
        m = _PHASE.match(text)
        if m is not None:
            c = int(m.group(1)) if m.group(1) is not None else 1
            text = text[m.end():]

        a, b = [], []
        for factor in text.split("⊗"):
            factor = factor.strip()
            fm = _FACTOR.match(factor)
            if fm is None or factor == "":
                raise ValueError("invalid Pauli factor %r in %r" % (factor, label))
            a.append(0 if "X" not in factor else int(fm.group(1) or 1))
            b.append(0 if "Z" not in factor else int(fm.group(2) or 1))
        return cls(c, tuple(a), tuple(b))

    ############################################################################
    #                               Algebra                                    #
    ############################################################################

    @property
    def n(self) -> int:
        return len(self.a)

    def __mul__(self, other: Pauli) -> Pauli:
        """ operator product ``self · other`` """
        if self.n != other.n:
            raise ValueError("cannot multiply Paulis on %d and %d wires" % (self.n, other.n))
        phase = self.c + other.c + sum(bi * aj for bi, aj in zip(self.b, other.a))
        return Pauli(phase,
                     tuple(x + y for x, y in zip(self.a, other.a)),
                     tuple(x + y for x, y in zip(self.b, other.b)))

    def __pow__(self, exponent: int) -> Pauli:
        exponent %= 3
        return reduce(lambda acc, _: acc * self, range(exponent), Pauli.identity(self.n))

    def times_omega(self, k: int) -> Pauli:
        return Pauli(self.c + k, self.a, self.b)

    def commutator_exponent(self, other: Pauli) -> int:
        """
        the λ in Z3 such that ``self · other = ω^λ other · self``
        """
        if self.n != other.n:
            raise ValueError("cannot compare Paulis on %d and %d wires" % (self.n, other.n))
        return (sum(bi * aj for bi, aj in zip(self.b, other.a))
                - sum(ai * bj for ai, bj in zip(self.a, other.b))) % 3

    def omega_anticommutes(self, other: Pauli) -> bool:
        """ ``self · other = ω · other · self`` """
        return self.commutator_exponent(other) == 1

    def is_scalar(self) -> bool:
        return not any(self.a) and not any(self.b)

    def is_identity(self) -> bool:
        return self.c == 0 and self.is_scalar()

    def support(self) -> Tuple[int, ...]:
        """ wires with a non-identity factor """
        return tuple(j for j in range(self.n) if self.a[j] or self.b[j])

    def restrict(self, wires: Sequence[int]) -> Pauli:
        """ the factors on ``wires`` (phase dropped) """
        return Pauli(0, tuple(self.a[w] for w in wires), tuple(self.b[w] for w in wires))

    def replace(self, wires: Sequence[int], local: Pauli) -> Pauli:
        """ substitute the factors on ``wires`` by ``local``, adding its phase """
        a, b = list(self.a), list(self.b)
        for i, w in enumerate(wires):
            a[w], b[w] = local.a[i], local.b[i]
        return Pauli(self.c + local.c, tuple(a), tuple(b))

    def factor(self, wire: int) -> Tuple[int, int]:
        return self.a[wire], self.b[wire]

    def vector(self) -> Tuple[int, ...]:
        """ symplectic exponent vector (a, b) """
        return self.a + self.b

    def __str__(self) -> str:
        def factor(a: int, b: int) -> str:
            if a == 0 and b == 0:
                return "I"
            xs = "" if a == 0 else ("X" if a == 1 else "X2")
            zs = "" if b == 0 else ("Z" if b == 1 else "Z2")
            return xs + zs

        body = "⊗".join(factor(a, b) for a, b in zip(self.a, self.b))
        if self.c == 0:
            return body
        return ("ω " if self.c == 1 else "ω^2 ") + body


############################################################################
#                               Matrices                                   #
############################################################################

def _local_matrix(a: int, b: int) -> CycloMatrix:
    """ X^a Z^b on one qutrit, X^a Z^b |x> = ω^{bx} |x+a> """
    rows = [[0] * 3 for _ in range(3)]
    for x in range(3):
        rows[(x + a) % 3][x] = OMEGA ** (b * x % 3)
    return CycloMatrix.from_entries(rows)


def pauli_matrix(p: Pauli) -> CycloMatrix:
    """ exact 3^n x 3^n matrix of a Pauli """
    result = CycloMatrix.identity(1)
    for a, b in zip(p.a, p.b):
        result = result.tensor(_local_matrix(a, b))
    return result.scale(OMEGA ** p.c)


def _digits(index: int, n: int) -> Tuple[int, ...]:
    return tuple((index // 3 ** (n - 1 - j)) % 3 for j in range(n))


def _index(digits: Sequence[int]) -> int:
    return reduce(lambda acc, d: 3 * acc + d % 3, digits, 0)


def pauli_from_matrix(m: CycloMatrix, n: int) -> Optional[Pauli]:
    """
    Recognise an exact Pauli matrix.

    :param m: a 3^n x 3^n matrix
    :return: the Pauli whose matrix is ``m``, or None
    """
    dim = 3 ** n
    if m.shape != (dim, dim):
        raise ValueError("expected a %dx%d matrix" % (dim, dim))

    rows = [i for i in range(dim) if not m[i, 0].is_zero()]
    if len(rows) != 1:
        return None
    a = _digits(rows[0], n)

    phase_to_c = {0: 0, 4: 1, 2: 2}
    t = m[rows[0], 0].is_unit_phase()
    if t not in phase_to_c:
        return None
    c = phase_to_c[t]

    b = []
    for j in range(n):
        x = [0] * n
        x[j] = 1
        col = _index(x)
        row = _index([xi + ai for xi, ai in zip(x, a)])
        tj = m[row, col].is_unit_phase()
        if tj not in phase_to_c:
            return None
        b.append(phase_to_c[tj] - c)

    candidate = Pauli(c, a, tuple(b))
    return candidate if pauli_matrix(candidate) == m else None
