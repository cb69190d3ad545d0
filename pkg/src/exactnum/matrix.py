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
Dense matrices over Z[1/3, ω].

A :class:`CycloMatrix` stores two numpy object arrays of Python integers, ``u``
and ``v``, with a single shared exponent ``k``: ``M = (U + Vω) / 3^k``. The
shared exponent is reduced as long as every entry of both arrays is a multiple
of 3.
"""
from __future__ import annotations

import logging
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .cyclo import CycloNumber, unit_phase

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

Scalar = Union[int, CycloNumber]


def _int_array(data, shape: Optional[Tuple[int, ...]] = None) -> np.ndarray:
    arr = np.empty(shape if shape is not None else np.shape(data), dtype=object)
    if shape is None:
        arr[...] = data
    else:
        arr.fill(0)
    return arr


def _ring_mul(au: np.ndarray, av: np.ndarray, bu: np.ndarray, bv: np.ndarray, op) -> Tuple[np.ndarray, np.ndarray]:
    """ product (au + av ω) op (bu + bv ω) for a bilinear numpy operation op """
    uu, vv = op(au, bu), op(av, bv)
    return uu - vv, op(au, bv) + op(av, bu) - vv


class CycloMatrix:
    """
    Immutable dense matrix with entries in Z[1/3, ω].

    All operations return new canonical matrices. Dimension mismatches raise
    ``ValueError``.
    """

    __slots__ = ("_u", "_v", "_k")

    def __init__(self, u: np.ndarray, v: np.ndarray, k: int = 0) -> None:
        if u.shape != v.shape or u.ndim != 2:
            raise ValueError("u and v must be 2D arrays of the same shape, got %s and %s" % (u.shape, v.shape))

        u = u.astype(object)
        v = v.astype(object)

        if not (u.any() or v.any()):
            k = 0
        while k > 0 and not (u % 3).any() and not (v % 3).any():
            u, v, k = u // 3, v // 3, k - 1

        u.flags.writeable = False
        v.flags.writeable = False
        self._u: np.ndarray = u
        self._v: np.ndarray = v
        self._k: int = k

    ############################################################################
    #                               Constructors                               #
    ############################################################################

    @classmethod
    def identity(cls, dim: int) -> CycloMatrix:
        u = _int_array(None, (dim, dim))
        for i in range(dim):
            u[i, i] = 1
        return cls(u, _int_array(None, (dim, dim)), 0)

    @classmethod
    def basis(cls, dim: int, index: int = 0) -> CycloMatrix:
        """ column vector e_index of dimension dim """
        if not 0 <= index < dim:
            raise ValueError("basis index %d outside 0..%d" % (index, dim - 1))
        u = _int_array(None, (dim, 1))
        u[index, 0] = 1
        return cls(u, _int_array(None, (dim, 1)), 0)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> CycloMatrix:
        return cls(_int_array(None, (rows, cols)), _int_array(None, (rows, cols)), 0)

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[Scalar]]) -> CycloMatrix:
        """
        build a matrix from nested lists of ``int`` or :class:`CycloNumber`
        """
        entries = [[CycloNumber.coerce(x) for x in row] for row in rows]
        if not entries or any(len(row) != len(entries[0]) for row in entries):
            raise ValueError("entries must form a non-empty rectangle")

        k = max(x.k for row in entries for x in row)
        u = _int_array(None, (len(entries), len(entries[0])))
        v = _int_array(None, (len(entries), len(entries[0])))
        for i, row in enumerate(entries):
            for j, x in enumerate(row):
                f = 3 ** (k - x.k)
                u[i, j], v[i, j] = x.u * f, x.v * f
        return cls(u, v, k)

    @classmethod
    def diagonal(cls, values: Iterable[Scalar]) -> CycloMatrix:
        values = list(values)
        return cls.from_entries([[values[i] if i == j else 0 for j in range(len(values))]
                                 for i in range(len(values))])

    @classmethod
    def scalar(cls, x: Scalar) -> CycloMatrix:
        return cls.from_entries([[x]])

    ############################################################################
    #                               Accessors                                  #
    ############################################################################

    @property
    def shape(self) -> Tuple[int, int]:
        return self._u.shape  # type: ignore

    @property
    def rows(self) -> int:
        return self._u.shape[0]

    @property
    def cols(self) -> int:
        return self._u.shape[1]

    @property
    def u(self) -> np.ndarray:
        return self._u

    @property
    def v(self) -> np.ndarray:
        return self._v

    @property
    def k(self) -> int:
        return self._k

    def __getitem__(self, index: Tuple[int, int]) -> CycloNumber:
        i, j = index
        return CycloNumber(int(self._u[i, j]), int(self._v[i, j]), self._k)

    def entries(self) -> List[List[CycloNumber]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def _aligned(self, other: CycloMatrix) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, int]:
        k = max(self._k, other.k)
        f1, f2 = 3 ** (k - self._k), 3 ** (k - other.k)
        return self._u * f1, self._v * f1, other.u * f2, other.v * f2, k

    ############################################################################
    #                               Operations                                 #
    ############################################################################

    def __matmul__(self, other: CycloMatrix) -> CycloMatrix:
        if self.cols != other.rows:
            raise ValueError("cannot multiply %dx%d by %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        u, v = _ring_mul(self._u, self._v, other.u, other.v, np.dot)
        return CycloMatrix(u, v, self._k + other.k)

    def __add__(self, other: CycloMatrix) -> CycloMatrix:
        if self.shape != other.shape:
            raise ValueError("cannot add %s and %s matrices" % (self.shape, other.shape))
        u1, v1, u2, v2, k = self._aligned(other)
        return CycloMatrix(u1 + u2, v1 + v2, k)

    def __neg__(self) -> CycloMatrix:
        return CycloMatrix(-self._u, -self._v, self._k)

    def __sub__(self, other: CycloMatrix) -> CycloMatrix:
        return self + (-other)

    def scale(self, x: Scalar) -> CycloMatrix:
        x = CycloNumber.coerce(x)
        u = self._u * x.u - self._v * x.v
        v = self._u * x.v + self._v * x.u - self._v * x.v
        return CycloMatrix(u, v, self._k + x.k)

    def tensor(self, other: CycloMatrix) -> CycloMatrix:
        """ Kronecker product, ``self`` on the most significant index """
        r1, c1 = self.shape
        r2, c2 = other.shape

        def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
            return np.multiply.outer(a, b).transpose(0, 2, 1, 3).reshape(r1 * r2, c1 * c2)

        u, v = _ring_mul(self._u, self._v, other.u, other.v, kron)
        return CycloMatrix(u, v, self._k + other.k)

    def dagger(self) -> CycloMatrix:
        """ conjugate transpose, using (u + vω)† = (u - v) - vω """
        return CycloMatrix((self._u - self._v).T, (-self._v).T, self._k)

    def power(self, exponent: int) -> CycloMatrix:
        """
        :raise ValueError: for a non-square matrix or a negative exponent,
            use :meth:`dagger` to invert unitaries
        """
        if self.rows != self.cols:
            raise ValueError("only square matrices have powers")
        if exponent < 0:
            raise ValueError("negative power %d, invert with dagger() first" % exponent)
        result = CycloMatrix.identity(self.rows)
        for _ in range(exponent):
            result = result @ self
        return result

    def apply_local(self, gate: CycloMatrix, wires: Sequence[int], n: int) -> CycloMatrix:
        """
        Left multiply by ``gate`` acting on ``wires`` of an n-qutrit space,
        without building the 3^n dimensional embedding.

        Wire 0 is the most significant tensor factor.

        :param gate: a 3^m x 3^m matrix, m = len(wires)
        :param wires: the wires, in the gate's tensor order
        :param n: the number of qutrits of ``self``
        """
        m = len(wires)
        if gate.shape != (3 ** m, 3 ** m):
            raise ValueError("a gate on %d wires must be %dx%d" % (m, 3 ** m, 3 ** m))
        if self.rows != 3 ** n:
            raise ValueError("matrix has %d rows, expected 3^%d" % (self.rows, n))
        if m == 0:
            return self.scale(gate[0, 0])

        cols = self.cols
        head = tuple(range(m, 2 * m))
        wires = list(wires)

        def contract(g: np.ndarray, x: np.ndarray) -> np.ndarray:
            g = g.reshape((3,) * (2 * m))
            x = x.reshape((3,) * n + (cols,))
            res = np.tensordot(g, x, axes=(head, wires))
            return np.moveaxis(res, list(range(m)), wires).reshape(3 ** n, cols)

        u, v = _ring_mul(gate.u, gate.v, self._u, self._v, contract)
        return CycloMatrix(u, v, self._k + gate.k)

    ############################################################################
    #                               Comparisons                                #
    ############################################################################

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        return (self.shape == other.shape and self._k == other.k
                and bool((self._u == other.u).all()) and bool((self._v == other.v).all()))

    def __hash__(self) -> int:
        return hash((self.shape, self._k, tuple(self._u.flat), tuple(self._v.flat)))

    def is_unitary(self) -> bool:
        return self.rows == self.cols and self @ self.dagger() == CycloMatrix.identity(self.rows)

    def first_nonzero(self) -> Optional[Tuple[int, int]]:
        """ row-major position of the first nonzero entry, None for the zero matrix """
        for i in range(self.rows):
            for j in range(self.cols):
                if self._u[i, j] != 0 or self._v[i, j] != 0:
                    return i, j
        return None

    def dump(self) -> str:
        """ debugging dump, one row per line, entries as "(u,v)/3^k" """
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries())

    def __repr__(self) -> str:
        return "CycloMatrix(%dx%d, k=%d)" % (self.rows, self.cols, self._k)


def equal_up_to_phase(a: CycloMatrix, b: CycloMatrix) -> Optional[int]:
    """
    Find t in Z6 such that ``a = (-ω)^t b`` entrywise.

    :param a: first matrix
    :param b: reference matrix, it must have a nonzero entry
    :return: t, or None when no unit phase relates the two matrices
    :raise ValueError: on shape mismatch or when ``b`` is zero
    """
    if a.shape != b.shape:
        raise ValueError("cannot compare %s and %s matrices" % (a.shape, b.shape))

    pos = b.first_nonzero()
    if pos is None:
        raise ValueError("the reference matrix is zero")

    x, y = a[pos], b[pos]
    for t in range(6):
        if x == unit_phase(t) * y and a == b.scale(unit_phase(t)):
            return t
    return None
