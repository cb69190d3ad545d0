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
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from ..exactnum import CycloMatrix
from .gates import Gate, expand_derived, gate_matrix, inverse_word

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class Circuit:
    """
    An n-qutrit Clifford word, read diagrammatically: ``gates[0]`` is applied
    first, so the matrix of the circuit is ``gates[-1] ... gates[0]``.
    """

    n: int
    gates: Tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("the number of wires must be non-negative, got %d" % self.n)
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if any(w >= self.n for w in g.wires):
                raise ValueError("gate %s is out of range for %d wire(s)" % (g, self.n))

    @classmethod
    def of(cls, n: int, gates: Iterable[Gate]) -> Circuit:
        return cls(n, tuple(gates))

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __add__(self, other: Circuit) -> Circuit:
        """ concatenation, ``self`` applied first """
        if self.n != other.n:
            raise ValueError("cannot concatenate circuits on %d and %d wires" % (self.n, other.n))
        return Circuit(self.n, self.gates + other.gates)

    def is_primitive(self) -> bool:
        return all(g.is_primitive for g in self.gates)

    def expand(self) -> Circuit:
        """ the same circuit over the primitive alphabet only """
        gates: List[Gate] = []
        for g in self.gates:
            gates.extend(expand_derived(g))
        return Circuit(self.n, tuple(gates))

    def inverse(self) -> Circuit:
        """ primitive circuit of the inverse unitary """
        gates: List[Gate] = []
        for g in reversed(self.gates):
            gates.extend(inverse_word(g))
        return Circuit(self.n, tuple(gates))

    def __str__(self) -> str:
        return "; ".join(["n=%d" % self.n] + [str(g) for g in self.gates])


def interpret(c: Circuit) -> CycloMatrix:
    """
    Exact 3^n x 3^n matrix of a circuit. Derived gates are applied through
    their own matrices, without expansion.

    :param c: the circuit
    :return: the product of the gate matrices in reverse word order
    """
    return interpret_on(c, CycloMatrix.identity(3 ** c.n))


def interpret_on(c: Circuit, states: CycloMatrix) -> CycloMatrix:
    """ images of the columns of ``states`` (3^n rows) under the circuit """
    for g in c.gates:
        states = states.apply_local(gate_matrix(g), g.wires, c.n)
    return states
