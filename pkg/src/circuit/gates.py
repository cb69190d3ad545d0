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
The qutrit Clifford gate alphabet.

The primitive generators are the scalar ``W`` (-ω), ``H``, ``S`` and ``CZ`` on
adjacent wires. Every other gate is a derived generator with a fixed expansion
over the primitives, given as a diagrammatic word (the first gate of the word
is applied first).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Final, List, Literal, Tuple

from ..exactnum import CycloMatrix, CycloNumber, H_SCALE, MINUS_OMEGA, OMEGA, ONE

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

GateKind: Final = Literal['W', 'MINUS', 'OMEGA', 'H', 'S', 'SP', 'Z', 'X', 'CZ', 'SWAP', 'CX', 'XC']

GATE_ARITY: Final[Dict[str, int]] = {
    'W': 0,  # scalar -ω
    'MINUS': 0,  # scalar -1
    'OMEGA': 0,  # scalar ω
    'H': 1,
    'S': 1,
    'SP': 1,  # S' = H²SH²
    'Z': 1,
    'X': 1,
    'CZ': 2,
    'SWAP': 2,
    'CX': 2,  # control on the first wire
    'XC': 2,  # control on the second wire
}

PRIMITIVE_KINDS: Final = frozenset({'W', 'H', 'S', 'CZ'})

# order of each primitive, used to write inverses as positive powers
PRIMITIVE_ORDER: Final[Dict[str, int]] = {'W': 6, 'H': 4, 'S': 3, 'CZ': 3}


@dataclass(frozen=True, order=True)
class Gate:
    """
    One gate of a circuit word.

    Two-wire gates store their wires in increasing order; a pair that is not
    adjacent is a remote gate.
    """

    kind: str
    wires: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in GATE_ARITY:
            raise ValueError("unknown gate kind %r" % self.kind)
        if len(self.wires) != GATE_ARITY[self.kind]:
            raise ValueError("gate %s expects %d wire(s), got %d" % (self.kind, GATE_ARITY[self.kind], len(self.wires)))
        if any(w < 0 for w in self.wires):
            raise ValueError("negative wire in %s" % (self.wires,))
        if len(self.wires) == 2 and self.wires[0] >= self.wires[1]:
            raise ValueError("two-wire gate %s needs increasing wires, got %s" % (self.kind, self.wires))

    @classmethod
    def of(cls, kind: str, *wires: int) -> Gate:
        return cls(kind, tuple(wires))

    @property
    def is_scalar(self) -> bool:
        return GATE_ARITY[self.kind] == 0

    @property
    def is_remote(self) -> bool:
        return len(self.wires) == 2 and self.wires[1] > self.wires[0] + 1

    @property
    def is_primitive(self) -> bool:
        return self.kind in PRIMITIVE_KINDS and not self.is_remote

    def shifted(self, offset: int) -> Gate:
        return Gate(self.kind, tuple(w + offset for w in self.wires))

    def __str__(self) -> str:
        return " ".join([self.kind] + [str(w) for w in self.wires])


############################################################################
#                               Gate matrices                              #
############################################################################

def _permutation(dim: int, image) -> CycloMatrix:
    """ matrix sending basis vector |x> to |image(x)> """
    rows = [[0] * dim for _ in range(dim)]
    for x in range(dim):
        rows[image(x)][x] = 1
    return CycloMatrix.from_entries(rows)


def _omega_power(e: int) -> CycloNumber:
    return OMEGA ** (e % 3)


@lru_cache(maxsize=None)
def _local_matrix(kind: str) -> CycloMatrix:
    if kind == 'W':
        return CycloMatrix.scalar(MINUS_OMEGA)
    if kind == 'MINUS':
        return CycloMatrix.scalar(-1)
    if kind == 'OMEGA':
        return CycloMatrix.scalar(OMEGA)
    if kind == 'H':
        return CycloMatrix.from_entries([[_omega_power(x * y) for y in range(3)] for x in range(3)]).scale(H_SCALE)
    if kind == 'S':
        return CycloMatrix.diagonal([OMEGA, OMEGA, ONE])
    if kind == 'SP':
        return CycloMatrix.diagonal([OMEGA, ONE, OMEGA])
    if kind == 'Z':
        return CycloMatrix.diagonal([_omega_power(x) for x in range(3)])
    if kind == 'X':
        return _permutation(3, lambda x: (x + 1) % 3)
    if kind == 'CZ':
        return CycloMatrix.diagonal([_omega_power((i // 3) * (i % 3)) for i in range(9)])
    if kind == 'SWAP':
        return _permutation(9, lambda i: 3 * (i % 3) + i // 3)
    if kind == 'CX':
        return _permutation(9, lambda i: 3 * (i // 3) + (i // 3 + i % 3) % 3)
    if kind == 'XC':
        return _permutation(9, lambda i: 3 * ((i // 3 + i % 3) % 3) + i % 3)
    raise ValueError("unknown gate kind %r" % kind)


def gate_matrix(g: Gate) -> CycloMatrix:
    """
    The matrix of ``g`` on its own wires (1x1 for scalars, 3x3 or 9x9
    otherwise). Remote gates have the same local matrix as their adjacent
    counterpart, applied to their two wires.
    """
    return _local_matrix(g.kind)


############################################################################
#                               Expansions                                 #
############################################################################

def _local_expansion(g: Gate) -> List[Gate]:
    """ one expansion level of an adjacent derived gate """
    if g.kind == 'MINUS':
        return [Gate('W')] * 3
    if g.kind == 'OMEGA':
        return [Gate('W')] * 4

    if g.kind in ('SP', 'Z', 'X'):
        (j,) = g.wires
        h, s = Gate('H', (j,)), Gate('S', (j,))
        if g.kind == 'SP':
            return [h, h, s, h, h]
        if g.kind == 'Z':
            return [h, h, s, s, h, h, s]
        return [h, Gate('Z', (j,)), h, h, h]

    i, j = g.wires
    cz = Gate('CZ', (i, j))
    if g.kind == 'CX':
        return [Gate('H', (j,)), cz] + [Gate('H', (j,))] * 3
    if g.kind == 'XC':
        return [Gate('H', (i,)), cz] + [Gate('H', (i,))] * 3
    if g.kind == 'SWAP':
        cx, xc = Gate('CX', (i, j)), Gate('XC', (i, j))
        return [cx, xc, xc, cx, Gate('H', (i,)), Gate('H', (i,)), Gate('MINUS')]
    raise ValueError("gate %s has no expansion" % g)


def _remote_expansion(g: Gate) -> List[Gate]:
    """
    conjugate the adjacent gate by a SWAP ladder carrying the far wire next to
    the near one
    """
    i, j = g.wires
    ladder = [Gate('SWAP', (w - 1, w)) for w in range(j, i + 1, -1)]
    return ladder + [Gate(g.kind, (i, i + 1))] + ladder[::-1]


def expand_derived(g: Gate) -> List[Gate]:
    """
    Expand ``g`` into a word over the primitive alphabet {W, H, S, CZ}.

    The expansion is exact, global phase included.

    :param g: any gate
    :return: the diagrammatic word, ``[g]`` itself when g is primitive
    """
    if g.is_primitive:
        return [g]

    word = _remote_expansion(g) if g.is_remote else _local_expansion(g)
    result: List[Gate] = []
    for sub in word:
        result.extend(expand_derived(sub))
    return result


def inverse_word(g: Gate) -> List[Gate]:
    """ primitive word of g⁻¹ """
    result: List[Gate] = []
    for p in reversed(expand_derived(g)):
        result.extend([p] * (PRIMITIVE_ORDER[p.kind] - 1))
    return result
