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
The six kinds of normal boxes.

==========  =======  ==========================================================
kind        wires    required action (forward conjugation)
==========  =======  ==========================================================
A_{ab}      1        X^a Z^b -> Z, with (a, b) != (0, 0)
B_{ab}      2        X^a Z^b ⊗ Z -> Z ⊗ I
C_c         1        ω^c Z -> Z
D_{ab}      2        X Z^β ⊗ X^a Z^b -> I ⊗ X Z^β up to a phase, any β
E_b         1        X Z^b -> X
F_c         1        ω^c X -> X
==========  =======  ==========================================================

The D row follows from X ⊗ X^a Z^b -> I ⊗ X and Z ⊗ I -> I ⊗ Z: the top
factor of the Pauli an X-layer carries down may be any X Z^β, and the E box
at the bottom clears the Z^β that reaches the last wire.

Each box also has additional actions (B sends ω^{ab} X^{2a} Z^{2b+a²-1} ⊗ X to
X ⊗ I, D sends Z ⊗ I to I ⊗ Z, C, E and F fix the Pauli they do not target);
all of them are checked against the tableau of the box circuit in the tests.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Final, Iterator, List, Literal, Tuple

from ..circuit import Circuit, Gate
from ..pauli import Pauli

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

BoxKind: Final = Literal['A', 'B', 'C', 'D', 'E', 'F']

BOX_WIDTH: Final = {'A': 1, 'B': 2, 'C': 1, 'D': 2, 'E': 1, 'F': 1}

# diagrammatic words of the A boxes on one wire, indexed by (a, b)
_A_WORDS: Final = {
    (0, 1): "",
    (0, 2): "HH",
    (1, 0): "H",
    (1, 1): "SH",
    (1, 2): "SSH",
    (2, 0): "HHH",
    (2, 1): "HHSSH",
    (2, 2): "HHSH",
}


@dataclass(frozen=True, order=True)
class NormalBox:
    """
    A normal box on concrete wires. Two-wire boxes sit on ``(k, k+1)`` with
    the top wire first.
    """

    kind: str
    index: Tuple[int, ...]
    wires: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in BOX_WIDTH:
            raise ValueError("unknown box kind %r" % self.kind)
        expected = 2 if self.kind in 'ABD' else 1
        if len(self.index) != expected or any(i not in (0, 1, 2) for i in self.index):
            raise ValueError("box %s needs %d index value(s) in Z3, got %s" % (self.kind, expected, self.index))
        if self.kind == 'A' and self.index == (0, 0):
            raise ValueError("A_00 is not a normal box")
        if len(self.wires) != BOX_WIDTH[self.kind]:
            raise ValueError("box %s spans %d wire(s)" % (self.kind, BOX_WIDTH[self.kind]))
        if len(self.wires) == 2 and self.wires[1] != self.wires[0] + 1:
            raise ValueError("two-wire boxes act on adjacent wires, got %s" % (self.wires,))

    @property
    def name(self) -> str:
        return self.kind + "".join(str(i) for i in self.index)

    @property
    def top(self) -> int:
        return self.wires[0]

    @property
    def bottom(self) -> int:
        return self.wires[-1]

    def moved(self, wires: Tuple[int, ...]) -> NormalBox:
        return NormalBox(self.kind, self.index, wires)

    def with_index(self, *index: int) -> NormalBox:
        return NormalBox(self.kind, tuple(i % 3 for i in index), self.wires)

    def gates(self) -> List[Gate]:
        """ diagrammatic word of the box, over primitive and derived gates """
        return _box_word(self.kind, self.index, self.wires)

    def __str__(self) -> str:
        return "%s(%s)" % (self.name, ",".join(str(w) for w in self.wires))


def make_box(kind: str, index, wires) -> NormalBox:
    index = (index,) if isinstance(index, int) else tuple(index)
    wires = (wires,) if isinstance(wires, int) else tuple(wires)
    return NormalBox(kind, tuple(i % 3 for i in index), wires)


@lru_cache(maxsize=None)
def _box_word_cached(kind: str, index: Tuple[int, ...], wires: Tuple[int, ...]) -> Tuple[Gate, ...]:
    top = wires[0]

    if kind == 'A':
        return tuple(Gate(letter, (top,)) for letter in _A_WORDS[index])
    if kind == 'C':
        return (Gate('X', (top,)),) * index[0]
    if kind == 'E':
        return (Gate('S', (top,)),) * index[0]
    if kind == 'F':
        return (Gate('Z', (top,)),) * (2 * index[0] % 3)

    pair = (top, top + 1)
    a, b = index
    if kind == 'B':
        if a == 0:
            word = [Gate('CX', pair)] * b + [Gate('CZ', pair)] * ((b + 1) % 3)
        else:
            word = list(_box_word_cached('A', index, (top,))) + [Gate('CX', pair), Gate('CZ', pair)]
        return tuple(word + [Gate('SWAP', pair)])

    if kind == 'D':
        word = [Gate('CX', pair)] * (2 * a % 3) + [Gate('CZ', pair)] * (2 * b % 3)
        word += [Gate('S', (top,))] * (a * b % 3) + [Gate('SWAP', pair)]
        return tuple(word)

    raise ValueError("unknown box kind %r" % kind)


def _box_word(kind: str, index: Tuple[int, ...], wires: Tuple[int, ...]) -> List[Gate]:
    return list(_box_word_cached(kind, index, wires))


def box_circuit(box: NormalBox) -> Circuit:
    """
    The circuit of a box, on ``max(box.wires) + 1`` wires.
    """
    return Circuit(box.bottom + 1, tuple(box.gates()))


def all_boxes(kind: str, top: int = 0) -> Iterator[NormalBox]:
    """ every index variant of a box kind, placed at ``top`` """
    width = BOX_WIDTH[kind]
    wires = tuple(range(top, top + width))
    if kind in 'ABD':
        for a in range(3):
            for b in range(3):
                if kind == 'A' and (a, b) == (0, 0):
                    continue
                yield NormalBox(kind, (a, b), wires)
    else:
        for c in range(3):
            yield NormalBox(kind, (c,), wires)


############################################################################
#                               Actions                                    #
############################################################################

@dataclass(frozen=True)
class BoxAction:
    """ Pauli pairs (input, output) on the box's own wires, numbered from 0 """

    required: Tuple[Tuple[Pauli, Pauli], ...]
    additional: Tuple[Tuple[Pauli, Pauli], ...]


def box_action(box: NormalBox) -> BoxAction:
    """
    Required and additional actions of a box, as formulas in its indices.
    """
    if box.kind == 'A':
        a, b = box.index
        return BoxAction(((Pauli(0, (a,), (b,)), Pauli.z(1, 0)),), ())

    if box.kind == 'B':
        a, b = box.index
        required = (Pauli(0, (a, 0), (b, 1)), Pauli.z(2, 0))
        additional = (Pauli(a * b, (2 * a, 1), (2 * b + a * a - 1, 0)), Pauli.x(2, 0))
        return BoxAction((required,), (additional,))

    if box.kind == 'C':
        (c,) = box.index
        return BoxAction(((Pauli(c, (0,), (1,)), Pauli.z(1, 0)),), ((Pauli.x(1, 0), Pauli.x(1, 0)),))

    if box.kind == 'D':
        a, b = box.index
        required = (Pauli(0, (1, a), (0, b)), Pauli.x(2, 1))
        additional = (Pauli.z(2, 0), Pauli.z(2, 1))
        return BoxAction((required,), (additional,))

    if box.kind == 'E':
        (b,) = box.index
        return BoxAction(((Pauli(0, (1,), (b,)), Pauli.x(1, 0)),), ((Pauli.z(1, 0), Pauli.z(1, 0)),))

    (c,) = box.index
    return BoxAction(((Pauli(c, (1,), (0,)), Pauli.x(1, 0)),), ((Pauli.z(1, 0), Pauli.z(1, 0)),))
