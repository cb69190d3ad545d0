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
Dirty normal forms: the boxes of a normal form with dirty gates waiting
between them.

The state is one list in word order. A dirty gate waits at the positions
just before the next item on each of its wires; the label of a position is
given by that next box (see :mod:`src.relations.placement`).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from ..circuit import Circuit, Gate, interpret
from ..exactnum import CycloMatrix
from ..normalform import Layer, NormalBox, NormalForm, max_box_count
from ..relations import LABEL_SYMBOLS, check_dirty_shape, label_before, shorter_local_word

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class CleanBox:
    """ a box of the normal form and the number of wires of its layer """

    box: NormalBox
    layer: int

    @property
    def wires(self) -> Tuple[int, ...]:
        return self.box.wires

    def __str__(self) -> str:
        return str(self.box)


Item = Union[CleanBox, Gate]


@dataclass(frozen=True, order=True)
class Measure:
    """ dirty gates before each clean box, left to right, compared lexicographically """

    s: Tuple[int, ...]

    def __str__(self) -> str:
        return "(%s)" % ", ".join(str(v) for v in self.s)


class DirtyNormalForm:
    """
    :param n: number of wires
    :param items: clean boxes and dirty gates in word order
    :param t: exponent of the global phase (-ω)^t
    """

    def __init__(self, n: int, items: List[Item], t: int = 0) -> None:
        self.n = n
        self.items = list(items)
        self.t = t % 6

    @classmethod
    def from_normal_form(cls, nf: NormalForm) -> DirtyNormalForm:
        items: List[Item] = [CleanBox(box, layer.j) for layer in nf.layers for box in layer.boxes]
        return cls(nf.n, items, nf.t)

    def copy(self) -> DirtyNormalForm:
        return DirtyNormalForm(self.n, self.items, self.t)

    ############################################################################
    #                               Queries                                    #
    ############################################################################

    def clean_boxes(self) -> List[CleanBox]:
        return [it for it in self.items if isinstance(it, CleanBox)]

    def dirty_gates(self) -> List[Gate]:
        return [it for it in self.items if isinstance(it, Gate)]

    def is_clean(self) -> bool:
        return not any(isinstance(it, Gate) for it in self.items)

    def next_item(self, position: int, wire: int) -> Tuple[Optional[int], Optional[Item]]:
        """ first item after ``position`` on ``wire`` """
        for i in range(position + 1, len(self.items)):
            if wire in self.items[i].wires:
                return i, self.items[i]
        return None, None

    def next_box(self, position: int, wire: int) -> Optional[CleanBox]:
        for i in range(position + 1, len(self.items)):
            item = self.items[i]
            if isinstance(item, CleanBox) and wire in item.wires:
                return item
        return None

    def label_at(self, position: int, wire: int) -> int:
        """ label of the position right after ``position`` on ``wire`` """
        box = self.next_box(position, wire)
        return label_before(box.box if box is not None else None, wire)

    def measure(self) -> Measure:
        counts, dirty = [], 0
        for item in self.items:
            if isinstance(item, Gate):
                dirty += 1
            else:
                counts.append(dirty)
        return Measure(tuple(counts))

    def queues(self) -> Dict[Tuple[int, int, str], List[Gate]]:
        """
        dirty gates grouped by (layer, wire, label) of the position where they
        wait, one entry per wire of each gate
        """
        result: Dict[Tuple[int, int, str], List[Gate]] = {}
        for i, item in enumerate(self.items):
            if isinstance(item, CleanBox):
                continue
            for w in item.wires:
                box = self.next_box(i, w)
                key = (box.layer if box else 0, w, LABEL_SYMBOLS[self.label_at(i, w)])
                result.setdefault(key, []).append(item)
        return result

    ############################################################################
    #                               Merging                                    #
    ############################################################################

    def _runs(self, wire: int) -> List[List[int]]:
        """ indices of one-wire dirty gates on ``wire`` with nothing else on it in between """
        runs, current = [], []
        for i, item in enumerate(self.items):
            if wire not in item.wires:
                continue
            if isinstance(item, Gate) and len(item.wires) == 1:
                current.append(i)
                continue
            if len(current) > 1:
                runs.append(current)
            current = []
        if len(current) > 1:
            runs.append(current)
        return runs

    def _replace(self, indices: List[int], gates: List[Gate], dt: int) -> DirtyNormalForm:
        drop = set(indices)
        items: List[Item] = []
        for i, item in enumerate(self.items):
            if i == indices[-1]:
                items.extend(gates)
            if i not in drop:
                items.append(item)
        return DirtyNormalForm(self.n, items, self.t + dt)

    def _merge_once(self) -> Optional[DirtyNormalForm]:
        for wire in range(self.n):
            for run in self._runs(wire):
                short = shorter_local_word(tuple(self.items[i].kind for i in run))
                if short is None:
                    continue
                kinds, dt = short
                gates = [Gate(k, (wire,)) for k in kinds]
                if check_dirty_shape(gates, {wire: self.label_at(run[-1], wire)}):
                    return self._replace(run, gates, dt)

        for i, item in enumerate(self.items):
            if not (isinstance(item, Gate) and item.kind == 'CZ'):
                continue
            chain = [i]
            while len(chain) < 3:
                nxt = self._next_on(chain[-1], item.wires)
                if nxt is None or self.items[nxt] != item:
                    break
                chain.append(nxt)
            if len(chain) == 3:
                return self._replace(chain, [], 0)
        return None

    def _next_on(self, position: int, wires: Tuple[int, ...]) -> Optional[int]:
        for i in range(position + 1, len(self.items)):
            if set(wires) & set(self.items[i].wires):
                return i
        return None

    def merged(self) -> DirtyNormalForm:
        """
        The same operator with shorter dirty words: runs of one-wire gates
        waiting at the same position are replaced by shorter words, placed at
        the last gate of the run, and CZ³ is dropped. Gates only move right,
        so the measure never grows.
        """
        current = self
        while True:
            nxt = current._merge_once()
            if nxt is None:
                return current
            current = nxt

    ############################################################################
    #                               Conversions                                #
    ############################################################################

    def circuit(self) -> Circuit:
        gates = [Gate('W')] * self.t
        for item in self.items:
            gates.extend(item.box.gates() if isinstance(item, CleanBox) else [item])
        return Circuit(self.n, tuple(gates))

    def matrix(self) -> CycloMatrix:
        return interpret(self.circuit())

    def to_normal_form(self) -> NormalForm:
        """
        :raise ValueError: while dirty gates remain
        """
        if not self.is_clean():
            raise ValueError("%d dirty gate(s) remain" % len(self.dirty_gates()))
        if len(self.items) > max_box_count(self.n):
            raise RuntimeError("%d clean boxes exceed the bound %d" % (len(self.items), max_box_count(self.n)))
        layers = []
        for j in range(self.n, 0, -1):
            boxes = [it.box for it in self.items if it.layer == j]
            layers.append(Layer(j, tuple(b for b in boxes if b.kind in 'ABC'),
                                tuple(b for b in boxes if b.kind in 'DEF')))
        return NormalForm(self.n, self.t, tuple(layers))

    def __str__(self) -> str:
        body = " ".join("[%s]" % it if isinstance(it, Gate) else str(it) for it in self.items)
        return "(-ω)^%d %s" % (self.t, body)
