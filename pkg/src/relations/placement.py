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
Positions where dirty gates may wait in a dirty normal form.

A wire position is labelled by the clean box that comes next on that wire:

=====  ==================================================================
label  next box on the wire
=====  ==================================================================
①      an A box, the top of a B box, the bottom of a D box
②      the bottom of a B box, a C box
③      the top of a D box
④      an E box
⑤      an F box
⑥      none, the wire has left the normal form
=====  ==================================================================

H may wait at ① only, S at ① to ④, X at ② only, Z at ② to ⑤. A CZ needs ① on
its lower wire and ①, ② or ③ on its upper wire. Nothing may wait at ⑥.
"""
from __future__ import annotations

import logging
from typing import Final, Mapping, Optional, Sequence

from ..circuit import Gate
from ..normalform import NormalBox

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

INPUT: Final = 1
LADDER: Final = 2
D_TOP: Final = 3
E_INPUT: Final = 4
F_INPUT: Final = 5
END: Final = 6

LABEL_SYMBOLS: Final = {INPUT: "①", LADDER: "②", D_TOP: "③", E_INPUT: "④", F_INPUT: "⑤", END: "⑥"}

_ALLOWED: Final = {
    'H': frozenset({INPUT}),
    'S': frozenset({INPUT, LADDER, D_TOP, E_INPUT}),
    'X': frozenset({LADDER}),
    'Z': frozenset({LADDER, D_TOP, E_INPUT, F_INPUT}),
}
_CZ_TOP: Final = frozenset({INPUT, LADDER, D_TOP})


def label_before(box: Optional[NormalBox], wire: int) -> int:
    """ label of the position just before ``box`` on ``wire`` """
    if box is None:
        return END
    if box.kind == 'A':
        return INPUT
    if box.kind == 'B':
        return INPUT if wire == box.top else LADDER
    if box.kind == 'C':
        return LADDER
    if box.kind == 'D':
        return D_TOP if wire == box.top else INPUT
    return E_INPUT if box.kind == 'E' else F_INPUT


def placement_violation(word: Sequence[Gate], labels: Mapping[int, int]) -> Optional[Gate]:
    """
    first gate of ``word`` that may not wait at the labelled positions

    :param word: dirty gates, primitive or Pauli
    :param labels: label of every wire the word touches
    :return: the offending gate, or None
    """
    for g in word:
        if g.kind == 'CZ':
            top, bottom = g.wires
            if bottom != top + 1 or labels[top] not in _CZ_TOP or labels[bottom] != INPUT:
                return g
        elif g.kind in _ALLOWED:
            if labels[g.wires[0]] not in _ALLOWED[g.kind]:
                return g
        else:
            return g
    return None


def check_dirty_shape(word: Sequence[Gate], labels: Mapping[int, int]) -> bool:
    """ every gate of ``word`` obeys the placement clauses at ``labels`` """
    offending = placement_violation(word, labels)
    if offending is not None:
        log.debug("%s may not wait at %s" % (offending, "/".join(LABEL_SYMBOLS[labels[w]] for w in offending.wires)))
    return offending is None
