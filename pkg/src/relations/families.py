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
The families of box relations: every dirty gate that can wait before a clean
box context, with every index of the boxes involved.
"""
from __future__ import annotations

import logging
from itertools import product
from typing import Callable, Dict, Final, Iterator, List, Tuple

from ..circuit import Gate
from ..normalform import NormalBox, all_boxes

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

Instance = Tuple[Gate, Tuple[NormalBox, ...]]


def _one(gate: str, wire: int, kind: str) -> Callable[[], Iterator[Instance]]:
    def instances() -> Iterator[Instance]:
        for box in all_boxes(kind, 0):
            yield Gate(gate, (wire,)), (box,)
    return instances


def _cz(wires: Tuple[int, int], *shape: Tuple[str, int]) -> Callable[[], Iterator[Instance]]:
    def instances() -> Iterator[Instance]:
        for boxes in product(*[list(all_boxes(kind, top)) for kind, top in shape]):
            yield Gate('CZ', wires), tuple(boxes)
    return instances


# tag -> instances, grouped by the number of wires
FAMILIES: Final[Dict[str, Callable[[], Iterator[Instance]]]] = {
    # one wire
    "H.A": _one('H', 0, 'A'),
    "S.A": _one('S', 0, 'A'),
    "S.C": _one('S', 0, 'C'),
    "Z.C": _one('Z', 0, 'C'),
    "X.C": _one('X', 0, 'C'),
    "S.E": _one('S', 0, 'E'),
    "Z.E": _one('Z', 0, 'E'),
    "Z.F": _one('Z', 0, 'F'),
    # two wires
    "CZ.A": _cz((0, 1), ('A', 0)),
    "CZ.AB": _cz((0, 1), ('A', 1), ('B', 0)),
    "H0.B": _one('H', 0, 'B'),
    "S0.B": _one('S', 0, 'B'),
    "S1.B": _one('S', 1, 'B'),
    "X1.B": _one('X', 1, 'B'),
    "Z1.B": _one('Z', 1, 'B'),
    "CZ.C": _cz((0, 1), ('C', 0)),
    "H1.D": _one('H', 1, 'D'),
    "S1.D": _one('S', 1, 'D'),
    "S0.D": _one('S', 0, 'D'),
    "Z0.D": _one('Z', 0, 'D'),
    "CZ.D": _cz((0, 1), ('D', 0)),
    # three wires
    "CZ.BB": _cz((0, 1), ('B', 1), ('B', 0)),
    "CZ.B": _cz((1, 2), ('B', 0)),
    "CZ.DD": _cz((1, 2), ('D', 0), ('D', 1)),
}

PHASE_FAMILIES: Final = ("phase.minus", "phase.omega")

PUBLISHED_RULE_COUNT: Final = 380


def family_instances(tag: str) -> List[Instance]:
    if tag not in FAMILIES:
        raise ValueError("unknown relation family %r" % tag)
    return list(FAMILIES[tag]())


def expected_family_sizes() -> Dict[str, int]:
    sizes = {tag: 1 for tag in PHASE_FAMILIES}
    sizes.update({tag: sum(1 for _ in instances()) for tag, instances in FAMILIES.items()})
    return sizes
