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
The eighteen gate relations C1 to C18 that generate all relations between
n-qutrit Clifford circuits, and the definitions of the derived gates.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Tuple

from ..circuit import Circuit, Gate, interpret
from ..pauli import tableau_of

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class GateRelation:
    name: str
    lhs: Circuit
    rhs: Circuit
    text: str


@dataclass(frozen=True)
class RelationCheck:
    name: str
    text: str
    tableau_ok: bool
    matrix_ok: bool

    @property
    def ok(self) -> bool:
        return self.tableau_ok and self.matrix_ok


def _c(n: int, *gates: Tuple) -> Circuit:
    return Circuit(n, tuple(Gate(g[0], tuple(g[1:])) for g in gates))


def gate_relations() -> List[GateRelation]:
    """ C1..C18, each side a circuit read left to right """
    h0, h1, s0, s1 = ('H', 0), ('H', 1), ('S', 0), ('S', 1)
    cz, cz12, swap, swap12 = ('CZ', 0, 1), ('CZ', 1, 2), ('SWAP', 0, 1), ('SWAP', 1, 2)
    w, sp = ('W',), ('SP', 0)
    return [
        GateRelation("C1", _c(0, *[w] * 6), _c(0), "(-ω)^6 = 1"),
        GateRelation("C2", _c(1, *[h0] * 4), _c(1), "H^4 = 1"),
        GateRelation("C3", _c(1, *[s0] * 3), _c(1), "S^3 = 1"),
        GateRelation("C4", _c(1, *[s0, s0, h0] * 3), _c(1, w), "(H S^2)^3 = -ω"),
        GateRelation("C5", _c(1, s0, sp), _c(1, sp, s0), "S S' = S' S"),
        GateRelation("C6", _c(2, *[cz] * 3), _c(2), "CZ^3 = 1"),
        GateRelation("C7", _c(2, s0, cz), _c(2, cz, s0), "CZ (S ⊗ I) = (S ⊗ I) CZ"),
        GateRelation("C8", _c(2, s1, cz), _c(2, cz, s1), "CZ (I ⊗ S) = (I ⊗ S) CZ"),
        GateRelation("C9", _c(3, cz, cz12), _c(3, cz12, cz), "CZ_01 CZ_12 = CZ_12 CZ_01"),
        GateRelation("C10", _c(2, h0, h0, cz, h0, h0), _c(2, cz, cz), "(H^2 ⊗ I) CZ (H^2 ⊗ I) = CZ^2"),
        GateRelation("C11", _c(2, swap, swap), _c(2), "SWAP^2 = 1"),
        GateRelation("C12", _c(2, swap, h0, swap), _c(2, h1), "SWAP (H ⊗ I) SWAP = I ⊗ H"),
        GateRelation("C13", _c(2, swap, s0, swap), _c(2, s1), "SWAP (S ⊗ I) SWAP = I ⊗ S"),
        GateRelation("C14", _c(2, swap, cz, swap), _c(2, cz), "SWAP CZ SWAP = CZ"),
        GateRelation("C15", _c(2, ('X', 0), cz), _c(2, cz, ('X', 0), ('Z', 1)), "CZ (X ⊗ I) = (X ⊗ Z) CZ"),
        GateRelation("C16", _c(1, ('X', 0), s0), _c(1, s0, ('Z', 0), ('Z', 0), ('X', 0)), "S X = X Z^2 S"),
        GateRelation("C17", _c(2, swap), _c(2, ('CX', 0, 1), ('XC', 0, 1), ('XC', 0, 1), ('CX', 0, 1), h0, h0,
                                              ('MINUS',)), "SWAP = -(H^2 ⊗ I) CX XC XC CX"),
        GateRelation("C18", _c(3, swap, swap12, swap), _c(3, swap12, swap, swap12),
                     "SWAP_01 SWAP_12 SWAP_01 = SWAP_12 SWAP_01 SWAP_12"),
    ]


def gate_definitions() -> List[GateRelation]:
    """ the derived single-qutrit gates in terms of H and S """
    h, s = ('H', 0), ('S', 0)
    return [
        GateRelation("S'", _c(1, ('SP', 0)), _c(1, h, h, s, h, h), "S' = H^2 S H^2"),
        GateRelation("Z", _c(1, ('Z', 0)), _c(1, s, ('SP', 0), ('SP', 0)), "Z = S'^2 S"),
        GateRelation("X", _c(1, ('X', 0)), _c(1, h, ('Z', 0), h, h, h), "X = H^3 Z H"),
        GateRelation("CX", _c(2, ('CX', 0, 1)), _c(2, ('H', 1), ('CZ', 0, 1), ('H', 1), ('H', 1), ('H', 1)),
                     "CX = (I ⊗ H) CZ (I ⊗ H^3)"),
    ]


def verify_gate_relations(include_definitions: bool = True) -> List[RelationCheck]:
    """
    Check every gate relation, first on tableaus and then on exact matrices.

    :param include_definitions: also check the derived gate definitions
    :return: one entry per relation
    """
    relations = gate_relations() + (gate_definitions() if include_definitions else [])
    report = []
    for rel in relations:
        tableau_ok = tableau_of(rel.lhs) == tableau_of(rel.rhs)
        matrix_ok = tableau_ok and interpret(rel.lhs) == interpret(rel.rhs)
        if not matrix_ok:
            log.warning("gate relation %s (%s) fails" % (rel.name, rel.text))
        report.append(RelationCheck(rel.name, rel.text, tableau_ok, matrix_ok))
    return report
