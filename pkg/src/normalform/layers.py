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
Z-layers and X-layers of the normal form.

A Z-layer on wires 0..j-1 sends a non-identity Pauli P to Z_0: an A box on the
lowest non-identity wire m, a ladder of B boxes climbing from m to 0, and a C
box fixing the phase. An X-layer sends a Pauli Q that ω-anticommutes with Z_0
to X_{j-1} while carrying Z_0 to Z_{j-1}: a ladder of D boxes, then E and F.
"""
from __future__ import annotations

import logging
from typing import List

from ..pauli import Pauli, conjugate_word
from .boxes import NormalBox, make_box

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


def layer_gates(boxes: List[NormalBox]) -> list:
    gates = []
    for box in boxes:
        gates.extend(box.gates())
    return gates


def synth_z_layer(p: Pauli) -> List[NormalBox]:
    """
    Boxes of the Z-layer mapping ``p`` to ``Z_0``, phase included.

    :param p: a Pauli that is not a multiple of the identity
    :return: the boxes in word order
    :raise ValueError: when ``p`` is a scalar
    """
    if p.is_scalar():
        raise ValueError("a Z-layer needs a non-identity Pauli, got %s" % p)

    m = max(p.support())
    boxes = [make_box('A', p.factor(m), m)]
    current = conjugate_word(boxes[0].gates(), p)
    for k in range(m - 1, -1, -1):
        box = make_box('B', current.factor(k), (k, k + 1))
        current = conjugate_word(box.gates(), current)
        boxes.append(box)

    box = make_box('C', current.c, 0)
    boxes.append(box)
    current = conjugate_word(box.gates(), current)
    if current != Pauli.z(p.n, 0):
        raise RuntimeError("Z-layer for %s ends on %s" % (p, current))
    return boxes


def synth_x_layer(q: Pauli) -> List[NormalBox]:
    """
    Boxes of the X-layer mapping ``q`` to ``X_{j-1}`` on ``j = q.n`` wires.

    :param q: a Pauli with ``Z_0 · q = ω · q · Z_0``
    :return: the boxes in word order
    :raise ValueError: when ``q`` does not ω-anticommute with Z_0
    """
    j = q.n
    if not Pauli.z(j, 0).omega_anticommutes(q):
        raise ValueError("an X-layer needs a Pauli ω-anticommuting with Z_0, got %s" % q)

    boxes: List[NormalBox] = []
    current = q
    for k in range(j - 1):
        box = make_box('D', current.factor(k + 1), (k, k + 1))
        current = conjugate_word(box.gates(), current)
        boxes.append(box)

    bottom = j - 1
    box = make_box('E', current.factor(bottom)[1], bottom)
    current = conjugate_word(box.gates(), current)
    boxes.append(box)
    box = make_box('F', current.c, bottom)
    current = conjugate_word(box.gates(), current)
    boxes.append(box)

    if current != Pauli.x(j, bottom):
        raise RuntimeError("X-layer for %s ends on %s" % (q, current))
    return boxes
