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
Counting, sampling and enumerating normal forms.
"""
from __future__ import annotations

import logging
from itertools import product
from typing import Iterator, Optional

import numpy as np

from ..pauli import Pauli
from .synthesis import Layer, NormalForm
from .layers import synth_z_layer
from .boxes import make_box

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


def count_normal_forms(n: int) -> int:
    """
    Number of distinct normal forms on n wires, global phase included:
    ``6 · Π_{k=1..n} 3 (9^k - 1) 9^k``, which is also the order of the
    n-qutrit Clifford group.
    """
    if n < 0:
        raise ValueError("the number of wires must be non-negative, got %d" % n)
    total = 6
    for k in range(1, n + 1):
        total *= 3 * (9 ** k - 1) * 9 ** k
    return total


def max_box_count(n: int) -> int:
    """ upper bound on the boxes of a normal form, reached when every A box sits on the last wire """
    return n * n + 3 * n


def _digits(value: int, n: int) -> list:
    return [(value // 3 ** (n - 1 - i)) % 3 for i in range(n)]


def random_normal_form(n: int, seed: Optional[int] = None) -> NormalForm:
    """
    Uniformly random normal form: each layer draws its Z-layer from a uniform
    non-identity Pauli with a uniform phase, and its D, E and F indices
    uniformly.

    :param n: number of wires
    :param seed: seed of the numpy generator
    """
    rng = np.random.default_rng(seed)
    layers = []
    for j in range(n, 0, -1):
        index = int(rng.integers(1, 9 ** j))
        flat = _digits(index, 2 * j)
        p = Pauli(int(rng.integers(3)), tuple(flat[:j]), tuple(flat[j:]))
        z = synth_z_layer(p)
        x = [make_box('D', (int(rng.integers(3)), int(rng.integers(3))), (k, k + 1)) for k in range(j - 1)]
        x.append(make_box('E', int(rng.integers(3)), j - 1))
        x.append(make_box('F', int(rng.integers(3)), j - 1))
        layers.append(Layer(j, tuple(z), tuple(x)))
    return NormalForm(n, int(rng.integers(6)), tuple(layers))


def enumerate_single_qutrit() -> Iterator[NormalForm]:
    """
    The 216 phase-free single-qutrit normal forms A C E F, one per element
    of the single-qutrit Clifford group modulo phases.
    """
    for a, b in product(range(3), repeat=2):
        if (a, b) == (0, 0):
            continue
        for c, e, f in product(range(3), repeat=3):
            z = (make_box('A', (a, b), 0), make_box('C', c, 0))
            x = (make_box('E', e, 0), make_box('F', f, 0))
            yield NormalForm(1, 0, (Layer(1, z, x),))
