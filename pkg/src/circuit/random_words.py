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
from typing import List, Literal, Optional

import numpy as np

from .circuit import Circuit
from .gates import Gate

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

AlphabetType = Literal['primitive', 'derived']


def alphabet(n: int, kind: AlphabetType = 'primitive') -> List[Gate]:
    """
    Every concrete syllable on n wires.

    The primitive alphabet is {W, H(j), S(j), CZ(i, i+1)}. The derived one adds
    the scalars -1 and ω, the single qutrit S', Z and X, and SWAP, CX, XC and CZ
    on every pair of wires.
    """
    gates = [Gate('W')]
    gates += [Gate(k, (j,)) for j in range(n) for k in ('H', 'S')]
    gates += [Gate('CZ', (i, i + 1)) for i in range(n - 1)]

    if kind == 'derived':
        gates += [Gate('MINUS'), Gate('OMEGA')]
        gates += [Gate(k, (j,)) for j in range(n) for k in ('SP', 'Z', 'X')]
        gates += [Gate(k, (i, j)) for i in range(n) for j in range(i + 1, n) for k in ('SWAP', 'CX', 'XC')]
        gates += [Gate('CZ', (i, j)) for i in range(n) for j in range(i + 2, n)]
    elif kind != 'primitive':
        raise ValueError("unknown alphabet %r" % kind)

    return gates


def random_word(n: int, length: int, seed: Optional[int] = None, kind: AlphabetType = 'primitive') -> Circuit:
    """
    A random circuit, each gate drawn uniformly from the alphabet.

    :param n: number of wires, n >= 1
    :param length: number of gates
    :param seed: seed of the numpy generator, the result is deterministic for a fixed seed
    :param kind: 'primitive' or 'derived' alphabet
    """
    if n < 1:
        raise ValueError("a random word needs at least one wire")
    if length < 0:
        raise ValueError("the length must be non-negative")

    rng = np.random.default_rng(seed)
    letters = alphabet(n, kind)
    picks = rng.integers(0, len(letters), size=length)
    return Circuit(n, tuple(letters[int(i)] for i in picks))
