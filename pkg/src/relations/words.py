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
Short words over {H, S, CZ} for small Clifford operators, given by their
tableau. Global phases are left to the caller.
"""
from __future__ import annotations

import logging
from collections import deque
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..circuit import Circuit, Gate, interpret
from ..exactnum import equal_up_to_phase
from ..normalform import normal_form_circuit, synthesize
from ..pauli import Pauli, Tableau, tableau_compose, tableau_of

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

SINGLE_QUTRIT_CLIFFORDS = 216


@lru_cache(maxsize=None)
def single_qutrit_words() -> Dict[Tableau, Tuple[Gate, ...]]:
    """
    Breadth-first table of shortest {H, S} words, one per single-qutrit
    Clifford modulo phases.
    """
    generators = (Gate('H', (0,)), Gate('S', (0,)))
    start = Tableau.identity(1)
    table: Dict[Tableau, Tuple[Gate, ...]] = {start: ()}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for g in generators:
            image = current.then(g)
            if image not in table:
                table[image] = table[current] + (g,)
                queue.append(image)
    if len(table) != SINGLE_QUTRIT_CLIFFORDS:
        raise RuntimeError("single-qutrit table has %d entries" % len(table))
    return table


def _restricted(p: Pauli, wire: int) -> Pauli:
    return p.restrict((wire,)).times_omega(p.c)


def split_local(t: Tableau) -> Optional[List[Tableau]]:
    """ per-wire tableaus of a tensor product of single-qutrit Cliffords, or None """
    parts = []
    for j in range(t.n):
        for p in (t.zimg[j], t.ximg[j]):
            if any(w != j for w in p.support()):
                return None
        parts.append(Tableau(1, (_restricted(t.zimg[j], j),), (_restricted(t.ximg[j], j),)))
    return parts


def _local_word(parts: List[Tableau], offset: int = 0) -> List[Gate]:
    table = single_qutrit_words()
    word: List[Gate] = []
    for j, part in enumerate(parts):
        word.extend(g.shifted(j + offset) for g in table[part])
    return word


@lru_cache(maxsize=None)
def _cz_tableau(power: int) -> Tableau:
    return tableau_of(Circuit(2, (Gate('CZ', (0, 1)),) * (power % 3)))


def clifford_word(t: Tableau, offset: int = 0) -> List[Gate]:
    """
    A primitive word without scalars implementing ``t`` up to phase.

    One wire uses the shortest word table; two wires try a local layer and
    a power of CZ in either order before falling back to the normal form.

    :param t: tableau on at most two wires
    :param offset: first wire of the word
    """
    if t.n == 0:
        return []
    if t.n == 1:
        return [g.shifted(offset) for g in single_qutrit_words()[t]]
    if t.n != 2:
        raise ValueError("short words are built for one or two wires, got %d" % t.n)

    for e in range(3):
        cz = [Gate('CZ', (offset, offset + 1))] * e
        parts = split_local(tableau_compose(t, _cz_tableau(-e)))
        if parts is not None:
            return _local_word(parts, offset) + cz
        parts = split_local(tableau_compose(_cz_tableau(-e), t))
        if parts is not None:
            return cz + _local_word(parts, offset)

    log.debug("two-wire Clifford without a short form, using its normal form")
    nf = normal_form_circuit(synthesize(t), primitive=True)
    return [g.shifted(offset) for g in nf.gates if not g.is_scalar]


############################################################################
#                               Local words                                #
############################################################################

@lru_cache(maxsize=None)
def pauli_s_words() -> Dict[Tableau, Tuple[Gate, ...]]:
    """ the 27 words ``X^a Z^b S^c`` on one wire, by tableau """
    table: Dict[Tableau, Tuple[Gate, ...]] = {}
    for a in range(3):
        for b in range(3):
            for c in range(3):
                word = (Gate('X', (0,)),) * a + (Gate('Z', (0,)),) * b + (Gate('S', (0,)),) * c
                table.setdefault(tableau_of(Circuit(1, word)), word)
    return table


@lru_cache(maxsize=None)
def shorter_local_word(kinds: Tuple[str, ...]) -> Optional[Tuple[Tuple[str, ...], int]]:
    """
    A shorter one-wire word for a run of H, S, X and Z gates: a shortest
    {H, S} word when the run holds an H, ``X^a Z^b S^c`` otherwise.

    The new word never uses a gate kind the run does not use, except Z next
    to X.

    :param kinds: gate kinds of the run, in word order
    :return: the kinds of the new word and t with ``run = (-ω)^t new``, or
        None when no strictly shorter word is found
    """
    run = tuple(Gate(k, (0,)) for k in kinds)
    tableau = tableau_of(Circuit(1, run))
    if 'H' in kinds:
        if 'X' in kinds or 'Z' in kinds:
            return None
        new = single_qutrit_words()[tableau]
    else:
        new = pauli_s_words().get(tableau)
    if new is None or len(new) >= len(run):
        return None
    t = equal_up_to_phase(interpret(Circuit(1, run)), interpret(Circuit(1, new)))
    if t is None:
        raise RuntimeError("%s and its short form differ beyond a phase" % " ".join(kinds))
    return tuple(g.kind for g in new), t
