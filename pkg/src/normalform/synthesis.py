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
Normal forms of n-qutrit Clifford operators and their synthesis from a
stabilizer tableau.

A normal form is a phase exponent t in Z6 followed by layers for j = n down to
1; layer j acts on wires 0..j-1 and is a Z-layer followed by an X-layer.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from ..circuit import Circuit, Gate, interpret, interpret_on
from ..exactnum import CycloMatrix, equal_up_to_phase
from ..pauli import (Pauli, Tableau, conjugate_word, tableau_compose, tableau_invert, tableau_of,
                     tableau_restrict)
from ..tools import StringDumpYaml
from .boxes import NormalBox, make_box
from .layers import layer_gates, synth_x_layer, synth_z_layer

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

DEFAULT_MAX_MATRIX_N = 6


@dataclass(frozen=True)
class Layer:
    """ the boxes of one layer on wires 0..j-1, in word order """

    j: int
    z: Tuple[NormalBox, ...]
    x: Tuple[NormalBox, ...]

    @property
    def boxes(self) -> Tuple[NormalBox, ...]:
        return self.z + self.x

    @property
    def m(self) -> int:
        """ wire of the A box """
        return self.z[0].top


@dataclass(frozen=True)
class NormalForm:
    n: int
    t: int
    layers: Tuple[Layer, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", int(self.t) % 6)
        object.__setattr__(self, "layers", tuple(self.layers))
        if [layer.j for layer in self.layers] != list(range(self.n, 0, -1)):
            raise ValueError("a normal form on %d wires has layers j = %d..1" % (self.n, self.n))

    def boxes(self) -> Iterator[NormalBox]:
        for layer in self.layers:
            yield from layer.boxes

    def box_count(self) -> int:
        return sum(len(layer.boxes) for layer in self.layers)

    def __str__(self) -> str:
        body = " ".join(str(b) for b in self.boxes())
        return "(-ω)^%d %s" % (self.t, body) if self.t else body


def normal_form_circuit(nf: NormalForm, primitive: bool = False) -> Circuit:
    """
    The circuit of a normal form: t copies of W, then the box words.

    :param nf: the normal form
    :param primitive: expand derived gates into {W, H, S, CZ}
    """
    gates = [Gate('W')] * nf.t
    for box in nf.boxes():
        gates.extend(box.gates())
    c = Circuit(nf.n, tuple(gates))
    return c.expand() if primitive else c


def _layer(p: Pauli, q: Pauli) -> Layer:
    z = synth_z_layer(p)
    x = synth_x_layer(conjugate_word(layer_gates(z), q))
    return Layer(p.n, tuple(z), tuple(x))


def synthesize(tableau: Tableau, with_phase: bool = False, reference: Optional[CycloMatrix] = None,
               max_matrix_n: int = DEFAULT_MAX_MATRIX_N) -> NormalForm:
    """
    Normal form of the Clifford with the given tableau.

    The tableau fixes the operator up to a global phase only; with
    ``with_phase`` the exponent t is chosen so that the normal form circuit
    equals ``reference`` exactly.

    :param tableau: a valid tableau
    :param with_phase: match the phase of ``reference``
    :param reference: the exact matrix, required with ``with_phase``
    :param max_matrix_n: the largest register for which matrices are built
    :return: the normal form, with t = 0 when ``with_phase`` is False
    :raise ValueError: invalid tableau, missing reference, register too large,
        or a reference that does not match the tableau
    """
    if not tableau.is_valid():
        raise ValueError("not a Clifford tableau")
    if with_phase:
        if reference is None:
            raise ValueError("synthesis with phase needs a reference matrix")
        if tableau.n > max_matrix_n:
            raise ValueError("phase matching needs a 3^%d matrix, above the limit of %d wires"
                             % (tableau.n, max_matrix_n))

    layers: List[Layer] = []
    current = tableau
    for j in range(tableau.n, 0, -1):
        inverse = tableau_invert(current)
        layer = _layer(inverse.apply(Pauli.z(j, j - 1)), inverse.apply(Pauli.x(j, j - 1)))
        layers.append(layer)
        undo = tableau_invert(tableau_of(Circuit(j, tuple(layer_gates(list(layer.boxes))))))
        current = tableau_restrict(tableau_compose(undo, current), j - 1)
        log.debug("layer %d: %s", j, " ".join(str(b) for b in layer.boxes))

    nf = NormalForm(tableau.n, 0, tuple(layers))
    if not with_phase:
        return nf

    t = equal_up_to_phase(reference, interpret(normal_form_circuit(nf)))
    if t is None:
        raise ValueError("the reference matrix does not implement the tableau")
    return NormalForm(nf.n, t, nf.layers)


def synthesize_circuit(c: Circuit, with_phase: bool = True,
                       max_matrix_n: int = DEFAULT_MAX_MATRIX_N) -> NormalForm:
    """ normal form of a circuit, by way of its tableau and matrix """
    reference = interpret(c) if with_phase else None
    return synthesize(tableau_of(c), with_phase, reference, max_matrix_n)


def identity_normal_form(n: int) -> NormalForm:
    """
    Normal form of the identity, phase included. Its circuit is a multiple of
    the identity, so t is read off the image of |0..0>, a 3^n vector.
    """
    nf = synthesize(Tableau.identity(n))
    zero = CycloMatrix.basis(3 ** n)
    t = equal_up_to_phase(zero, interpret_on(normal_form_circuit(nf), zero))
    if t is None:
        raise RuntimeError("the identity normal form on %d wires is not a multiple of the identity" % n)
    return NormalForm(n, t, nf.layers)


############################################################################
#                               Serialization                              #
############################################################################

def _box_entry(box: NormalBox) -> Dict:
    return {"box": box.name, "wires": list(box.wires)}


def _box_from_entry(entry: Dict) -> NormalBox:
    name = str(entry["box"])
    digits = [int(ch) for ch in name[1:]]
    return make_box(name[0], digits, entry["wires"])


def normal_form_to_dict(nf: NormalForm) -> Dict:
    return {"n": nf.n, "t": nf.t,
            "layers": [{"j": layer.j, "z": [_box_entry(b) for b in layer.z], "x": [_box_entry(b) for b in layer.x]}
                       for layer in nf.layers]}


def normal_form_from_dict(data: Dict) -> NormalForm:
    try:
        layers = tuple(Layer(int(entry["j"]), tuple(_box_from_entry(b) for b in entry["z"]),
                             tuple(_box_from_entry(b) for b in entry["x"]))
                       for entry in data["layers"])
        return NormalForm(int(data["n"]), int(data["t"]), layers)
    except (KeyError, TypeError, IndexError) as e:
        raise ValueError("malformed normal form document: %s" % e) from e


def dump_normal_form(nf: NormalForm) -> str:
    return StringDumpYaml().dump(normal_form_to_dict(nf))


def load_normal_form(text: str) -> NormalForm:
    return normal_form_from_dict(StringDumpYaml().load(text))
