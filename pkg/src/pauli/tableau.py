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
Stabilizer tableaus of qutrit Clifford circuits.

The conjugation action of every gate kind on its local Pauli generators is
read off the exact gate matrices once, and then applied symbolically, so a
gate costs O(n) Pauli operations per generator.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import galois
import numpy as np

from ..circuit import Circuit, Gate, GATE_ARITY, gate_matrix, random_word
from ..tools import StringDumpYaml
from .pauli import Pauli, pauli_from_matrix, pauli_matrix

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

GF3 = galois.GF(3)

LocalImages = Tuple[Tuple[Pauli, ...], Tuple[Pauli, ...]]


@lru_cache(maxsize=None)
def _local_images(kind: str, inverse: bool) -> LocalImages:
    """
    Images ``U P U†`` (or ``U† P U`` when ``inverse``) of the local generators
    Z_j and X_j of a gate kind, computed from its exact matrix.
    """
    m = GATE_ARITY[kind]
    u = gate_matrix(Gate(kind, tuple(range(m))))
    if inverse:
        u = u.dagger()

    def image(p: Pauli) -> Pauli:
        q = pauli_from_matrix(u @ pauli_matrix(p) @ u.dagger(), m)
        if q is None:
            raise ValueError("gate %s does not map %s to a Pauli" % (kind, p))
        return q

    zimg = tuple(image(Pauli.z(m, j)) for j in range(m))
    ximg = tuple(image(Pauli.x(m, j)) for j in range(m))
    log.debug("derived %s action of %s from its matrix" % ("inverse" if inverse else "forward", kind))
    return zimg, ximg


def _apply_images(zimg: Sequence[Pauli], ximg: Sequence[Pauli], p: Pauli) -> Pauli:
    """
    action of an automorphism given by generator images on ``p``, written as
    ``ω^c Π_j X_j^{a_j} Z_j^{b_j}``
    """
    result = Pauli.identity(zimg[0].n if zimg else 0).times_omega(p.c)
    for j in range(p.n):
        result = result * (ximg[j] ** p.a[j]) * (zimg[j] ** p.b[j])
    return result


def _act(g: Gate, p: Pauli, inverse: bool) -> Pauli:
    if g.is_scalar:
        return p
    zimg, ximg = _local_images(g.kind, inverse)
    return p.replace(g.wires, _apply_images(zimg, ximg, p.restrict(g.wires)))


def conjugate_gate(g: Gate, p: Pauli) -> Pauli:
    """
    forward action ``g • p = g p g†``

    :param g: any gate, remote gates included
    :param p: a Pauli on at least max(g.wires)+1 wires
    """
    return _act(g, p, inverse=False)


def preimage_gate(g: Gate, p: Pauli) -> Pauli:
    """ inverse action ``g† p g`` """
    return _act(g, p, inverse=True)


def conjugate_word(gates: Sequence[Gate], p: Pauli) -> Pauli:
    """ forward action of a diagrammatic word, first gate first """
    for g in gates:
        p = _act(g, p, inverse=False)
    return p


############################################################################
#                               Tableau                                    #
############################################################################

@dataclass(frozen=True)
class Tableau:
    """
    Images of the generators under conjugation by a Clifford: ``zimg[j] = C•Z_j``
    and ``ximg[j] = C•X_j``.
    """

    n: int
    zimg: Tuple[Pauli, ...]
    ximg: Tuple[Pauli, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "zimg", tuple(self.zimg))
        object.__setattr__(self, "ximg", tuple(self.ximg))
        if len(self.zimg) != self.n or len(self.ximg) != self.n:
            raise ValueError("a tableau on %d wires needs %d images of each kind" % (self.n, self.n))
        if any(p.n != self.n for p in self.zimg + self.ximg):
            raise ValueError("tableau images must act on %d wires" % self.n)

    @classmethod
    def identity(cls, n: int) -> Tableau:
        return cls(n, tuple(Pauli.z(n, j) for j in range(n)), tuple(Pauli.x(n, j) for j in range(n)))

    @classmethod
    def from_symplectic(cls, matrix, phases: Sequence[int]) -> Tableau:
        """
        Inverse of :meth:`symplectic_matrix`.

        :param matrix: 2n x 2n exponent matrix, columns for X_0 .. X_{n-1}, Z_0 .. Z_{n-1}
        :param phases: the 2n ω exponents of the images, in the same order
        :raise ValueError: on a shape mismatch
        """
        m = np.asarray(matrix, dtype=int) % 3
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
            raise ValueError("expected a 2n x 2n matrix, got shape %s" % (m.shape,))
        n = m.shape[0] // 2
        if len(phases) != 2 * n:
            raise ValueError("expected %d phases, got %d" % (2 * n, len(phases)))
        images = [Pauli(int(phases[k]), tuple(int(v) for v in m[:n, k]), tuple(int(v) for v in m[n:, k]))
                  for k in range(2 * n)]
        return cls(n, tuple(images[n:]), tuple(images[:n]))

    def apply(self, p: Pauli) -> Pauli:
        """ forward action on any Pauli """
        if p.n != self.n:
            raise ValueError("Pauli on %d wires, tableau on %d" % (p.n, self.n))
        if self.n == 0:
            return p
        return _apply_images(self.zimg, self.ximg, p)

    def then(self, g: Gate) -> Tableau:
        """ tableau of the circuit extended by ``g`` """
        return Tableau(self.n,
                       tuple(conjugate_gate(g, p) for p in self.zimg),
                       tuple(conjugate_gate(g, p) for p in self.ximg))

    ############################################################################
    #                               Symplectic form                            #
    ############################################################################

    def symplectic_matrix(self) -> galois.FieldArray:
        """
        2n x 2n matrix over GF(3) whose columns are the exponent vectors (a, b)
        of the images of X_0 .. X_{n-1}, Z_0 .. Z_{n-1}
        """
        cols = [p.vector() for p in self.ximg + self.zimg]
        return GF3(np.array(cols, dtype=int).T)

    def is_valid(self) -> bool:
        """
        the images ω-commute like the generators (Z_j X_j = ω X_j Z_j, every
        other pair commutes), which also makes the exponent matrix invertible
        """
        if self.n == 0:
            return True
        m = self.symplectic_matrix()
        return bool(np.array_equal(m.T @ _omega_form(self.n) @ m, _omega_form(self.n)))

    def __str__(self) -> str:
        lines = ["Z%d -> %s" % (j, p) for j, p in enumerate(self.zimg)]
        lines += ["X%d -> %s" % (j, p) for j, p in enumerate(self.ximg)]
        return "\n".join(lines)


def _omega_form(n: int) -> galois.FieldArray:
    """ Ω with ``v_P^T Ω v_Q = λ`` where P Q = ω^λ Q P """
    form = np.zeros((2 * n, 2 * n), dtype=int)
    form[:n, n:] = -np.eye(n, dtype=int) % 3
    form[n:, :n] = np.eye(n, dtype=int)
    return GF3(form)


def tableau_of(c: Circuit) -> Tableau:
    """ stabilizer tableau of a circuit """
    t = Tableau.identity(c.n)
    for g in c.gates:
        t = t.then(g)
    return t


def tableau_compose(t1: Tableau, t2: Tableau) -> Tableau:
    """
    tableau of ``t1`` followed by ``t2``, the analogue of concatenating the
    circuit of t1 with the circuit of t2
    """
    if t1.n != t2.n:
        raise ValueError("cannot compose tableaus on %d and %d wires" % (t1.n, t2.n))
    return Tableau(t1.n, tuple(t2.apply(p) for p in t1.zimg), tuple(t2.apply(p) for p in t1.ximg))


def tableau_invert(t: Tableau) -> Tableau:
    """
    inverse automorphism

    :raise ValueError: when ``t`` is not a valid tableau
    """
    if not t.is_valid():
        raise ValueError("cannot invert an invalid tableau")
    n = t.n
    if n == 0:
        return t

    inv = np.linalg.inv(t.symplectic_matrix())

    def preimage(target: Pauli) -> Pauli:
        y = inv @ GF3(np.array(target.vector(), dtype=int))
        y = [int(v) for v in y]
        q = Pauli(0, tuple(y[:n]), tuple(y[n:]))
        image = t.apply(q)
        if image.a != target.a or image.b != target.b:
            raise ValueError("inconsistent tableau inversion")
        return q.times_omega(target.c - image.c)

    return Tableau(n, tuple(preimage(Pauli.z(n, j)) for j in range(n)),
                   tuple(preimage(Pauli.x(n, j)) for j in range(n)))


def tableau_restrict(t: Tableau, n: int) -> Tableau:
    """
    The tableau on the first ``n`` wires of a Clifford of the form ``C ⊗ I``.

    :raise ValueError: when ``t`` touches a wire at or beyond ``n``
    """
    for j in range(n, t.n):
        if t.zimg[j] != Pauli.z(t.n, j) or t.ximg[j] != Pauli.x(t.n, j):
            raise ValueError("wire %d is not fixed by the tableau" % j)
    keep = tuple(range(n))

    def cut(p: Pauli) -> Pauli:
        if any(p.a[j] or p.b[j] for j in range(n, t.n)):
            raise ValueError("image %s leaves the first %d wires" % (p, n))
        return p.restrict(keep).times_omega(p.c)

    return Tableau(n, tuple(cut(p) for p in t.zimg[:n]), tuple(cut(p) for p in t.ximg[:n]))


def tableau_embed(t: Tableau, wires: Sequence[int], n: int) -> Tableau:
    """ ``t`` acting on ``wires`` of an ``n``-wire register, identity elsewhere """
    zimg = [Pauli.z(n, j) for j in range(n)]
    ximg = [Pauli.x(n, j) for j in range(n)]
    base = Pauli.identity(n)
    for i, w in enumerate(wires):
        zimg[w] = base.replace(wires, t.zimg[i])
        ximg[w] = base.replace(wires, t.ximg[i])
    return Tableau(n, tuple(zimg), tuple(ximg))


def random_tableau(n: int, seed: Optional[int] = None) -> Tableau:
    """
    tableau of a random primitive circuit of length 10·n² + 10 (not uniform;
    use the normal form sampler for uniform Cliffords)
    """
    return tableau_of(random_word(n, 10 * n * n + 10, seed))


############################################################################
#                               Serialization                              #
############################################################################

def _pauli_row(p: Pauli) -> List:
    return [p.c, list(p.a), list(p.b)]


def tableau_to_dict(t: Tableau) -> Dict:
    return {"n": t.n, "z": [_pauli_row(p) for p in t.zimg], "x": [_pauli_row(p) for p in t.ximg]}


def tableau_from_dict(data: Dict) -> Tableau:
    def pauli(row) -> Pauli:
        c, a, b = row
        return Pauli(int(c), tuple(int(v) for v in a), tuple(int(v) for v in b))

    try:
        n = int(data["n"])
        return Tableau(n, tuple(pauli(r) for r in data["z"]), tuple(pauli(r) for r in data["x"]))
    except (KeyError, TypeError) as e:
        raise ValueError("malformed tableau document: %s" % e) from e


def dump_tableau(t: Tableau) -> str:
    return StringDumpYaml().dump(tableau_to_dict(t))


def load_tableau(text: str) -> Tableau:
    return tableau_from_dict(StringDumpYaml().load(text))
