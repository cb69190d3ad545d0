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
Mechanical derivation of box relations.

A relation pushes a dirty gate g through a context M of one or two clean
boxes: ``g ; M = (-ω)^t · M' ; dir``. The updated boxes M' are the only
candidates of the context's shape for which the leftover ``dir`` keeps the
Pauli carried by M on its output wire (Z for the ladder and C boxes, X and Z
for D, E and F). ``dir`` is then split into gates that may wait at the output
positions, and t is read off the exact matrices of both sides.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from ..circuit import Circuit, Gate, interpret
from ..exactnum import CycloNumber, equal_up_to_phase, unit_phase
from ..normalform import NormalBox, all_boxes, layer_gates, synth_z_layer
from ..pauli import (Pauli, Tableau, preimage_gate, tableau_compose, tableau_invert,
                     tableau_of)
from .placement import D_TOP, END, F_INPUT, INPUT, LADDER, placement_violation
from .words import clifford_word

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

Constraint = Literal['ladder', 'diagonal', 'separable', 'z-only', 'none']

# ranges of the X, Z and S exponents a leftover gate on the output wire may take
_RESIDUAL_RANGES: Dict[str, Tuple[int, int, int]] = {
    'ladder': (3, 3, 3),
    'diagonal': (1, 3, 3),
    'separable': (1, 3, 3),
    'z-only': (1, 3, 1),
    'none': (1, 1, 1),
}

_OUTPUT_LABEL: Dict[str, int] = {
    'ladder': LADDER,
    'diagonal': D_TOP,
    'separable': D_TOP,
    'z-only': F_INPUT,
    'none': END,
}


class DerivationError(RuntimeError):
    """ no box relation of the expected shape exists for a gate and context """


@dataclass(frozen=True)
class RewriteRule:
    """
    ``dirty ; context = (-ω)^t · updated ; residual`` on ``n`` local wires.
    """

    family: str
    bindings: Tuple[Tuple[str, int], ...]
    n: int
    dirty: Tuple[Gate, ...]
    context: Tuple[NormalBox, ...]
    updated: Tuple[NormalBox, ...]
    residual: Tuple[Gate, ...]
    t: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", int(self.t) % 6)

    @property
    def binding_map(self) -> Dict[str, int]:
        return dict(self.bindings)

    def lhs_circuit(self) -> Circuit:
        return Circuit(self.n, self.dirty + tuple(layer_gates(list(self.context))))

    def rhs_circuit(self) -> Circuit:
        """ right-hand side without its phase """
        return Circuit(self.n, tuple(layer_gates(list(self.updated))) + self.residual)

    def __str__(self) -> str:
        lhs = " ".join([str(g) for g in self.dirty] + [str(b) for b in self.context])
        rhs = " ".join([str(b) for b in self.updated] + [str(g) for g in self.residual]) or "1"
        return "%s: %s = (-ω)^%d %s" % (self.family, lhs, self.t, rhs)


############################################################################
#                               Context shape                              #
############################################################################

def family_tag(dirty: Sequence[Gate], context: Sequence[NormalBox]) -> str:
    kinds = "".join(b.kind for b in context)
    if not context:
        return "phase." + dirty[0].kind.lower()
    g = dirty[0]
    if g.kind != 'CZ' and len(context) == 1 and len(context[0].wires) == 2:
        return "%s%d.%s" % (g.kind, g.wires[0] - context[0].top, kinds)
    return "%s.%s" % (g.kind, kinds)


def bindings_of(context: Sequence[NormalBox]) -> Tuple[Tuple[str, int], ...]:
    letters = iter("abcd")
    result = []
    for box in context:
        if len(box.index) == 2:
            result.extend(zip((next(letters), next(letters)), box.index))
        else:
            result.append(('b' if box.kind == 'E' else 'c', box.index[0]))
    return tuple(result)


def _constraint(context: Sequence[NormalBox]) -> Tuple[Constraint, int]:
    """ constraint on the leftover gates and the constrained output wire """
    first = context[0].kind
    if first in 'AB':
        return 'ladder', min(b.top for b in context)
    if first == 'C':
        return 'diagonal', context[0].top
    if first == 'D':
        return 'separable', max(b.bottom for b in context)
    return ('z-only' if first == 'E' else 'none'), context[0].top


def candidates(g: Gate, context: Sequence[NormalBox]) -> List[Tuple[NormalBox, ...]]:
    """
    Updated contexts to try. A lone A box under a CZ on its wire and the next
    one may grow a B box; an A box followed by a B box may collapse to one A.
    """
    kinds = "".join(b.kind for b in context)
    if kinds == 'A' and g.kind == 'CZ' and g.wires[0] == context[0].top:
        m = context[0].top
        return ([(a,) for a in all_boxes('A', m)]
                + [(a, b) for a in all_boxes('A', m + 1) for b in all_boxes('B', m)])
    if kinds == 'AB':
        m = context[0].top
        return ([(a, b) for a in all_boxes('A', m) for b in all_boxes('B', m - 1)]
                + [(a,) for a in all_boxes('A', m - 1)])
    return list(product(*[list(all_boxes(b.kind, b.top)) for b in context]))


def _preimage_word(gates: Sequence[Gate], p: Pauli) -> Pauli:
    for g in reversed(gates):
        p = preimage_gate(g, p)
    return p


def _keeps_output(constraint: Constraint, c: int, zc: Pauli, xc: Pauli) -> bool:
    n = zc.n
    if any(zc.a) or zc.b != Pauli.z(n, c).b:
        return False
    if constraint == 'ladder':
        return True
    if zc.c != 0:
        return False
    if constraint == 'diagonal':
        return True
    if set(xc.support()) - {c}:
        return False
    if constraint == 'separable':
        return True
    if constraint == 'z-only':
        return xc.b[c] == 0
    return xc == Pauli.x(n, c)


############################################################################
#                               Leftover gates                             #
############################################################################

@lru_cache(maxsize=None)
def _output_words(constraint: Constraint) -> Dict[Tableau, Tuple[Gate, ...]]:
    """ X^δ Z^β S^γ words allowed on the constrained wire, by tableau """
    xs, zs, ss = _RESIDUAL_RANGES[constraint]
    table: Dict[Tableau, Tuple[Gate, ...]] = {}
    for d, b, s in product(range(xs), range(zs), range(ss)):
        word = (Gate('X', (0,)),) * d + (Gate('Z', (0,)),) * b + (Gate('S', (0,)),) * s
        table.setdefault(tableau_of(Circuit(1, word)), word)
    return table


def _local(p: Pauli, wires: Sequence[int]) -> Pauli:
    return p.restrict(wires).times_omega(p.c)


def split_residual(leftover: Tableau, c: int, constraint: Constraint) -> List[Gate]:
    """
    Write ``leftover`` as ``V(c) ; U1(free) ; CZ(c, c+1) ; U2(free)`` where the
    free wires are all wires but c, V is an allowed word on c, and the CZ and
    U2 appear only when the image of X_c reaches the free wires.

    :raise DerivationError: when the tableau has no decomposition of this shape
    """
    n = leftover.n
    free = [w for w in range(n) if w != c]
    rest = leftover
    entangling: List[Gate] = []

    reach = leftover.ximg[c].restrict(free)
    if not reach.is_scalar():
        if constraint not in ('ladder', 'diagonal') or free != list(range(c + 1, n)):
            raise DerivationError("output wire %d stays entangled with %s" % (c, free))
        layer = synth_z_layer(reach)
        gates = layer_gates(layer)
        shifted = tableau_of(Circuit(n, tuple(g.shifted(c + 1) for g in gates)))
        cz_inverse = tableau_of(Circuit(n, (Gate('CZ', (c, c + 1)),) * 2))
        rest = tableau_compose(tableau_compose(leftover, shifted), cz_inverse)
        undo = tableau_invert(tableau_of(Circuit(len(free), tuple(gates))))
        entangling = [Gate('CZ', (c, c + 1))] + clifford_word(undo, c + 1)

    for w in range(n):
        group = {c} if w == c else set(free)
        for p in (rest.zimg[w], rest.ximg[w]):
            if not set(p.support()) <= group:
                raise DerivationError("leftover does not separate wire %d from %s" % (c, free))

    single = Tableau(1, (_local(rest.zimg[c], (c,)),), (_local(rest.ximg[c], (c,)),))
    v = _output_words(constraint).get(single)
    if v is None:
        raise DerivationError("no %s word acts as\n%s" % (constraint, single))

    u1: List[Gate] = []
    if free:
        local = Tableau(len(free), tuple(_local(rest.zimg[w], free) for w in free),
                        tuple(_local(rest.ximg[w], free) for w in free))
        u1 = clifford_word(local, free[0])
    return [g.shifted(c) for g in v] + u1 + entangling


############################################################################
#                               Derivation                                 #
############################################################################

def rule_phase(n: int, lhs: Sequence[Gate], rhs: Sequence[Gate]) -> Optional[int]:
    """ t with lhs = (-ω)^t rhs, or None """
    return equal_up_to_phase(interpret(Circuit(n, tuple(lhs))), interpret(Circuit(n, tuple(rhs))))


def derive_rule(g: Gate, context: Sequence[NormalBox], family: Optional[str] = None) -> RewriteRule:
    """
    Derive the box relation pushing ``g`` through ``context``.

    :param g: a primitive non-scalar gate
    :param context: one or two boxes in word order, on wires starting at 0
    :param family: tag to record, inferred from the shapes when omitted
    :return: the verified-by-construction rule
    :raise DerivationError: when no updated context or leftover word fits
    """
    context = tuple(context)
    if not context:
        raise ValueError("a box relation needs at least one box")
    n = 1 + max(max(g.wires), max(b.bottom for b in context))
    constraint, c = _constraint(context)

    lhs = (g,) + tuple(layer_gates(list(context)))
    total = tableau_of(Circuit(n, lhs))
    zc, xc = Pauli.z(n, c), Pauli.x(n, c)

    chosen = None
    for option in candidates(g, context):
        gates = layer_gates(list(option))
        z_image = total.apply(_preimage_word(gates, zc))
        x_image = xc if constraint in ('ladder', 'diagonal') else total.apply(_preimage_word(gates, xc))
        if _keeps_output(constraint, c, z_image, x_image):
            chosen = option
            break
    if chosen is None:
        raise DerivationError("no updated context for %s before %s" % (g, " ".join(map(str, context))))

    updated_gates = tuple(layer_gates(list(chosen)))
    leftover = tableau_compose(tableau_invert(tableau_of(Circuit(n, updated_gates))), total)
    residual = split_residual(leftover, c, constraint)

    labels = {w: INPUT for w in range(n)}
    labels[c] = _OUTPUT_LABEL[constraint]
    offending = placement_violation(residual, labels)
    if offending is not None:
        raise DerivationError("leftover gate %s may not wait after %s" % (offending, " ".join(map(str, chosen))))

    t = rule_phase(n, lhs, updated_gates + tuple(residual))
    if t is None:
        raise DerivationError("sides of %s ; %s differ beyond a phase" % (g, " ".join(map(str, context))))

    rule = RewriteRule(family or family_tag((g,), context), bindings_of(context), n, (g,), context,
                       tuple(chosen), tuple(residual), t)
    log.debug("derived %s" % rule)
    return rule


def phase_rules() -> List[RewriteRule]:
    """ the two zero-qutrit relations (-1)² = 1 and ω³ = 1 """
    return [RewriteRule("phase.minus", (), 0, (Gate('MINUS'),) * 2, (), (), (), 0),
            RewriteRule("phase.omega", (), 0, (Gate('OMEGA'),) * 3, (), (), (), 0)]


############################################################################
#                               Verification                               #
############################################################################

@dataclass(frozen=True)
class Witness:
    """ first entry where the two sides of a relation differ """

    row: int
    col: int
    lhs: CycloNumber
    rhs: CycloNumber

    def __str__(self) -> str:
        return "entry (%d, %d): %s != %s" % (self.row, self.col, self.lhs, self.rhs)


def verify_rule(rule: RewriteRule) -> Tuple[bool, Optional[Witness]]:
    """
    Exact matrix check of ``lhs = (-ω)^t rhs``.

    :return: (True, None), or (False, witness)
    """
    lhs = interpret(rule.lhs_circuit())
    rhs = interpret(rule.rhs_circuit()).scale(unit_phase(rule.t))
    if lhs == rhs:
        return True, None
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            if lhs[i, j] != rhs[i, j]:
                return False, Witness(i, j, lhs[i, j], rhs[i, j])
    return False, None
