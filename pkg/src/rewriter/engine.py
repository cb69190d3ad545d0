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
Normalization of Clifford circuits by rewriting.

Gates are pushed, last one first, into a normal form of the identity. Each
step pushes the leftmost dirty gate that waits directly before clean boxes
through them with a box relation, which strictly decreases the measure of the
dirty normal form.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Final, List, Literal, Optional, Tuple

from ..circuit import Circuit, Gate, random_word
from ..normalform import NormalForm, max_box_count
from ..normalform import identity_normal_form as clean_identity
from ..relations import DerivationError, RelationDB, RewriteRule, check_dirty_shape
from .dirty_form import CleanBox, DirtyNormalForm, Measure

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

SCALAR_PHASE: Final = {'W': 1, 'MINUS': 3, 'OMEGA': 4}

# box pairs forming one context when the first feeds the second
JOINT_CONTEXTS: Final = frozenset({('A', 'B'), ('B', 'B'), ('D', 'D')})


class ClosureError(RuntimeError):
    """ dirty gates remain but no box relation applies """


class TerminationError(RuntimeError):
    """ a step did not decrease the measure, or a run exceeded its budget """


class PlacementError(RuntimeError):
    """ a dirty gate was put where it may not wait """


@dataclass(frozen=True)
class TraceEntry:
    index: int
    family: str
    bindings: Dict[str, int]
    offset: int
    before: Measure
    after: Measure
    t: int

    def __str__(self) -> str:
        binds = ",".join("%s=%d" % kv for kv in sorted(self.bindings.items()))
        return "%4d %-7s %-12s @%d  %s -> %s  t+=%d" % (self.index, self.family, binds, self.offset,
                                                       self.before, self.after, self.t)


@dataclass
class RewriteTrace:
    entries: List[TraceEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def lines(self) -> List[str]:
        return [str(e) for e in self.entries]


_default_db: Optional[RelationDB] = None


def default_db() -> RelationDB:
    """ shared database, filled on demand """
    global _default_db
    if _default_db is None:
        _default_db = RelationDB()
    return _default_db


############################################################################
#                               Construction                               #
############################################################################

_identity_cache: Dict[int, NormalForm] = {}


def identity_normal_form(n: int) -> DirtyNormalForm:
    """ clean dirty normal form of the identity, its phase matched exactly """
    if n < 0:
        raise ValueError("the number of wires must be non-negative, got %d" % n)
    if n not in _identity_cache:
        _identity_cache[n] = clean_identity(n)
    return DirtyNormalForm.from_normal_form(_identity_cache[n])


def inject(g: Gate, d: DirtyNormalForm) -> DirtyNormalForm:
    """
    Put ``g`` in front of ``d``; scalars fold into the phase.

    :raise ValueError: for derived gates, or gates outside the register
    :raise PlacementError: when ``g`` may not wait before the first boxes
    """
    result = d.copy()
    if g.is_scalar:
        if g.kind not in SCALAR_PHASE:
            raise ValueError("unknown scalar %s" % g)
        result.t = (result.t + SCALAR_PHASE[g.kind]) % 6
        return result
    if not g.is_primitive:
        raise ValueError("only primitive gates are injected, expand %s first" % g)
    if any(w >= d.n for w in g.wires):
        raise ValueError("gate %s is out of range for %d wire(s)" % (g, d.n))

    result.items.insert(0, g)
    if not check_dirty_shape([g], {w: result.label_at(0, w) for w in g.wires}):
        raise PlacementError("%s may not wait at the entry of the normal form" % g)
    return result


############################################################################
#                               Rewriting                                  #
############################################################################

def _context_at(d: DirtyNormalForm, position: int) -> Optional[List[Tuple[int, CleanBox]]]:
    """ indices and boxes a dirty gate is pushed through, or None when it must wait """
    g = d.items[position]
    nexts = []
    for w in g.wires:
        index, item = d.next_item(position, w)
        if item is None or isinstance(item, Gate):
            return None
        nexts.append((index, item))

    if len(nexts) == 1 or nexts[0][0] == nexts[1][0]:
        return [nexts[0]]
    single = [nexts[0]] if nexts[0][0] < nexts[1][0] else None

    (ik, bk), (ik1, bk1) = nexts
    top, bottom = g.wires
    if top in bk1.wires:
        first, second, shared = (ik, bk), (ik1, bk1), top
    elif bottom in bk.wires:
        first, second, shared = (ik1, bk1), (ik, bk), bottom
    else:
        return single

    if (first[1].box.kind, second[1].box.kind) not in JOINT_CONTEXTS:
        return single
    if d.next_item(first[0], shared)[0] != second[0]:
        return None
    return [first, second]


def _apply(d: DirtyNormalForm, position: int, context: List[Tuple[int, CleanBox]], rule: RewriteRule,
           offset: int) -> DirtyNormalForm:
    layer = context[0][1].layer
    updated = [CleanBox(b.moved(tuple(w + offset for w in b.wires)), layer) for b in rule.updated]
    residual = [g.shifted(offset) for g in rule.residual]

    drop = {position} | {i for i, _ in context}
    anchor = min(i for i, _ in context)
    items: list = []
    start = 0
    for i, item in enumerate(d.items):
        if i == anchor:
            start = len(items)
            items.extend(updated)
            items.extend(residual)
        if i not in drop:
            items.append(item)
    result = DirtyNormalForm(d.n, items, d.t + rule.t)

    for i in range(start, start + len(updated) + len(residual)):
        item = items[i]
        if isinstance(item, Gate) and not check_dirty_shape([item], {w: result.label_at(i, w) for w in item.wires}):
            raise PlacementError("rule %s leaves %s at a forbidden position" % (rule, item))
    return result.merged()


def step(d: DirtyNormalForm, db: Optional[RelationDB] = None,
         trace: Optional[RewriteTrace] = None) -> Optional[DirtyNormalForm]:
    """
    Apply one box relation at the leftmost dirty gate that waits directly
    before clean boxes.

    :param d: the current state, left unchanged
    :param db: relations to use, the shared database by default
    :param trace: collects one entry per step
    :return: the new state, or None when ``d`` is clean
    :raise ClosureError: dirty gates remain but none can be pushed
    :raise TerminationError: the measure did not decrease, or the boxes
        outgrew n² + 3n
    """
    if d.is_clean():
        return None
    db = db or default_db()

    for position, item in enumerate(d.items):
        if not isinstance(item, Gate):
            continue
        context = _context_at(d, position)
        if context is None:
            continue
        try:
            rule, offset = db.lookup(item, [cb.box for _, cb in context])
        except (DerivationError, KeyError) as e:
            raise ClosureError("no relation for %s before %s: %s"
                               % (item, " ".join(str(cb) for _, cb in context), e)) from e

        result = _apply(d, position, context, rule, offset)
        before, after = d.measure(), result.measure()
        if not after < before:
            raise TerminationError("measure %s does not decrease to %s under %s" % (before, after, rule))
        if len(after.s) > max_box_count(d.n):
            raise TerminationError("%d clean boxes exceed the bound %d" % (len(after.s), max_box_count(d.n)))
        if trace is not None:
            trace.entries.append(TraceEntry(len(trace.entries), rule.family, rule.binding_map, offset, before, after,
                                            rule.t))
        log.debug("%s at wire %d" % (rule, offset))
        return result

    raise ClosureError("no dirty gate of %s waits directly before clean boxes" % d)


def run(d: DirtyNormalForm, db: Optional[RelationDB] = None, trace: Optional[RewriteTrace] = None,
        budget: Optional[int] = None) -> Tuple[DirtyNormalForm, int]:
    """ apply steps until the state is clean, return it with the step count """
    steps = 0
    while True:
        nxt = step(d, db, trace)
        if nxt is None:
            return d, steps
        d = nxt
        steps += 1
        if budget is not None and steps > budget:
            raise TerminationError("no normal form after %d steps" % budget)


def normal_form_of(c: Circuit, db: Optional[RelationDB] = None, trace: Optional[RewriteTrace] = None,
                   budget: Optional[int] = None) -> Tuple[NormalForm, int]:
    """
    Normal form of a circuit, by pushing its gates into the identity normal
    form from the last gate to the first.

    Every step is checked to decrease the measure, a tuple of at most n² + 3n
    counts, so the run always ends.

    :param c: any circuit, derived gates are expanded first
    :param db: relations to use
    :param trace: collects the steps
    :param budget: largest number of steps allowed, unbounded by default
    :return: the normal form, global phase included, and the number of steps
    :raise TerminationError: when ``budget`` is exceeded
    """
    gates = c.expand().gates
    d = identity_normal_form(c.n)
    total = 0
    for g in reversed(gates):
        d = inject(g, d)
        d, steps = run(d, db, trace, None if budget is None else budget - total)
        total += steps
    log.info("normalized %d gate(s) on %d wire(s) in %d step(s)" % (len(gates), c.n, total))
    return d.to_normal_form(), total


def normalize(c: Circuit, db: Optional[RelationDB] = None, trace: Optional[RewriteTrace] = None,
              budget: Optional[int] = None) -> NormalForm:
    """ normal form of a circuit, see :func:`normal_form_of` """
    return normal_form_of(c, db, trace, budget)[0]


def check_closure(db: RelationDB, max_n: int = 3, samples: int = 10, length: int = 20,
                  seed: int = 0) -> List[str]:
    """
    Normalize random circuits with the stored relations only.

    :param db: the relations, left with its derivation setting unchanged
    :param max_n: circuits on 1 .. max_n wires
    :param samples: circuits per number of wires
    :param length: gates per circuit
    :param seed: seed of the first circuit
    :return: one message per circuit that needed a missing relation
    """
    derive_missing, db.derive_missing = db.derive_missing, False
    missing = []
    try:
        for n in range(1, max_n + 1):
            for i in range(samples):
                c = random_word(n, length, seed + i)
                try:
                    normal_form_of(c, db)
                except ClosureError as e:
                    missing.append("%s: %s" % (c, e))
    finally:
        db.derive_missing = derive_missing
    log.info("closure: %d of %d circuit(s) needed a missing relation" % (len(missing), max_n * samples))
    return missing


Verdict = Literal['equal', 'phase', 'different']


@dataclass(frozen=True)
class Equivalence:
    verdict: Verdict
    delta_t: Optional[int]
    first: NormalForm
    second: NormalForm

    @property
    def equal(self) -> bool:
        return self.verdict == 'equal'


def equivalent(c1: Circuit, c2: Circuit, db: Optional[RelationDB] = None) -> Equivalence:
    """
    Compare two circuits through their normal forms.

    :return: 'equal' when boxes and phase agree, 'phase' with the exponent
        ``t1 - t2`` when only the boxes agree, 'different' otherwise
    :raise ValueError: when the circuits act on different numbers of wires
    """
    if c1.n != c2.n:
        raise ValueError("circuits on %d and %d wires" % (c1.n, c2.n))
    nf1, nf2 = normalize(c1, db), normalize(c2, db)
    if nf1.layers != nf2.layers:
        return Equivalence('different', None, nf1, nf2)
    delta = (nf1.t - nf2.t) % 6
    return Equivalence('equal' if delta == 0 else 'phase', delta, nf1, nf2)
