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
The relation database used by the rewriter.

Rules are keyed by their left-hand side, moved so that its lowest wire is 0.
Contexts missing from the database are derived on first use.
"""
from __future__ import annotations

import hashlib
import logging
from collections import Counter
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..circuit import Circuit, Gate, format_circuit, parse
from ..normalform import NormalBox, make_box
from ..tools import load_document, save_document
from .derive import DerivationError, RewriteRule, derive_rule, phase_rules, verify_rule
from .families import FAMILIES, PUBLISHED_RULE_COUNT

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

RuleKey = Tuple[Tuple[Gate, ...], Tuple[NormalBox, ...]]


class VerificationError(RuntimeError):
    """ a relation whose two sides differ """


def rule_key(dirty: Sequence[Gate], context: Sequence[NormalBox]) -> Tuple[RuleKey, int]:
    """ key of a left-hand side and the offset that moved it to wire 0 """
    wires = [w for g in dirty for w in g.wires] + [w for b in context for w in b.wires]
    offset = min(wires) if wires else 0
    key = (tuple(g.shifted(-offset) for g in dirty),
           tuple(b.moved(tuple(w - offset for w in b.wires)) for b in context))
    return key, offset


def rule_digest(rule: RewriteRule) -> str:
    text = "|".join([format_circuit(rule.lhs_circuit()), format_circuit(rule.rhs_circuit()), str(rule.t)])
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class RelationDB:
    """
    Box relations by left-hand side.

    :param rules: initial rules
    :param derive_missing: derive and store rules for unknown contexts
    """

    def __init__(self, rules: Iterable[RewriteRule] = (), derive_missing: bool = True) -> None:
        self._rules: Dict[RuleKey, RewriteRule] = {}
        self.derive_missing = derive_missing
        self.verified = False
        self.derived_on_demand = 0
        for rule in rules:
            self.add(rule)

    def add(self, rule: RewriteRule) -> None:
        key, _ = rule_key(rule.dirty, rule.context)
        self._rules[key] = rule

    def __len__(self) -> int:
        return len(self._rules)

    def __iter__(self) -> Iterator[RewriteRule]:
        return iter(self._rules.values())

    def __contains__(self, lhs: Tuple[Sequence[Gate], Sequence[NormalBox]]) -> bool:
        return rule_key(*lhs)[0] in self._rules

    def lookup(self, g: Gate, context: Sequence[NormalBox]) -> Tuple[RewriteRule, int]:
        """
        Rule for ``g`` before ``context`` and the wire offset of the match.

        :raise KeyError: when the context is unknown and derivation is off
        :raise DerivationError: when the context has no relation
        """
        key, offset = rule_key((g,), context)
        rule = self._rules.get(key)
        if rule is None:
            if not self.derive_missing:
                raise KeyError("no relation for %s before %s" % (g, " ".join(map(str, context))))
            rule = derive_rule(key[0][0], key[1])
            self._rules[key] = rule
            self.derived_on_demand += 1
            log.info("derived missing relation %s" % rule)
        return rule, offset

    def family_counts(self) -> Dict[str, int]:
        return dict(Counter(rule.family for rule in self._rules.values()))

    def reverify(self) -> List[Tuple[RewriteRule, str]]:
        """ re-check every rule on exact matrices, return the failures """
        failures = []
        for rule in self._rules.values():
            ok, witness = verify_rule(rule)
            if not ok:
                failures.append((rule, str(witness)))
        self.verified = not failures
        return failures

    ############################################################################
    #                               Serialization                              #
    ############################################################################

    def to_dict(self) -> Dict:
        return {
            "count": len(self),
            "verified": self.verified,
            "families": self.family_counts(),
            "rules": [_rule_to_dict(rule) for rule in self._rules.values()],
        }

    def save(self, filepath: str) -> None:
        save_document(self.to_dict(), filepath)

    @classmethod
    def from_dict(cls, data: Dict, check_digest: bool = True) -> RelationDB:
        """
        :param check_digest: reject entries whose digest does not match, turn it
            off to load a damaged file for :meth:`reverify`
        """
        try:
            db = cls(_rule_from_dict(entry, check_digest) for entry in data["rules"])
        except (KeyError, TypeError) as e:
            raise ValueError("malformed relation database: %s" % e) from e
        if len(db) != int(data.get("count", len(db))):
            raise ValueError("relation database lists %s rules but holds %d" % (data.get("count"), len(db)))
        return db

    @classmethod
    def load(cls, filepath: str, check_digest: bool = True) -> RelationDB:
        return cls.from_dict(load_document(filepath), check_digest)


def _boxes_to_list(boxes: Sequence[NormalBox]) -> List[Dict]:
    return [{"box": b.name, "wires": list(b.wires)} for b in boxes]


def _boxes_from_list(entries) -> Tuple[NormalBox, ...]:
    return tuple(make_box(str(e["box"])[0], [int(ch) for ch in str(e["box"])[1:]], e["wires"]) for e in entries)


def _word(n: int, text: str) -> Tuple[Gate, ...]:
    return parse("n=%d; %s" % (n, text)).gates if text else ()


def _rule_to_dict(rule: RewriteRule) -> Dict:
    return {
        "family": rule.family,
        "bindings": rule.binding_map,
        "n": rule.n,
        "dirty": "; ".join(str(g) for g in rule.dirty),
        "context": _boxes_to_list(rule.context),
        "updated": _boxes_to_list(rule.updated),
        "residual": "; ".join(str(g) for g in rule.residual),
        "t": rule.t,
        "lhs": format_circuit(rule.lhs_circuit()),
        "rhs": format_circuit(rule.rhs_circuit()),
        "digest": rule_digest(rule),
    }


def _rule_from_dict(entry: Dict, check_digest: bool = True) -> RewriteRule:
    n = int(entry["n"])
    rule = RewriteRule(str(entry["family"]), tuple((str(k), int(v)) for k, v in dict(entry["bindings"]).items()), n,
                       _word(n, str(entry["dirty"])), _boxes_from_list(entry["context"]),
                       _boxes_from_list(entry["updated"]), _word(n, str(entry["residual"])), int(entry["t"]))
    if check_digest and "digest" in entry and entry["digest"] != rule_digest(rule):
        raise ValueError("digest mismatch for %s rule %s" % (rule.family, entry.get("lhs")))
    return rule


def enumerate_rules(verify: bool = True) -> RelationDB:
    """
    Derive every family of box relations.

    :param verify: check every rule on exact matrices
    :return: the database, flagged verified when every rule passed
    :raise DerivationError: with the failing family and bindings
    :raise VerificationError: when a derived rule does not verify
    """
    db = RelationDB(phase_rules())
    for tag, instances in FAMILIES.items():
        for g, context in instances():
            try:
                rule = derive_rule(g, context, tag)
            except DerivationError as e:
                raise DerivationError("%s at %s: %s" % (tag, " ".join(map(str, context)), e)) from e
            if verify:
                ok, witness = verify_rule(rule)
                if not ok:
                    raise VerificationError("%s fails at %s" % (rule, witness))
            db.add(rule)
        log.info("family %s: %d rules" % (tag, db.family_counts().get(tag, 0)))

    if len(db) != PUBLISHED_RULE_COUNT:
        log.warning("derived %d relations, %d expected" % (len(db), PUBLISHED_RULE_COUNT))
    db.verified = verify
    return db
