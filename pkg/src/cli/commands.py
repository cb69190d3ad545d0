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
The commands of the command line interface.

Every command takes the parsed arguments and the :class:`Config`, and returns
a :class:`Report`: the exit code, a text for people and, for most commands, a
document that other commands (or :mod:`src.tools`) read back.
"""
from __future__ import annotations

import logging
import os
import sys
from argparse import Namespace
from dataclasses import dataclass
from typing import Any, Dict, Final, List, Optional, TextIO

from ..circuit import Circuit, format_circuit, interpret, load_circuit, random_word
from ..exactnum import equal_up_to_phase
from ..normalform import (NormalForm, count_normal_forms, max_box_count, normal_form_circuit, normal_form_to_dict,
                          random_normal_form, synthesize, synthesize_circuit)
from ..pauli import tableau_from_dict, tableau_of, tableau_to_dict
from ..relations import (PUBLISHED_RULE_COUNT, RelationDB, enumerate_rules, expected_family_sizes, gate_definitions,
                         verify_gate_relations)
from ..rewriter import RewriteTrace, check_closure, equivalent, normal_form_of
from ..tools import StringDumpYaml, load_document, save_document
from .config import Config

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

EXIT_OK: Final = 0
EXIT_FAILURE: Final = 1
EXIT_INPUT: Final = 2

# random normalizations run by `verify boxrels` with the stored relations only
CLOSURE_MAX_N: Final = 3
CLOSURE_SAMPLES: Final = 4
CLOSURE_LENGTH: Final = 12


@dataclass
class Report:
    """
    :param code: exit code
    :param text: output in the 'text' format
    :param document: output in the 'yaml' format, None when the command has none
    :param keep_document: with --out, save the document even in the 'text' format
    """

    code: int
    text: str
    document: Any = None
    keep_document: bool = False


def format_normal_form(nf: NormalForm) -> str:
    """ one line for the phase, one per layer (Z boxes | X boxes) and the box count """
    lines = ["n=%d t=%d" % (nf.n, nf.t)]
    for layer in nf.layers:
        lines.append("layer %d: %s | %s" % (layer.j, " ".join(map(str, layer.z)), " ".join(map(str, layer.x))))
    lines.append("boxes: %d" % nf.box_count())
    return "\n".join(lines)


def emit(report: Report, config: Config, stream: Optional[TextIO] = None) -> None:
    """ write a report to ``config.out``, or to ``stream`` (stdout by default) """
    stream = stream if stream is not None else sys.stdout
    as_yaml = report.document is not None and config.output_format == 'yaml'

    if config.out is None:
        stream.write(StringDumpYaml().dump(report.document) if as_yaml else report.text + "\n")
        return

    if as_yaml or (report.keep_document and report.document is not None):
        save_document(report.document, config.out)
        if not as_yaml:
            stream.write(report.text + "\n")
        return

    folder = os.path.dirname(config.out)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(config.out, "w", encoding="utf-8") as f:
        f.write(report.text + "\n")
    log.info("wrote %s" % config.out)


def _require_matrices(n: int, config: Config, what: str) -> None:
    if n > config.max_matrix_n:
        raise ValueError("%s needs a 3^%d matrix, above max-n=%d (raise --max-n to allow it)"
                         % (what, n, config.max_matrix_n))


############################################################################
#                               Normal forms                               #
############################################################################

def _cross_check(c: Circuit, nf: NormalForm, config: Config) -> List[str]:
    """ disagreements between the rewritten normal form and the two oracles """
    _require_matrices(c.n, config, "--check")
    problems = []
    oracle = synthesize_circuit(c, True, config.max_matrix_n)
    if oracle != nf:
        problems.append("synthesis gives %s" % oracle)
    t = equal_up_to_phase(interpret(normal_form_circuit(nf)), interpret(c))
    if t != 0:
        problems.append("the normal form circuit is not the input matrix (phase offset %s)" % t)
    return problems


def cmd_normalize(args: Namespace, config: Config) -> Report:
    c = load_circuit(args.path)
    trace = RewriteTrace() if args.trace else None
    nf, steps = normal_form_of(c, trace=trace)

    lines = [format_normal_form(nf), "steps: %d" % steps]
    document = normal_form_to_dict(nf)
    document["steps"] = steps
    if trace is not None:
        lines += trace.lines()
        document["trace"] = trace.lines()

    code = EXIT_OK
    if config.check:
        problems = _cross_check(c, nf, config)
        lines += ["check failed: %s" % p for p in problems] or ["check: ok"]
        document["check"] = problems or "ok"
        if problems:
            code = EXIT_FAILURE
    return Report(code, "\n".join(lines), document)


def cmd_synth(args: Namespace, config: Config) -> Report:
    tableau = tableau_from_dict(load_document(args.path))
    nf = synthesize(tableau)
    return Report(EXIT_OK, format_normal_form(nf), normal_form_to_dict(nf))


def cmd_tableau(args: Namespace, config: Config) -> Report:
    tableau = tableau_of(load_circuit(args.path))
    return Report(EXIT_OK, str(tableau), tableau_to_dict(tableau))


def cmd_equiv(args: Namespace, config: Config) -> Report:
    result = equivalent(load_circuit(args.first), load_circuit(args.second))
    if result.verdict == 'equal':
        text = "equal"
    elif result.verdict == 'phase':
        text = "equal-up-to-phase %d" % result.delta_t
    else:
        text = "inequivalent"
    document = {"verdict": text.split()[0], "delta_t": result.delta_t,
                "first": normal_form_to_dict(result.first), "second": normal_form_to_dict(result.second)}
    return Report(EXIT_FAILURE if result.verdict == 'different' else EXIT_OK, text, document)


############################################################################
#                               Verification                               #
############################################################################

def _verify_gate_relations() -> Report:
    definitions = {rel.name for rel in gate_definitions()}
    checks = verify_gate_relations(include_definitions=True)
    relations = [r for r in checks if r.name not in definitions]
    derived = [r for r in checks if r.name in definitions]

    lines = []
    for r in checks:
        if not r.ok:
            lines.append("FAIL %s: %s (tableau %s, matrix %s)" % (r.name, r.text, "ok" if r.tableau_ok else "differs",
                                                                  "ok" if r.matrix_ok else "differs"))
    passed = sum(r.ok for r in relations)
    lines.append("%d/%d gate relations hold" % (passed, len(relations)))
    lines.append("%d/%d gate definitions hold" % (sum(r.ok for r in derived), len(derived)))
    document = {"relations": {r.name: r.ok for r in relations}, "definitions": {r.name: r.ok for r in derived}}
    failed = any(not r.ok for r in checks)
    return Report(EXIT_FAILURE if failed else EXIT_OK, "\n".join(lines), document)


def _verify_box_relations(db_path: Optional[str]) -> Report:
    if db_path is not None:
        db = RelationDB.load(db_path, check_digest=False)
    else:
        db = enumerate_rules(verify=False)
    failures = db.reverify()

    counts, expected = db.family_counts(), expected_family_sizes()
    lines = ["%-10s %4d / %d" % (tag, counts.get(tag, 0), expected.get(tag, 0))
             for tag in sorted(set(counts) | set(expected))]
    lines += ["FAIL %s: %s" % (rule, witness) for rule, witness in failures]
    lines.append("%d/%d box relations verified, %d published" % (len(db) - len(failures), len(db),
                                                                 PUBLISHED_RULE_COUNT))
    if len(db) != PUBLISHED_RULE_COUNT:
        log.warning("%d box relations checked, %d published" % (len(db), PUBLISHED_RULE_COUNT))

    missing = check_closure(db, CLOSURE_MAX_N, CLOSURE_SAMPLES, CLOSURE_LENGTH)
    normalizations = CLOSURE_MAX_N * CLOSURE_SAMPLES
    lines += ["MISSING %s" % m for m in missing]
    lines.append("closure: %d/%d random normalizations used stored relations only"
                 % (normalizations - len(missing), normalizations))
    lines.append("derived on demand: %d" % db.derived_on_demand)

    document: Dict[str, Any] = {"total": len(db), "published": PUBLISHED_RULE_COUNT, "families": counts,
                                "failures": [{"rule": str(rule), "witness": witness} for rule, witness in failures],
                                "closure": {"normalizations": normalizations, "missing": missing},
                                "derived_on_demand": db.derived_on_demand}
    return Report(EXIT_FAILURE if failures or missing else EXIT_OK, "\n".join(lines), document)


def cmd_verify(args: Namespace, config: Config) -> Report:
    reports = []
    if args.scope in ('rules18', 'all'):
        reports.append(('rules18', _verify_gate_relations()))
    if args.scope in ('boxrels', 'all'):
        reports.append(('boxrels', _verify_box_relations(args.db)))
    code = max(r.code for _, r in reports)
    return Report(code, "\n".join(r.text for _, r in reports), {name: r.document for name, r in reports})


def cmd_derive_relations(args: Namespace, config: Config) -> Report:
    db = enumerate_rules(verify=True)
    counts = db.family_counts()
    lines = ["%-10s %4d" % (tag, counts[tag]) for tag in sorted(counts)]
    lines.append("%d box relations derived and verified" % len(db))
    return Report(EXIT_OK, "\n".join(lines), db.to_dict(), keep_document=True)


############################################################################
#                               Utilities                                  #
############################################################################

def cmd_count(args: Namespace, config: Config) -> Report:
    count = count_normal_forms(args.n)
    return Report(EXIT_OK, str(count), {"n": args.n, "count": count, "max_boxes": max_box_count(args.n)})


def cmd_random(args: Namespace, config: Config) -> Report:
    if args.normal:
        nf = random_normal_form(args.n, config.seed)
        c = normal_form_circuit(nf)
        document = {"circuit": format_circuit(c), "normal_form": normal_form_to_dict(nf)}
    else:
        c = random_word(args.n, args.length, config.seed, 'derived' if args.derived else 'primitive')
        document = {"circuit": format_circuit(c)}
    return Report(EXIT_OK, format_circuit(c, "\n"), document)


def cmd_matrix(args: Namespace, config: Config) -> Report:
    c = load_circuit(args.path)
    _require_matrices(c.n, config, "printing the matrix")
    m = interpret(c)
    return Report(EXIT_OK, m.dump(), {"n": c.n, "rows": [[str(x) for x in row] for row in m.entries()]})
