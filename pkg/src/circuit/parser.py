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
Text format of circuits.

A file starts with the header ``n=<int>`` followed by statements
``<GATE>[^<power>] <wire> [<wire>]`` separated by newlines or ``;``. Wires are
0-based, ``#`` starts a comment. Gate names are H, S, CZ, SP, Z, X, SWAP, CX,
XC, W (the scalar -ω), OMEGA and MINUS. A power is sugar for repetition.

Example::

    n=2
    H 0; S^2 1   # two statements on one line
    CZ 0 1
"""
from __future__ import annotations

import logging
import re
from itertools import groupby
from typing import List, Optional, Tuple

from .circuit import Circuit
from .gates import GATE_ARITY, Gate

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

_TOKEN = re.compile(r";|[^\s;]+")
_GATE_TOKEN = re.compile(r"^([A-Za-z]+)(?:\^(\d+))?$")
_HEADER = re.compile(r"^n=(\d+)$")

Token = Tuple[str, int, int]  # text, line, column (both 1-based)


class CircuitSyntaxError(ValueError):
    """ error in a circuit text, located at a token """

    def __init__(self, message: str, line: int = 0, column: int = 0, token: Optional[str] = None) -> None:
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        where = "line %d, column %d" % (line, column)
        if token is not None:
            where += " at token %r" % token
        super().__init__("%s: %s" % (where, message))


class WireRangeError(CircuitSyntaxError):
    """ a wire index outside [0, n) """


def _statements(text: str) -> List[List[Token]]:
    statements: List[List[Token]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        current: List[Token] = []
        for m in _TOKEN.finditer(line):
            if m.group() == ";":
                if current:
                    statements.append(current)
                current = []
            else:
                current.append((m.group(), line_no, m.start() + 1))
        if current:
            statements.append(current)
    return statements


def _parse_statement(statement: List[Token], n: int) -> List[Gate]:
    text, line, col = statement[0]
    m = _GATE_TOKEN.match(text)
    if m is None or m.group(1).upper() not in GATE_ARITY:
        raise CircuitSyntaxError("unknown gate", line, col, text)

    kind = m.group(1).upper()
    power = int(m.group(2)) if m.group(2) is not None else 1

    args = statement[1:]
    if len(args) != GATE_ARITY[kind]:
        raise CircuitSyntaxError("gate %s expects %d wire(s), got %d" % (kind, GATE_ARITY[kind], len(args)),
                                 line, col, text)

    wires: List[int] = []
    for arg, a_line, a_col in args:
        if not arg.isdigit():
            raise CircuitSyntaxError("wire index must be a non-negative integer", a_line, a_col, arg)
        w = int(arg)
        if w >= n:
            raise WireRangeError("wire %d out of range for n=%d" % (w, n), a_line, a_col, arg)
        wires.append(w)

    if len(wires) == 2:
        if wires[0] == wires[1]:
            raise CircuitSyntaxError("a two-wire gate needs two distinct wires", line, col, text)
        if wires[0] > wires[1]:
            raise CircuitSyntaxError("wires of %s must be increasing" % kind, line, col, text)

    return [Gate(kind, tuple(wires))] * power


def parse(text: str) -> Circuit:
    """
    Parse a circuit text.

    :param text: the circuit in the text format
    :return: the circuit
    :raise CircuitSyntaxError: on any syntax error, with its position
    :raise WireRangeError: when a wire is outside [0, n)
    """
    statements = _statements(text)
    if not statements:
        raise CircuitSyntaxError("missing header n=<int>", 1, 1)

    header = statements[0]
    m = _HEADER.match("".join(tok for tok, _, _ in header))
    if m is None:
        raise CircuitSyntaxError("expected header n=<int>", header[0][1], header[0][2], header[0][0])
    n = int(m.group(1))

    gates: List[Gate] = []
    for statement in statements[1:]:
        gates.extend(_parse_statement(statement, n))

    log.debug("parsed %d gate(s) on %d wire(s)" % (len(gates), n))
    return Circuit(n, tuple(gates))


def format_circuit(c: Circuit, separator: str = "; ", powers: bool = False) -> str:
    """
    Text form of a circuit, ``parse(format_circuit(c)) == c``.

    A circuit is a word of gates: the ``^`` sugar is expanded by :func:`parse`
    and not kept, so the round trip is on expanded words and
    ``format_circuit(parse(text))`` writes ``S^2 1`` as ``S 1; S 1``.

    :param separator: statement separator, ``"; "`` or ``"\\n"``
    :param powers: write each run of equal gates as one ``G^k`` statement
    """
    statements = ["n=%d" % c.n]
    for g, run in groupby(c.gates) if powers else ((g, [g]) for g in c.gates):
        k = len(list(run))
        statements.append(str(g) if k == 1 else " ".join(["%s^%d" % (g.kind, k)] + [str(w) for w in g.wires]))
    return separator.join(statements)


def load_circuit(path: str) -> Circuit:
    with open(path, encoding="utf-8") as f:
        return parse(f.read())
