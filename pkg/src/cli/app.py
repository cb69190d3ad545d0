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
Argument parsing and dispatch, run with ``python -m src.cli <command> ...``.

Exit codes: 0 on success (or equal circuits), 1 for inequivalent circuits and
verification failures, 2 for input errors.
"""
from __future__ import annotations

import logging
import sys
from argparse import ArgumentParser
from typing import List, Optional

from ..normalform import DEFAULT_MAX_MATRIX_N
from ..relations import DerivationError, VerificationError
from ..rewriter import ClosureError, PlacementError, TerminationError
from . import commands
from .commands import EXIT_FAILURE, EXIT_INPUT, emit
from .config import LOG_FORMAT, OUTPUT_FORMATS, Config

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


def _common_options() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=None, help="seed of the random generators")
    common.add_argument('--max-n', type=int, default=DEFAULT_MAX_MATRIX_N,
                        help="largest number of wires for exact matrices (default %(default)s)")
    common.add_argument('--check', action='store_true', help="cross-validate against synthesis and matrices")
    common.add_argument('--format', choices=OUTPUT_FORMATS, default='text', help="output format")
    common.add_argument('--out', default=None, help="write the output to this file")
    common.add_argument('-v', '--verbose', action='count', default=0, help="-v for info, -vv for debug messages")
    return common


def build_parser() -> ArgumentParser:
    common = _common_options()
    parser = ArgumentParser(prog='pyqutrit', description="Exact qutrit Clifford circuits and their normal forms")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('normalize', parents=[common], help="normal form of a circuit file by rewriting")
    p.add_argument('path')
    p.add_argument('--trace', action='store_true', help="list the rewrite steps")
    p.set_defaults(handler=commands.cmd_normalize)

    p = sub.add_parser('equiv', parents=[common], help="compare two circuit files")
    p.add_argument('first')
    p.add_argument('second')
    p.set_defaults(handler=commands.cmd_equiv)

    p = sub.add_parser('verify', parents=[common], help="check the gate relations and the box relations")
    p.add_argument('scope', choices=('rules18', 'boxrels', 'all'))
    p.add_argument('--db', default=None, help="relation database to check instead of a fresh derivation")
    p.set_defaults(handler=commands.cmd_verify)

    p = sub.add_parser('count', parents=[common], help="number of n-qutrit Cliffords")
    p.add_argument('n', type=int)
    p.set_defaults(handler=commands.cmd_count)

    p = sub.add_parser('random', parents=[common], help="random circuit")
    p.add_argument('n', type=int)
    p.add_argument('--length', type=int, default=20, help="number of gates of a random word")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument('--normal', action='store_true', help="uniform Clifford, written as its normal form circuit")
    kind.add_argument('--derived', action='store_true', help="draw from the derived gate alphabet")
    p.set_defaults(handler=commands.cmd_random)

    p = sub.add_parser('synth', parents=[common], help="normal form of a tableau file, up to phase")
    p.add_argument('path')
    p.set_defaults(handler=commands.cmd_synth)

    p = sub.add_parser('tableau', parents=[common], help="tableau of a circuit file")
    p.add_argument('path')
    p.set_defaults(handler=commands.cmd_tableau)

    p = sub.add_parser('matrix', parents=[common], help="exact matrix of a circuit file")
    p.add_argument('path')
    p.set_defaults(handler=commands.cmd_matrix)

    p = sub.add_parser('derive-relations', parents=[common], help="derive and verify every box relation")
    p.set_defaults(handler=commands.cmd_derive_relations)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    :param argv: arguments without the program name, ``sys.argv[1:]`` by default
    :return: the exit code
    """
    args = build_parser().parse_args(argv)
    try:
        config = Config.from_args(args)
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INPUT

    logging.basicConfig(level=config.log_level, format=LOG_FORMAT)
    try:
        report = args.handler(args, config)
        emit(report, config)
    except (ValueError, OSError) as e:
        # CircuitSyntaxError is a ValueError and carries its line and column
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    except (DerivationError, VerificationError, ClosureError, PlacementError, TerminationError) as e:
        print("failure: %s" % e, file=sys.stderr)
        return EXIT_FAILURE
    return report.code
