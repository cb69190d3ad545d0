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
Options shared by every command of the command line interface.
"""
from __future__ import annotations

import logging
from argparse import Namespace
from dataclasses import dataclass
from typing import Final, Literal, Optional

from ..normalform import DEFAULT_MAX_MATRIX_N

# Setup logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

OutputFormat = Literal['text', 'yaml']

OUTPUT_FORMATS: Final = ('text', 'yaml')
LOG_LEVELS: Final = (logging.WARNING, logging.INFO, logging.DEBUG)
LOG_FORMAT: Final = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


@dataclass
class Config:
    """
    :param max_matrix_n: largest register for which exact 3^n matrices are built
    :param seed: seed of the random generators
    :param output_format: 'text' for people, 'yaml' for documents other commands read back
    :param out: write the output to this file instead of stdout
    :param check: cross-validate results against the tableau and matrix oracles
    :param verbose: 0 for warnings, 1 for info, 2 and more for debug messages
    """

    max_matrix_n: int = DEFAULT_MAX_MATRIX_N
    seed: Optional[int] = None
    output_format: OutputFormat = 'text'
    out: Optional[str] = None
    check: bool = False
    verbose: int = 0

    def __post_init__(self) -> None:
        if self.max_matrix_n < 1:
            raise ValueError("max-n must be at least 1, got %d" % self.max_matrix_n)
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError("unknown output format %r, use one of %s" % (self.output_format, OUTPUT_FORMATS))
        if self.verbose < 0:
            raise ValueError("verbosity must be non-negative")

    @classmethod
    def from_args(cls, args: Namespace) -> Config:
        return cls(max_matrix_n=args.max_n, seed=args.seed, output_format=args.format, out=args.out,
                   check=args.check, verbose=args.verbose)

    @property
    def log_level(self) -> int:
        return LOG_LEVELS[min(self.verbose, len(LOG_LEVELS) - 1)]
