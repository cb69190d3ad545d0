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
from .gates import Gate, GateKind, GATE_ARITY, PRIMITIVE_KINDS, gate_matrix, expand_derived, inverse_word
from .circuit import Circuit, interpret, interpret_on
from .parser import CircuitSyntaxError, WireRangeError, parse, format_circuit, load_circuit
from .random_words import alphabet, random_word
