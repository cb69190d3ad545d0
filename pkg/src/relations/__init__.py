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
from .placement import (INPUT, LADDER, D_TOP, E_INPUT, F_INPUT, END, LABEL_SYMBOLS, check_dirty_shape, label_before,
                        placement_violation)
from .words import clifford_word, pauli_s_words, shorter_local_word, single_qutrit_words, split_local
from .derive import (DerivationError, RewriteRule, Witness, candidates, derive_rule, family_tag, phase_rules,
                     rule_phase, split_residual, verify_rule)
from .families import FAMILIES, PHASE_FAMILIES, PUBLISHED_RULE_COUNT, expected_family_sizes, family_instances
from .gate_relations import GateRelation, RelationCheck, gate_definitions, gate_relations, verify_gate_relations
from .database import RelationDB, VerificationError, enumerate_rules, rule_digest, rule_key
