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
from .pauli import Pauli, pauli_matrix, pauli_from_matrix
from .tableau import (GF3, Tableau, conjugate_gate, conjugate_word, preimage_gate, tableau_of, tableau_compose,
                      tableau_invert, tableau_restrict, tableau_embed,
                      random_tableau, tableau_to_dict, tableau_from_dict, dump_tableau, load_tableau)
