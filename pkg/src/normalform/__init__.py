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
from .boxes import BOX_WIDTH, BoxAction, NormalBox, all_boxes, box_action, box_circuit, make_box
from .layers import layer_gates, synth_x_layer, synth_z_layer
from .synthesis import (DEFAULT_MAX_MATRIX_N, Layer, NormalForm, dump_normal_form, identity_normal_form,
                        load_normal_form, normal_form_circuit, normal_form_from_dict, normal_form_to_dict,
                        synthesize, synthesize_circuit)
from .counting import count_normal_forms, enumerate_single_qutrit, max_box_count, random_normal_form
