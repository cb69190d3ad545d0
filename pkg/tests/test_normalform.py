from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings

from src.circuit import Circuit, interpret, interpret_on, parse
from src.exactnum import CycloMatrix
from src.normalform import (Layer, NormalBox, NormalForm, all_boxes, box_action, box_circuit, count_normal_forms,
                            dump_normal_form, enumerate_single_qutrit, identity_normal_form, layer_gates,
                            load_normal_form, make_box, max_box_count, normal_form_circuit, random_normal_form,
                            synth_x_layer, synth_z_layer, synthesize, synthesize_circuit)
from src.pauli import Pauli, Tableau, conjugate_word, tableau_of
from strategies import circuits, non_scalar_paulis


############################################################################
#                               Boxes                                      #
############################################################################

@pytest.mark.parametrize("kind", "ABCDEF")
def test_box_actions(kind):
    for box in all_boxes(kind):
        tableau = tableau_of(box_circuit(box))
        action = box_action(box)
        for before, after in action.required + action.additional:
            assert tableau.apply(before) == after, "%s: %s -> %s" % (box, before, tableau.apply(before))


@pytest.mark.parametrize("beta", range(3))
def test_d_box_carries_top_z_down(beta):
    for box in all_boxes('D'):
        a, b = box.index
        after = conjugate_word(box.gates(), Pauli(0, (1, a), (beta, b)))
        assert (after.a, after.b) == ((0, 1), (0, beta)), "%s: %s" % (box, after)


def test_box_variants():
    assert len(list(all_boxes('A'))) == 8
    assert len(list(all_boxes('B', 2))) == 9
    assert len(list(all_boxes('F'))) == 3
    assert all(b.wires == (2, 3) for b in all_boxes('D', 2))


def test_box_validation():
    with pytest.raises(ValueError):
        make_box('A', (0, 0), 0)
    with pytest.raises(ValueError):
        make_box('B', (1, 1), (0, 2))
    with pytest.raises(ValueError):
        make_box('C', (1, 1), 0)
    with pytest.raises(ValueError):
        NormalBox('G', (1,), (0,))


def test_box_names():
    box = make_box('A', (1, 2), 1)
    assert str(box) == "A12(1)"
    assert box.name == "A12"
    assert str(make_box('D', (0, 2), (3, 4))) == "D02(3,4)"
    assert make_box('E', 4, 0).index == (1,)


def test_empty_a_box():
    assert make_box('A', (0, 1), 0).gates() == []


############################################################################
#                               Layers                                     #
############################################################################

@settings(max_examples=60, deadline=None)
@given(non_scalar_paulis(3))
def test_z_layer_ends_on_first_wire(p):
    boxes = synth_z_layer(p)
    assert conjugate_word(layer_gates(boxes), p) == Pauli.z(3, 0)
    assert boxes[0].kind == 'A' and boxes[0].top == max(p.support())
    assert [b.kind for b in boxes[1:-1]] == ['B'] * boxes[0].top
    assert boxes[-1].kind == 'C'


@settings(max_examples=30, deadline=None)
@given(circuits(3, max_size=15))
def test_layer_maps_pair_to_last_wire(c):
    t = tableau_of(c)
    p, q = t.zimg[0], t.ximg[0]
    z = synth_z_layer(p)
    x = synth_x_layer(conjugate_word(layer_gates(z), q))
    assert [b.kind for b in x] == ['D', 'D', 'E', 'F']
    gates = layer_gates(z + x)
    assert conjugate_word(gates, p) == Pauli.z(3, 2)
    assert conjugate_word(gates, q) == Pauli.x(3, 2)


def test_layer_errors():
    with pytest.raises(ValueError):
        synth_z_layer(Pauli(1, (0, 0), (0, 0)))
    with pytest.raises(ValueError):
        synth_x_layer(Pauli.z(2, 0))


############################################################################
#                               Synthesis                                  #
############################################################################

@settings(max_examples=30, deadline=None)
@given(circuits(2, max_size=15, kind='derived'))
def test_synthesis_reproduces_tableau(c):
    nf = synthesize(tableau_of(c))
    assert nf.t == 0
    assert tableau_of(normal_form_circuit(nf)) == tableau_of(c)
    assert nf.box_count() <= max_box_count(2)


@settings(max_examples=20, deadline=None)
@given(circuits(2, max_size=15))
def test_synthesis_with_phase_is_exact(c):
    nf = synthesize_circuit(c)
    assert interpret(normal_form_circuit(nf)) == interpret(c)
    primitive = normal_form_circuit(nf, primitive=True)
    assert primitive.is_primitive()
    assert interpret(primitive) == interpret(c)


def test_synthesis_errors():
    c = parse("n=2; H 0; CZ 0 1")
    with pytest.raises(ValueError):
        synthesize(tableau_of(c), with_phase=True)
    with pytest.raises(ValueError):
        synthesize_circuit(c, max_matrix_n=1)
    with pytest.raises(ValueError):
        synthesize(tableau_of(c), True, interpret(parse("n=2; S 0")))
    with pytest.raises(ValueError):
        synthesize(Tableau(1, (Pauli.z(1, 0),), (Pauli.z(1, 0),)))


def test_identity_normal_form():
    nf = identity_normal_form(3)
    assert tableau_of(normal_form_circuit(nf)) == Tableau.identity(3)
    assert [layer.j for layer in nf.layers] == [3, 2, 1]


def test_identity_normal_form_without_matrices():
    nf = identity_normal_form(7)
    c = normal_form_circuit(nf)
    assert tableau_of(c) == Tableau.identity(7)
    for index in (0, 5, 3 ** 7 - 1):
        e = CycloMatrix.basis(3 ** 7, index)
        assert interpret_on(c, e) == e


@pytest.mark.parametrize("seed", [0, 4, 9])
def test_changing_one_box_changes_the_clifford(seed):
    nf = random_normal_form(2, seed)
    reference = tableau_of(normal_form_circuit(nf))
    for li, layer in enumerate(nf.layers):
        for bi, box in enumerate(layer.boxes):
            for other in all_boxes(box.kind):
                if other.index == box.index:
                    continue
                boxes = list(layer.boxes)
                boxes[bi] = replace(box, index=other.index)
                changed = Layer(layer.j, tuple(boxes[:len(layer.z)]), tuple(boxes[len(layer.z):]))
                layers = nf.layers[:li] + (changed,) + nf.layers[li + 1:]
                perturbed = NormalForm(nf.n, nf.t, layers)
                assert tableau_of(normal_form_circuit(perturbed)) != reference, "%s -> %s" % (box, other)


def test_single_qutrit_normal_forms_are_unique():
    forms = list(enumerate_single_qutrit())
    assert len(forms) == 216
    tableaus = {tableau_of(normal_form_circuit(nf)) for nf in forms}
    assert len(tableaus) == 216
    for nf in forms[::17]:
        assert synthesize(tableau_of(normal_form_circuit(nf))) == nf


@pytest.mark.parametrize("seed", [0, 1, 5, 42])
def test_random_normal_forms_are_normal(seed):
    nf = random_normal_form(2, seed)
    assert nf == random_normal_form(2, seed)
    assert synthesize_circuit(normal_form_circuit(nf)) == nf


def test_circuit_starts_with_phase():
    nf = random_normal_form(1, 3)
    c = normal_form_circuit(nf)
    assert [g.kind for g in c.gates[:nf.t]] == ['W'] * nf.t


@pytest.mark.slow
def test_random_single_qutrit_forms_are_uniform():
    samples = 216 * 200
    forms, phases = {}, [0] * 6
    for seed in range(samples):
        nf = random_normal_form(1, seed)
        forms[nf.layers] = forms.get(nf.layers, 0) + 1
        phases[nf.t] += 1
    assert set(forms) == {nf.layers for nf in enumerate_single_qutrit()}
    mean = samples / 216
    assert all(abs(k - mean) < 5 * np.sqrt(mean) for k in forms.values())
    assert all(abs(k - samples / 6) < 5 * np.sqrt(samples / 6) for k in phases)


############################################################################
#                               Counting                                   #
############################################################################

@pytest.mark.parametrize("n, count", [(0, 6), (1, 1296), (2, 25194240)])
def test_counts(n, count):
    assert count_normal_forms(n) == count


def test_count_errors():
    with pytest.raises(ValueError):
        count_normal_forms(-1)


def test_box_bound():
    assert [max_box_count(n) for n in range(1, 4)] == [4, 10, 18]
    assert random_normal_form(3, 8).box_count() <= max_box_count(3)


############################################################################
#                               Serialization                              #
############################################################################

def test_document_round_trip():
    nf = random_normal_form(3, 17)
    assert load_normal_form(dump_normal_form(nf)) == nf


def test_malformed_documents():
    with pytest.raises(ValueError):
        load_normal_form("n: 1\nt: 0\n")
    with pytest.raises(ValueError):
        NormalForm(2, 0, (Layer(1, (), ()),))


def test_normal_form_text():
    nf = NormalForm(1, 2, (Layer(1, (make_box('A', (1, 0), 0), make_box('C', 0, 0)),
                                    (make_box('E', 0, 0), make_box('F', 1, 0))),))
    assert str(nf) == "(-ω)^2 A10(0) C0(0) E0(0) F1(0)"
    assert Circuit(1, tuple(normal_form_circuit(nf).gates[2:])) == Circuit(1, tuple(layer_gates(list(nf.boxes()))))
