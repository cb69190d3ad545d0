import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.circuit import Circuit, Gate, interpret, parse, random_word
from src.exactnum import equal_up_to_phase
from src.normalform import max_box_count, normal_form_circuit, random_normal_form, synthesize_circuit
from src.pauli import tableau_of
from src.relations import RelationDB, enumerate_rules
from src.rewriter import (DirtyNormalForm, Measure, RewriteTrace, TerminationError, check_closure, equivalent,
                          identity_normal_form, inject, normal_form_of, normalize, run, step)
from strategies import circuits


def test_measure_order():
    assert Measure((0, 1)) < Measure((1, 0))
    assert Measure((0, 0, 2)) < Measure((0, 1, 0))


def test_identity_is_clean():
    d = identity_normal_form(2)
    assert d.is_clean()
    assert step(d) is None
    assert d.to_normal_form() == synthesize_circuit(Circuit(2))


def test_inject_folds_scalars():
    d = identity_normal_form(1)
    assert inject(Gate('W'), d).t == (d.t + 1) % 6
    assert inject(Gate('MINUS'), d).t == (d.t + 3) % 6
    assert inject(Gate('OMEGA'), d).t == (d.t + 4) % 6
    assert inject(Gate('W'), d).is_clean()


def test_inject_errors():
    d = identity_normal_form(2)
    with pytest.raises(ValueError):
        inject(Gate('SWAP', (0, 1)), d)
    with pytest.raises(ValueError):
        inject(Gate('H', (2,)), d)


@pytest.mark.parametrize("gate", [Gate('H', (0,)), Gate('S', (1,)), Gate('CZ', (0, 1)), Gate('H', (1,))])
def test_every_step_preserves_the_matrix(gate):
    d = inject(gate, identity_normal_form(2))
    matrix = d.matrix()
    measure = d.measure()
    while True:
        nxt = step(d)
        if nxt is None:
            break
        assert nxt.matrix() == matrix
        assert nxt.measure() < measure
        d, measure = nxt, nxt.measure()
    assert d.is_clean()


def test_dirty_state_has_no_normal_form():
    d = inject(Gate('H', (0,)), identity_normal_form(1))
    assert not d.is_clean()
    assert d.dirty_gates() == [Gate('H', (0,))]
    with pytest.raises(ValueError):
        d.to_normal_form()
    assert list(d.queues()) == [(1, 0, "①")]


def test_trace_records_steps():
    trace = RewriteTrace()
    nf, steps = normal_form_of(parse("n=2; H 0; CZ 0 1; S 1"), trace=trace)
    assert len(trace) == steps > 0
    for entry in trace.entries:
        assert entry.after < entry.before
    assert trace.entries[0].index == 0
    assert len(trace.lines()) == steps


def test_run_reports_steps():
    d = inject(Gate('H', (0,)), identity_normal_form(1))
    clean, steps = run(d)
    assert clean.is_clean()
    assert steps >= 1


def test_runs_of_one_wire_gates_are_merged():
    d = identity_normal_form(1)
    for _ in range(4):
        d = inject(Gate('S', (0,)), d)
    merged = d.merged()
    assert merged.dirty_gates() == [Gate('S', (0,))]
    assert merged.matrix() == d.matrix()
    assert merged.measure() <= d.measure()


def test_hadamard_fourth_power_vanishes():
    d = identity_normal_form(1)
    for _ in range(4):
        d = inject(Gate('H', (0,)), d)
    merged = d.merged()
    assert merged.is_clean()
    assert merged.matrix() == d.matrix()


def test_cz_cube_is_dropped():
    d = identity_normal_form(2)
    for _ in range(3):
        d = inject(Gate('CZ', (0, 1)), d)
    assert d.merged().is_clean()
    assert d.merged().t == d.t


def test_clean_states_need_no_steps():
    for n, seed in [(1, 0), (2, 3), (3, 11)]:
        nf = random_normal_form(n, seed)
        d, steps = run(DirtyNormalForm.from_normal_form(nf))
        assert steps == 0
        assert d.to_normal_form() == nf


@settings(max_examples=25, deadline=None)
@given(circuits(1, max_size=12))
def test_one_wire_agrees_with_synthesis(c):
    assert normalize(c) == synthesize_circuit(c)


@settings(max_examples=12, deadline=None)
@given(circuits(2, max_size=8, kind='derived'))
def test_two_wires_agree_with_synthesis(c):
    nf = normalize(c)
    assert nf == synthesize_circuit(c)
    assert nf.box_count() <= 10


def test_normal_form_is_exact():
    c = random_word(2, 15, seed=7)
    nf = normalize(c)
    d = DirtyNormalForm.from_normal_form(nf)
    assert d.circuit() == normal_form_circuit(nf)
    assert d.matrix() == interpret(c)


def test_private_database():
    db = RelationDB()
    normalize(parse("n=2; CZ 0 1; H 1"), db)
    assert len(db) == db.derived_on_demand > 0


############################################################################
#                               Equivalence                                #
############################################################################

def test_z_expansion_equals_s_prime_form():
    result = equivalent(parse("n=1; H 0; H 0; S 0; S 0; H 0; H 0; S 0"), parse("n=1; S 0; SP 0; SP 0"))
    assert result.verdict == 'equal'
    assert result.equal


def test_distinct_cliffords():
    result = equivalent(parse("n=1; H 0"), parse("n=1; S 0"))
    assert result.verdict == 'different'
    assert result.delta_t is None


def test_six_phases_cancel():
    c = random_word(2, 10, seed=3)
    assert equivalent(c, c + Circuit(2, (Gate('W'),) * 6)).verdict == 'equal'


@pytest.mark.parametrize("scalar, delta", [(Gate('W'), 5), (Gate('MINUS'), 3), (Gate('OMEGA'), 2)])
def test_phase_difference(scalar, delta):
    c = parse("n=2; H 0; CZ 0 1")
    result = equivalent(c, c + Circuit(2, (scalar,)))
    assert (result.verdict, result.delta_t) == ('phase', delta)


def test_equivalence_needs_same_register():
    with pytest.raises(ValueError):
        equivalent(parse("n=1"), parse("n=2"))


############################################################################
#                               Long circuits                              #
############################################################################

@pytest.mark.parametrize("seed", [8, 17])
def test_long_three_wire_circuits(seed):
    c = random_word(3, 40, seed=seed)
    trace = RewriteTrace()
    nf, steps = normal_form_of(c, trace=trace)
    assert nf == synthesize_circuit(c)
    assert len(trace) == steps
    for entry in trace.entries:
        assert entry.after < entry.before
        assert len(entry.after.s) <= max_box_count(3)


def test_step_budget():
    with pytest.raises(TerminationError):
        normal_form_of(random_word(2, 10, seed=1), budget=0)


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("seed", range(200))
def test_agrees_with_both_oracles(n, seed):
    c = random_word(n, int(np.random.default_rng(seed).integers(41)), seed=seed)
    nf = normalize(c)
    assert nf == synthesize_circuit(c)
    assert interpret(normal_form_circuit(nf)) == interpret(c)


def test_beyond_matrix_registers():
    c = parse("n=7; H 6; CZ 5 6; S 0; H 3")
    nf = normalize(c)
    assert tableau_of(normal_form_circuit(nf)) == tableau_of(c)
    assert equivalent(c, c + Circuit(7, (Gate('W'),) * 6)).verdict == 'equal'
    assert equivalent(c, c + Circuit(7, (Gate('H', (2,)),))).verdict == 'different'


def test_normal_form_circuits_are_fixed_points():
    for n, seed in [(1, 2), (2, 5), (3, 1)]:
        nf = random_normal_form(n, seed)
        assert normalize(normal_form_circuit(nf)) == nf


############################################################################
#                               Identities                                 #
############################################################################

def with_identities(c: Circuit, rng: np.random.Generator, count: int = 3) -> Circuit:
    """ c with every Z replaced by S' S' S, and ``count`` of H^4, ω^3 or (-ω)^6 inserted """
    gates = []
    for g in c.gates:
        gates.extend([Gate('SP', g.wires), Gate('SP', g.wires), Gate('S', g.wires)] if g.kind == 'Z' else [g])
    for _ in range(count):
        w = int(rng.integers(c.n))
        identity = [[Gate('H', (w,))] * 4, [Gate('OMEGA')] * 3, [Gate('W')] * 6][int(rng.integers(3))]
        position = int(rng.integers(len(gates) + 1))
        gates[position:position] = identity
    return Circuit(c.n, tuple(gates))


@pytest.mark.parametrize("seed", [s if s < 5 else pytest.param(s, marks=pytest.mark.slow) for s in range(100)])
def test_inserted_identities_keep_the_normal_form(seed):
    rng = np.random.default_rng(seed)
    n = 1 + seed % 3
    gates = list(random_word(n, 8, seed=seed, kind='derived').gates)
    gates.insert(int(rng.integers(len(gates) + 1)), Gate('Z', (int(rng.integers(n)),)))
    c = Circuit(n, tuple(gates))
    result = equivalent(c, with_identities(c, rng))
    assert (result.verdict, result.delta_t) == ('equal', 0)


@settings(max_examples=40, deadline=None)
@given(circuits(1, max_size=10), circuits(1, max_size=10, kind='derived'), st.booleans())
def test_verdicts_agree_with_matrices(c1, other, same_boxes):
    c2 = c1 + Circuit(1, tuple(g for g in other.gates if g.is_scalar)) if same_boxes else other
    result = equivalent(c1, c2)
    t = equal_up_to_phase(interpret(c1), interpret(c2))
    if t is None:
        assert (result.verdict, result.delta_t) == ('different', None)
    else:
        assert (result.verdict, result.delta_t) == ('equal' if t == 0 else 'phase', t)


############################################################################
#                               Closure                                    #
############################################################################

def test_closure_reports_missing_relations():
    db = RelationDB()
    missing = check_closure(db, max_n=1, samples=2, length=12)
    assert len(missing) == 2
    assert db.derive_missing
    assert len(db) == 0


@pytest.mark.slow
def test_enumerated_relations_are_closed():
    db = enumerate_rules()
    assert check_closure(db, max_n=3, samples=20, length=20) == []
    assert db.derived_on_demand == 0
    assert db.derive_missing
