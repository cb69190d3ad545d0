from dataclasses import replace

import pytest

from src.circuit import Circuit, Gate, interpret, random_word
from src.exactnum import equal_up_to_phase
from src.normalform import make_box
from src.pauli import Tableau, random_tableau, tableau_of
from src.relations import (D_TOP, E_INPUT, END, F_INPUT, FAMILIES, INPUT, LADDER, PUBLISHED_RULE_COUNT, RelationDB,
                           check_dirty_shape, clifford_word, derive_rule, enumerate_rules, expected_family_sizes,
                           family_instances, family_tag, gate_definitions, gate_relations, label_before, phase_rules,
                           pauli_s_words, placement_violation, rule_digest, rule_key, shorter_local_word,
                           single_qutrit_words, split_local, verify_rule, verify_gate_relations)
from src.relations.derive import bindings_of
from src.tools import load_document, save_document


def h(w: int) -> Gate:
    return Gate('H', (w,))


def s(w: int) -> Gate:
    return Gate('S', (w,))


def z(w: int) -> Gate:
    return Gate('Z', (w,))


############################################################################
#                               Gate relations                             #
############################################################################

def test_gate_relations_hold():
    checks = verify_gate_relations()
    assert len(checks) == len(gate_relations()) + len(gate_definitions())
    assert len(gate_relations()) == 18
    failed = [c.name for c in checks if not c.ok]
    assert failed == []


############################################################################
#                               Placement                                  #
############################################################################

def test_labels():
    b = make_box('B', (1, 1), (0, 1))
    d = make_box('D', (1, 1), (0, 1))
    assert label_before(make_box('A', (1, 0), 0), 0) == INPUT
    assert (label_before(b, 0), label_before(b, 1)) == (INPUT, LADDER)
    assert label_before(make_box('C', 1, 0), 0) == LADDER
    assert (label_before(d, 0), label_before(d, 1)) == (D_TOP, INPUT)
    assert label_before(make_box('E', 1, 0), 0) == E_INPUT
    assert label_before(make_box('F', 1, 0), 0) == F_INPUT
    assert label_before(None, 0) == END


@pytest.mark.parametrize("gate, label, allowed", [
    (h(0), INPUT, True), (h(0), LADDER, False),
    (s(0), E_INPUT, True), (s(0), F_INPUT, False),
    (Gate('X', (0,)), LADDER, True), (Gate('X', (0,)), INPUT, False),
    (z(0), F_INPUT, True), (z(0), INPUT, False),
    (Gate('W'), INPUT, False),
])
def test_single_wire_placement(gate, label, allowed):
    labels = {0: label}
    assert check_dirty_shape([gate], labels) is allowed
    assert (placement_violation([gate], labels) is None) is allowed


def test_cz_placement():
    cz = Gate('CZ', (0, 1))
    assert check_dirty_shape([cz], {0: D_TOP, 1: INPUT})
    assert not check_dirty_shape([cz], {0: INPUT, 1: LADDER})
    assert not check_dirty_shape([cz], {0: E_INPUT, 1: INPUT})
    assert placement_violation([h(0), cz], {0: INPUT, 1: END}) == cz


############################################################################
#                               Short words                                #
############################################################################

def test_single_qutrit_word_table():
    table = single_qutrit_words()
    assert len(table) == 216
    assert table[Tableau.identity(1)] == ()
    for tableau, word in list(table.items())[::11]:
        assert tableau_of(Circuit(1, word)) == tableau


@pytest.mark.parametrize("seed", range(6))
def test_clifford_words(seed):
    for n in (1, 2):
        t = random_tableau(n, seed)
        word = clifford_word(t)
        assert all(g.is_primitive and not g.is_scalar for g in word)
        assert tableau_of(Circuit(n, tuple(word))) == t


def test_clifford_word_offset():
    t = tableau_of(random_word(2, 20, seed=2))
    word = clifford_word(t, offset=3)
    assert min(w for g in word for w in g.wires) >= 3
    assert tableau_of(Circuit(5, tuple(word))) == tableau_of(Circuit(5, tuple(g.shifted(3) for g in clifford_word(t))))


def test_split_local():
    assert split_local(tableau_of(Circuit(2, (h(0), s(1))))) is not None
    assert split_local(tableau_of(Circuit(2, (Gate('CZ', (0, 1)),)))) is None


def test_pauli_s_word_table():
    table = pauli_s_words()
    assert len(table) == 27
    assert table[Tableau.identity(1)] == ()


@pytest.mark.parametrize("kinds", [("H",) * 4, ("H",) * 5, ("S",) * 3, ("H", "H", "H", "H", "S"), ("X", "X", "X", "Z"),
                                   ("S", "Z", "Z", "Z", "S", "S"), ("X",) * 3])
def test_shorter_local_word(kinds):
    short = shorter_local_word(kinds)
    assert short is not None
    new, t = short
    assert len(new) < len(kinds)
    run = Circuit(1, tuple(Gate(k, (0,)) for k in kinds))
    assert equal_up_to_phase(interpret(run), interpret(Circuit(1, tuple(Gate(k, (0,)) for k in new)))) == t


def test_shortest_local_words_stay():
    assert shorter_local_word(("H",)) is None
    assert shorter_local_word(("S", "H")) is None
    assert shorter_local_word(("H", "X")) is None
    assert shorter_local_word(("H",) * 4) == ((), 0)


############################################################################
#                               Families                                   #
############################################################################

def test_family_sizes():
    sizes = expected_family_sizes()
    assert sum(sizes.values()) == PUBLISHED_RULE_COUNT == 380
    assert sizes["H.A"] == 8
    assert sizes["CZ.AB"] == 72
    assert sizes["CZ.BB"] == sizes["CZ.DD"] == 81
    assert len(family_instances("S.E")) == 3
    with pytest.raises(ValueError):
        family_instances("T.A")


def test_family_tags():
    b0, b1 = make_box('B', (0, 0), (0, 1)), make_box('B', (1, 2), (1, 2))
    assert family_tag([s(1)], [b0]) == "S1.B"
    assert family_tag([Gate('CZ', (0, 1))], [b1, b0]) == "CZ.BB"
    assert family_tag([Gate('MINUS')] * 2, []) == "phase.minus"
    assert bindings_of([b1, b0]) == (('a', 1), ('b', 2), ('c', 0), ('d', 0))
    assert bindings_of([make_box('E', 2, 0)]) == (('b', 2),)


def test_every_family_instance_is_well_formed():
    for tag, instances in FAMILIES.items():
        for g, context in instances():
            _, offset = rule_key([g], context)
            assert offset == 0, tag


############################################################################
#                               Derivation                                 #
############################################################################

@pytest.mark.parametrize("a, b", [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)])
def test_hadamard_through_a(a, b):
    rule = derive_rule(h(0), [make_box('A', (a, b), 0)])
    assert rule.family == "H.A"
    assert rule.updated == (make_box('A', (b, -a), 0),)
    assert verify_rule(rule) == (True, None)


@pytest.mark.parametrize("a, b", [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)])
def test_s_through_a(a, b):
    rule = derive_rule(s(0), [make_box('A', (a, b), 0)])
    assert rule.updated == (make_box('A', (a, a + b), 0),)
    assert verify_rule(rule)[0]


def test_s_through_a02_leaves_s_prime():
    rule = derive_rule(s(0), [make_box('A', (0, 2), 0)])
    assert rule.updated == (make_box('A', (0, 2), 0),)
    assert rule.residual == (z(0), z(0), s(0))
    assert rule.t == 0


@pytest.mark.parametrize("a, b, c, d", [(0, 0, 0, 0), (1, 2, 0, 1), (2, 1, 1, 2), (1, 1, 2, 0)])
def test_cz_through_two_b_boxes(a, b, c, d):
    context = [make_box('B', (a, b), (1, 2)), make_box('B', (c, d), (0, 1))]
    rule = derive_rule(Gate('CZ', (0, 1)), context, "CZ.BB")
    updated = {box.wires: box.index for box in rule.updated}
    assert updated == {(1, 2): (a, (b + 2 * c) % 3), (0, 1): (c, (d + 2 * a) % 3)}
    assert not any(g.kind in ('S', 'CZ') and 0 in g.wires for g in rule.residual)
    assert verify_rule(rule)[0]


@pytest.mark.parametrize("a, b, c, d", [(0, 0, 0, 0), (1, 0, 1, 0), (2, 1, 1, 2), (1, 2, 2, 2)])
def test_cz_through_two_d_boxes(a, b, c, d):
    context = [make_box('D', (a, b), (0, 1)), make_box('D', (c, d), (1, 2))]
    rule = derive_rule(Gate('CZ', (1, 2)), context, "CZ.DD")
    assert [g for g in rule.residual if 2 in g.wires] == [z(2)] * (a * c % 3)
    assert verify_rule(rule)[0]


def test_derivation_needs_a_context():
    with pytest.raises(ValueError):
        derive_rule(h(0), [])


def test_corrupted_rule_has_a_witness():
    rule = derive_rule(h(0), [make_box('A', (1, 1), 0)])
    ok, witness = verify_rule(replace(rule, t=rule.t + 1))
    assert not ok
    assert witness is not None and witness.lhs != witness.rhs


def test_phase_rules():
    assert [r.family for r in phase_rules()] == ["phase.minus", "phase.omega"]
    assert all(verify_rule(r)[0] for r in phase_rules())


############################################################################
#                               Database                                   #
############################################################################

def small_db() -> RelationDB:
    return RelationDB([derive_rule(h(0), [make_box('A', (1, 0), 0)]),
                       derive_rule(s(0), [make_box('C', 2, 0)]),
                       derive_rule(s(1), [make_box('B', (2, 1), (0, 1))])])


def test_database_round_trip(tmp_path):
    db = small_db()
    path = str(tmp_path / "relations" / "db.yaml")
    db.save(path)
    loaded = RelationDB.load(path)
    assert len(loaded) == 3
    assert {rule_digest(r) for r in loaded} == {rule_digest(r) for r in db}
    assert loaded.family_counts() == {"H.A": 1, "S.C": 1, "S1.B": 1}
    assert loaded.reverify() == []
    assert loaded.verified


def test_database_detects_tampering(tmp_path):
    path = str(tmp_path / "db.yaml")
    small_db().save(path)
    document = load_document(path)
    document["rules"][0]["t"] = (int(document["rules"][0]["t"]) + 1) % 6
    save_document(document, path)

    with pytest.raises(ValueError):
        RelationDB.load(path)
    damaged = RelationDB.load(path, check_digest=False)
    failures = damaged.reverify()
    assert len(failures) == 1
    assert "!=" in failures[0][1]
    assert not damaged.verified


def test_database_count_must_match(tmp_path):
    path = str(tmp_path / "db.yaml")
    small_db().save(path)
    document = load_document(path)
    document["count"] = 7
    save_document(document, path)
    with pytest.raises(ValueError):
        RelationDB.load(path)


def test_lookup_shifts_and_derives():
    db = RelationDB()
    box = make_box('A', (1, 0), 3)
    rule, offset = db.lookup(h(3), [box])
    assert (rule.family, offset) == ("H.A", 3)
    assert db.derived_on_demand == 1
    db.lookup(h(5), [make_box('A', (1, 0), 5)])
    assert db.derived_on_demand == 1
    assert ((h(0),), (make_box('A', (1, 0), 0),)) in db


def test_lookup_without_derivation():
    with pytest.raises(KeyError):
        RelationDB(derive_missing=False).lookup(h(0), [make_box('A', (1, 0), 0)])


@pytest.mark.slow
def test_enumerate_every_relation():
    db = enumerate_rules(verify=True)
    assert len(db) == PUBLISHED_RULE_COUNT
    assert db.family_counts() == expected_family_sizes()
    assert db.verified
