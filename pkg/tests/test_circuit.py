import pytest
from hypothesis import given, settings

from src.circuit import (Circuit, CircuitSyntaxError, Gate, WireRangeError, alphabet, format_circuit, gate_matrix,
                         interpret, parse, random_word)
from src.exactnum import CycloMatrix, MINUS_OMEGA, OMEGA, ONE
from strategies import circuits

IDENTITY_3 = CycloMatrix.identity(3)


def test_parse_statements_and_powers():
    c = parse("n=2\nH 0; S^2 1   # two statements on one line\nCZ 0 1\n")
    assert c.n == 2
    assert c.gates == (Gate('H', (0,)), Gate('S', (1,)), Gate('S', (1,)), Gate('CZ', (0, 1)))


def test_format_is_read_back():
    c = parse("n=3; W; SWAP 0 2; X 1; CZ 1 2")
    assert parse(format_circuit(c)) == c
    assert parse(format_circuit(c, "\n")) == c


def test_powers_are_expanded_words():
    c = parse("n=2; S^2 1; W^6; H 0")
    assert format_circuit(c) == "n=2; S 1; S 1; W; W; W; W; W; W; H 0"
    assert format_circuit(c, powers=True) == "n=2; S^2 1; W^6; H 0"
    assert format_circuit(parse("n=1; H^0 0")) == "n=1"


@settings(max_examples=50)
@given(circuits(2, max_size=20, kind='derived'))
def test_formats_with_powers_are_read_back(c):
    assert parse(format_circuit(c, powers=True)) == c


def test_empty_circuit():
    assert parse("n=0") == Circuit(0)
    assert interpret(parse("n=1")) == IDENTITY_3


@pytest.mark.parametrize("text, line, column, token", [
    ("n=2\nQ 0", 2, 1, "Q"),
    ("n=2\nH 0 1", 2, 1, "H"),
    ("n=2\nH x", 2, 3, "x"),
    ("n=2\nCZ 1 0", 2, 1, "CZ"),
    ("n=2\nCZ 0 0", 2, 1, "CZ"),
    ("H 0", 1, 1, "H"),
])
def test_syntax_errors_are_located(text, line, column, token):
    with pytest.raises(CircuitSyntaxError) as info:
        parse(text)
    assert (info.value.line, info.value.column, info.value.token) == (line, column, token)


def test_wire_out_of_range():
    with pytest.raises(WireRangeError) as info:
        parse("n=2\nH 0; S 2")
    assert info.value.line == 2
    assert info.value.token == "2"
    assert isinstance(info.value, ValueError)


def test_missing_header():
    with pytest.raises(CircuitSyntaxError):
        parse("   # nothing here\n")


############################################################################
#                               Matrices                                   #
############################################################################

def test_cz_is_diagonal():
    w, w2 = OMEGA, OMEGA * OMEGA
    assert gate_matrix(Gate('CZ', (0, 1))) == CycloMatrix.diagonal([1, 1, 1, 1, w, w2, 1, w2, w])


def test_clock_and_shift():
    assert interpret(parse("n=1; Z 0")) == CycloMatrix.diagonal([ONE, OMEGA, OMEGA * OMEGA])
    assert interpret(parse("n=1; X 0")) == CycloMatrix.from_entries([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


@pytest.mark.parametrize("text", ["n=1; H 0; H 0; H 0; H 0", "n=1; S 0; S 0; S 0", "n=2; CZ 0 1; CZ 0 1; CZ 0 1",
                                  "n=0; W; W; W; W; W; W"])
def test_primitive_orders(text):
    c = parse(text)
    assert interpret(c) == CycloMatrix.identity(3 ** c.n)


def test_hadamard_s_squared_cubed_is_minus_omega():
    c = parse("n=1" + "; S 0; S 0; H 0" * 3)
    assert interpret(c) == IDENTITY_3.scale(MINUS_OMEGA)


def test_circuits_read_diagrammatically():
    hs = interpret(parse("n=1; H 0; S 0"))
    assert hs == gate_matrix(Gate('S', (0,))) @ gate_matrix(Gate('H', (0,)))


@pytest.mark.parametrize("gate", [Gate('SP', (0,)), Gate('Z', (1,)), Gate('X', (2,)), Gate('MINUS'), Gate('OMEGA'),
                                  Gate('SWAP', (0, 1)), Gate('CX', (1, 2)), Gate('XC', (0, 1)), Gate('CZ', (0, 2)),
                                  Gate('SWAP', (0, 2)), Gate('CX', (0, 2))])
def test_expansion_is_exact(gate):
    c = Circuit(3, (gate,))
    expanded = c.expand()
    assert expanded.is_primitive()
    assert interpret(expanded) == interpret(c)


def test_z_expansion_matches_s_prime():
    assert interpret(parse("n=1; H 0; H 0; S 0; S 0; H 0; H 0; S 0")) == interpret(parse("n=1; S 0; SP 0; SP 0"))


@settings(max_examples=30, deadline=None)
@given(circuits(2, max_size=8, kind='derived'))
def test_inverse(c):
    assert interpret(c + c.inverse()) == CycloMatrix.identity(9)


############################################################################
#                               Random words                               #
############################################################################

def test_alphabets():
    assert len(alphabet(1)) == 3
    assert len(alphabet(3)) == 1 + 6 + 2
    assert all(g.is_primitive for g in alphabet(3))
    assert not all(g.is_primitive for g in alphabet(3, 'derived'))
    with pytest.raises(ValueError):
        alphabet(2, 'clifford')


def test_random_word_is_seeded():
    c = random_word(3, 25, seed=5)
    assert len(c) == 25
    assert c == random_word(3, 25, seed=5)
    assert c.is_primitive()


def test_random_word_arguments():
    with pytest.raises(ValueError):
        random_word(0, 5)
    with pytest.raises(ValueError):
        random_word(2, -1)
