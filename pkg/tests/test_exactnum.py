import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from src.circuit import Gate, gate_matrix
from src.exactnum import (CycloMatrix, CycloNumber, H_SCALE, MINUS_OMEGA, OMEGA, ONE, ZERO, equal_up_to_phase,
                          unit_phase)
from src.exactnum.cyclo import OMEGA_COMPLEX
from strategies import cyclo_numbers, ring_elements


def close(x: complex, y: complex) -> bool:
    return abs(x - y) < 1e-9


def test_reduced_representation():
    assert CycloNumber(3, 6, 1) == CycloNumber(1, 2, 0)
    assert CycloNumber(0, 0, 5).k == 0
    assert CycloNumber(9, 3, 1).k == 0
    assert CycloNumber(1, 3, 2).k == 2


def test_negative_exponent_is_rejected():
    with pytest.raises(ValueError):
        CycloNumber(1, 0, -1)


def test_omega_is_a_cube_root_of_unity():
    assert OMEGA ** 3 == ONE
    assert OMEGA * OMEGA == CycloNumber(-1, -1)
    assert ONE + OMEGA + OMEGA * OMEGA == ZERO
    assert MINUS_OMEGA ** 6 == ONE
    assert close(complex(OMEGA), OMEGA_COMPLEX)


@pytest.mark.parametrize("t", range(6))
def test_unit_phases(t):
    assert unit_phase(t) == MINUS_OMEGA ** t
    assert unit_phase(t).is_unit_phase() == t
    assert unit_phase(t + 6) == unit_phase(t)


def test_non_phases_are_not_unit_phases():
    assert CycloNumber(2).is_unit_phase() is None
    assert H_SCALE.is_unit_phase() is None


@settings(max_examples=300)
@given(ring_elements)
def test_unit_phase_lookup_agrees_with_norm(x):
    by_power = next((s for s in range(6) if MINUS_OMEGA ** s == x), None)
    numerator, denominator = x.norm()
    assert x.is_unit_phase() == by_power
    assert (by_power is not None) == (numerator == denominator)
    assert (by_power is not None) == (x * x.conj() == ONE)


def test_six_distinct_unit_phases():
    assert len({MINUS_OMEGA ** s for s in range(6)}) == 6


def test_hadamard_scale_is_invertible():
    assert H_SCALE * H_SCALE.inverse() == ONE
    assert close(abs(complex(H_SCALE)) ** 2, 1 / 3)


def test_inverse_errors():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ValueError):
        CycloNumber(2).inverse()


@seed(3)
@settings(max_examples=200, deadline=None)
@given(x=cyclo_numbers, y=cyclo_numbers, z=cyclo_numbers)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO
    assert x * ONE == x


@settings(max_examples=200, deadline=None)
@given(x=cyclo_numbers, y=cyclo_numbers)
def test_agrees_with_complex_numbers(x, y):
    assert close(complex(x + y), complex(x) + complex(y))
    assert close(complex(x * y), complex(x) * complex(y))
    assert close(complex(x.conj()), complex(x).conjugate())


@settings(max_examples=100, deadline=None)
@given(x=cyclo_numbers, y=cyclo_numbers)
def test_conjugation(x, y):
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()
    num, den = x.norm()
    assert close(abs(complex(x)) ** 2, num / den)


@given(st.integers(min_value=-50, max_value=50))
def test_integers_coerce(k):
    assert CycloNumber(k) == k
    assert ONE * k == CycloNumber(k)
    assert k - ONE == CycloNumber(k - 1)


############################################################################
#                               Matrices                                   #
############################################################################

def test_matrix_products():
    m = CycloMatrix.from_entries([[1, OMEGA], [0, MINUS_OMEGA]])
    assert CycloMatrix.identity(2) @ m == m
    assert (m @ m)[0, 1] == OMEGA + OMEGA * MINUS_OMEGA
    assert m.tensor(CycloMatrix.identity(3)).shape == (6, 6)
    assert m.dagger()[1, 0] == OMEGA.conj()


def test_hadamard_is_unitary_of_order_four():
    h = gate_matrix(Gate('H', (0,)))
    assert h.is_unitary()
    assert h @ h.dagger() == CycloMatrix.identity(3)
    assert h.power(4) == CycloMatrix.identity(3)
    assert h.power(2) != CycloMatrix.identity(3)
    assert h.power(0) == CycloMatrix.identity(3)


def test_negative_power_is_rejected():
    h = gate_matrix(Gate('H', (0,)))
    with pytest.raises(ValueError):
        h.power(-1)
    with pytest.raises(ValueError):
        CycloMatrix.zeros(2, 3).power(2)


def test_basis_vectors():
    e = CycloMatrix.basis(9, 4)
    assert e.shape == (9, 1)
    assert e[4, 0] == ONE and e[0, 0] == ZERO
    h = gate_matrix(Gate('H', (0,)))
    assert CycloMatrix.basis(3).apply_local(h, [0], 1) == h @ CycloMatrix.basis(3)
    with pytest.raises(ValueError):
        CycloMatrix.basis(3, 3)


def test_apply_local_matches_tensor_product():
    h = gate_matrix(Gate('H', (0,)))
    eye = CycloMatrix.identity(9)
    assert eye.apply_local(h, [1], 2) == CycloMatrix.identity(3).tensor(h)
    assert eye.apply_local(h, [0], 2) == h.tensor(CycloMatrix.identity(3))


@pytest.mark.parametrize("t", range(6))
def test_equal_up_to_phase(t):
    h = gate_matrix(Gate('H', (0,)))
    assert equal_up_to_phase(h.scale(unit_phase(t)), h) == t


def test_equal_up_to_phase_failures():
    h = gate_matrix(Gate('H', (0,)))
    s = gate_matrix(Gate('S', (0,)))
    assert equal_up_to_phase(h, s) is None
    assert equal_up_to_phase(h.scale(2), h) is None
    with pytest.raises(ValueError):
        equal_up_to_phase(h, CycloMatrix.identity(9))
    with pytest.raises(ValueError):
        equal_up_to_phase(h, CycloMatrix.zeros(3, 3))
