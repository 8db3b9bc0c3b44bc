import numpy as np
import pytest

from opavg.circuit import Circuit, CircuitError, Kind
from opavg.qft import QftSpec, qft, qft_seo
from opavg.sim import base_matrix, circuit_unitary


def dft(n):
    size = 2**n
    jk = np.outer(np.arange(size), np.arange(size))
    return np.exp(2j * np.pi * jk / size) / np.sqrt(size)


def test_one_qubit_is_hadamard():
    ops = qft_seo(QftSpec((0,)))
    assert [op.kind for op in ops] == [Kind.HAD2]
    assert np.allclose(circuit_unitary(Circuit(1, ops)), base_matrix(Kind.HAD2))


def test_two_qubit_gates():
    ops = qft([0, 1])
    kinds = sorted(op.kind.value for op in ops)
    assert kinds == ["HAD2", "HAD2", "P1PH", "SWAP"]
    (phase,) = [op for op in ops if op.kind is Kind.P1PH]
    assert phase.angle == 90.0 and len(phase.controls) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_gate_count(n):
    assert len(qft(range(n))) == n + n * (n - 1) // 2 + n // 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matches_dft(n):
    assert np.abs(circuit_unitary(Circuit(n, qft(range(n)))) - dft(n)).max() < 1e-10


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_inverse_is_adjoint(n):
    u = circuit_unitary(Circuit(n, qft(range(n), inverse=True)))
    assert np.abs(u - dft(n).conj().T).max() < 1e-10


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_inverse_after_forward_is_identity(n):
    c = Circuit(n, qft(range(n)) + qft(range(n), inverse=True))
    assert np.abs(circuit_unitary(c) - np.eye(2**n)).max() < 1e-10


def test_register_offset_and_order():
    # QFT on qubits (3, 1) of a 4-qubit circuit: qubit 3 is the low bit
    u = circuit_unitary(Circuit(4, qft([3, 1])))
    f = dft(2)
    for j in range(4):
        for k in range(4):
            col = ((k & 1) << 3) | ((k >> 1) << 1)
            row = ((j & 1) << 3) | ((j >> 1) << 1)
            assert abs(u[row, col] - f[j, k]) < 1e-12


@pytest.mark.parametrize("qubits", [(), (0, 0)])
def test_bad_spec(qubits):
    with pytest.raises(CircuitError):
        QftSpec(qubits)
