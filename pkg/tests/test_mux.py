import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import block_diag

from opavg.circuit import (
    Circuit,
    Kind,
    Loop,
    Multiplexor,
    elementary_op_count,
    had2,
)
from opavg.mux import expand_circuit, expand_mux, gray, gray_angles
from opavg.sim import circuit_unitary, ry
from randcirc import circuits


def mux_matrix(angles):
    # target is qubit 0, controls 1..k: selector j owns the 2x2 block j
    return block_diag(*[ry(a) for a in angles])


def test_gray_sequence():
    assert [gray(i) for i in range(8)] == [0, 1, 3, 2, 6, 7, 5, 4]


def test_no_controls_is_plain_rotation():
    ops = expand_mux(Multiplexor(2, (), [42.0]))
    assert len(ops) == 1 and ops[0].kind is Kind.ROTY and ops[0].angle == 42.0


def test_one_control_layout():
    t0, t1 = 70.0, 10.0
    ops = expand_mux(Multiplexor(0, (1,), [t0, t1]))
    assert [op.kind for op in ops] == [Kind.ROTY, Kind.SIGX, Kind.ROTY, Kind.SIGX]
    assert ops[0].angle == pytest.approx((t0 + t1) / 2)
    assert ops[2].angle == pytest.approx((t0 - t1) / 2)
    assert all(op.controls[0].qubit == 1 for op in ops[1::2])
    u = circuit_unitary(Circuit(2, ops))
    assert np.abs(u - mux_matrix([t0, t1])).max() < 1e-10


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_unitary_equivalence(k):
    rng = np.random.default_rng(k)
    for _ in range(20):
        angles = rng.uniform(-360, 360, 2**k)
        mux = Multiplexor(0, range(1, k + 1), angles)
        ops = expand_mux(mux)
        assert len(ops) == 2 ** (k + 1)
        u = circuit_unitary(Circuit(k + 1, ops))
        assert np.abs(u - mux_matrix(angles)).max() < 1e-10


def test_last_cnot_uses_top_control():
    ops = expand_mux(Multiplexor(0, (3, 1, 2), np.zeros(8)))
    assert ops[-1].controls[0].qubit == 2


@given(
    perm_seed=st.integers(0, 10_000),
    angles=st.lists(st.floats(-720, 720), min_size=8, max_size=8),
)
@settings(max_examples=50)
def test_scattered_qubits_match_direct_simulation(perm_seed, angles):
    perm = [int(q) for q in np.random.default_rng(perm_seed).permutation(5)]
    mux = Multiplexor(perm[0], perm[1:4], angles)
    direct = circuit_unitary(Circuit(5, [mux]))
    expanded = circuit_unitary(Circuit(5, expand_mux(mux)))
    assert np.abs(direct - expanded).max() < 1e-10


def test_gray_angles_invert_signed_sum():
    theta = np.arange(8.0) ** 2
    phi = gray_angles(theta)
    for j in range(8):
        s = sum((-1) ** bin(j & gray(i)).count("1") * phi[i] for i in range(8))
        assert s == pytest.approx(theta[j])


def test_expand_circuit_fixed_point():
    c = Circuit(2, [had2(0), had2(1)])
    assert expand_circuit(c) == c


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_expand_circuit_count_bookkeeping(k):
    c = Circuit(k + 2, [had2(0), Multiplexor(k + 1, range(k), np.ones(2**k))])
    assert elementary_op_count(expand_circuit(c)) - elementary_op_count(c) == 2 * 2**k - 1


def test_expand_inside_loop():
    k = 2
    c = Circuit(3, [Loop(1, 2, [Multiplexor(0, (1, 2), [1.0, 2.0, 3.0, 4.0])])])
    out = expand_circuit(c)
    (lp,) = out.items
    assert isinstance(lp, Loop) and lp.reps == 2
    assert elementary_op_count(out) == 2 * (2 * 2**k)


@given(circuits())
@settings(max_examples=80)
def test_expand_circuit_preserves_unitary_and_is_idempotent(c):
    once = expand_circuit(c)
    assert expand_circuit(once) == once
    assert np.abs(circuit_unitary(once) - circuit_unitary(c)).max() < 1e-10
