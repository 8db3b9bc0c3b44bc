"""
Dense statevector simulation of circuits and the classical oracle for
gamma * <psi| f(A) |psi>.

Basis index bit q is qubit q (qubit 0 least significant).  In the
``(2,) * n`` tensor view of a state, qubit q lives on axis ``n - 1 - q``.
"""
from __future__ import annotations

from typing import Callable

import numpy as np
from scipy.linalg import schur

from .circuit import Circuit, Control, ElemOp, Kind, Multiplexor, Op

TWO_PI = 2.0 * np.pi

_FIXED = {
    Kind.HAD2: np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0),
    Kind.SIGX: np.array([[0, 1], [1, 0]], dtype=complex),
    Kind.SIGY: np.array([[0, -1j], [1j, 0]], dtype=complex),
    Kind.SIGZ: np.array([[1, 0], [0, -1]], dtype=complex),
    Kind.SWAP: np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}


def ry(deg: float) -> np.ndarray:
    t = np.deg2rad(deg) / 2
    return np.array([[np.cos(t), -np.sin(t)], [np.sin(t), np.cos(t)]], dtype=complex)


def base_matrix(kind: Kind, angle: float | None = None) -> np.ndarray:
    """Uncontrolled matrix of a gate kind (4x4 for SWAP, else 2x2)."""
    kind = Kind(kind)
    if kind in _FIXED:
        return _FIXED[kind].copy()
    t = np.deg2rad(angle)
    c, s = np.cos(t / 2), np.sin(t / 2)
    if kind is Kind.ROTX:
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if kind is Kind.ROTY:
        return ry(angle)
    if kind is Kind.ROTZ:
        return np.array([[np.exp(-0.5j * t), 0], [0, np.exp(0.5j * t)]], dtype=complex)
    if kind is Kind.P1PH:
        return np.array([[1, 0], [0, np.exp(1j * t)]], dtype=complex)
    raise ValueError(f"unknown gate kind {kind}")


def _controlled_view(tensor: np.ndarray, n: int, controls, free: list[int]):
    """Slice `tensor` down to the subspace selected by `controls`.

    Returns the view with the ``free`` qubits moved to the leading axes (in
    the given order).  Writes to the returned array land in `tensor`.
    """
    sel = [slice(None)] * n
    for c in controls:
        sel[n - 1 - c.qubit] = int(c.on)
    sub = tensor[tuple(sel)]
    # remaining axes keep their relative order
    remaining = [a for a in range(n) if not isinstance(sel[a], int)]
    src = [remaining.index(n - 1 - q) for q in free]
    return np.moveaxis(sub, src, list(range(len(free))))


def _apply_1q(tensor, n, m, target, controls):
    view = _controlled_view(tensor, n, controls, [target])
    view[...] = np.tensordot(m, view, axes=(1, 0))


def apply_op(state: np.ndarray, op: Op, n: int) -> None:
    """Apply one (non-loop) operation to a flat state vector in place."""
    if not state.flags.c_contiguous:
        raise ValueError("state must be C-contiguous for in-place updates")
    tensor = state.reshape((2,) * n)
    if isinstance(op, Multiplexor):
        for j, ang in enumerate(op.angles):
            ctl = [Control(q, bool((j >> b) & 1)) for b, q in enumerate(op.controls)]
            _apply_1q(tensor, n, ry(ang), op.target, ctl)
        return
    if op.kind is Kind.SWAP:
        a, b = op.targets
        view = _controlled_view(tensor, n, op.controls, [a, b])
        view[...] = np.swapaxes(view, 0, 1).copy()
        return
    _apply_1q(tensor, n, base_matrix(op.kind, op.angle), op.target, op.controls)


def basis_state(n: int, index: int = 0) -> np.ndarray:
    psi = np.zeros(2**n, dtype=complex)
    psi[index] = 1.0
    return psi


def simulate(circuit: Circuit, initial: np.ndarray | None = None) -> np.ndarray:
    """Run `circuit` on `initial` (default |0...0>) and return the final state."""
    n = circuit.num_qubits
    if initial is None:
        state = basis_state(n)
    else:
        state = np.array(initial, dtype=complex).reshape(-1)
        if state.shape[0] != 2**n:
            raise ValueError(f"state of length {state.shape[0]} for {n}-qubit circuit")
        state = np.ascontiguousarray(state)
    for op in circuit.ops():
        apply_op(state, op, n)
    return state


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Full unitary of a small circuit, column k = image of basis state k."""
    n = circuit.num_qubits
    if n > 12:
        raise ValueError(f"refusing to build a dense unitary on {n} qubits")
    dim = 2**n
    u = np.empty((dim, dim), dtype=complex)
    for k in range(dim):
        u[:, k] = simulate(circuit, basis_state(n, k))
    return u


def gate_matrix(op: Op) -> tuple[tuple[int, ...], np.ndarray]:
    """Matrix of `op` restricted to the qubits it touches.

    Returns ``(qubits, matrix)`` where ``qubits`` is sorted ascending and
    ``qubits[0]`` is the least significant bit of the matrix index.
    """
    qubits = tuple(sorted(op.qubits()))
    relabel = {q: i for i, q in enumerate(qubits)}
    if isinstance(op, Multiplexor):
        local = Multiplexor(relabel[op.target], [relabel[c] for c in op.controls], op.angles)
    else:
        local = ElemOp(
            op.kind,
            tuple(relabel[t] for t in op.targets),
            op.angle,
            tuple(Control(relabel[c.qubit], c.on) for c in op.controls),
        )
    return qubits, circuit_unitary(Circuit(len(qubits), [local]))


def ancilla_one_probability(state: np.ndarray, ancilla: int) -> float:
    probs = np.abs(np.asarray(state).reshape(-1)) ** 2
    idx = np.arange(probs.shape[0])
    return float(probs[(idx >> ancilla) & 1 == 1].sum())


def eigen_decompose_unitary(u: np.ndarray, tol: float = 1e-9):
    """Eigenphases in [0, 2pi) and orthonormal eigenvectors of a unitary.

    A unitary is normal, so its complex Schur form is diagonal and the Schur
    vectors are an orthonormal eigenbasis, degenerate blocks included.
    Phases within `tol` of 2pi are folded to 0.
    """
    u = np.asarray(u, dtype=complex)
    dim = u.shape[0]
    if u.shape != (dim, dim) or not np.allclose(u.conj().T @ u, np.eye(dim), atol=1e-10):
        raise ValueError("matrix is not unitary to 1e-10")
    t, z = schur(u, output="complex")
    phases = np.mod(np.angle(np.diag(t)), TWO_PI)
    phases[phases > TWO_PI - tol] = 0.0
    return phases, z


def group_phases(phases: np.ndarray, tol: float = 1e-8) -> list[np.ndarray]:
    """Indices of `phases` grouped into clusters of (numerically) equal values."""
    order = np.argsort(phases)
    groups, cur = [], [order[0]]
    for i in order[1:]:
        if phases[i] - phases[cur[-1]] <= tol:
            cur.append(i)
        else:
            groups.append(np.array(cur))
            cur = [i]
    groups.append(np.array(cur))
    return groups


def classical_average_oracle(
    atom_unitary: np.ndarray,
    v_unitary: np.ndarray,
    f: Callable[[float], float],
    params,
) -> float:
    """gamma * <psi| f(A) |psi> with exp(i A dt) = atom_unitary, psi = V|0>."""
    phases, z = eigen_decompose_unitary(atom_unitary)
    psi = np.asarray(v_unitary, dtype=complex)[:, 0]
    overlaps = np.abs(z.conj().T @ psi) ** 2
    total = 0.0
    for grp in group_phases(phases):
        weight = overlaps[grp].sum()  # <psi| projector |psi>
        a_x = phases[grp].mean() / params.dt
        total += f(a_x) * weight
    return float(params.gamma * total)
