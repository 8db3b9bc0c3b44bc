"""
Expand y-rotation multiplexors into ROTY gates and CNOTs.

For k controls the expansion is 2^k rotations, each followed by a CNOT
whose control is the bit that flips between consecutive Gray codes
(wrapping around, so the last CNOT uses the most significant control).
Rotation i is seen by selector value j with sign (-1)^popcount(j & g_i),
hence the rotation angles are a signed Walsh-Hadamard transform of the
multiplexor angles.
"""
from __future__ import annotations

import numpy as np

from .circuit import Circuit, ElemOp, Loop, Multiplexor, cnot, roty


def gray(i: int) -> int:
    return i ^ (i >> 1)


def gray_angles(angles) -> np.ndarray:
    """Rotation angles phi with theta_j = sum_i (-1)^popcount(j & gray(i)) phi_i."""
    theta = np.asarray(angles, dtype=float)
    size = theta.shape[0]
    j = np.arange(size)
    g = gray(j)
    signs = np.array([[(-1) ** bin(jj & gi).count("1") for gi in g] for jj in j])
    return signs.T @ theta / size


def expand_mux(mux: Multiplexor) -> list[ElemOp]:
    k = len(mux.controls)
    if k == 0:
        return [roty(mux.target, mux.angles[0])]
    ops = []
    for i, phi in enumerate(gray_angles(mux.angles)):
        flipped = gray(i) ^ gray((i + 1) % 2**k)
        bit = flipped.bit_length() - 1
        ops.append(roty(mux.target, float(phi)))
        ops.append(cnot(mux.controls[bit], mux.target))
    return ops


def _expand_items(items):
    out = []
    for it in items:
        if isinstance(it, Multiplexor):
            out.extend(expand_mux(it))
        elif isinstance(it, Loop):
            out.append(Loop(it.id, it.reps, _expand_items(it.body)))
        else:
            out.append(it)
    return out


def expand_circuit(circuit: Circuit) -> Circuit:
    """Replace every multiplexor, loop bodies included, by its expansion."""
    return Circuit(circuit.num_qubits, _expand_items(circuit.items))
