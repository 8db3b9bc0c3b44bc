"""Quantum Fourier transform as HAD2 / controlled-P1PH / SWAP gates."""
from __future__ import annotations

from dataclasses import dataclass

from .circuit import CircuitError, ElemOp, had2, p1ph, swap


@dataclass(frozen=True)
class QftSpec:
    qubits: tuple[int, ...]  # qubits[0] is the least significant bit
    inverse: bool = False

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(self.qubits))
        if not self.qubits:
            raise CircuitError("QFT needs at least one qubit")
        if len(set(self.qubits)) != len(self.qubits):
            raise CircuitError(f"duplicate QFT qubits {self.qubits}")


def qft_seo(spec: QftSpec) -> list[ElemOp]:
    """Compile the DFT F[j, k] = exp(2 pi i jk / 2^n) / sqrt(2^n).

    Gate count is n + n(n-1)/2 + n//2.  With ``spec.inverse`` the result is
    the conjugate transpose: the same gates reversed with negated phases.
    """
    q = spec.qubits
    n = len(q)
    ops = []
    for i in reversed(range(n)):
        ops.append(had2(q[i]))
        for m in reversed(range(i)):
            ops.append(p1ph(q[i], 180.0 / 2 ** (i - m), [q[m]]))
    for i in range(n // 2):
        ops.append(swap(q[i], q[n - 1 - i]))
    if spec.inverse:
        ops = [_dagger(op) for op in reversed(ops)]
    return ops


def qft(qubits, inverse: bool = False) -> list[ElemOp]:
    return qft_seo(QftSpec(tuple(qubits), inverse))


def _dagger(op: ElemOp) -> ElemOp:
    if op.angle is None:
        return op  # HAD2 and SWAP are self-inverse
    return ElemOp(op.kind, op.targets, -op.angle, op.controls)
