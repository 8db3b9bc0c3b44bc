"""
Circuit generator for gamma * <psi| f(A) |psi>.

Register layout on nb + nbj + 1 qubits::

    [atom 0 .. nb-1][probe nb .. nb+nbj-1][ancilla nb+nbj]

Time order: V on the atom register, Hadamards on the probes, controlled
powers exp(i 2^p A dt) on the atom (probe p is the 2^p bit of the probe
value j), inverse QFT on the probes, and finally one multiplexor that
rotates the ancilla by 2 asin(sqrt(gamma f(2 pi j / (dt N_Sj)))) for each
probe value j.  When every atom eigenphase is a multiple of 2 pi / N_Sj
the ancilla reads |1> with probability exactly gamma <psi| f(A) |psi>.

Providers are plain callables:

* atom provider ``atom(p, control) -> list of items`` implements
  exp(i 2^p A dt) on qubits 0..nb-1, every gate controlled on ``control``
  (or uncontrolled when ``control is None``);
* state-prep provider ``v() -> list of items`` implements V on 0..nb-1;
* f is any ``float -> float`` function.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .circuit import (
    Circuit,
    CircuitError,
    ElemOp,
    Item,
    Kind,
    Loop,
    Multiplexor,
    add_control,
    had2,
    p1ph,
)
from .qft import qft
from .sim import circuit_unitary, eigen_decompose_unitary

AtomProvider = Callable[[int, "int | None"], list]
StatePrepProvider = Callable[[], list]
ScalarFunction = Callable[[float], float]

POWER_MODES = ("loop", "scale-angle")


@dataclass(frozen=True)
class AvgParams:
    nb: int  # atom qubits
    nbj: int  # probe qubits
    gamma: float
    dt: float  # radians; the command line takes dt / (2 pi)

    def __post_init__(self):
        if self.nb < 1 or self.nbj < 1:
            raise ValueError(f"nb and nbj must be >= 1, got nb={self.nb}, nbj={self.nbj}")
        if not (self.gamma > 0 and math.isfinite(self.gamma)):
            raise ValueError(f"gamma must be a positive real, got {self.gamma}")
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise ValueError(f"dt must be a positive real, got {self.dt}")

    @classmethod
    def from_dt_over_2pi(cls, nb: int, nbj: int, gamma: float, dt_over_2pi: float) -> AvgParams:
        return cls(nb, nbj, gamma, 2 * math.pi * dt_over_2pi)

    @property
    def ns(self) -> int:
        return 2**self.nb

    @property
    def nsj(self) -> int:
        return 2**self.nbj

    @property
    def dt_over_2pi(self) -> float:
        return self.dt / (2 * math.pi)

    @property
    def num_qubits(self) -> int:
        return self.nb + self.nbj + 1

    @property
    def atom_qubits(self) -> list[int]:
        return list(range(self.nb))

    @property
    def probe_qubits(self) -> list[int]:
        return list(range(self.nb, self.nb + self.nbj))

    @property
    def ancilla(self) -> int:
        return self.nb + self.nbj

    def grid(self, j: int) -> float:
        """Argument of f encoded for probe value j."""
        return 2 * math.pi * j / (self.dt * self.nsj)


GAMMA_F_BOUND = "0 <= gamma*f(2*pi*j/(dt*N_Sj)) <= 1"
EIGEN_BOUND = "A_x*dt/(2*pi) < (N_Sj-1)/N_Sj"


@dataclass(frozen=True)
class Violation:
    inequality: str
    index: int  # j for the gamma*f bound, x for the eigenvalue bound
    value: float

    def __str__(self):
        var = "j" if self.inequality == GAMMA_F_BOUND else "x"
        return f"violated {self.inequality} at {var}={self.index} (value {self.value:.10g})"


class ValidationError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


def validate(
    params: AvgParams,
    f: ScalarFunction,
    eigenvalues: Sequence[float] | None = None,
    tol: float = 1e-9,
) -> Violation | None:
    """Return the first violated input inequality, or None.

    The eigenvalue bound is strict; values within `tol` of the bound count
    as violations since eigenphases only come out of a numerical
    eigensolver.
    """
    for j in range(params.nsj):
        v = params.gamma * f(params.grid(j))
        if not (0.0 <= v <= 1.0):
            return Violation(GAMMA_F_BOUND, j, v)
    if eigenvalues is not None:
        bound = (params.nsj - 1) / params.nsj
        for x, a in enumerate(eigenvalues):
            v = a * params.dt / (2 * math.pi)
            if v >= bound - tol:
                return Violation(EIGEN_BOUND, x, v)
    return None


def mux_angles(params: AvgParams, f: ScalarFunction) -> list[float]:
    """Ancilla y-rotation angles (degrees) per probe value j."""
    out = []
    for j in range(params.nsj):
        v = params.gamma * f(params.grid(j))
        if not (0.0 <= v <= 1.0):
            raise ValueError(f"gamma*f = {v} outside [0, 1] at j={j}")
        out.append(math.degrees(2 * math.asin(math.sqrt(v))))
    return out


def _ops_in(items):
    for it in items:
        if isinstance(it, Loop):
            yield from it.body
        else:
            yield it


def _check_fragment(items, allowed: set[int], what: str, control: int | None = None):
    for op in _ops_in(items):
        extra = set(op.qubits()) - allowed
        if extra:
            raise CircuitError(f"{what} touches qubits {sorted(extra)} outside its register")
        if control is None:
            continue
        if isinstance(op, Multiplexor) or control in op.targets or not any(
            c.qubit == control and c.on for c in op.controls
        ):
            raise CircuitError(f"{what}: every gate must be controlled on probe qubit {control}")


def build_circuit(
    params: AvgParams,
    atom: AtomProvider,
    v: StatePrepProvider,
    f: ScalarFunction,
    eigenvalues: Sequence[float] | None = None,
) -> Circuit:
    violation = validate(params, f, eigenvalues)
    if violation is not None:
        raise ValidationError(violation)
    atom_reg = set(params.atom_qubits)
    circ = Circuit(params.num_qubits)

    prep = list(v())
    _check_fragment(prep, atom_reg, "V")
    circ.extend(prep)

    circ.extend(had2(q) for q in params.probe_qubits)

    for p, probe in enumerate(params.probe_qubits):
        frag = list(atom(p, probe))
        _check_fragment(frag, atom_reg | {probe}, f"atom power 2^{p}", control=probe)
        circ.extend(frag)

    circ.extend(qft(params.probe_qubits, inverse=True))
    circ.append(Multiplexor(params.ancilla, params.probe_qubits, mux_angles(params, f)))
    return circ


# ---------------------------------------------------------------- providers


def _scale(op: ElemOp, factor: int) -> ElemOp:
    if op.angle is None:
        return op
    angle = op.angle * factor
    if op.kind is Kind.P1PH:
        angle = math.fmod(angle, 360.0)
    return ElemOp(op.kind, op.targets, angle, op.controls)


def powered_atom(base: Callable[[], list], power_mode: str = "loop") -> AtomProvider:
    """Atom provider built from an uncontrolled exp(i A dt) fragment.

    ``loop`` wraps the controlled fragment in a LOOP of 2^p repetitions.
    ``scale-angle`` emits the fragment once with every angle multiplied by
    2^p, which equals the 2^p-th power only when the fragment's angles are
    linear in dt (e.g. a product of phase gates).
    """
    if power_mode not in POWER_MODES:
        raise ValueError(f"unknown power mode {power_mode!r}")

    def fragment(p: int, control: int | None) -> list[Item]:
        ops = list(base())
        if control is not None:
            ops = [add_control(op, control) for op in ops]
        if power_mode == "loop":
            return [Loop(p + 1, 2**p, ops)]
        return [_scale(op, 2**p) for op in ops]

    return fragment


def qft_atom(params: AvgParams, power_mode: str = "loop") -> AtomProvider:
    """Demo atom: the nb-qubit QFT, read as exp(i A dt) for the given dt."""
    return powered_atom(lambda: qft(params.atom_qubits), power_mode)


demo_atom_provider = qft_atom


def diag_atom(params: AvgParams, power_mode: str = "loop") -> AtomProvider:
    """exp(i A dt) with A the atom register's integer value (A|x> = x|x>).

    Realized as one phase gate per atom qubit, P1PH(2^q dt) on qubit q.
    """
    return powered_atom(
        lambda: [p1ph(q, math.degrees(2**q * params.dt)) for q in params.atom_qubits],
        power_mode,
    )


def qft_v(params: AvgParams) -> StatePrepProvider:
    return lambda: qft(params.atom_qubits)


def exp01(x: float) -> float:
    return math.exp(-0.1 * x)


ATOMS = {"qft": qft_atom, "diag": diag_atom}
STATE_PREPS = {"qft": qft_v}
FUNCTIONS = {"exp01": exp01}


def atom_unitary(params: AvgParams, atom: AtomProvider) -> np.ndarray:
    """Dense matrix of the uncontrolled atom exp(i A dt)."""
    return circuit_unitary(Circuit(params.nb, atom(0, None)))


def v_unitary(params: AvgParams, v: StatePrepProvider) -> np.ndarray:
    return circuit_unitary(Circuit(params.nb, v()))


def atom_eigenvalues(params: AvgParams, atom: AtomProvider) -> list[float]:
    """Eigenvalues A_x = phase_x / dt, phases taken in [0, 2 pi)."""
    phases, _ = eigen_decompose_unitary(atom_unitary(params, atom))
    return [float(ph / params.dt) for ph in phases]
