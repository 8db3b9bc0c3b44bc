"""
Circuit intermediate representation.

A circuit is a time-ordered list of items over a fixed number of qubits.
Items are elementary operations (`ElemOp`), y-rotation multiplexors
(`Multiplexor`) and single-level `Loop` blocks.  Qubit 0 is the least
significant bit of basis-state labels throughout the package.

Angles are kept in degrees; only the simulator converts to radians.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Iterator, Union


class Kind(str, Enum):
    HAD2 = "HAD2"
    SIGX = "SIGX"
    SIGY = "SIGY"
    SIGZ = "SIGZ"
    ROTX = "ROTX"
    ROTY = "ROTY"
    ROTZ = "ROTZ"
    P1PH = "P1PH"
    SWAP = "SWAP"


ANGLED = frozenset({Kind.ROTX, Kind.ROTY, Kind.ROTZ, Kind.P1PH})


class CircuitError(ValueError):
    pass


@dataclass(frozen=True)
class Control:
    qubit: int
    on: bool = True  # False means the gate fires when the qubit is |0>


@dataclass(frozen=True)
class ElemOp:
    kind: Kind
    targets: tuple[int, ...]
    angle: float | None = None
    controls: tuple[Control, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        object.__setattr__(self, "controls", tuple(self.controls))
        ntarg = 2 if self.kind is Kind.SWAP else 1
        if len(self.targets) != ntarg:
            raise CircuitError(f"{self.kind.value} takes {ntarg} target(s), got {self.targets}")
        if len(set(self.targets)) != ntarg:
            raise CircuitError(f"SWAP targets must differ, got {self.targets}")
        if self.kind in ANGLED:
            if self.angle is None or not math.isfinite(self.angle):
                raise CircuitError(f"{self.kind.value} needs a finite angle")
            object.__setattr__(self, "angle", float(self.angle))
        elif self.angle is not None:
            raise CircuitError(f"{self.kind.value} takes no angle")
        cq = [c.qubit for c in self.controls]
        if len(set(cq)) != len(cq):
            raise CircuitError(f"duplicate control qubits {cq}")
        if set(cq) & set(self.targets):
            raise CircuitError(f"control/target collision on {set(cq) & set(self.targets)}")
        if any(q < 0 for q in (*cq, *self.targets)):
            raise CircuitError("negative qubit index")

    @property
    def target(self) -> int:
        return self.targets[0]

    def qubits(self) -> tuple[int, ...]:
        return self.targets + tuple(c.qubit for c in self.controls)

    def with_control(self, qubit: int, on: bool = True) -> ElemOp:
        return replace(self, controls=self.controls + (Control(qubit, on),))


@dataclass(frozen=True)
class Multiplexor:
    """Uniformly controlled y-rotation.

    ``angles[j]`` (degrees) is applied to ``target`` when the control
    register holds ``j``; ``controls[0]`` is the least significant bit of j.
    """

    target: int
    controls: tuple[int, ...]
    angles: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(int(c) for c in self.controls))
        object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))
        if len(self.angles) != 2 ** len(self.controls):
            raise CircuitError(
                f"multiplexor with {len(self.controls)} controls needs "
                f"{2 ** len(self.controls)} angles, got {len(self.angles)}"
            )
        if len(set(self.controls)) != len(self.controls):
            raise CircuitError(f"duplicate multiplexor controls {self.controls}")
        if self.target in self.controls:
            raise CircuitError("multiplexor target among its controls")
        if not all(math.isfinite(a) for a in self.angles):
            raise CircuitError("multiplexor angles must be finite")
        if any(q < 0 for q in (self.target, *self.controls)):
            raise CircuitError("negative qubit index")

    def qubits(self) -> tuple[int, ...]:
        return (self.target,) + self.controls


@dataclass(frozen=True)
class Loop:
    id: int
    reps: int
    body: tuple[ElemOp | Multiplexor, ...]

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))
        if self.id < 1:
            raise CircuitError(f"loop id must be positive, got {self.id}")
        if self.reps < 1:
            raise CircuitError(f"loop reps must be >= 1, got {self.reps}")
        if not self.body:
            raise CircuitError("empty loop body")
        if any(isinstance(it, Loop) for it in self.body):
            raise CircuitError("nested loops are not supported")

    def qubits(self) -> tuple[int, ...]:
        return tuple(sorted({q for it in self.body for q in it.qubits()}))

    def with_control(self, qubit: int, on: bool = True) -> Loop:
        return replace(self, body=tuple(add_control(it, qubit, on) for it in self.body))


Op = Union[ElemOp, Multiplexor]
Item = Union[ElemOp, Multiplexor, Loop]


def add_control(item: Item, qubit: int, on: bool = True) -> Item:
    """Return `item` with one more control attached to every gate in it."""
    if isinstance(item, Multiplexor):
        raise CircuitError("cannot attach an extra control to a multiplexor")
    return item.with_control(qubit, on)


@dataclass(eq=False)
class Circuit:
    num_qubits: int
    items: list[Item] = field(default_factory=list)

    def __post_init__(self):
        if self.num_qubits < 1:
            raise CircuitError("a circuit needs at least one qubit")
        pending, self.items = list(self.items), []
        self.extend(pending)

    def append(self, item: Item) -> Circuit:
        for q in item.qubits():
            if q >= self.num_qubits:
                raise CircuitError(f"qubit {q} out of range for {self.num_qubits}-qubit circuit")
        if isinstance(item, Loop) and item.id in self.loop_ids():
            raise CircuitError(f"duplicate loop id {item.id}")
        self.items.append(item)
        return self

    def extend(self, items: Iterable[Item]) -> Circuit:
        for it in items:
            self.append(it)
        return self

    def loop_ids(self) -> set[int]:
        return {it.id for it in self.items if isinstance(it, Loop)}

    def ops(self) -> Iterator[Op]:
        """Iterate the operations in time order with loops unrolled."""
        for it in self.items:
            if isinstance(it, Loop):
                for _ in range(it.reps):
                    yield from it.body
            else:
                yield it

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def __eq__(self, other):
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.num_qubits == other.num_qubits and self.items == other.items

    def __repr__(self):
        return f"Circuit(num_qubits={self.num_qubits}, items={len(self.items)})"


def elementary_op_count(circuit: Circuit) -> int:
    """Number of elementary operations.

    LOOP/NEXT framing lines count zero, loop bodies count once per
    repetition, and a multiplexor counts as a single operation.
    """
    n = 0
    for it in circuit.items:
        n += it.reps * len(it.body) if isinstance(it, Loop) else 1
    return n


def unroll_loops(circuit: Circuit) -> Circuit:
    return Circuit(circuit.num_qubits, list(circuit.ops()))


# Small constructors, so callers don't spell out ElemOp(...) everywhere.

def _ctl(controls) -> tuple[Control, ...]:
    return tuple(c if isinstance(c, Control) else Control(c) for c in controls)


def had2(q, controls=()):
    return ElemOp(Kind.HAD2, (q,), None, _ctl(controls))


def sigx(q, controls=()):
    return ElemOp(Kind.SIGX, (q,), None, _ctl(controls))


def cnot(control, target):
    return sigx(target, [control])


def roty(q, angle, controls=()):
    return ElemOp(Kind.ROTY, (q,), angle, _ctl(controls))


def p1ph(q, angle, controls=()):
    return ElemOp(Kind.P1PH, (q,), angle, _ctl(controls))


def swap(q1, q2, controls=()):
    return ElemOp(Kind.SWAP, (q1, q2), None, _ctl(controls))
