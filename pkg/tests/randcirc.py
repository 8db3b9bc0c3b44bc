"""Random circuit generators shared by the tests."""
import numpy as np
from hypothesis import strategies as st

from opavg.circuit import ANGLED, Circuit, Control, ElemOp, Kind, Loop, Multiplexor

KINDS = list(Kind)


def random_op(rng, n, allow_mux=True):
    if allow_mux and rng.random() < 0.15:
        perm = [int(q) for q in rng.permutation(n)]
        k = int(rng.integers(0, n))
        return Multiplexor(perm[0], perm[1:k + 1], rng.uniform(-360, 360, 2**k))
    kind = KINDS[rng.integers(len(KINDS))]
    if kind is Kind.SWAP and n < 2:
        kind = Kind.HAD2
    ntarg = 2 if kind is Kind.SWAP else 1
    perm = [int(q) for q in rng.permutation(n)]
    targets, rest = perm[:ntarg], perm[ntarg:]
    nctl = int(rng.integers(0, len(rest) + 1))
    controls = [Control(q, bool(rng.random() < 0.7)) for q in rest[:nctl]]
    angle = float(rng.uniform(-360, 360)) if kind in ANGLED else None
    return ElemOp(kind, tuple(targets), angle, tuple(controls))


def random_circuit(rng, n=None, max_items=6):
    n = n or int(rng.integers(1, 5))
    c = Circuit(n)
    next_id = 1
    for _ in range(int(rng.integers(0, max_items + 1))):
        if rng.random() < 0.3:
            body = [random_op(rng, n) for _ in range(int(rng.integers(1, 4)))]
            c.append(Loop(next_id, int(rng.integers(1, 4)), body))
            next_id += 1
        else:
            c.append(random_op(rng, n))
    return c


@st.composite
def circuits(draw, max_qubits=4):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(1, max_qubits))
    return random_circuit(np.random.default_rng(seed), n)
