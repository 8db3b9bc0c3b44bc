"""Circuit generator for averages gamma * <psi| f(A) |psi> via phase estimation."""
from .circuit import (
    Circuit,
    CircuitError,
    Control,
    ElemOp,
    Kind,
    Loop,
    Multiplexor,
    elementary_op_count,
    unroll_loops,
)
from .generator import AvgParams, ValidationError, Violation, build_circuit, mux_angles, validate
from .mux import expand_circuit, expand_mux
from .qft import QftSpec, qft_seo
from .sim import ancilla_one_probability, classical_average_oracle, simulate

__version__ = "0.1.0"
