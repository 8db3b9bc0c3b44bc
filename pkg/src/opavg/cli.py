"""Command-line front end: build the circuit and write the three output files."""
from __future__ import annotations

import argparse
import sys

from .circuit import elementary_op_count
from .emit import write_files, write_log
from .generator import (
    ATOMS,
    FUNCTIONS,
    POWER_MODES,
    STATE_PREPS,
    AvgParams,
    ValidationError,
    atom_eigenvalues,
    atom_unitary,
    build_circuit,
    v_unitary,
)
from .mux import expand_circuit
from .sim import ancilla_one_probability, classical_average_oracle, simulate

# dense eigen-check / simulation limits
MAX_EIGEN_QUBITS = 10
MAX_SIM_QUBITS = 22


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="opavg",
        description="Generate a circuit estimating gamma*<psi|f(A)|psi> and write "
        "<prefix>_qoa_log.txt, <prefix>_qoa_eng.txt and <prefix>_qoa_pic.txt.",
    )
    p.add_argument("--prefix", default="test", help="output file prefix")
    p.add_argument("--num-atom-qubits", type=int, default=2, metavar="NB")
    p.add_argument("--num-probe-qubits", type=int, default=3, metavar="NBJ")
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--dt-over-2pi", type=float, default=1.0, metavar="X",
                   help="Delta t/(2*PI)")
    p.add_argument("--atom", choices=sorted(ATOMS), default="qft")
    p.add_argument("--v", choices=sorted(STATE_PREPS), default="qft")
    p.add_argument("--f", choices=sorted(FUNCTIONS), default="exp01")
    p.add_argument("--power-mode", choices=POWER_MODES, default="loop")
    p.add_argument("--expand-mux", action="store_true",
                   help="replace the multiplexor by ROTY gates and CNOTs")
    p.add_argument("--simulate", action="store_true",
                   help="print P(ancilla=1) and the classical oracle value")
    p.add_argument("--outdir", default=".", help="directory for the output files")
    return p


def run(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        params = AvgParams.from_dt_over_2pi(
            args.num_atom_qubits, args.num_probe_qubits, args.gamma, args.dt_over_2pi
        )
    except ValueError as e:
        parser.error(str(e))  # exits 2

    atom = ATOMS[args.atom](params, args.power_mode)
    v = STATE_PREPS[args.v](params)
    f = FUNCTIONS[args.f]

    eigenvalues = None
    if params.nb <= MAX_EIGEN_QUBITS:
        eigenvalues = atom_eigenvalues(params, atom)
        eigen_note = "checked against the atom's eigenvalues"
    else:
        eigen_note = "not checked (atom too large); the user must guarantee it"

    try:
        circuit = build_circuit(params, atom, v, f, eigenvalues)
    except ValidationError as e:
        print(f"opavg: error: {e}", file=sys.stderr)
        return 2
    if args.expand_mux:
        circuit = expand_circuit(circuit)
    count = elementary_op_count(circuit)

    settings = {
        "File Prefix": args.prefix,
        "atom": args.atom,
        "V": args.v,
        "f": args.f,
        "power mode": args.power_mode,
        "expand multiplexors": "yes" if args.expand_mux else "no",
        "eigenvalue bound": eigen_note,
    }
    if args.power_mode == "scale-angle" and args.atom == "qft":
        settings["note"] = "scale-angle powering of the qft atom is not an exact power"
    try:
        write_files(args.prefix, circuit, write_log(params, count, settings), args.outdir)
    except OSError as e:
        print(f"opavg: error: cannot write output files: {e}", file=sys.stderr)
        return 1

    print(f"Number of Elementary Operations: {count}")
    if args.simulate:
        if params.num_qubits > MAX_SIM_QUBITS:
            print(f"opavg: error: too many qubits to simulate ({params.num_qubits})",
                  file=sys.stderr)
            return 2
        prob = ancilla_one_probability(simulate(circuit), params.ancilla)
        oracle = classical_average_oracle(
            atom_unitary(params, atom), v_unitary(params, v), f, params
        )
        print(f"P(ancilla=1): {prob:.12f}")
        print(f"oracle gamma*<f(A)>: {oracle:.12f}")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
