"""Compare simulated P(ancilla=1) with the classical oracle over a grid of configs.

On-grid configs (every eigenphase a multiple of 2 pi / N_Sj) should agree to
rounding.  The off-grid diag-atom rows show the phase-estimation error
shrinking as probe qubits are added.

    python scripts/oracle_sweep.py
"""
import argparse
import math

from opavg.generator import (
    AvgParams,
    ValidationError,
    atom_eigenvalues,
    atom_unitary,
    build_circuit,
    diag_atom,
    exp01,
    qft_atom,
    qft_v,
    v_unitary,
)
from opavg.sim import ancilla_one_probability, classical_average_oracle, simulate


def row(params, atom_name, atom):
    v = qft_v(params)
    try:
        c = build_circuit(params, atom, v, exp01, atom_eigenvalues(params, atom))
    except ValidationError as e:
        return f"{atom_name:5s} nb={params.nb} nbj={params.nbj} rejected: {e}"
    p = ancilla_one_probability(simulate(c), params.ancilla)
    o = classical_average_oracle(atom_unitary(params, atom), v_unitary(params, v), exp01, params)
    return (f"{atom_name:5s} nb={params.nb} nbj={params.nbj} gamma={params.gamma:<5g} "
            f"dt/2pi={params.dt_over_2pi:<8.5g} P={p:.12f} oracle={o:.12f} |diff|={abs(p - o):.2e}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-probe", type=int, default=7)
    args = ap.parse_args()

    print("# on-grid")
    for nb in (1, 2, 3):
        for nbj in (2, 3, 4):
            for gamma in (0.25, 1.0):
                params = AvgParams.from_dt_over_2pi(nb, nbj, gamma, 1.0)
                print(row(params, "qft", qft_atom(params)))

    print("# off-grid, diag atom, dt/2pi = 1/(4*sqrt(2))")
    for nbj in range(2, args.max_probe + 1):
        params = AvgParams.from_dt_over_2pi(2, nbj, 1.0, 1 / (4 * math.sqrt(2)))
        print(row(params, "diag", diag_atom(params)))


if __name__ == "__main__":
    main()
