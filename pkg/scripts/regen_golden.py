"""Regenerate tests/golden/ from the demo configuration.

Run only after an intentional format change, then review the diff.
"""
from pathlib import Path

from opavg.cli import run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"
DEMO_ARGS = ["--prefix", "demo", "--num-atom-qubits", "2", "--num-probe-qubits", "3",
             "--gamma", "1", "--dt-over-2pi", "1"]

if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    raise SystemExit(run(DEMO_ARGS + ["--outdir", str(GOLDEN)]))
