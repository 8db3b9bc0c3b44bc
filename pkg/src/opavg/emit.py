"""
Log, English and Picture files.

English grammar, one line per item::

    HAD2 AT 2
    ROTY 90.000000 AT 3 IF 5T 4F
    SWAP 1 0 IF 4T
    LOOP 1 REPS:4
    NEXT 1
    MP_Y AT 6 IF 5 4 3 BY 0.000000 12.500000 ...

Controls are listed highest qubit first.  Multiplexor controls are
listed most significant selector bit first; the BY angles are in selector
order.  Picture lines map one-to-one onto English lines.
"""
from __future__ import annotations

import os
from pathlib import Path

from .circuit import Circuit, Control, ElemOp, Kind, Loop, Multiplexor

LOG_SUFFIX = "_qoa_log.txt"
ENG_SUFFIX = "_qoa_eng.txt"
PIC_SUFFIX = "_qoa_pic.txt"


def fmt_angle(deg: float) -> str:
    s = f"{deg:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _controls_text(controls) -> str:
    if not controls:
        return ""
    parts = [f"{c.qubit}{'T' if c.on else 'F'}" for c in sorted(controls, key=lambda c: -c.qubit)]
    return " IF " + " ".join(parts)


def english_line(op: ElemOp | Multiplexor) -> str:
    if isinstance(op, Multiplexor):
        ctl = " IF " + " ".join(str(c) for c in reversed(op.controls)) if op.controls else ""
        return f"MP_Y AT {op.target}{ctl} BY " + " ".join(fmt_angle(a) for a in op.angles)
    if op.kind is Kind.SWAP:
        head = f"SWAP {op.targets[0]} {op.targets[1]}"
    elif op.angle is not None:
        head = f"{op.kind.value} {fmt_angle(op.angle)} AT {op.target}"
    else:
        head = f"{op.kind.value} AT {op.target}"
    return head + _controls_text(op.controls)


def write_english(circuit: Circuit) -> list[str]:
    lines = []
    for it in circuit.items:
        if isinstance(it, Loop):
            lines.append(f"LOOP {it.id} REPS:{it.reps}")
            lines.extend(english_line(op) for op in it.body)
            lines.append(f"NEXT {it.id}")
        else:
            lines.append(english_line(it))
    return lines


_SYMBOL = {
    Kind.HAD2: "H",
    Kind.SIGX: "X",
    Kind.SIGY: "Y",
    Kind.SIGZ: "Z",
    Kind.ROTX: "R",
    Kind.ROTY: "R",
    Kind.ROTZ: "R",
    Kind.P1PH: "P",
}


def picture_line(op: ElemOp | Multiplexor, num_qubits: int) -> str:
    cells = {}
    if isinstance(op, Multiplexor):
        cells[op.target] = "M"
        for c in op.controls:
            cells[c] = "@"
    else:
        if op.kind is Kind.SWAP:
            lo, hi = sorted(op.targets)
            cells[hi], cells[lo] = "<", ">"
        else:
            cells[op.target] = _SYMBOL[op.kind]
        for c in op.controls:
            cells[c.qubit] = "@" if c.on else "O"
    lo, hi = min(cells), max(cells)
    row = []
    for q in reversed(range(num_qubits)):
        if q in cells:
            row.append(cells[q])
        else:
            row.append("|" if lo < q < hi else "+")
    return "   ".join(row)


def write_picture(circuit: Circuit) -> list[str]:
    lines = []
    for it in circuit.items:
        if isinstance(it, Loop):
            lines.append(f"LOOP {it.id} REPS:{it.reps}")
            lines.extend(picture_line(op, circuit.num_qubits) for op in it.body)
            lines.append(f"NEXT {it.id}")
        else:
            lines.append(picture_line(it, circuit.num_qubits))
    return lines


def write_log(params, op_count: int, settings: dict) -> list[str]:
    """Echo of the run inputs plus the elementary-operation count.

    `settings` maps labels to values (prefix, provider names, flags) and is
    written in insertion order between the numeric inputs and the count.
    """
    lines = [
        f"Number of Atom Qubits: {params.nb}",
        f"Number of Probe Qubits: {params.nbj}",
        f"gamma: {params.gamma!r}",
        f"Delta t/(2*PI): {params.dt_over_2pi!r}",
    ]
    lines.extend(f"{k}: {v}" for k, v in settings.items())
    lines.append(f"Number of Elementary Operations: {op_count}")
    return lines


def output_paths(prefix: str, outdir: str | os.PathLike = ".") -> dict[str, Path]:
    d = Path(outdir)
    return {
        "log": d / f"{prefix}{LOG_SUFFIX}",
        "eng": d / f"{prefix}{ENG_SUFFIX}",
        "pic": d / f"{prefix}{PIC_SUFFIX}",
    }


def _write_lines(path: Path, lines: list[str]) -> None:
    text = "".join(line + "\n" for line in lines)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def write_files(prefix, circuit, log_lines, outdir=".") -> dict[str, Path]:
    paths = output_paths(prefix, outdir)
    _write_lines(paths["log"], log_lines)
    _write_lines(paths["eng"], write_english(circuit))
    _write_lines(paths["pic"], write_picture(circuit))
    return paths


# ------------------------------------------------------------------ parsing


class ParseError(ValueError):
    pass


def _parse_controls(tokens: list[str]) -> tuple[Control, ...]:
    out = []
    for tok in tokens:
        if len(tok) < 2 or tok[-1] not in "TF" or not tok[:-1].isdigit():
            raise ParseError(f"bad control {tok!r}")
        out.append(Control(int(tok[:-1]), tok[-1] == "T"))
    return tuple(reversed(out))


def parse_english_line(line: str) -> ElemOp | Multiplexor:
    tok = line.split()
    if not tok:
        raise ParseError("empty line")
    head = tok[0]
    if head == "MP_Y":
        by = tok.index("BY")
        target = int(tok[2])
        ctl = [int(t) for t in tok[4:by]] if tok[3:4] == ["IF"] else []
        return Multiplexor(target, tuple(reversed(ctl)), [float(a) for a in tok[by + 1:]])
    if "IF" in tok:
        i = tok.index("IF")
        tok, controls = tok[:i], _parse_controls(tok[i + 1:])
    else:
        controls = ()
    kind = Kind(head)
    if kind is Kind.SWAP:
        return ElemOp(kind, (int(tok[1]), int(tok[2])), None, controls)
    if len(tok) == 4:
        return ElemOp(kind, (int(tok[3]),), float(tok[1]), controls)
    if len(tok) == 3 and tok[1] == "AT":
        return ElemOp(kind, (int(tok[2]),), None, controls)
    raise ParseError(f"cannot parse {line!r}")


def parse_english(lines, num_qubits: int) -> Circuit:
    """Rebuild a circuit from English-file lines."""
    circ = Circuit(num_qubits)
    loop = None
    for raw in lines:
        line = raw.rstrip("\n")
        tok = line.split()
        if tok[:1] == ["LOOP"]:
            if loop is not None:
                raise ParseError("nested LOOP")
            loop = (int(tok[1]), int(tok[2].split(":")[1]), [])
        elif tok[:1] == ["NEXT"]:
            if loop is None or int(tok[1]) != loop[0]:
                raise ParseError(f"unmatched {line!r}")
            circ.append(Loop(*loop))
            loop = None
        elif loop is not None:
            loop[2].append(parse_english_line(line))
        else:
            circ.append(parse_english_line(line))
    if loop is not None:
        raise ParseError(f"LOOP {loop[0]} without NEXT")
    return circ
