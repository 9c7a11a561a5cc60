"""Versioned file formats: designs, certificates, op logs, exports.

The interchange format is JSON with a version field and one entry object
per nonzero cell, sorted by (row, col).  Output is deterministic: no
timestamps, stable key order.
"""

from __future__ import annotations

import json
from typing import Sequence

from .bitvec import BitVec
from .equivalence import (
    ColPerm,
    ConjVar,
    EquivOp,
    NegCol,
    NegRow,
    NegVar,
    RenameVar,
    RowPerm,
)
from .errors import MalformedFileError
from .generator import Constraint, InconsistencyCertificate
from .model import CodMatrix, Entry

DESIGN_FORMAT = "cod-design"
CERT_FORMAT = "cod-certificate"
FORMAT_VERSION = 1


def design_to_json(cod: CodMatrix) -> str:
    entries = []
    for r in range(1, cod.p + 1):
        for c in range(1, cod.n + 1):
            e = cod.entry(r, c)
            if e is None:
                continue
            entries.append(
                {
                    "row": r,
                    "col": c,
                    "var": str(e.var),
                    "sign": "+" if e.sign > 0 else "-",
                    "conj": e.conj,
                }
            )
    doc = {
        "format": DESIGN_FORMAT,
        "version": FORMAT_VERSION,
        "m": cod.m,
        "p": cod.p,
        "n": cod.n,
        "k": cod.k,
        "entries": entries,
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise MalformedFileError(f"missing field {key!r}", where)
    return doc[key]


def design_from_json(text: str) -> CodMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFileError(f"not valid JSON: {exc}", f"line {exc.lineno}")
    if not isinstance(doc, dict):
        raise MalformedFileError("top level must be an object", "document")
    if _require(doc, "format", "document") != DESIGN_FORMAT:
        raise MalformedFileError(
            f"unexpected format {doc['format']!r}", "format"
        )
    if _require(doc, "version", "document") != FORMAT_VERSION:
        raise MalformedFileError(
            f"unsupported version {doc['version']!r}", "version"
        )
    m = _require(doc, "m", "document")
    p = _require(doc, "p", "document")
    n = _require(doc, "n", "document")
    k = _require(doc, "k", "document")
    rows: list[list] = [[None] * n for _ in range(p)]
    for idx, item in enumerate(_require(doc, "entries", "document")):
        where = f"entries[{idx}]"
        r = _require(item, "row", where)
        c = _require(item, "col", where)
        if not (isinstance(r, int) and 1 <= r <= p):
            raise MalformedFileError(f"row {r!r} out of range 1..{p}", where)
        if not (isinstance(c, int) and 1 <= c <= n):
            raise MalformedFileError(f"col {c!r} out of range 1..{n}", where)
        if rows[r - 1][c - 1] is not None:
            raise MalformedFileError(f"duplicate cell ({r},{c})", where)
        sign = _require(item, "sign", where)
        if sign not in ("+", "-"):
            raise MalformedFileError(f"sign must be '+' or '-', got {sign!r}", where)
        conj = _require(item, "conj", where)
        if not isinstance(conj, bool):
            raise MalformedFileError(f"conj must be boolean, got {conj!r}", where)
        try:
            var = BitVec.from_string(_require(item, "var", where))
        except ValueError as exc:
            raise MalformedFileError(str(exc), where)
        rows[r - 1][c - 1] = Entry(var, 1 if sign == "+" else -1, conj)
    cod = CodMatrix.from_rows(m, rows)
    if cod.k != k:
        raise MalformedFileError(
            f"declared k={k} but {cod.k} distinct variables appear", "k"
        )
    return cod


# -- certificates ----------------------------------------------------------


def certificate_to_json(m: int, cert: InconsistencyCertificate) -> str:
    doc = {
        "format": CERT_FORMAT,
        "version": FORMAT_VERSION,
        "m": m,
        "constraints": [
            {"a": str(a), "b": str(b), "parity": c}
            for a, b, c in cert.constraints
        ],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def certificate_from_json(text: str) -> tuple[int, list[Constraint]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFileError(f"not valid JSON: {exc}", f"line {exc.lineno}")
    if _require(doc, "format", "document") != CERT_FORMAT:
        raise MalformedFileError(f"unexpected format {doc['format']!r}", "format")
    m = _require(doc, "m", "document")
    constraints = []
    for idx, item in enumerate(_require(doc, "constraints", "document")):
        where = f"constraints[{idx}]"
        try:
            a = BitVec.from_string(_require(item, "a", where))
            b = BitVec.from_string(_require(item, "b", where))
        except ValueError as exc:
            raise MalformedFileError(str(exc), where)
        c = _require(item, "parity", where)
        if c not in (0, 1):
            raise MalformedFileError(f"parity must be 0 or 1, got {c!r}", where)
        constraints.append((a, b, c))
    return m, constraints


# -- op logs ---------------------------------------------------------------


def op_to_line(op: EquivOp) -> str:
    if isinstance(op, RowPerm):
        return "rowperm " + " ".join(map(str, op.perm))
    if isinstance(op, ColPerm):
        return "colperm " + " ".join(map(str, op.perm))
    if isinstance(op, ConjVar):
        return f"conjvar {op.var}"
    if isinstance(op, NegVar):
        return f"negvar {op.var}"
    if isinstance(op, RenameVar):
        return f"renamevar {op.old} {op.new}"
    if isinstance(op, NegRow):
        return f"negrow {op.row}"
    if isinstance(op, NegCol):
        return f"negcol {op.col}"
    raise TypeError(f"unknown op {op!r}")


def op_from_line(line: str) -> EquivOp:
    parts = line.split()
    if not parts:
        raise MalformedFileError("empty op line")
    kind, args = parts[0], parts[1:]
    try:
        if kind == "rowperm":
            return RowPerm(tuple(int(a) for a in args))
        if kind == "colperm":
            return ColPerm(tuple(int(a) for a in args))
        if kind == "conjvar":
            return ConjVar(BitVec.from_string(args[0]))
        if kind == "negvar":
            return NegVar(BitVec.from_string(args[0]))
        if kind == "renamevar":
            return RenameVar(BitVec.from_string(args[0]), BitVec.from_string(args[1]))
        if kind == "negrow":
            return NegRow(int(args[0]))
        if kind == "negcol":
            return NegCol(int(args[0]))
    except (ValueError, IndexError) as exc:
        raise MalformedFileError(f"bad op line {line!r}: {exc}")
    raise MalformedFileError(f"unknown op kind {kind!r}")


def ops_to_text(ops: Sequence[EquivOp]) -> str:
    return "".join(op_to_line(op) + "\n" for op in ops)


def ops_from_text(text: str) -> list[EquivOp]:
    return [op_from_line(line) for line in text.splitlines() if line.strip()]


# -- human-readable exports ------------------------------------------------


def _var_names(cod: CodMatrix) -> dict[BitVec, str]:
    return {v: f"z{i}" for i, v in enumerate(cod.variables(), start=1)}


def _cell_text(e, names, star: str = "*") -> str:
    if e is None:
        return "0"
    sign = "-" if e.sign < 0 else ""
    return f"{sign}{names[e.var]}{star if e.conj else ''}"


def design_to_csv(cod: CodMatrix) -> str:
    names = _var_names(cod)
    lines = []
    for r in range(1, cod.p + 1):
        lines.append(
            ",".join(_cell_text(cod.entry(r, c), names) for c in range(1, cod.n + 1))
        )
    return "\n".join(lines) + "\n"


def design_to_latex(cod: CodMatrix) -> str:
    names = {v: f"z_{{{i}}}" for i, v in enumerate(cod.variables(), start=1)}
    body = " \\\\\n".join(
        " & ".join(
            _cell_text(cod.entry(r, c), names, star="^*")
            for c in range(1, cod.n + 1)
        )
        for r in range(1, cod.p + 1)
    )
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}\n"
