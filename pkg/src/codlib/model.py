"""Symbolic COD matrices and orthogonality verification.

A design is a p x n grid of cells; each cell is either zero (None) or a
signed, optionally conjugated instance of one complex variable.  Variables
are identified by bit vectors.  Orthogonality is checked exactly, by formal
expansion of the Gram matrix over commuting symbols, with a seeded numeric
substitution as a secondary smoke test.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .bitvec import BitVec
from .errors import MixedConjugationError, ParameterError


@dataclass(frozen=True)
class Entry:
    """One nonzero cell: sign * var, conjugated if conj is set."""

    var: BitVec
    sign: int = 1
    conj: bool = False

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def negated(self) -> "Entry":
        return Entry(self.var, -self.sign, self.conj)

    def conjugated(self) -> "Entry":
        return Entry(self.var, self.sign, not self.conj)


Cell = Optional[Entry]


@dataclass(frozen=True)
class CodMatrix:
    """A p x n symbolic design with k distinct variables."""

    m: int
    p: int
    n: int
    k: int
    cells: tuple[tuple[Cell, ...], ...]

    @classmethod
    def from_rows(cls, m: int, rows: Sequence[Sequence[Cell]]) -> "CodMatrix":
        p = len(rows)
        if p == 0:
            raise ParameterError("design needs at least one row")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ParameterError("rows have unequal lengths")
        cells = tuple(tuple(r) for r in rows)
        seen = {e.var for row in cells for e in row if e is not None}
        return cls(m=m, p=p, n=n, k=len(seen), cells=cells)

    def entry(self, row: int, col: int) -> Cell:
        if not (1 <= row <= self.p and 1 <= col <= self.n):
            raise IndexError(f"cell ({row},{col}) out of range")
        return self.cells[row - 1][col - 1]

    def row(self, row: int) -> tuple[Cell, ...]:
        if not 1 <= row <= self.p:
            raise IndexError(f"row {row} out of range 1..{self.p}")
        return self.cells[row - 1]

    def variables(self) -> list[BitVec]:
        """Distinct variable ids, ascending by order key."""
        seen = {e.var for row in self.cells for e in row if e is not None}
        return sorted(seen, key=BitVec.order_key)

    def instances(self, var: BitVec) -> list[tuple[int, int, Entry]]:
        """All (row, col, entry) where the given variable appears."""
        out = []
        for r, row in enumerate(self.cells, start=1):
            for c, e in enumerate(row, start=1):
                if e is not None and e.var == var:
                    out.append((r, c, e))
        return out


def zero_pattern(cod: CodMatrix, row: int) -> BitVec:
    """Per-row bit vector: bit i set iff column i holds a nonzero entry."""
    return BitVec.from_bits(
        1 if e is not None else 0 for e in cod.row(row)
    )


def row_id(cod: CodMatrix, row: int) -> BitVec:
    """Zero pattern extended by one bit recording the row's conjugation flag.

    Requires n = 2m-1 columns and a conjugation-uniform row.
    """
    if cod.n != 2 * cod.m - 1:
        raise ParameterError(
            f"row ids need n = 2m-1 columns, have n={cod.n}, m={cod.m}"
        )
    entries = [e for e in cod.row(row) if e is not None]
    flags = {e.conj for e in entries}
    if len(flags) > 1:
        raise MixedConjugationError(f"row {row} mixes conjugation flags")
    conj = flags.pop() if flags else False
    pat = zero_pattern(cod, row)
    return BitVec(2 * cod.m, pat.mask | (int(conj) << (2 * cod.m - 1)))


# -- symbolic verification -------------------------------------------------

# A symbol is (var, conj); a monomial is an unordered pair of symbols with
# an integer coefficient.  Commutativity makes cancellation a multiset test.

Symbol = tuple[BitVec, bool]
Monomial = tuple[Symbol, Symbol]


def _sym_key(s: Symbol):
    return (s[0].order_key(), s[1])


def _monomial(a: Symbol, b: Symbol) -> Monomial:
    return (a, b) if _sym_key(a) <= _sym_key(b) else (b, a)


@dataclass
class VerificationReport:
    ok: bool
    failures: list[tuple[tuple[int, ...], dict]] = field(default_factory=list)


def _gram_cell(cod: CodMatrix, a: int, b: int) -> Counter:
    """Formal (a,b) entry of O^H O as a monomial -> coefficient counter."""
    acc: Counter = Counter()
    for r in range(1, cod.p + 1):
        ea = cod.entry(r, a)
        eb = cod.entry(r, b)
        if ea is None or eb is None:
            continue
        mono = _monomial((ea.var, not ea.conj), (eb.var, eb.conj))
        acc[mono] += ea.sign * eb.sign
    return Counter({mono: c for mono, c in acc.items() if c})


def verify_symbolic(cod: CodMatrix) -> VerificationReport:
    """Exact orthogonality check: O^H O = (sum |z_j|^2) I, formally.

    Off-diagonal Gram entries must cancel to zero; every diagonal entry
    must be exactly the sum of z_j* z_j over all k variables, once each.
    """
    expected_diag = Counter(
        {_monomial((v, True), (v, False)): 1 for v in cod.variables()}
    )
    failures = []
    for a in range(1, cod.n + 1):
        for b in range(a, cod.n + 1):
            acc = _gram_cell(cod, a, b)
            if a == b:
                residual = acc.copy()
                residual.subtract(expected_diag)
                residual = {k: v for k, v in residual.items() if v}
                if residual:
                    failures.append(((a,), residual))
            elif acc:
                failures.append(((a, b), dict(acc)))
    return VerificationReport(ok=not failures, failures=failures)


def verify_numeric(
    cod: CodMatrix, trials: int = 10, seed: int = 0, tol: float = 1e-9
) -> bool:
    """Substitute seeded pseudorandom complex values and check the Gram residual."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    rng = np.random.default_rng(seed)
    variables = cod.variables()
    for _ in range(trials):
        re = rng.uniform(-1.0, 1.0, size=len(variables))
        im = rng.uniform(-1.0, 1.0, size=len(variables))
        values = {v: complex(a, b) for v, a, b in zip(variables, re, im)}
        mat = np.zeros((cod.p, cod.n), dtype=complex)
        for r in range(1, cod.p + 1):
            for c in range(1, cod.n + 1):
                e = cod.entry(r, c)
                if e is None:
                    continue
                z = values[e.var]
                mat[r - 1, c - 1] = e.sign * (z.conjugate() if e.conj else z)
        norm = sum(abs(z) ** 2 for z in values.values())
        residual = mat.conj().T @ mat - norm * np.eye(cod.n)
        if np.abs(residual).max() >= tol:
            return False
    return True
