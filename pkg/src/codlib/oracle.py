"""Brute-force enumeration of small CODs, independent of the generator.

Two modes:

* family support: the zero patterns and variable placement of the
  [C(2m,m-1), 2m-1, C(2m-1,m-1)] family are forced (up to signs and
  conjugations) by the pairwise pattern relations, so only the per-cell
  sign and conjugation bits are searched: 4^(#nonzero cells) candidates.
* free: every cell ranges over zero and all signed, optionally conjugated
  variables.  Only sensible for very small p*n; guarded by the budget.

Valid designs are grouped by canonical form, giving ground truth for the
uniqueness and nonexistence claims at desk scale.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Optional

from .bitvec import BitVec
from .equivalence import canonicalize
from .errors import BudgetExceededError, ParameterError
from .generator import construct_g
from .model import CodMatrix, Entry, verify_symbolic

DEFAULT_BUDGET = 1 << 26
_BUDGET_ENV = "CODLIB_ORACLE_BUDGET"


def _budget_default() -> int:
    raw = os.environ.get(_BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass
class SearchSpec:
    p: int
    n: int
    k: int
    mode: str = "family"  # "family" or "free"
    budget: int = field(default_factory=_budget_default)


@dataclass
class EquivalenceClass:
    canonical: CodMatrix
    count: int
    sample: CodMatrix


def _family_support(spec: SearchSpec) -> CodMatrix:
    if spec.n % 2 == 0:
        raise ParameterError("family support needs odd n = 2m-1")
    m = (spec.n + 1) // 2
    if spec.p != comb(2 * m, m - 1) or spec.k != comb(2 * m - 1, m - 1):
        raise ParameterError(
            f"[{spec.p},{spec.n},{spec.k}] is not a family parameter set"
        )
    return construct_g(m)


def _pair_check(cod: CodMatrix, pairs) -> bool:
    """Off-diagonal cancellation only; diagonals are automatic when every
    column holds each variable at most once (true on the forced support)."""
    for shared_rows, a, b in pairs:
        acc: dict = {}
        for r in shared_rows:
            ea = cod.entry(r, a)
            eb = cod.entry(r, b)
            key_a = (ea.var.mask, not ea.conj)
            key_b = (eb.var.mask, eb.conj)
            mono = (key_a, key_b) if key_a <= key_b else (key_b, key_a)
            acc[mono] = acc.get(mono, 0) + ea.sign * eb.sign
        if any(acc.values()):
            return False
    return True


def _enumerate_family(spec: SearchSpec) -> list[EquivalenceClass]:
    support = _family_support(spec)
    cells = [
        (r, c)
        for r in range(1, support.p + 1)
        for c in range(1, support.n + 1)
        if support.entry(r, c) is not None
    ]
    estimate = 4 ** len(cells)
    if estimate > spec.budget:
        raise BudgetExceededError(estimate, spec.budget)
    pairs = []
    for a in range(1, support.n + 1):
        for b in range(a + 1, support.n + 1):
            shared = [
                r
                for r in range(1, support.p + 1)
                if support.entry(r, a) is not None
                and support.entry(r, b) is not None
            ]
            pairs.append((shared, a, b))

    classes: dict[CodMatrix, EquivalenceClass] = {}
    base_rows = [list(row) for row in support.cells]
    for choice in product(range(4), repeat=len(cells)):
        rows = [row[:] for row in base_rows]
        for (r, c), bits in zip(cells, choice):
            e = support.entry(r, c)
            rows[r - 1][c - 1] = Entry(
                e.var, -1 if bits & 1 else 1, bool(bits & 2)
            )
        cand = CodMatrix.from_rows(support.m, rows)
        if not _pair_check(cand, pairs):
            continue
        canon = canonicalize(cand)
        if canon in classes:
            classes[canon].count += 1
        else:
            classes[canon] = EquivalenceClass(canonical=canon, count=1, sample=cand)
    return list(classes.values())


def _enumerate_free(spec: SearchSpec) -> list[EquivalenceClass]:
    if spec.n > 3:
        raise ParameterError("free mode is limited to n <= 3")
    length = max(2, spec.k.bit_length() + 1)
    variables = [BitVec.unit(length, i + 1) for i in range(spec.k)]
    options: list[Optional[Entry]] = [None]
    for v in variables:
        for sign in (1, -1):
            for conj in (False, True):
                options.append(Entry(v, sign, conj))
    n_cells = spec.p * spec.n
    estimate = len(options) ** n_cells
    if estimate > spec.budget:
        raise BudgetExceededError(estimate, spec.budget)

    classes: dict[CodMatrix, EquivalenceClass] = {}
    singles: list[EquivalenceClass] = []
    for choice in product(options, repeat=n_cells):
        rows = [
            list(choice[r * spec.n : (r + 1) * spec.n]) for r in range(spec.p)
        ]
        used = {e.var for row in rows for e in row if e is not None}
        if len(used) != spec.k:
            continue
        cand = CodMatrix.from_rows((spec.n + 1) // 2, rows)
        if not verify_symbolic(cand).ok:
            continue
        try:
            canon = canonicalize(cand)
        except ParameterError:
            # outside the canonicalizable family: count each as its own class
            singles.append(EquivalenceClass(cand, 1, cand))
            continue
        if canon in classes:
            classes[canon].count += 1
        else:
            classes[canon] = EquivalenceClass(canonical=canon, count=1, sample=cand)
    return list(classes.values()) + singles


def enumerate_cods(spec: SearchSpec) -> list[EquivalenceClass]:
    """All equivalence classes of CODs matching the spec, with member counts."""
    if spec.mode == "family":
        return _enumerate_family(spec)
    if spec.mode == "free":
        return _enumerate_free(spec)
    raise ParameterError(f"unknown mode {spec.mode!r}")
