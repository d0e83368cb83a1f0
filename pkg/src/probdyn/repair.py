"""Imposing 'A implies B_i' constraints on a fallible 2 x n contingency evidence.

A constraint moves the whole top-row mass P(A, .) into the implied column and
leaves the not-A row alone; the constrained table is then straight-merged
with the original, which is therefore retained rather than overwritten.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .association import cross_credence
from .core import (
    TOL_SUM,
    AlphaEvidence,
    Distribution,
    Partition,
    _check_table,
    check_credence,
    check_probability,
)
from .errors import DegenerateError, RangeError, ValidationError
from .merge import MergeState

__all__ = [
    "ContingencyEvidence",
    "ImplicationConstraint",
    "constrained_table",
    "constrained_evidence",
    "impose_constraint",
    "impose_constraints",
    "repaired_conditional",
    "column_conditional",
]

Table = tuple[tuple[float, ...], tuple[float, ...]]


@dataclass(frozen=True)
class ContingencyEvidence:
    """``[kappa; alpha]`` with ``alpha[0][i] = P(A B_i)``, ``alpha[1][i] = P(not-A B_i)``."""

    credence: float
    table: Table
    b_partition: Partition | None = field(default=None)

    def __post_init__(self):
        credence = check_credence(self.credence)
        if credence <= 0.0:
            raise RangeError(f"contingency evidence needs credence > 0, got {credence!r}")
        table = _check_table(self.table, len(self.table[0]) if self.table else 0)
        n = len(table[0])
        b_partition = self.b_partition
        if b_partition is None:
            b_partition = ("B", "not B") if n == 2 else tuple(f"B{i + 1}" for i in range(n))
        b_partition = Partition.of(b_partition)
        if len(b_partition) != n:
            raise ValidationError(f"{len(b_partition)} column labels for a table of width {n}")
        object.__setattr__(self, "credence", credence)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "b_partition", b_partition)

    @property
    def n(self) -> int:
        return len(self.table[0])


@dataclass(frozen=True)
class ImplicationConstraint:
    """``[kappa~; P(A -> B_i)]``, believed true with ``truth_probability``."""

    credence: float
    target_column: int
    truth_probability: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "credence", check_credence(self.credence, allow_negative=False))
        object.__setattr__(
            self, "truth_probability", check_probability(self.truth_probability, name="truth_probability")
        )
        if int(self.target_column) != self.target_column or self.target_column < 0:
            raise ValidationError(f"bad column index {self.target_column!r}")
        object.__setattr__(self, "target_column", int(self.target_column))

    @property
    def effective_credence(self) -> float:
        return self.truth_probability * self.credence


def constrained_table(table: Table, target_column: int) -> Table:
    """Collapse the A-row onto ``target_column``; the not-A row passes through."""
    top, bottom = table
    if not 0 <= target_column < len(top):
        raise ValidationError(f"column {target_column} outside a table of width {len(top)}")
    moved = tuple(math.fsum(top) if i == target_column else 0.0 for i in range(len(top)))
    return moved, tuple(bottom)


def _check_target(beta: ContingencyEvidence, c: ImplicationConstraint) -> None:
    if c.target_column >= beta.n:
        raise ValidationError(f"constraint column {c.target_column} outside a table of width {beta.n}")


def constrained_evidence(beta: ContingencyEvidence, c: ImplicationConstraint) -> ContingencyEvidence:
    """The constraint's own evidence: cross-credence of (p * kappa~, kappa) on the collapsed table.

    Degenerate when the constraint carries no credence.
    """
    _check_target(beta, c)
    k = cross_credence(c.effective_credence, beta.credence)
    if k <= 0.0:
        raise DegenerateError("a zero-credence constraint has no evidence of its own")
    return ContingencyEvidence(k, constrained_table(beta.table, c.target_column), beta.b_partition)


def _cells(b_partition: Partition) -> Partition:
    return Partition(tuple(f"A & {b}" for b in b_partition) + tuple(f"not A & {b}" for b in b_partition))


def _state(credence: float, table: Table, cells: Partition) -> MergeState:
    return MergeState.of(AlphaEvidence(credence, Distribution(cells, table[0] + table[1])))


def _merged(beta: ContingencyEvidence, parts: Sequence[tuple[float, Table]]) -> ContingencyEvidence:
    cells = _cells(beta.b_partition)
    state = _state(beta.credence, beta.table, cells)
    for credence, table in parts:
        state = state + _state(credence, table, cells)
    if not state.extractable():
        raise DegenerateError("merged contingency evidence has zero credence")
    merged = state.to_evidence()
    n = beta.n
    probs = merged.probs
    return ContingencyEvidence(merged.credence, (probs[:n], probs[n:]), beta.b_partition)


def impose_constraint(beta: ContingencyEvidence, c: ImplicationConstraint) -> ContingencyEvidence:
    """``beta (+) [p kappa~; alpha_check]``: merge with the constraint at weight p * kappa~.

    The result has credence ``kappa + p kappa~``; the original table stays
    part of the merger.
    """
    _check_target(beta, c)
    k_eff = c.effective_credence
    if beta.credence + k_eff <= TOL_SUM:
        raise DegenerateError("total credence is zero")
    return _merged(beta, [(k_eff, constrained_table(beta.table, c.target_column))])


def impose_constraints(beta: ContingencyEvidence, cs: Sequence[ImplicationConstraint]) -> ContingencyEvidence:
    """Impose several constraints at once; the result does not depend on their order.

    Constraint i enters with the cross-credence of ``p_i kappa~_i`` and
    ``kappa`` on its own collapsed table, all straight-merged with beta.
    """
    parts = []
    for c in cs:
        _check_target(beta, c)
        k = cross_credence(c.effective_credence, beta.credence)
        if k > 0.0:
            parts.append((k, constrained_table(beta.table, c.target_column)))
    return _merged(beta, parts)


def repaired_conditional(a: float, b: float, c: float, ratio: float) -> float:
    """P_1(A|B) after imposing 'A -> B' at credence ratio ``kappa~ / kappa``.

    ``a = P(AB)``, ``b = P(A not-B)``, ``c = P(not-A B)``. Rises from
    ``a / (a + c)`` at ratio 0 towards ``(a + b) / (a + b + c)``.
    """
    ratio = check_credence(ratio, allow_negative=False, name="ratio")
    w = ratio / (1.0 + ratio)
    num = a + w * b
    den = num + c
    if den <= TOL_SUM:
        raise DegenerateError("P_1(B) vanishes; the conditional is undefined")
    return num / den


def column_conditional(beta: ContingencyEvidence, column: int) -> float:
    """P(A | B_column) read off the table."""
    a = beta.table[0][column]
    den = a + beta.table[1][column]
    if den <= TOL_SUM:
        raise DegenerateError(f"P(B_{column}) vanishes; the conditional is undefined")
    return a / den
