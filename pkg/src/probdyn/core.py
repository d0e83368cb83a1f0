"""Domain types and numeric conventions shared by every other module.

All types are frozen dataclasses holding plain floats in tuples, so values are
hashable, comparable bit-for-bit and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    NegativeCredenceError,
    NegativeProbabilityError,
    RangeError,
    SumViolationError,
    ValidationError,
)

__all__ = [
    "TOL_SUM",
    "TOL_EQ",
    "BINARY",
    "Partition",
    "Distribution",
    "AlphaEvidence",
    "BinaryEvidence",
    "WeightedBinarySet",
    "JointPrior",
    "FirstOrderPrior",
    "check_credence",
    "check_probability",
    "validate_distribution",
    "joint_marginals",
]

TOL_SUM = 1e-9
TOL_EQ = 1e-12


def check_credence(value, *, allow_negative=True, name="credence") -> float:
    """Return ``value`` as a finite float, rejecting negatives unless allowed."""
    value = float(value)
    if not math.isfinite(value):
        raise RangeError(f"{name} must be finite, got {value!r}")
    if value < 0.0 and not allow_negative:
        raise NegativeCredenceError(f"{name} must be >= 0, got {value!r}")
    return value


def check_probability(value, *, name="probability") -> float:
    value = float(value)
    if not (0.0 <= value <= 1.0):
        raise RangeError(f"{name} must lie in [0, 1], got {value!r}")
    return value


@dataclass(frozen=True)
class Partition:
    """Ordered list of m >= 2 distinct cell names."""

    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) < 2:
            raise ValidationError(f"a partition needs at least 2 cells, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise ValidationError(f"partition labels must be distinct: {labels}")

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"no cell named {label!r} in {self.labels}") from None

    @classmethod
    def of(cls, labels) -> Partition:
        return labels if isinstance(labels, Partition) else cls(tuple(labels))


BINARY = Partition(("A", "not A"))


@dataclass(frozen=True)
class Distribution:
    """Probabilities on a partition.

    The constructor only checks; use :func:`validate_distribution` to also
    clamp and renormalize slightly-off inputs.
    """

    partition: Partition
    probs: tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if len(probs) != len(self.partition):
            raise ValidationError(
                f"{len(probs)} probabilities for a {len(self.partition)}-cell partition"
            )
        for p in probs:
            if not (0.0 <= p <= 1.0):
                raise RangeError(f"probability {p!r} outside [0, 1]")
        total = math.fsum(probs)
        if abs(total - 1.0) > TOL_SUM:
            raise SumViolationError(f"probabilities sum to {total!r}, not 1")

    def __len__(self):
        return len(self.probs)

    def __getitem__(self, j):
        return self.probs[j]

    def __iter__(self):
        return iter(self.probs)


def validate_distribution(probs: Sequence[float], partition) -> Distribution:
    """Check ``probs`` against the simplex and return a :class:`Distribution`.

    Values within ``TOL_SUM`` of the simplex are accepted. If any value lies
    outside [0, 1] it is clamped and the vector is divided by its (exactly
    rounded) sum; vectors already inside [0, 1] are kept bit-for-bit.
    """
    partition = Partition.of(partition)
    values = [float(p) for p in probs]
    if len(values) != len(partition):
        raise ValidationError(f"{len(values)} probabilities for a {len(partition)}-cell partition")
    for p in values:
        if not math.isfinite(p):
            raise RangeError(f"probability {p!r} is not finite")
        if p < -TOL_SUM:
            raise NegativeProbabilityError(f"probability {p!r} is negative")
    total = math.fsum(values)
    if abs(total - 1.0) > TOL_SUM:
        raise SumViolationError(f"probabilities sum to {total!r}, not 1")
    if any(p < 0.0 or p > 1.0 for p in values):
        values = [min(max(p, 0.0), 1.0) for p in values]
        total = math.fsum(values)
        values = [p / total for p in values]
    return Distribution(partition, tuple(values))


@dataclass(frozen=True)
class AlphaEvidence:
    """A credence paired with a distribution, ``[kappa; d; U_m]``."""

    credence: float
    dist: Distribution

    def __post_init__(self):
        object.__setattr__(self, "credence", check_credence(self.credence))

    @property
    def partition(self) -> Partition:
        return self.dist.partition

    @property
    def probs(self) -> tuple[float, ...]:
        return self.dist.probs

    @classmethod
    def make(cls, credence, probs, partition=None) -> AlphaEvidence:
        """Build from raw numbers; ``partition`` defaults to cells ``B1..Bm``."""
        if partition is None:
            partition = Partition(tuple(f"B{j + 1}" for j in range(len(probs))))
        return cls(credence, validate_distribution(probs, partition))


@dataclass(frozen=True)
class BinaryEvidence:
    """``[kappa; p]``, shorthand for ``[kappa; (p, 1 - p)]`` on ``{A, not A}``."""

    credence: float
    p: float

    def __post_init__(self):
        object.__setattr__(self, "credence", check_credence(self.credence))
        object.__setattr__(self, "p", check_probability(self.p, name="p"))

    def to_alpha(self, partition=BINARY) -> AlphaEvidence:
        return AlphaEvidence(self.credence, Distribution(Partition.of(partition), (self.p, 1.0 - self.p)))

    @classmethod
    def from_alpha(cls, evidence: AlphaEvidence) -> BinaryEvidence:
        if len(evidence.partition) != 2:
            raise ValidationError("binary evidence needs a 2-cell partition")
        return cls(evidence.credence, evidence.probs[0])


@dataclass(frozen=True)
class WeightedBinarySet:
    """One ``[kappa_j; q_j]`` per cell; the q_j need not sum to 1."""

    partition: Partition
    entries: tuple[tuple[float, float], ...]

    def __post_init__(self):
        partition = Partition.of(self.partition)
        entries = tuple(
            (check_credence(k, allow_negative=False), check_probability(q, name="q"))
            for k, q in self.entries
        )
        if len(entries) != len(partition):
            raise ValidationError(f"{len(entries)} entries for a {len(partition)}-cell partition")
        object.__setattr__(self, "partition", partition)
        object.__setattr__(self, "entries", entries)


@dataclass(frozen=True)
class JointPrior:
    """Credence-tagged distribution on ``{A, not A} x {B_1..B_m}``.

    ``cells[0][j]`` is P(A B_j) and ``cells[1][j]`` is P(not-A B_j).
    """

    credence: float
    b_partition: Partition
    cells: tuple[tuple[float, ...], tuple[float, ...]]

    def __post_init__(self):
        b_partition = Partition.of(self.b_partition)
        object.__setattr__(self, "b_partition", b_partition)
        object.__setattr__(self, "credence", check_credence(self.credence))
        object.__setattr__(self, "cells", _check_table(self.cells, len(b_partition)))

    @property
    def m(self) -> int:
        return len(self.b_partition)

    def p_a(self) -> float:
        return math.fsum(self.cells[0])

    def p_b(self, j: int) -> float:
        return self.cells[0][j] + self.cells[1][j]

    def first_order(self, j: int) -> FirstOrderPrior:
        """The ``{P(A), P(A B_j), P(B_j)}`` triple for column ``j``."""
        return FirstOrderPrior(self.p_a(), self.cells[0][j], self.p_b(j))

    @classmethod
    def make(cls, credence, cells, b_partition=None) -> JointPrior:
        if b_partition is None:
            b_partition = ("B", "not B") if len(cells[0]) == 2 else tuple(
                f"B{j + 1}" for j in range(len(cells[0]))
            )
        return cls(credence, Partition.of(b_partition), tuple(tuple(row) for row in cells))


def _check_table(cells, width: int):
    if len(cells) != 2:
        raise ValidationError("a joint table has exactly two rows (A, not A)")
    rows = tuple(tuple(float(x) for x in row) for row in cells)
    for row in rows:
        if len(row) != width:
            raise ValidationError(f"table row of length {len(row)}, expected {width}")
        for x in row:
            if not (0.0 <= x <= 1.0):
                raise RangeError(f"table entry {x!r} outside [0, 1]")
    total = math.fsum(rows[0] + rows[1])
    if abs(total - 1.0) > TOL_SUM:
        raise SumViolationError(f"table sums to {total!r}, not 1")
    return rows


@dataclass(frozen=True)
class FirstOrderPrior:
    """The triple ``{P(A), P(AB), P(B)}``."""

    p_a: float
    p_ab: float
    p_b: float

    def __post_init__(self):
        for name in ("p_a", "p_ab", "p_b"):
            object.__setattr__(self, name, check_probability(getattr(self, name), name=name))
        if self.p_ab > min(self.p_a, self.p_b) + TOL_SUM:
            raise RangeError(f"P(AB)={self.p_ab!r} exceeds min(P(A), P(B))")
        if self.p_a + self.p_b - self.p_ab > 1.0 + TOL_SUM:
            raise RangeError("P(A) + P(B) - P(AB) exceeds 1")


def joint_marginals(prior: JointPrior) -> tuple[float, tuple[float, ...]]:
    """Return ``(P(A), (P(B_1), ..., P(B_m)))``."""
    p_b = tuple(prior.p_b(j) for j in range(prior.m))
    return prior.p_a(), p_b
