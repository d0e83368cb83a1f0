"""Straight and offsetting mergers, the equivalence rule, and normalization.

Straight (SPD) mergers add credences and average distributions with credence
weights; offsetting (OPD) mergers keep the averaged probability but discount
the summed credence by the accord of the merged evidences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    TOL_SUM,
    AlphaEvidence,
    BinaryEvidence,
    Distribution,
    Partition,
    WeightedBinarySet,
    check_credence,
    check_probability,
    validate_distribution,
)
from .errors import (
    DegenerateError,
    NegativeCredenceError,
    PartitionMismatchError,
    RangeError,
    ValidationError,
    ZeroTotalCredenceError,
)

__all__ = [
    "MergeState",
    "AccordReport",
    "spd_merge",
    "scale_by_truth_probability",
    "normalize",
    "accord",
    "opd_merge",
]


@dataclass(frozen=True)
class MergeState:
    """Running ``(sum kappa_i, sum kappa_i * d_i)`` of a straight merger.

    Both components are exact rationals, so ``+`` is literally associative and
    commutative and a subtotal may pass through zero credence without harm.
    Division happens only in :meth:`to_evidence`.
    """

    partition: Partition
    weight: Fraction
    mass: tuple[Fraction, ...]

    @classmethod
    def empty(cls, partition) -> MergeState:
        partition = Partition.of(partition)
        return cls(partition, Fraction(0), tuple(Fraction(0) for _ in partition))

    @classmethod
    def of(cls, evidence: AlphaEvidence | BinaryEvidence) -> MergeState:
        if isinstance(evidence, BinaryEvidence):
            evidence = evidence.to_alpha()
        k = Fraction(evidence.credence)
        return cls(evidence.partition, k, tuple(k * Fraction(p) for p in evidence.probs))

    def __add__(self, other: MergeState) -> MergeState:
        if not isinstance(other, MergeState):
            return NotImplemented
        if other.partition != self.partition:
            raise PartitionMismatchError(
                f"cannot merge evidence on {other.partition.labels} into {self.partition.labels}"
            )
        return MergeState(
            self.partition,
            self.weight + other.weight,
            tuple(a + b for a, b in zip(self.mass, other.mass)),
        )

    def extractable(self) -> bool:
        return abs(self.weight) > TOL_SUM

    def to_evidence(self) -> AlphaEvidence:
        if not self.extractable():
            raise ZeroTotalCredenceError(
                f"total credence {float(self.weight)!r} is zero; the merged distribution is undefined"
            )
        probs = [float(x / self.weight) for x in self.mass]
        return AlphaEvidence(float(self.weight), validate_distribution(probs, self.partition))


def _as_alpha(evidence) -> AlphaEvidence:
    return evidence.to_alpha() if isinstance(evidence, BinaryEvidence) else evidence


def spd_merge(evidences: Iterable[AlphaEvidence | BinaryEvidence]):
    """Straight merger ``alpha_1 (+) ... (+) alpha_n``.

    Credence is the plain sum (negative terms are counter-evidence) and each
    cell probability is the credence-weighted mean. Returns a
    :class:`BinaryEvidence` when every input is binary, else an
    :class:`AlphaEvidence`.
    """
    evidences = list(evidences)
    if not evidences:
        raise ValidationError("spd_merge needs at least one evidence")
    all_binary = all(isinstance(e, BinaryEvidence) for e in evidences)
    alphas = [_as_alpha(e) for e in evidences]
    state = MergeState.empty(alphas[0].partition)
    for alpha in alphas:
        state = state + MergeState.of(alpha)
    merged = state.to_evidence()
    return BinaryEvidence.from_alpha(merged) if all_binary else merged


def scale_by_truth_probability(evidence, p: float):
    """'``evidence`` is true with probability p' is ``[p * kappa; d]``."""
    p = float(p)
    if not (0.0 <= p <= 1.0):
        raise RangeError(f"truth probability must lie in [0, 1], got {p!r}")
    if isinstance(evidence, BinaryEvidence):
        return BinaryEvidence(p * evidence.credence, evidence.p)
    return AlphaEvidence(p * evidence.credence, evidence.dist)


def normalize(beta: WeightedBinarySet) -> AlphaEvidence:
    """Read per-cell binary evidences ``[kappa_j; q_j]`` as one alpha-evidence.

    ``kappa_hat = sum kappa_j q_j`` and ``p_hat_j = kappa_j q_j / kappa_hat``.
    An equi-credible set whose q_j already form a distribution is returned
    unchanged.
    """
    credences = [k for k, _ in beta.entries]
    qs = [q for _, q in beta.entries]
    if any(k < 0.0 for k in credences):
        raise NegativeCredenceError("normalization needs non-negative credences")
    if len(set(credences)) == 1 and credences[0] > TOL_SUM and abs(math.fsum(qs) - 1.0) <= TOL_SUM:
        return AlphaEvidence(credences[0], Distribution(beta.partition, tuple(qs)))
    masses = [Fraction(k) * Fraction(q) for k, q in beta.entries]
    total = sum(masses, Fraction(0))
    if total <= TOL_SUM:
        raise DegenerateError("no cell carries credence mass; normalization is undefined")
    probs = [float(x / total) for x in masses]
    return AlphaEvidence(float(total), validate_distribution(probs, beta.partition))


@dataclass(frozen=True)
class AccordReport:
    """Credence-weighted mean, dispersion and accord of binary evidences."""

    pbar: float
    sigma: float
    lam: float
    clamped: bool = False


def _binary_inputs(evidences: Sequence[BinaryEvidence]) -> list[BinaryEvidence]:
    evidences = list(evidences)
    if not evidences:
        raise ValidationError("at least one evidence is required")
    for e in evidences:
        if not isinstance(e, BinaryEvidence):
            raise ValidationError("offsetting mergers are defined for binary evidences only")
        check_credence(e.credence, allow_negative=False)
        check_probability(e.p)
    if math.fsum(e.credence for e in evidences) <= TOL_SUM:
        raise ZeroTotalCredenceError("total credence is zero")
    return evidences


def accord(evidences: Sequence[BinaryEvidence]) -> AccordReport:
    """Accord ``lambda = 1 - 2 sigma`` of non-negative-credence binary evidences.

    ``sigma`` is the credence-weighted standard deviation of the p_i. The
    mean and variance are formed exactly, so sigma <= 1/2 survives rounding.
    """
    evidences = _binary_inputs(evidences)
    ks = [Fraction(e.credence) for e in evidences]
    ps = [Fraction(e.p) for e in evidences]
    total = sum(ks, Fraction(0))
    pbar = sum((k * p for k, p in zip(ks, ps)), Fraction(0)) / total
    var = sum((k * (p - pbar) ** 2 for k, p in zip(ks, ps)), Fraction(0)) / total
    sigma = math.sqrt(float(var))
    lam, clamped = _clamp_accord(1.0 - 2.0 * sigma)
    return AccordReport(float(pbar), sigma, lam, clamped)


def _clamp_accord(lam: float) -> tuple[float, bool]:
    if 0.0 <= lam <= 1.0:
        return lam, False
    if -TOL_SUM < lam < 1.0 + TOL_SUM:
        return min(max(lam, 0.0), 1.0), True
    raise ValueError(f"accord {lam!r} is outside [0, 1] beyond rounding")


def opd_merge(evidences: Sequence[BinaryEvidence]) -> BinaryEvidence:
    """Offsetting merger ``alpha_1 <> ... <> alpha_n`` of the whole multiset.

    There is deliberately no pairwise form: collapsing a pair loses the
    dispersion needed by later members.
    """
    evidences = _binary_inputs(evidences)
    report = accord(evidences)
    total = math.fsum(e.credence for e in evidences)
    return BinaryEvidence(report.lam * total, report.pbar)
