"""Conditionalization, Jeffrey's rule and indirect updating of fallible evidence."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .association import correlation, unilateral_cross_credence
from .core import (
    TOL_SUM,
    AlphaEvidence,
    BinaryEvidence,
    Distribution,
    FirstOrderPrior,
    JointPrior,
    WeightedBinarySet,
    check_credence,
)
from .errors import (
    ConditionOnNullError,
    DegenerateError,
    NegativeCredenceError,
    PartitionMismatchError,
    RangeError,
)
from .merge import normalize, spd_merge

__all__ = [
    "IndirectUpdateResult",
    "conditionalize",
    "jeffrey_update",
    "pd_indirect_update",
    "pd_sequential_update",
]


def conditionalize(prior: FirstOrderPrior) -> float:
    """P_1(A) = P_0(AB) / P_0(B) upon accepting B."""
    if prior.p_b <= TOL_SUM:
        raise ConditionOnNullError(f"cannot condition on B with P(B) = {prior.p_b!r}")
    return prior.p_ab / prior.p_b


def _check_b_partition(prior: JointPrior, partition) -> None:
    if partition != prior.b_partition:
        raise PartitionMismatchError(
            f"evidence on {partition.labels} does not match prior columns {prior.b_partition.labels}"
        )


def jeffrey_update(prior: JointPrior, new_b: Distribution) -> float:
    """``sum_j new_b[j] * P_0(A | B_j)``, skipping cells with ``new_b[j] == 0``."""
    _check_b_partition(prior, new_b.partition)
    terms = []
    for j, w in enumerate(new_b.probs):
        if w == 0.0:
            continue
        p_bj = prior.p_b(j)
        if p_bj <= TOL_SUM:
            raise ConditionOnNullError(
                f"new evidence puts {w!r} on {prior.b_partition.labels[j]!r}, which the prior rules out"
            )
        terms.append(w * (prior.cells[0][j] / p_bj))
    return min(max(math.fsum(terms), 0.0), 1.0)


@dataclass(frozen=True)
class IndirectUpdateResult:
    updated: BinaryEvidence
    per_cell_credences: tuple[float, ...]
    normalized_weights: Distribution
    correlations: tuple[float, ...]


def _column_correlations(prior: JointPrior) -> tuple[float, ...]:
    rhos = [correlation(prior.first_order(j)) for j in range(prior.m)]
    if prior.m == 2:
        # rho(A, not B) = -rho(A, B); share one magnitude so both cells agree bitwise.
        rhos[1] = -rhos[0]
    return tuple(rhos)


def pd_indirect_update(prior: JointPrior, evidence: AlphaEvidence) -> IndirectUpdateResult:
    """Update ``[kappa_0; P_0(A)]`` by fallible evidence on the B-partition.

    Each cell gets the unilateral cross-credence
    ``|rho_j| k~ k_0 / (|rho_j| k~ + k_0)``; the set ``{[k^j; P~(B_j)]}`` is
    normalized and P_10(A) is the Jeffrey mixture over the normalized
    weights. With two cells the per-cell credences coincide and the weights
    are the evidence itself.

    Normalization is scale covariant, so it runs on ``k^j / max k^j`` and the
    credence is scaled back afterwards. With zero evidence credence the
    weights are the limiting ones, ``|rho_j| P~(B_j)`` normalized, and the
    update carries zero credence.
    """
    _check_b_partition(prior, evidence.partition)
    k0 = prior.credence
    if k0 <= 0.0:
        raise RangeError(f"prior credence must be > 0, got {k0!r}")
    k1 = check_credence(evidence.credence, allow_negative=False, name="evidence credence")
    rhos = _column_correlations(prior)
    per_cell = tuple(unilateral_cross_credence(r, k1, k0) for r in rhos)
    carried = max(per_cell) > 0.0
    basis = per_cell if carried else tuple(abs(r) for r in rhos)
    ref = max(basis)
    try:
        if ref <= 0.0:
            raise DegenerateError
        norm = normalize(
            WeightedBinarySet(prior.b_partition, tuple((b / ref, q) for b, q in zip(basis, evidence.probs)))
        )
    except DegenerateError:
        raise DegenerateError(
            "evidence puts no weight on cells correlated with A; the update has no credence"
        ) from None
    p10 = jeffrey_update(prior, norm.dist)
    credence = ref * norm.credence if carried else 0.0
    return IndirectUpdateResult(
        updated=BinaryEvidence(credence, p10),
        per_cell_credences=per_cell,
        normalized_weights=norm.dist,
        correlations=rhos,
    )


def pd_sequential_update(prior: JointPrior, evidences: Sequence[AlphaEvidence]) -> IndirectUpdateResult:
    """Straight-merge the evidences first, then update once (order-independent)."""
    merged = spd_merge(evidences)
    if merged.credence < 0.0:
        raise NegativeCredenceError(f"merged evidence has negative credence {merged.credence!r}")
    return pd_indirect_update(prior, merged)
