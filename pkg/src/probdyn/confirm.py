"""Degrees of confirmation: first-order and credence-aware (PDCT)."""

from __future__ import annotations

from dataclasses import dataclass

from .core import BinaryEvidence, FirstOrderPrior, JointPrior
from .errors import ValidationError
from .merge import accord
from .updating import conditionalize, pd_indirect_update

__all__ = ["ConfirmationReport", "first_order_confirmation", "pdct_confirmation", "MODES"]

MODES = ("straight", "offsetting")


@dataclass(frozen=True)
class ConfirmationReport:
    first_order: float
    credence_gain: float
    probability_gain: float
    pdct: float
    accord_used: float
    clamped: bool = False
    mode: str = "straight"


def first_order_confirmation(prior: FirstOrderPrior) -> float:
    """C_10 = P_0(A|B) - P_0(A)."""
    return conditionalize(prior) - prior.p_a


def pdct_confirmation(prior: JointPrior, evidence: BinaryEvidence, mode: str = "straight") -> ConfirmationReport:
    """Confirm ``[kappa_0; P_0(A)]`` by ``[kappa~_1; P~_1(B)]`` given a binary joint prior.

    ``K_10 = lambda * (kappa_10 / kappa_0) * P_10(A) - P_0(A)``, with
    ``lambda = 1`` in straight mode and, in offsetting mode, the accord of
    ``[kappa_0; P_0(A)]`` and ``[kappa~_1; P_10(A)]``. The report also
    carries the separate credence and probability gains.
    """
    if mode not in MODES:
        raise ValidationError(f"mode must be one of {MODES}, got {mode!r}")
    if prior.m != 2:
        raise ValidationError("confirmation degrees are defined for a binary B-partition")
    result = pd_indirect_update(prior, evidence.to_alpha(prior.b_partition))
    k0 = prior.credence
    k10 = result.updated.credence
    p0 = prior.p_a()
    p10 = result.updated.p
    if mode == "straight":
        lam, clamped = 1.0, False
    else:
        report = accord([BinaryEvidence(k0, p0), BinaryEvidence(evidence.credence, p10)])
        lam, clamped = report.lam, report.clamped
    return ConfirmationReport(
        first_order=first_order_confirmation(prior.first_order(0)),
        credence_gain=(k10 - k0) / k0,
        probability_gain=p10 - p0,
        pdct=lam * (k10 / k0) * p10 - p0,
        accord_used=lam,
        clamped=clamped,
        mode=mode,
    )
