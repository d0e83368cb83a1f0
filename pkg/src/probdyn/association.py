"""Correlation of binary propositions and cross-credence of nested evidences."""

from __future__ import annotations

import math
from typing import Sequence

from .core import FirstOrderPrior, check_credence
from .errors import RangeError

__all__ = [
    "CorrelationInput",
    "correlation",
    "cross_credence",
    "cross_credence_chain",
    "unilateral_cross_credence",
    "bilateral_cross_credence",
]

# Same triple, same Frechet-bound checks.
CorrelationInput = FirstOrderPrior


def correlation(e: FirstOrderPrior) -> float:
    """Correlation coefficient rho(A, B) of two propositions from {P(A), P(AB), P(B)}.

    Returns exactly 0 when P(A) or P(B) is 0 or 1, which is also the limit of
    the formula along any approach to those boundaries.
    """
    p_a, p_ab, p_b = e.p_a, e.p_ab, e.p_b
    if p_a in (0.0, 1.0) or p_b in (0.0, 1.0):
        return 0.0
    # P(AB) - P(A)P(B) written over the four cells to avoid cancellation near 0 and 1
    a_nb = max(p_a - p_ab, 0.0)
    na_b = max(p_b - p_ab, 0.0)
    na_nb = max((1.0 - p_a) - na_b, 0.0)
    cov = p_ab * na_nb - a_nb * na_b
    den = math.sqrt(p_a * (1.0 - p_a)) * math.sqrt(p_b * (1.0 - p_b))
    if den == 0.0:
        return 0.0
    return min(max(cov / den, -1.0), 1.0)


def cross_credence(k1: float, k2: float) -> float:
    """Harmonic combination ``k1 k2 / (k1 + k2)``; 0 when either is 0.

    Evaluated as ``lo / (lo + hi) * hi`` so the result is bitwise symmetric
    and ``f(x, x) == x / 2`` holds exactly.
    """
    k1 = check_credence(k1, allow_negative=False, name="k1")
    k2 = check_credence(k2, allow_negative=False, name="k2")
    lo, hi = sorted((k1, k2))
    if lo == 0.0:
        return 0.0
    return lo / (lo + hi) * hi


def cross_credence_chain(ks: Sequence[float]) -> float:
    """Cross-credence of a nesting ``[k_n; [... [k_1; d]]]``: ``1/k = sum 1/k_i``."""
    ks = [check_credence(k, allow_negative=False) for k in ks]
    if not ks:
        raise RangeError("cross_credence_chain needs at least one credence")
    if len(ks) == 1:
        return ks[0]
    if any(k == 0.0 for k in ks):
        return 0.0
    return 1.0 / math.fsum(1.0 / k for k in ks)


def _check_rho(rho: float) -> float:
    rho = float(rho)
    if not (-1.0 <= rho <= 1.0):
        raise RangeError(f"correlation must lie in [-1, 1], got {rho!r}")
    return abs(rho)


def unilateral_cross_credence(rho: float, k1: float, k2: float) -> float:
    """Credence carried from A (credence k1) onto B (credence k2).

    Only the fraction |rho| of k1 takes part:
    ``|rho| k1 k2 / (|rho| k1 + k2)``.
    """
    r = _check_rho(rho)
    k1 = check_credence(k1, allow_negative=False, name="k1")
    return cross_credence(r * k1, k2)


def bilateral_cross_credence(rho: float, k1: float, k2: float) -> float:
    """``|rho| k1 k2 / (k1 + k2)``."""
    return _check_rho(rho) * cross_credence(k1, k2)
