"""Payoffs of the three-bet scheme used in diachronic Dutch-book arguments.

With ``B = 'P_1(A) = r'`` and ``b = P_0(not-A | B)``, a punter buys

* (a) 1 if not-A and B, priced ``P_0(B) b``;
* (b) b if not-B, priced ``P_0(not-B) b``;
* (c) delta if B, priced ``P_0(B) delta``,

where ``delta = b - (1 - r)``; if B occurs, bet (a) is sold back at ``1 - r``.
Either way the punter loses ``P_0(B) delta``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import check_probability
from .errors import RangeError

__all__ = ["BetScenario", "BetOutcome", "evaluate_bets"]


@dataclass(frozen=True)
class BetScenario:
    p_b: float
    b: float
    r: float

    def __post_init__(self):
        object.__setattr__(self, "p_b", check_probability(self.p_b, name="pB"))
        object.__setattr__(self, "b", check_probability(self.b, name="b"))
        r = float(self.r)
        if not (0.0 < r < 1.0):
            raise RangeError(f"r must lie in (0, 1), got {r!r}")
        object.__setattr__(self, "r", r)


@dataclass(frozen=True)
class BetOutcome:
    price_a: float
    price_b: float
    price_c: float
    total_price: float
    loss_if_not_b: float
    loss_if_b: float
    delta: float


def evaluate_bets(s: BetScenario) -> BetOutcome:
    # b + r rounds to exactly 1.0 for decimal coherent inputs such as (0.3, 0.7),
    # while b - (1 - r) leaves a stray ulp
    delta = (s.b + s.r) - 1.0
    # P_sum - b and P_sum - (1 - r) - delta both reduce to P(B) delta; settling on
    # the reduced form keeps the two outcomes bitwise equal and exactly 0 at delta = 0
    loss = s.p_b * delta
    return BetOutcome(
        price_a=s.p_b * s.b,
        price_b=(1.0 - s.p_b) * s.b,
        price_c=s.p_b * delta,
        total_price=s.b + loss,
        loss_if_not_b=loss,
        loss_if_b=loss,
        delta=delta,
    )
