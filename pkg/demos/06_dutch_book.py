"""
A diachronic Dutch book
=======================

A punter who will announce P_1(A) = r, but whose prior says P_0(not-A | B)
= b with b != 1 - r, can be sold three bets that lose the same amount
whatever happens.
"""

from probdyn import BetScenario, evaluate_bets

for b in (0.3, 0.4, 0.2):
    out = evaluate_bets(BetScenario(p_b=0.5, b=b, r=0.7))
    print(f"b = {b}: delta = {out.delta:+.3f}, loss if B = {out.loss_if_b:+.4f}, "
          f"loss if not B = {out.loss_if_not_b:+.4f}")

# If B was impossible to begin with, the scheme extracts nothing.
print(evaluate_bets(BetScenario(p_b=0.0, b=0.9, r=0.7)))
