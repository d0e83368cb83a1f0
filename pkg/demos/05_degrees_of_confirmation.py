"""
Degrees of confirmation
=======================

Classical confirmation looks only at the probability change. The
credence-aware version also asks how much of the prior trust survives.
"""

from probdyn import BinaryEvidence, JointPrior, first_order_confirmation, pdct_confirmation

prior = JointPrior.make(1.0, ((0.3, 0.2), (0.1, 0.4)))
print("first-order", first_order_confirmation(prior.first_order(0)))

# Certain B, reported with modest credence: the probability rises but trust drops.
print(pdct_confirmation(prior, BinaryEvidence(1.0, 1.0)))

# Overwhelming evidence gives back the classical answer.
print(pdct_confirmation(prior, BinaryEvidence(1e9, 1.0)).pdct)

# Offsetting mode discounts by the accord of the prior and the update.
print(pdct_confirmation(prior, BinaryEvidence(3.0, 0.9), mode="offsetting"))
