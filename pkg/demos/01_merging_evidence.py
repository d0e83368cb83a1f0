"""
Merging credence-tagged evidence
================================

Two witnesses report on the same outcome. Each report is a probability
tagged with how much we trust it.
"""

from probdyn import BinaryEvidence, accord, opd_merge, scale_by_truth_probability, spd_merge

# A strong witness says 0.9, a weaker one says 0.3.
strong = BinaryEvidence(2.0, 0.9)
weak = BinaryEvidence(1.0, 0.3)

# Independent reports reinforce each other: credences add, probabilities average.
print("straight merger  ", spd_merge([strong, weak]))

# Negative credence is counter-evidence. Merging it back out recovers the original.
print("retract the weak ", spd_merge([strong, weak, BinaryEvidence(-1.0, 0.3)]))

# "This report is true with probability 1/2" halves its credence.
print("half-trusted     ", scale_by_truth_probability(strong, 0.5))

# Conflicting reports about a single outcome offset each other instead.
# The accord is 1 for unanimity and 0 for total cancellation.
print("accord           ", accord([strong, weak]))
print("offsetting merger", opd_merge([strong, weak]))

# Two equally trusted, flatly opposed reports leave nothing behind.
print("cancellation     ", opd_merge([BinaryEvidence(1.0, 0.0), BinaryEvidence(1.0, 1.0)]))
