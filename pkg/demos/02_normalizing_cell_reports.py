"""
Reading per-cell reports as one distribution
============================================

Sometimes evidence arrives one cell at a time, each with its own credence.
Normalization turns such a set into a single credence-tagged distribution.
"""

from probdyn import Partition, WeightedBinarySet, normalize

cells = Partition(("rain", "dry"))

# Equal trust in reports that already form a distribution: nothing changes.
print(normalize(WeightedBinarySet(cells, ((3.0, 0.25), (3.0, 0.75)))))

# Unequal trust shifts probability toward the better-supported cell.
print(normalize(WeightedBinarySet(cells, ((2.0, 0.5), (1.0, 0.5)))))
