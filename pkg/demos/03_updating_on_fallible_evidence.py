"""
Updating on fallible evidence
=============================

Hypothesis A and observation B are correlated under the prior. We learn
something uncertain about B. How much should P(A) move, and how much do we
trust the result?
"""

from probdyn import (
    AlphaEvidence,
    FirstOrderPrior,
    JointPrior,
    conditionalize,
    correlation,
    jeffrey_update,
    pd_indirect_update,
    pd_sequential_update,
)

# Rows are A and not-A, columns are B and not-B.
prior = JointPrior.make(1.0, ((0.3, 0.2), (0.1, 0.4)))
print("P(A) =", prior.p_a(), " P(B) =", prior.p_b(0))
print("rho(A, B) =", correlation(prior.first_order(0)))

# Certain evidence: plain conditionalization.
print("P(A | B) =", conditionalize(prior.first_order(0)))

# Evidence that shifts P(B) to 0.6 with credence 1.
evidence = AlphaEvidence.make(1.0, (0.6, 0.4), prior.b_partition)
print("Jeffrey's rule      ", jeffrey_update(prior, evidence.dist))
result = pd_indirect_update(prior, evidence)
print("credence-aware      ", result.updated)
print("  per-cell credences", result.per_cell_credences)

# The updated credence never exceeds the prior's. It approaches it as the
# evidence becomes overwhelming.
for k in (0.1, 1.0, 10.0, 1e3, 1e9):
    r = pd_indirect_update(prior, AlphaEvidence.make(k, (0.6, 0.4), prior.b_partition))
    print(f"  evidence credence {k:>8g} -> updated credence {r.updated.credence:.9f}")

# Several reports: merge first, then update once. The order does not matter.
reports = [
    AlphaEvidence.make(0.5, (0.8, 0.2), prior.b_partition),
    AlphaEvidence.make(1.5, (0.55, 0.45), prior.b_partition),
]
print("sequential          ", pd_sequential_update(prior, reports).updated)
print("reversed            ", pd_sequential_update(prior, reports[::-1]).updated)

# Old evidence, already certain, confirms nothing.
print("old evidence        ", conditionalize(FirstOrderPrior(0.42, 0.42, 1.0)))
