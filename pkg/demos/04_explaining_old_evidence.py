"""
Discovering that A implies B
============================

We hold a fallible joint belief about A and B. Later we find out that A
implies B. The constraint is merged into the old table, which stays part
of the result.
"""

from probdyn import (
    ContingencyEvidence,
    ImplicationConstraint,
    column_conditional,
    constrained_table,
    impose_constraint,
    impose_constraints,
    repaired_conditional,
)

beta = ContingencyEvidence(1.0, ((0.3, 0.2), (0.1, 0.4)))
print("P(A | B) before  ", column_conditional(beta, 0))
print("constrained table", constrained_table(beta.table, 0))

# Equal trust in the table and in the discovery.
after = impose_constraint(beta, ImplicationConstraint(1.0, 0))
print("after            ", after)
print("P(A | B) after   ", column_conditional(after, 0))

# The more we trust the discovery relative to the table, the higher P(A | B).
a, b, c = 0.3, 0.2, 0.1
for ratio in (0.0, 0.1, 1.0, 10.0, 1e9):
    print(f"  trust ratio {ratio:>6g} -> P(A | B) = {repaired_conditional(a, b, c, ratio):.6f}")

# Several implications at once, each half believed, in any order.
wide = ContingencyEvidence(2.0, ((0.1, 0.2, 0.1), (0.2, 0.3, 0.1)))
cs = [ImplicationConstraint(1.0, 0, 0.5), ImplicationConstraint(3.0, 2, 0.5)]
print("two constraints  ", impose_constraints(wide, cs))
print("reversed order   ", impose_constraints(wide, cs[::-1]))
