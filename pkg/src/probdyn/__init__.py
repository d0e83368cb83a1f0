"""Credence-tagged probability evidence.

Straight and offsetting mergers, normalization, correlation and
cross-credence, indirect updating of fallible evidence, repair of a
contingency evidence by implication constraints, confirmation degrees and the
payoffs of a diachronic Dutch book.
"""

from .association import (
    bilateral_cross_credence,
    correlation,
    cross_credence,
    cross_credence_chain,
    unilateral_cross_credence,
)
from .confirm import ConfirmationReport, first_order_confirmation, pdct_confirmation
from .core import (
    BINARY,
    TOL_EQ,
    TOL_SUM,
    AlphaEvidence,
    BinaryEvidence,
    Distribution,
    FirstOrderPrior,
    JointPrior,
    Partition,
    WeightedBinarySet,
    joint_marginals,
    validate_distribution,
)
from .dutchbook import BetOutcome, BetScenario, evaluate_bets
from .errors import (
    ConditionOnNullError,
    DegenerateError,
    NegativeCredenceError,
    NegativeProbabilityError,
    PartitionMismatchError,
    ProbDynError,
    RangeError,
    SumViolationError,
    ValidationError,
    ZeroTotalCredenceError,
)
from .merge import AccordReport, MergeState, accord, normalize, opd_merge, scale_by_truth_probability, spd_merge
from .repair import (
    ContingencyEvidence,
    ImplicationConstraint,
    column_conditional,
    constrained_evidence,
    constrained_table,
    impose_constraint,
    impose_constraints,
    repaired_conditional,
)
from .updating import (
    IndirectUpdateResult,
    conditionalize,
    jeffrey_update,
    pd_indirect_update,
    pd_sequential_update,
)

__version__ = "0.1.0"
