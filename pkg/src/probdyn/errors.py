"""Exception hierarchy for the calculus.

Every error carries a stable ``code`` string and the CLI ``exit_code`` it maps to.
"""


class ProbDynError(ValueError):
    code = "ERROR"
    exit_code = 1


class ValidationError(ProbDynError):
    code = "VALIDATION"
    exit_code = 2


class NegativeProbabilityError(ValidationError):
    code = "NEGATIVE_PROB"


class SumViolationError(ValidationError):
    code = "SUM_VIOLATION"


class RangeError(ValidationError):
    code = "RANGE"


class NegativeCredenceError(ValidationError):
    code = "NEGATIVE_CREDENCE"


class DegenerateError(ProbDynError):
    code = "DEGENERATE"
    exit_code = 3


class ZeroTotalCredenceError(DegenerateError):
    code = "ZERO_TOTAL_CREDENCE"


class ConditionOnNullError(DegenerateError):
    code = "CONDITION_ON_NULL"


class PartitionMismatchError(ProbDynError):
    code = "PARTITION_MISMATCH"
    exit_code = 4
