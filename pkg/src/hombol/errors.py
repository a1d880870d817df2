"""Exception hierarchy.

Every error raised deliberately by the library derives from
:class:`AlgebraError`, so callers (the CLI in particular) can separate
mathematical precondition failures from programming errors.
"""


class AlgebraError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(AlgebraError, ValueError):
    pass


class NonHomogeneous(AlgebraError, ValueError):
    """A vector has nonzero coefficients in both degree blocks."""


class GradingError(AlgebraError, ValueError):
    """Structure constants violate the Z2-grading."""


class InvalidParam(AlgebraError, ValueError):
    pass


class MissingBinary(AlgebraError):
    pass


class MissingTernary(AlgebraError):
    pass


class MissingOperation(AlgebraError):
    """An identity uses an operation the algebra does not carry."""


class UnexpectedTwist(AlgebraError):
    pass


class NonzeroBinary(AlgebraError):
    pass


class HypothesisError(AlgebraError):
    """A construction was asked to run on input violating its hypotheses.

    ``report`` holds the failing :class:`~hombol.report.CheckReport` when one
    is available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotEven(HypothesisError):
    pass


class NotMorphism(HypothesisError):
    pass


class NotCommuting(HypothesisError):
    pass


class NotMultiplicative(HypothesisError):
    pass


class NotRightAlternative(HypothesisError):
    pass


class NotSupercommutative(HypothesisError):
    pass


class NotHomBol(HypothesisError):
    pass
