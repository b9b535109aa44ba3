"""Exception types shared across the workbench."""


class WorkbenchError(Exception):
    """Base class for all errors raised by albertkit."""


class ConfigError(WorkbenchError):
    """Malformed or semantically invalid run configuration."""


class DivisionByZero(WorkbenchError):
    pass


class ZeroInput(WorkbenchError):
    pass


class FactorizationBoundExceeded(WorkbenchError):
    """Square-free extraction over the rationals hit the trial-division bound."""


class AlgebraMismatch(WorkbenchError):
    """Element does not belong to the algebra it was used with."""


class NotCommutative(WorkbenchError):
    pass


class NotEtale(WorkbenchError):
    """Cubic presentation has vanishing discriminant."""


class ModelMismatch(WorkbenchError):
    """Jordan elements from different models were combined."""


class NotInvertible(WorkbenchError):
    pass


class ZeroLambda(WorkbenchError):
    pass


class SingularMap(WorkbenchError):
    pass


class NotInComplement(WorkbenchError):
    """Element is not trace-orthogonal to the embedded cubic subalgebra."""


class DegenerateTrace(WorkbenchError):
    pass


class NotIsotropic(WorkbenchError):
    pass


class SearchExhausted(WorkbenchError):
    """A randomized search gave up after its trial budget."""


class BasisConstructionFailed(WorkbenchError):
    """Could not exhibit the orthogonal complement as a free module."""


class NotSplitModel(WorkbenchError):
    pass


class UnsupportedSubalgebra(WorkbenchError):
    pass
