"""Exception types shared across the package."""


class SymlieError(Exception):
    pass


class FieldMismatch(SymlieError, TypeError):
    """Scalars or matrices from different fields were combined."""


class DimensionMismatch(SymlieError, ValueError):
    pass


class Singular(SymlieError, ValueError):
    """A matrix that had to be invertible is not."""


class NotAnEigenvector(SymlieError, ValueError):
    pass


class EigenvaluesNotInField(SymlieError, ValueError):
    pass


class BudgetExceeded(SymlieError, RuntimeError):
    """An exhaustive search would exceed its configured size budget."""
