"""Exception hierarchy shared by all dwtlife modules."""


class DwtLifeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(DwtLifeError, ValueError):
    """Bad input: out-of-range value, inconsistent units, malformed document."""


class NumericError(DwtLifeError, ArithmeticError):
    """Numeric failure: singularity, instability, or non-convergence."""


class BucklingError(NumericError):
    """Compressive load at or beyond the elastic stability bound."""


class SingularityError(NumericError):
    """Evaluation at a point where the quantity diverges."""
