"""Exception types raised by entdyn."""


class EntdynError(Exception):
    """Base class for all entdyn errors."""


class NotHermitian(EntdynError, ValueError):
    pass


class NotUnitary(EntdynError, ValueError):
    pass


class NotNormalized(EntdynError, ValueError):
    pass


class ConvergenceFailure(EntdynError, RuntimeError):
    pass


class DegenerateScale(EntdynError, ValueError):
    """Josephson parameters with a vanishing coupling energy E_L."""


class GridMismatch(EntdynError, ValueError):
    pass
