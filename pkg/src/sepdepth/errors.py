"""Exception types shared across the package."""


class SepdepthError(Exception):
    """Base class for all package errors."""


class CapExceeded(SepdepthError):
    """A configured size cap was exceeded; carries the offending dimension."""

    def __init__(self, what, value, cap):
        super().__init__(f"{what} = {value} exceeds cap {cap}")
        self.what = what
        self.value = value
        self.cap = cap


class ElementNotInGroup(SepdepthError):
    pass


class NotASubgroup(SepdepthError):
    pass


class SplittingFailure(SepdepthError):
    """Simultaneous eigenspace refinement stalled for every retry seed."""


class LiftInconsistency(SepdepthError):
    """Lifted multiplicities violate the exact dimension identity."""


class NotInT(SepdepthError):
    """Element of the tensor square fails H-centrality."""


class UnitMissing(SepdepthError):
    pass
