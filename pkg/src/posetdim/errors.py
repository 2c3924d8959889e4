"""Exception types shared across the package."""


class PosetError(Exception):
    pass


class CycleError(PosetError):
    """Closing the given relations would violate irreflexivity/antisymmetry."""


class UnknownElement(PosetError):
    pass


class ExtensionMismatch(PosetError):
    """An extension's element set differs from the poset's."""


class Disconnected(PosetError):
    """Operation requires a connected cover graph."""


class NotInBlock(PosetError):
    pass


class NotReversible(PosetError):
    """The pair set contains an alternating cycle."""


class SharedElements(PosetError):
    """Merge inputs must share exactly one element."""


class InvalidBlockRealizer(PosetError):
    pass


class ClaimViolation(PosetError):
    """A residual pair failed its structural classification; upstream bug."""


class TooLarge(PosetError):
    pass


class SolverTimeout(PosetError):
    def __init__(self, message, best_upper=None):
        super().__init__(message)
        self.best_upper = best_upper


class ExceedsMax(PosetError):
    def __init__(self, message, max_d):
        super().__init__(message)
        self.max_d = max_d
