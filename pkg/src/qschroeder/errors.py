"""Exception hierarchy shared by every module of the package."""


class DomainError(ValueError):
    """An operation was asked to work outside its mathematical domain."""


class DegenerateQError(DomainError):
    """Some (q;q)_j vanishes, so a ratio formula in q is undefined."""

    def __init__(self, q, index):
        self.q = q
        self.index = index
        super().__init__(f"(q;q)_{index} vanishes at q={q}")


class NonUnitError(DomainError):
    """A series with zero constant term cannot be inverted."""


class IncompatibleSeriesError(DomainError):
    """Two series differ in order, coefficient domain or ambient q."""


class RejectedParamsError(DomainError):
    """A parameter point violates the constraints of an identity case."""


class NonStabilizingError(RuntimeError):
    """Continued-fraction convergents failed to settle within the depth limit."""


class CFInvariantError(RuntimeError):
    """A continued-fraction level broke the unit/z-divisibility contract."""

    def __init__(self, level, message):
        self.level = level
        super().__init__(f"level {level}: {message}")
