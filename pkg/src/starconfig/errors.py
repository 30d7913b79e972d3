"""Exception types shared across the package."""


class StarConfigError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(StarConfigError):
    """A caller broke an interface contract (bad argument, mixed rings, ...)."""


class DegenerateInputError(UsageError):
    """An input is degenerate where the operation needs a nontrivial one."""


class ParseError(StarConfigError):
    """An arrangement document could not be parsed."""


class GenericityError(StarConfigError):
    """An arrangement misses a genericity requirement.

    Carries the offending subset of form labels so callers can report it.
    """

    def __init__(self, message, subset=None):
        super().__init__(message)
        self.subset = tuple(subset) if subset is not None else None


class GenerationError(StarConfigError):
    """Random arrangement generation exhausted its retry budget."""
