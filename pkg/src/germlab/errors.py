"""Exception types shared across the package."""


class ContextMismatchError(ValueError):
    """Operands built over different ring contexts."""


class ParseError(ValueError):
    """Corpus or expression text that violates the input grammar."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", col {col}"
            where += ": "
        super().__init__(where + message)


class StepBudgetExceededError(RuntimeError):
    """A standard-basis computation ran past its reduction-step budget."""

    def __init__(self, budget):
        self.budget = budget
        super().__init__(
            f"standard basis computation exceeded the step budget of {budget} "
            "reduction steps; raise the budget if the input is legitimate"
        )


class InfiniteLengthError(ValueError):
    """A length that must be finite (an ideal that must be primary to the
    maximal ideal) turned out to be infinite."""


class NotICISError(ValueError):
    """Operation requires an isolated complete intersection singularity."""


class NoStabilizationError(RuntimeError):
    """Samuel differences did not become constant within the scan range."""

    def __init__(self, max_t, window):
        self.max_t = max_t
        self.window = window
        super().__init__(
            f"Samuel function differences did not stabilize over a window of "
            f"{window} values with t up to {max_t}"
        )


class DegenerateDrawsError(RuntimeError):
    """Every random linear combination drawn produced an infinite colength."""


class GenericityFailureError(RuntimeError):
    """Repeated random coordinate draws failed to reach a generic position."""
