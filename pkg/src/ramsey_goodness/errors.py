"""Exception types shared across the package."""


class RamseyGoodnessError(Exception):
    """Base class for all package errors."""


class PreconditionError(RamseyGoodnessError, ValueError):
    """An operation was called outside its documented domain."""


class HypothesisError(PreconditionError):
    """A hypothesis required by a decision procedure does not hold.

    The failed hypothesis is stored verbatim so callers can report it.
    """

    def __init__(self, hypothesis: str, detail: str = "") -> None:
        self.hypothesis = hypothesis
        message = f"hypothesis violated: {hypothesis}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class Graph6Error(RamseyGoodnessError, ValueError):
    """Malformed graph6 input."""


class BudgetExceededError(RamseyGoodnessError):
    """A search hit its node-expansion cap: the result is undecided, not negative."""

    def __init__(self, nodes: int) -> None:
        self.nodes = nodes
        super().__init__(f"undecided: search budget exhausted after {nodes} nodes")
