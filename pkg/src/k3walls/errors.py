"""Exception types shared across the package."""


class DomainError(ValueError):
    """Invalid input for an operation.

    Carries a stable machine-readable ``code`` so the CLI can report errors
    consistently across releases.
    """

    def __init__(self, message, code="domain_error"):
        super().__init__(message)
        self.code = code


class OracleViolation(RuntimeError):
    """A cross-check between two independent computations failed.

    This signals a bug (or a genuinely false expectation), never bad input.
    """


class SearchBudgetExceeded(RuntimeError):
    """A backtracking search ran out of its node budget before finishing."""

    def __init__(self, budget, nodes):
        super().__init__(f"search budget exhausted: {nodes} nodes > limit {budget}")
        self.budget = budget
        self.nodes = nodes
