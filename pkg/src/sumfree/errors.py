"""Shared exception types."""


class BudgetError(RuntimeError):
    """An exact computation was refused or aborted because it exceeds a budget.

    `estimate` carries the estimated work (candidate count or nodes) when
    known; `partial` may carry a partial result for progress reporting.
    """

    def __init__(self, message, estimate=None, partial=None):
        super().__init__(message)
        self.estimate = estimate
        self.partial = partial
