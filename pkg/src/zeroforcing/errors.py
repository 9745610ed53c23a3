"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: input errors exit 1,
soundness violations exit 2, budget/resource exhaustion exits 3.
"""


class InputError(ValueError):
    """Caller passed arguments outside an operation's precondition."""


class ResourceError(RuntimeError):
    """A retry/restart budget was exhausted (e.g. regular-graph sampling)."""


class NumericError(RuntimeError):
    """A numerical routine failed to reach its accuracy target."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class SoundnessError(AssertionError):
    """A result contradicts a proven guarantee.

    This should never fire; it exists so that a genuine counterexample to one
    of the implemented bounds surfaces loudly instead of being swallowed.
    """


class BudgetExceededError(RuntimeError):
    """A search ran out of its evaluation budget.

    Carries the best partial information: ``best_upper`` / ``best_upper_set``
    are a verified upper bound and its certificate (when the search produced
    one), ``excluded_below`` is the largest size fully ruled out, and
    ``payload`` holds search-specific extras (e.g. the best witness found).
    """

    def __init__(self, message, *, best_upper=None, best_upper_set=None,
                 excluded_below=None, evaluations=0, payload=None):
        super().__init__(message)
        self.best_upper = best_upper
        self.best_upper_set = best_upper_set
        self.excluded_below = excluded_below
        self.evaluations = evaluations
        self.payload = payload
