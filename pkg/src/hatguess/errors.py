"""Exception hierarchy shared by all hatguess modules.

The CLI maps these onto process exit codes, so the split matters:
input/contract problems, exhausted search budgets, and violated
structural guarantees are three different failure modes.
"""


class HatGuessError(Exception):
    """Base class for all package-specific errors."""


class ParseError(HatGuessError, ValueError):
    """Malformed external input (graph6 text, JSON documents)."""


class ContractError(HatGuessError, ValueError):
    """An operation was called with arguments violating its contract."""


class PreconditionError(ContractError):
    """A stated precondition does not hold for this instance."""


class ResourceBudgetError(HatGuessError, RuntimeError):
    """A search exceeded its node or wall-time budget.

    Raised instead of returning a value so that "unknown" is never
    conflated with a negative answer.
    """


class ConstructionFailureError(HatGuessError, RuntimeError):
    """A constructive procedure could not complete at this scale.

    Carries a ``witness`` attribute describing where the construction
    got stuck (e.g. an empty intersection of restriction sets).
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ClaimViolationError(HatGuessError, RuntimeError):
    """A structural guarantee that must always hold was observed to fail.

    This signals an implementation bug (or a genuinely invalid input that
    slipped past validation), never a routine runtime condition.  The CLI
    reserves a dedicated exit code for it.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
