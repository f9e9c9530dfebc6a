"""Exception types shared across the package."""


class CbfError(Exception):
    """Base class for all package errors."""


class InvalidInputError(CbfError):
    """A precondition on arguments or parsed data was violated."""


class GuardExceededError(CbfError):
    """An exhaustive operation would visit more than the configured q**n cap."""


class NotApplicableError(CbfError):
    """The requested closed form or construction does not cover the parameters."""
