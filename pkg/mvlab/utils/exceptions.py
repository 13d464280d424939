"""
Custom exceptions to raise within mvlab.

Each exception class records the exit code which the command-line
interface uses when the exception escapes a command.
"""


class MvlabError(Exception):
    """
    Base class for mvlab exceptions.
    """

    exit_code = 1


class InvalidInput(MvlabError):
    """
    Invalid input exception, e.g. a malformed rational, a value of sigma
    with sigma_j * K not an integer, or a reducible minimal polynomial.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = "%s (at position %s)" % (message, position)
        super().__init__(message)


class UnsupportedPrime(InvalidInput):
    """
    The prime doesn't support the requested operation,
    e.g. a square root of -1 modulo p when p is not 1 mod 4.
    """

    def __init__(self, prime, reason):
        self.prime = prime
        super().__init__("Unsupported prime %s: %s" % (prime, reason))


class InvalidSettings(MvlabError):
    """
    Invalid settings were found by
    mvlab.models.settings.validation.validate_settings
    or in an experiment config file.
    """

    def __init__(self, message, field="", suggestion=None):
        self.field = field
        self.suggestion = suggestion
        super().__init__(message)


class BudgetExceeded(MvlabError):
    """
    An enumeration would exceed its configured budget.
    """

    exit_code = 3

    def __init__(self, what, count, budget):
        self.what = what
        self.count = count
        self.budget = budget
        super().__init__(
            "Enumerating %s %s would exceed the budget of %s" % (count, what, budget)
        )


class VerificationFailed(MvlabError):
    """
    A verification command computed a false pass flag.
    """

    exit_code = 2
